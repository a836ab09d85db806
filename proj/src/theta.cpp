#include "equicode/theta.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

#include "equicode/errors.hpp"

namespace equicode {

namespace {

std::int64_t to_i64(const Integer& v) {
    if (!v.fits_slong_p()) throw TooLarge("value " + to_string(v) + " exceeds 64 bits");
    return v.get_si();
}

template <typename Key>
void add_term(std::map<Key, Integer>& terms, const Key& k, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms.emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

std::string exponent_text(std::int64_t m, std::int64_t den) {
    const std::int64_t g = std::gcd(m, den);
    const std::int64_t num = m / g;
    const std::int64_t d = den / g;
    if (d == 1) return std::to_string(num);
    return "(" + std::to_string(num) + "/" + std::to_string(d) + ")";
}

void require_same_den(std::int64_t a, std::int64_t b) {
    if (a != b) throw DimensionMismatch("series denominators differ");
}

// Residues b = a mod k with b^2 <= bound, i.e. |b| <= isqrt(bound).
std::vector<std::int64_t> residue_class(int k, Elem a, std::int64_t bound) {
    std::vector<std::int64_t> out;
    if (bound < 0) return out;
    const auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(bound))) + 1;
    for (std::int64_t b = -r - k; b <= r + k; ++b) {
        if (((b % k) + k) % k != a) continue;
        if (b * b <= bound) out.push_back(b);
    }
    return out;
}

template <typename S>
S substitute_generic(const MultiPoly& p, const std::vector<const S*>& images, const S& unit) {
    if (images.size() != p.family().arity()) throw DimensionMismatch("one image per variable expected");
    S total = unit;
    total.terms.clear();
    // powers[v][e] = images[v]^e, filled on demand
    std::vector<std::vector<S>> powers(images.size());
    for (const auto& [e, c] : p.terms()) {
        S term = unit;
        for (std::size_t v = 0; v < e.size(); ++v) {
            if (e[v] == 0) continue;
            auto& pw = powers[v];
            if (pw.empty()) pw.push_back(unit);
            while (pw.size() <= e[v]) pw.push_back(pw.back() * *images[v]);
            term = term * pw[e[v]];
        }
        S scaled = term;
        for (auto& [k, val] : scaled.terms) val *= c;
        total = total + scaled;
    }
    return total;
}

template <typename S>
std::string diff_text(const S& a, const S& b, auto key_text) {
    for (const auto& [k, c] : a.terms) {
        auto it = b.terms.find(k);
        if (it == b.terms.end() || it->second != c)
            return key_text(k) + ": " + to_string(c) + " vs " + (it == b.terms.end() ? "0" : to_string(it->second));
    }
    for (const auto& [k, c] : b.terms)
        if (!a.terms.contains(k)) return key_text(k) + ": 0 vs " + to_string(c);
    return "denominator/cutoff differ";
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

} // namespace

QSeries QSeries::one(std::int64_t den, std::int64_t cutoff) {
    QSeries s{den, cutoff, {}};
    if (cutoff >= 0) s.terms[0] = 1;
    return s;
}

Integer QSeries::coeff(std::int64_t m) const {
    auto it = terms.find(m);
    return it == terms.end() ? Integer(0) : it->second;
}

void QSeries::add(std::int64_t m, const Integer& c) {
    if (m > cutoff) return;
    add_term(terms, m, c);
}

std::string QSeries::to_text() const {
    std::string out;
    for (const auto& [m, c] : terms) out += std::to_string(m) + "/" + std::to_string(den) + ": " + equicode::to_string(c) + "\n";
    return out;
}

std::string QSeries::to_string() const {
    std::string out;
    for (const auto& [m, c] : terms) {
        const bool neg = c < 0;
        const Integer mag = abs(c);
        std::string body;
        if (m == 0)
            body = equicode::to_string(mag);
        else {
            const std::string q = m == den ? "q" : "q^" + exponent_text(m, den);
            body = mag == 1 ? q : equicode::to_string(mag) + q;
        }
        if (out.empty())
            out = (neg ? "-" : "") + body;
        else
            out += (neg ? " - " : " + ") + body;
    }
    if (out.empty()) out = "0";
    return out + " + O(q^" + exponent_text(cutoff + 1, den) + ")";
}

QSeries operator+(const QSeries& a, const QSeries& b) {
    require_same_den(a.den, b.den);
    QSeries r{a.den, std::min(a.cutoff, b.cutoff), {}};
    for (const auto& [m, c] : a.terms) r.add(m, c);
    for (const auto& [m, c] : b.terms) r.add(m, c);
    return r;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
    require_same_den(a.den, b.den);
    QSeries r{a.den, std::min(a.cutoff, b.cutoff), {}};
    for (const auto& [m1, c1] : a.terms) {
        if (m1 > r.cutoff) break;
        for (const auto& [m2, c2] : b.terms) {
            if (m1 + m2 > r.cutoff) break;
            r.add(m1 + m2, c1 * c2);
        }
    }
    return r;
}

QSeries operator*(const Integer& s, const QSeries& a) {
    QSeries r{a.den, a.cutoff, {}};
    for (const auto& [m, c] : a.terms) r.add(m, s * c);
    return r;
}

QSeries with_den(const QSeries& a, std::int64_t den) {
    if (den % a.den != 0) throw DimensionMismatch("target denominator is not a multiple");
    const std::int64_t f = den / a.den;
    QSeries r{den, a.cutoff * f, {}};
    for (const auto& [m, c] : a.terms) r.add(m * f, c);
    return r;
}

QSeries2 QSeries2::one(std::int64_t den, std::int64_t cutoff) {
    QSeries2 s{den, cutoff, {}};
    if (cutoff >= 0) s.terms[Key{0, 0, 0}] = 1;
    return s;
}

void QSeries2::add(const Key& m, const Integer& c) {
    if (m[0] + m[2] > cutoff) return;
    add_term(terms, m, c);
}

std::string QSeries2::to_text() const {
    std::string out;
    for (const auto& [m, c] : terms)
        out += "(" + std::to_string(m[0]) + "," + std::to_string(m[1]) + "," + std::to_string(m[2]) + ")/" +
               std::to_string(den) + ": " + equicode::to_string(c) + "\n";
    return out;
}

QSeries2 operator+(const QSeries2& a, const QSeries2& b) {
    require_same_den(a.den, b.den);
    QSeries2 r{a.den, std::min(a.cutoff, b.cutoff), {}};
    for (const auto& [m, c] : a.terms) r.add(m, c);
    for (const auto& [m, c] : b.terms) r.add(m, c);
    return r;
}

QSeries2 operator*(const QSeries2& a, const QSeries2& b) {
    require_same_den(a.den, b.den);
    QSeries2 r{a.den, std::min(a.cutoff, b.cutoff), {}};
    for (const auto& [m1, c1] : a.terms) {
        if (m1[0] + m1[2] > r.cutoff) continue;
        for (const auto& [m2, c2] : b.terms)
            r.add(QSeries2::Key{m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2]}, c1 * c2);
    }
    return r;
}

JacobiQSeries JacobiQSeries::one(std::int64_t den, std::int64_t cutoff) {
    JacobiQSeries s{den, cutoff, {}};
    if (cutoff >= 0) s.terms[Key{0, 0}] = 1;
    return s;
}

void JacobiQSeries::add(const Key& m, const Integer& c) {
    if (m.first > cutoff) return;
    add_term(terms, m, c);
}

QSeries JacobiQSeries::at_zero() const {
    QSeries s{den, cutoff, {}};
    for (const auto& [m, c] : terms) s.add(m.first, c);
    return s;
}

std::string JacobiQSeries::to_text() const {
    std::string out;
    for (const auto& [m, c] : terms)
        out += "q^" + std::to_string(m.first) + "/" + std::to_string(den) + " z^" + std::to_string(m.second) + "/" +
               std::to_string(den) + ": " + equicode::to_string(c) + "\n";
    return out;
}

JacobiQSeries operator+(const JacobiQSeries& a, const JacobiQSeries& b) {
    require_same_den(a.den, b.den);
    JacobiQSeries r{a.den, std::min(a.cutoff, b.cutoff), {}};
    for (const auto& [m, c] : a.terms) r.add(m, c);
    for (const auto& [m, c] : b.terms) r.add(m, c);
    return r;
}

JacobiQSeries operator*(const JacobiQSeries& a, const JacobiQSeries& b) {
    require_same_den(a.den, b.den);
    JacobiQSeries r{a.den, std::min(a.cutoff, b.cutoff), {}};
    for (const auto& [m1, c1] : a.terms) {
        if (m1.first > r.cutoff) break;
        for (const auto& [m2, c2] : b.terms) {
            if (m1.first + m2.first > r.cutoff) break;
            r.add({m1.first + m2.first, m1.second + m2.second}, c1 * c2);
        }
    }
    return r;
}

std::int64_t exponent_cutoff(const Rat& max_exponent, std::int64_t den) {
    return to_i64(floor(max_exponent * Rat(den)));
}

QSeries theta_lattice(const Lattice& l, const Rat& max_exponent) {
    const std::int64_t den = to_i64(norm_den(l));
    QSeries s{den, exponent_cutoff(max_exponent, den), {}};
    for (const auto& v : ball(l, s.cutoff)) s.add(to_i64(v.norm_num), 1);
    return s;
}

QSeries theta_fa(const RingZk& ring, Elem a, const Rat& max_exponent) {
    const std::int64_t k = ring.modulus();
    QSeries s{k, exponent_cutoff(max_exponent, k), {}};
    for (auto b : residue_class(ring.modulus(), a, s.cutoff)) s.add(b * b, 1);
    return s;
}

QSeries2 theta_fa2(const RingZk& ring, Elem a1, Elem a2, const Rat& max_exponent) {
    const std::int64_t k = ring.modulus();
    QSeries2 s{k, exponent_cutoff(max_exponent, k), {}};
    for (auto b1 : residue_class(ring.modulus(), a1, s.cutoff))
        for (auto b2 : residue_class(ring.modulus(), a2, s.cutoff - b1 * b1))
            s.add({b1 * b1, 2 * b1 * b2, b2 * b2}, 1);
    return s;
}

JacobiQSeries phi_a(const RingZk& ring, Elem a, const Rat& max_exponent) {
    const std::int64_t k = ring.modulus();
    JacobiQSeries s{k, exponent_cutoff(max_exponent, k), {}};
    for (auto b : residue_class(ring.modulus(), a, s.cutoff)) s.add({b * b, b * k}, 1);
    return s;
}

QSeries substitute_series(const MultiPoly& p, const std::vector<QSeries>& images) {
    if (p.family().g != 1 || p.family().paired) throw PreconditionFailed("substitute_series needs a plain g = 1 family");
    if (images.empty()) throw DimensionMismatch("no images");
    std::vector<const QSeries*> ptrs;
    for (const auto& s : images) ptrs.push_back(&s);
    return substitute_generic(p, ptrs, QSeries::one(images.front().den, images.front().cutoff));
}

QSeries2 substitute_series2(const MultiPoly& p, const std::vector<QSeries2>& images) {
    if (p.family().g != 2 || p.family().paired) throw PreconditionFailed("substitute_series2 needs a genus-2 family");
    if (images.empty()) throw DimensionMismatch("no images");
    std::vector<const QSeries2*> ptrs;
    for (const auto& s : images) ptrs.push_back(&s);
    return substitute_generic(p, ptrs, QSeries2::one(images.front().den, images.front().cutoff));
}

JacobiQSeries substitute_jacobi(const MultiPoly& p, const std::vector<JacobiQSeries>& x_images,
                                const std::vector<JacobiQSeries>& y_images) {
    if (p.family().g != 1 || !p.family().paired) throw PreconditionFailed("substitute_jacobi needs a paired family");
    if (x_images.empty()) throw DimensionMismatch("no images");
    std::vector<const JacobiQSeries*> ptrs;
    for (const auto& s : x_images) ptrs.push_back(&s);
    for (const auto& s : y_images) ptrs.push_back(&s);
    return substitute_generic(p, ptrs, JacobiQSeries::one(x_images.front().den, x_images.front().cutoff));
}

QSeries2 theta_lattice2(const Lattice& l, const Rat& max_exponent) {
    const std::int64_t den = to_i64(norm_den(l));
    QSeries2 s{den, exponent_cutoff(max_exponent, den), {}};
    auto vs = ball(l, s.cutoff);
    std::sort(vs.begin(), vs.end(), [](const BallVector& a, const BallVector& b) { return a.norm_num < b.norm_num; });
    const Integer L = common_denominator(l.basis);
    const IntMatrix bi = scale_to_int(l.basis, L);
    const IntMatrix gi = bi * bi.transpose();
    const std::size_t r = l.rank();
    for (const auto& v1 : vs) {
        const std::int64_t m1 = to_i64(v1.norm_num);
        std::vector<Integer> g1(r, 0); // v1 * Gi
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t i = 0; i < r; ++i) g1[j] += v1.coords[i] * gi(i, j);
        for (const auto& v2 : vs) {
            const std::int64_t m2 = to_i64(v2.norm_num);
            if (m1 + m2 > s.cutoff) break;
            Integer cross = 0;
            for (std::size_t j = 0; j < r; ++j) cross += g1[j] * v2.coords[j];
            s.add({m1, to_i64(2 * cross), m2}, 1);
        }
    }
    return s;
}

JacobiQSeries jacobi_theta_lattice(const Lattice& l, std::span<const Rat> y, const Rat& max_exponent) {
    if (!contains(l, y)) throw NotMember("reference vector is not in the lattice");
    const Integer L = common_denominator(l.basis);
    const std::int64_t den = to_i64(norm_den(l));
    JacobiQSeries s{den, exponent_cutoff(max_exponent, den), {}};
    for (const auto& v : ball(l, s.cutoff)) {
        const auto x = ball_point(l, v);
        Rat dot = 0;
        for (std::size_t i = 0; i < x.size(); ++i) dot += x[i] * y[i];
        // den <x, y> = s L^2 (x . y) / s.
        const Rat idx = dot * Rat(L * L);
        if (!is_integral(idx)) throw std::logic_error("index numerator is not integral");
        s.add({to_i64(v.norm_num), to_i64(idx.get_num())}, 1);
    }
    return s;
}

Lattice orbit_image_lattice(const Code& c, const HaydenOperator& op) {
    const Lattice l0 = lambda0(construction_a(c), op.matrix_real);
    return to_orbit_coordinates(project_lattice(l0, op.matrix_real), op.partition);
}

Report verify_theta_correspondence(const Code& c, const HaydenOperator& op, unsigned genus, const Rat& max_exponent) {
    const RingZk& ring = c.ring();
    const OrbitCode d = project_theta(c, op);
    const Lattice lat = orbit_image_lattice(c, op);
    const std::int64_t k = ring.modulus();
    Report r;
    r.flavor = "theta-g" + std::to_string(genus);
    r.detail = ring.name() + ", n=" + std::to_string(c.length()) + ", t=" + std::to_string(d.t()) +
               ", max exponent " + to_string(max_exponent);
    if (genus == 1) {
        std::vector<QSeries> images;
        for (int a = 0; a < ring.modulus(); ++a) images.push_back(theta_fa(ring, static_cast<Elem>(a), max_exponent));
        const QSeries rhs = substitute_series(cwe_h(d), images);
        QSeries lhs = theta_lattice(lat, max_exponent);
        if (lhs.den != k) lhs = with_den(lhs, std::lcm(lhs.den, k));
        r.lhs = lhs.to_string();
        r.rhs = rhs.to_string();
        r.pass = lhs == rhs;
        if (!r.pass)
            r.witness = diff_text(lhs, rhs, [&](std::int64_t m) { return "q^" + exponent_text(m, lhs.den); });
    } else if (genus == 2) {
        std::vector<QSeries2> images;
        const VarFamily fam{ring.modulus(), 2, false};
        for (std::size_t idx = 0; idx < fam.x_count(); ++idx) {
            const auto tup = fam.tuple(idx);
            images.push_back(theta_fa2(ring, tup[0], tup[1], max_exponent));
        }
        const QSeries2 rhs = substitute_series2(cwe_g(d, 2), images);
        const QSeries2 lhs = theta_lattice2(lat, max_exponent);
        r.lhs = std::to_string(lhs.terms.size()) + " terms, den " + std::to_string(lhs.den) + ", cutoff " +
                std::to_string(lhs.cutoff);
        r.rhs = std::to_string(rhs.terms.size()) + " terms, den " + std::to_string(rhs.den) + ", cutoff " +
                std::to_string(rhs.cutoff);
        r.pass = lhs == rhs;
        if (!r.pass)
            r.witness = diff_text(lhs, rhs, [](const QSeries2::Key& m) {
                return "(" + std::to_string(m[0]) + "," + std::to_string(m[1]) + "," + std::to_string(m[2]) + ")";
            });
    } else {
        throw PreconditionFailed("genus must be 1 or 2");
    }
    return r;
}

Report verify_jacobi_correspondence(const Code& c, const HaydenOperator& op, const JacobiSet& T,
                                    const Rat& max_exponent, JacobiAssignment assignment) {
    const RingZk& ring = c.ring();
    const OrbitCode d = project_theta(c, op);
    const Lattice lat = orbit_image_lattice(c, op);
    const std::size_t t = d.t();
    const std::int64_t k = ring.modulus();

    std::vector<JacobiQSeries> phi, psi;
    for (int a = 0; a < ring.modulus(); ++a) {
        phi.push_back(phi_a(ring, static_cast<Elem>(a), max_exponent));
        JacobiQSeries p{k, phi.back().cutoff, {}};
        for (const auto& [m, cnt] : theta_fa(ring, static_cast<Elem>(a), max_exponent).terms) p.add({m, 0}, cnt);
        psi.push_back(std::move(p));
    }
    const bool phi_on_t = assignment == JacobiAssignment::PhiOnT;
    const JacobiQSeries rhs = phi_on_t ? substitute_jacobi(jacobi_poly(d, T), phi, psi)
                                       : substitute_jacobi(jacobi_poly(d, T), psi, phi);

    // Reference vector sqrt(k) 1_S: stored coordinates k 1_S at scale k.
    if (lat.k_scale != k) throw std::logic_error("orbit lattice scale differs from k");
    std::vector<Rat> y(t, Rat(0));
    for (std::size_t i = 1; i <= t; ++i)
        if (T.contains(i) == phi_on_t) y[i - 1] = k;
    const JacobiQSeries lhs = jacobi_theta_lattice(lat, y, max_exponent);

    Report r;
    r.flavor = "jacobi-theta";
    r.detail = ring.name() + ", t=" + std::to_string(t) + ", T=" + T.to_string() +
               (phi_on_t ? ", phi on T" : ", phi on complement") + ", max exponent " + to_string(max_exponent);
    r.lhs = std::to_string(lhs.terms.size()) + " terms, den " + std::to_string(lhs.den);
    r.rhs = std::to_string(rhs.terms.size()) + " terms, den " + std::to_string(rhs.den);
    r.pass = lhs == rhs;
    if (!r.pass)
        r.witness = diff_text(lhs, rhs, [&](const JacobiQSeries::Key& m) {
            return "q^" + exponent_text(m.first, lhs.den) + " z^" + exponent_text(m.second, lhs.den);
        });
    return r;
}

Report jacobi_formula_check(const Lattice& l, double s, double tol, DetConvention convention) {
    if (!(s > 0) || !(tol > 0)) throw PreconditionFailed("need s > 0 and tol > 0");
    const Lattice dual = dual_lattice(l);
    const double r = static_cast<double>(l.rank());

    // sum_{x in m} e^{-pi w <x,x>} over the ball where the first omitted weight is below tol/10.
    auto theta_sum = [&](const Lattice& lat, double w) {
        const double bound = (std::log(10.0 / tol) + 10.0) / (M_PI * w);
        const Integer den = norm_den(lat);
        const Integer max_num = floor(Rat(bound) * Rat(den));
        std::vector<BallVector> vs;
        try {
            vs = ball(lat, max_num);
        } catch (const TooLarge&) {
            throw NotConverged("theta sum needs more than the enumeration bound of vectors");
        }
        long double sum = 0;
        for (const auto& v : vs) sum += std::exp(-M_PI * w * (make_rat(v.norm_num, den).get_d()));
        return static_cast<double>(sum);
    };

    const double lhs = theta_sum(dual, s);
    const double gram_det = l.gram_determinant().get_d();
    const double det = convention == DetConvention::Gram ? gram_det : std::sqrt(gram_det);
    const double rhs = std::sqrt(det) * std::pow(s, -r / 2) * theta_sum(l, 1.0 / s);

    Report rep;
    rep.flavor = "jacobi-formula";
    rep.lhs = fmt(lhs);
    rep.rhs = fmt(rhs);
    rep.detail = "rank " + std::to_string(l.rank()) + ", z = " + fmt(s) + "i, det " + fmt(det) +
                 (convention == DetConvention::Gram ? " (Gram)" : " (covolume)") + ", tol " + fmt(tol);
    rep.pass = std::abs(lhs - rhs) <= tol;
    if (!rep.pass) rep.witness = "|lhs - rhs| = " + fmt(std::abs(lhs - rhs));
    return rep;
}

} // namespace equicode
