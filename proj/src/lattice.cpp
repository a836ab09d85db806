#include "equicode/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "equicode/errors.hpp"

namespace equicode {

namespace {

std::string vec_to_string(std::span<const Rat> v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += to_string(v[i]);
    }
    return out + ")";
}

// Exact integer square root test: r with r^2 = v, if any.
std::optional<Integer> exact_sqrt(const Integer& v) {
    if (v < 0) return std::nullopt;
    Integer r = sqrt(v);
    if (r * r != v) return std::nullopt;
    return r;
}

RatMatrix rows_times(const RatMatrix& b, const RatMatrix& m) { return b * m; }

} // namespace

RatMatrix Lattice::gram() const {
    RatMatrix g = basis * basis.transpose();
    return Rat(1) / Rat(k_scale) * g;
}

Rat Lattice::gram_determinant() const { return determinant(gram()); }

bool Lattice::is_integral() const {
    const RatMatrix g = gram();
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j)
            if (!equicode::is_integral(g(i, j))) return false;
    return true;
}

Lattice make_lattice(const RatMatrix& generators, const Integer& k_scale) {
    if (k_scale <= 0) throw PreconditionFailed("lattice scale must be positive");
    Lattice l;
    l.n = generators.cols();
    l.k_scale = k_scale;
    l.basis = hnf(generators);
    if (rank(l.basis) != l.basis.rows()) throw std::logic_error("HNF rows are not independent");
    return l;
}

Lattice rescale(const Lattice& l, const Integer& new_scale) {
    if (new_scale == l.k_scale) return l;
    // B / sqrt(s) = B' / sqrt(s')  <=>  B' = B * sqrt(s'/s).
    const Rat ratio = make_rat(new_scale, l.k_scale);
    auto num = exact_sqrt(ratio.get_num());
    auto den = exact_sqrt(ratio.get_den());
    if (!num || !den)
        throw PreconditionFailed("scales " + to_string(l.k_scale) + " and " + to_string(new_scale) +
                                 " differ by a non-square factor");
    return make_lattice(make_rat(*num, *den) * l.basis, new_scale);
}

bool same_lattice(const Lattice& a, const Lattice& b) {
    if (a.n != b.n || a.rank() != b.rank()) return false;
    if (a.k_scale == b.k_scale) return a.basis == b.basis;
    const Integer common = lcm(a.k_scale, b.k_scale);
    try {
        return rescale(a, common).basis == rescale(b, common).basis;
    } catch (const PreconditionFailed&) {
        return false; // different square classes: the Gram determinants cannot match
    }
}

bool contains(const Lattice& l, std::span<const Rat> v) {
    if (v.size() != l.n) throw DimensionMismatch("vector length differs from lattice dimension");
    auto x = solve_left(l.basis, v);
    if (!x) return false;
    for (const auto& c : *x)
        if (!is_integral(c)) return false;
    return true;
}

Lattice construction_a(const Code& c) {
    const std::size_t n = c.length();
    const int k = c.ring().modulus();
    RatMatrix gens(0, n);
    for (const auto& g : c.generators()) {
        std::vector<Rat> row;
        for (auto e : g.entries) row.emplace_back(int{e});
        gens.append_row(row);
    }
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Rat> row(n, Rat(0));
        row[i] = k;
        gens.append_row(row);
    }
    return make_lattice(gens, k);
}

Lattice construction_a(const OrbitCode& d) {
    const std::size_t t = d.t();
    const int k = d.ring.modulus();
    RatMatrix gens(0, t);
    for (const auto& u : d.words) {
        std::vector<Rat> row;
        for (auto e : u.coeffs) row.emplace_back(int{e});
        gens.append_row(row);
    }
    for (std::size_t i = 0; i < t; ++i) {
        std::vector<Rat> row(t, Rat(0));
        row[i] = k;
        gens.append_row(row);
    }
    return make_lattice(gens, k);
}

bool is_g_lattice(const Lattice& l, const PermGroup& g) {
    if (g.degree() != l.n) throw DimensionMismatch("group degree differs from lattice dimension");
    for (std::size_t i = 0; i < l.rank(); ++i) {
        const auto row = l.basis.row_vector(i);
        for (const auto& p : g.generators())
            if (!contains(l, p.apply<Rat>(row))) return false;
    }
    return true;
}

Lattice lambda0(const Lattice& l, const RatMatrix& theta) {
    if (l.rank() != l.n) throw PreconditionFailed("lambda0 needs a full-rank lattice");
    if (theta.rows() != l.n || theta.cols() != l.n) throw DimensionMismatch("operator size differs from n");
    const auto inv = inverse(l.basis);
    // x B theta in Lambda  <=>  x (B theta B^{-1}) in Z^n.
    const RatMatrix m = rows_times(l.basis, theta) * *inv;
    const RatMatrix coeffs = to_rat(snf_preimage(m));
    return make_lattice(coeffs * l.basis, l.k_scale);
}

Lattice project_lattice(const Lattice& l, const RatMatrix& theta) {
    if (theta.rows() != l.n || theta.cols() != l.n) throw DimensionMismatch("operator size differs from n");
    Lattice out = make_lattice(rows_times(l.basis, theta), l.k_scale);
    if (l.rank() == l.n && out.rank() != rank(theta))
        throw NotDiscrete("image rank " + std::to_string(out.rank()) + " differs from rank(theta) " +
                          std::to_string(rank(theta)));
    return out;
}

Lattice dual_lattice(const Lattice& l) {
    // True basis B/sqrt(s); dual basis G^{-1} B/sqrt(s) with G = B B^T / s,
    // i.e. stored rows s (B B^T)^{-1} B at the same scale.
    const RatMatrix bbt = l.basis * l.basis.transpose();
    const auto inv = inverse(bbt);
    if (!inv) throw std::logic_error("Gram matrix of a lattice basis is singular");
    return make_lattice(Rat(l.k_scale) * (*inv * l.basis), l.k_scale);
}

Lattice to_orbit_coordinates(const Lattice& l, const OrbitPartition& p) {
    if (p.n != l.n) throw DimensionMismatch("partition degree differs from lattice dimension");
    RatMatrix rows(0, p.count());
    for (std::size_t i = 0; i < l.rank(); ++i) {
        std::vector<Rat> r;
        for (const auto& orbit : p.orbits) {
            const Rat& v = l.basis(i, orbit.front());
            for (auto j : orbit)
                if (l.basis(i, j) != v) throw NotOrbitConstant("lattice basis row is not orbit-constant");
            r.push_back(v);
        }
        rows.append_row(r);
    }
    return make_lattice(rows, l.k_scale);
}

Integer norm_den(const Lattice& l) {
    const Integer L = common_denominator(l.basis);
    return l.k_scale * L * L;
}

std::vector<BallVector> ball(const Lattice& l, const Integer& max_num) {
    const std::size_t r = l.rank();
    std::vector<BallVector> out;
    if (max_num < 0) return out;
    if (r == 0) {
        out.push_back(BallVector{{}, 0});
        return out;
    }
    const Integer L = common_denominator(l.basis);
    const IntMatrix bi = scale_to_int(l.basis, L);
    const IntMatrix gi = bi * bi.transpose();

    // Q(x) = sum_i q[i][i] (x_i + sum_{j>i} q[i][j] x_j)^2, exact.
    std::vector<std::vector<Rat>> q(r, std::vector<Rat>(r, Rat(0)));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i; j < r; ++j) q[i][j] = gi(i, j);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = i + 1; j < r; ++j) {
            q[j][i] = q[i][j];
            q[i][j] /= q[i][i];
        }
        for (std::size_t a = i + 1; a < r; ++a)
            for (std::size_t b = a; b < r; ++b) q[a][b] -= q[a][i] * q[i][b];
    }

    const std::size_t limit = max_enumeration();
    std::vector<Integer> x(r, 0);
    std::vector<Rat> rem(r + 1);
    rem[r] = Rat(max_num);
    // Depth-first over levels r-1 .. 0.
    auto recurse = [&](auto&& self, std::size_t level) -> void {
        Rat c = 0;
        for (std::size_t j = level + 1; j < r; ++j) c -= q[level][j] * Rat(x[j]);
        const Rat& qq = q[level][level];
        const double cd = c.get_d();
        const double rad = std::sqrt(std::max(0.0, rem[level + 1].get_d() / qq.get_d()));
        const Integer lo = Integer(std::floor(cd - rad)) - 1;
        const Integer hi = Integer(std::ceil(cd + rad)) + 1;
        for (Integer v = lo; v <= hi; ++v) {
            const Rat diff = Rat(v) - c;
            const Rat used = qq * diff * diff;
            if (used > rem[level + 1]) continue;
            x[level] = v;
            rem[level] = rem[level + 1] - used;
            if (level == 0) {
                const Rat norm = Rat(max_num) - rem[0];
                out.push_back(BallVector{x, norm.get_num()});
                if (out.size() > limit) throw TooLarge("ball enumeration exceeds bound");
            } else {
                self(self, level - 1);
            }
        }
        x[level] = 0;
    };
    recurse(recurse, r - 1);
    return out;
}

std::vector<Rat> ball_point(const Lattice& l, const BallVector& v) {
    std::vector<Rat> xs;
    for (const auto& c : v.coords) xs.emplace_back(c);
    return row_times(xs, l.basis);
}

Report verify_lattice_hayden(const Lattice& l, const RatMatrix& theta, const OrbitPartition& p) {
    const Lattice l0 = lambda0(l, theta);
    const Lattice image = project_lattice(l0, theta);
    const Lattice lhs = dual_lattice(image);
    const Lattice rhs = project_lattice(dual_lattice(l0), theta);
    const RatMatrix complement = kernel_basis(image.basis);
    const RatMatrix ker = ker_theta_real_basis(p);
    const bool complement_ok = complement.rows() == ker.rows() && same_row_span(complement, ker);

    Report r;
    r.flavor = "lattice-hayden";
    r.lhs = "span-dual " + to_string(lhs);
    r.rhs = "dual(L0).theta " + to_string(rhs);
    r.detail = "n=" + std::to_string(l.n) + ", t=" + std::to_string(p.count()) +
               ", rank L0.theta=" + std::to_string(image.rank());
    const bool lattices_ok = same_lattice(lhs, rhs);
    r.pass = lattices_ok && complement_ok;
    if (!lattices_ok)
        r.witness = "span-dual and projected dual differ";
    else if (!complement_ok)
        r.witness = "orthogonal complement of span(L0.theta) differs from ker theta (dim " +
                    std::to_string(complement.rows()) + " vs " + std::to_string(ker.rows()) + ")";
    return r;
}

Report verify_glattice_correspondence(const Code& c, const PermGroup& g, const HaydenOperator& op,
                                      const Rat& ball_norm) {
    const Lattice lam = construction_a(c);
    const bool code_side = is_g_code(c, g);
    const bool lattice_side = is_g_lattice(lam, g);

    Report r;
    r.flavor = "g-lattice";
    r.detail = c.ring().name() + ", n=" + std::to_string(c.length()) + ", |C|=" + std::to_string(c.size()) +
               ", G-code=" + (code_side ? "yes" : "no") + ", G-lattice=" + (lattice_side ? "yes" : "no");
    if (code_side != lattice_side) {
        r.pass = false;
        r.lhs = code_side ? "G-code" : "not a G-code";
        r.rhs = lattice_side ? "G-lattice" : "not a G-lattice";
        r.witness = "biconditional fails";
        return r;
    }
    if (!is_g_code(c, op.group)) {
        // Lambda_0 theta_H against C theta_H needs an H-invariant code.
        r.pass = true;
        r.lhs = r.rhs = code_side ? "G-code and G-lattice" : "neither";
        return r;
    }

    const Lattice image = to_orbit_coordinates(project_lattice(lambda0(lam, op.matrix_real), op.matrix_real),
                                               op.partition);
    const Lattice orbit_a = construction_a(project_theta(c, op));
    r.lhs = "L0(C).theta " + to_string(image);
    r.rhs = "A(C.theta) " + to_string(orbit_a);

    const bool bases_equal = same_lattice(image, orbit_a);
    // Vector-by-vector comparison on a norm ball; both live at scale k in Z^t.
    auto points = [&](const Lattice& l) {
        const Integer den = norm_den(l);
        const Rat bound = ball_norm * Rat(den);
        std::vector<std::vector<Rat>> pts;
        for (const auto& v : ball(l, floor(bound))) {
            pts.push_back(ball_point(l, v));
        }
        std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) {
            return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
        });
        return pts;
    };
    const auto pa = points(image);
    const auto pb = points(orbit_a);
    const bool balls_equal = image.k_scale == orbit_a.k_scale && pa == pb;
    r.detail += ", ball(norm<=" + to_string(ball_norm) + ") sizes " + std::to_string(pa.size()) + "/" +
                std::to_string(pb.size());
    r.pass = bases_equal && balls_equal;
    if (!r.pass) {
        if (!bases_equal)
            r.witness = "bases differ";
        else
            r.witness = "ball contents differ";
        for (const auto& p : pa)
            if (!std::binary_search(pb.begin(), pb.end(), p, [](const auto& a, const auto& b) {
                    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
                })) {
                *r.witness += "; " + vec_to_string(p) + " only on the lattice side";
                break;
            }
    }
    return r;
}

std::string to_string(const Lattice& l) {
    std::string out = "(1/sqrt(" + to_string(l.k_scale) + "))[";
    for (std::size_t i = 0; i < l.rank(); ++i) {
        if (i) out += ";";
        out += vec_to_string(l.basis.row(i));
    }
    return out + "]";
}

} // namespace equicode
