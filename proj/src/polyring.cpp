#include "equicode/polyring.hpp"

#include <optional>
#include <stdexcept>
#include <type_traits>

#include "equicode/errors.hpp"

namespace equicode {

namespace {

std::string power(const std::string& var, unsigned e) {
    return e == 1 ? var : var + "^" + std::to_string(e);
}

// Joins signed terms: the first keeps a leading '-', later ones use " - ".
void append_term(std::string& out, bool negative, const std::string& body) {
    if (out.empty())
        out = negative ? "-" + body : body;
    else
        out += (negative ? " - " : " + ") + body;
}

// Coefficient text for a term with a nonempty monomial part.
std::string with_coeff(const std::string& mag, const std::string& mono) {
    if (mono.empty()) return mag;
    if (mag == "1") return mono;
    return mag + "*" + mono;
}

using RawTerms = std::map<Exponent, Cyclotomic, std::greater<>>;

void accumulate(RawTerms& acc, const Exponent& e, const Cyclotomic& c) {
    auto it = acc.find(e);
    if (it == acc.end())
        acc.emplace(e, c);
    else
        it->second += c;
}

// c * zeta^j when the coefficient is a single zeta power, else nullopt.
std::optional<std::pair<long, Integer>> as_scaled_zeta(const Cyclotomic& c) {
    std::optional<std::pair<long, Integer>> hit;
    const auto& cs = c.coeffs();
    for (std::size_t j = 0; j < cs.size(); ++j) {
        if (cs[j] == 0) continue;
        if (hit) return std::nullopt;
        hit = std::pair<long, Integer>{static_cast<long>(j), cs[j]};
    }
    return hit;
}

RawTerms times_form(const RawTerms& p, const LinearForm& form) {
    RawTerms out;
    std::vector<std::optional<std::pair<long, Integer>>> fast;
    fast.reserve(form.size());
    for (const auto& [v, c] : form) fast.push_back(as_scaled_zeta(c));
    for (const auto& [e, c] : p)
        for (std::size_t i = 0; i < form.size(); ++i) {
            const auto& [v, lc] = form[i];
            Exponent e2 = e;
            ++e2[v];
            if (fast[i]) {
                Cyclotomic prod = c.mul_zeta(fast[i]->first);
                if (fast[i]->second != 1) prod *= fast[i]->second;
                accumulate(out, e2, prod);
            } else {
                accumulate(out, e2, c * lc);
            }
        }
    return out;
}

template <typename C>
Cyclotomic as_cyclo(const C& c, int k) {
    if constexpr (std::is_same_v<C, Integer>)
        return Cyclotomic::from_integer(k, c);
    else
        return c;
}

template <typename C>
CycloPoly substitute_impl(const MultiPolyT<C>& p, const std::vector<LinearForm>& images, const VarFamily& target) {
    if (images.size() != p.family().arity()) throw DimensionMismatch("substitution arity differs from variable count");
    for (const auto& form : images)
        for (const auto& [v, c] : form) {
            if (v >= target.arity()) throw DimensionMismatch("image refers to a variable outside the target family");
            if (c.conductor() != target.k) throw DimensionMismatch("image coefficient conductor differs from k");
        }
    RawTerms total;
    for (const auto& [e, c] : p.terms()) {
        RawTerms cur;
        cur.emplace(Exponent(target.arity(), 0), as_cyclo(c, target.k));
        for (std::size_t v = 0; v < e.size(); ++v)
            for (unsigned r = 0; r < e[v]; ++r) cur = times_form(cur, images[v]);
        for (const auto& [e2, c2] : cur) accumulate(total, e2, c2);
    }
    CycloPoly out(target);
    for (const auto& [e, c] : total) out.add_term(e, c);
    return out;
}

} // namespace

BivarPoly BivarPoly::monomial(unsigned degree, unsigned i, const Rat& c) {
    BivarPoly p(degree);
    p.add(i, c);
    return p;
}

Rat BivarPoly::coeff(unsigned i) const {
    auto it = coeffs_.find(i);
    return it == coeffs_.end() ? Rat(0) : it->second;
}

void BivarPoly::add(unsigned i, const Rat& c) {
    if (i > degree_) throw DimensionMismatch("term exceeds polynomial degree");
    if (c == 0) return;
    auto [it, inserted] = coeffs_.emplace(i, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
}

bool BivarPoly::is_integral() const {
    for (const auto& [i, c] : coeffs_)
        if (!equicode::is_integral(c)) return false;
    return true;
}

Rat BivarPoly::evaluate(const Rat& x, const Rat& y) const {
    Rat s = 0;
    for (const auto& [i, c] : coeffs_) {
        Rat term = c;
        for (unsigned j = 0; j < degree_ - i; ++j) term *= x;
        for (unsigned j = 0; j < i; ++j) term *= y;
        s += term;
    }
    return s;
}

BivarPoly BivarPoly::scaled(const Rat& s) const {
    BivarPoly r(degree_);
    for (const auto& [i, c] : coeffs_) r.add(i, c * s);
    return r;
}

BivarPoly BivarPoly::divide_xy_power(unsigned e) const {
    if (is_zero()) return BivarPoly(degree_ >= 2 * e ? degree_ - 2 * e : 0);
    if (degree_ < 2 * e) throw NotDivisible("degree " + std::to_string(degree_) + " below 2*" + std::to_string(e));
    BivarPoly r(degree_ - 2 * e);
    for (const auto& [i, c] : coeffs_) {
        if (i < e || degree_ - i < e) throw NotDivisible("term of " + to_string() + " not divisible by (xy)^" + std::to_string(e));
        r.add(i - e, c);
    }
    return r;
}

std::string BivarPoly::to_string() const {
    std::string out;
    for (const auto& [i, c] : coeffs_) {
        std::string mono;
        if (degree_ - i > 0) mono = power("x", degree_ - i);
        if (i > 0) mono += (mono.empty() ? "" : "*") + power("y", i);
        append_term(out, c < 0, with_coeff(equicode::to_string(Rat(abs(c))), mono));
    }
    return out.empty() ? "0" : out;
}

BivarPoly operator+(const BivarPoly& a, const BivarPoly& b) {
    if (a.degree_ != b.degree_ && !a.is_zero() && !b.is_zero())
        throw DimensionMismatch("adding polynomials of different degree");
    BivarPoly r = a.is_zero() ? BivarPoly(b.degree_) : a;
    for (const auto& [i, c] : b.coeffs_) r.add(i, c);
    return r;
}

BivarPoly poly_substitute_bivar(const BivarPoly& p, const BivarForm& x_expr, const BivarForm& y_expr) {
    const unsigned d = p.degree();
    // pw[j] holds the coefficient list of form^j, index = power of y.
    auto powers = [d](const BivarForm& f) {
        std::vector<std::vector<Rat>> pw{{Rat(1)}};
        for (unsigned j = 1; j <= d; ++j) {
            const auto& prev = pw.back();
            std::vector<Rat> next(prev.size() + 1, Rat(0));
            for (std::size_t i = 0; i < prev.size(); ++i) {
                next[i] += prev[i] * f.x;
                next[i + 1] += prev[i] * f.y;
            }
            pw.push_back(std::move(next));
        }
        return pw;
    };
    const auto px = powers(x_expr);
    const auto py = powers(y_expr);
    BivarPoly out(d);
    for (const auto& [i, c] : p.coeffs()) {
        const auto& a = px[d - i];
        const auto& b = py[i];
        for (std::size_t s = 0; s < a.size(); ++s) {
            if (a[s] == 0) continue;
            for (std::size_t u = 0; u < b.size(); ++u)
                if (b[u] != 0) out.add(static_cast<unsigned>(s + u), c * a[s] * b[u]);
        }
    }
    return out;
}

std::size_t VarFamily::x_count() const {
    std::size_t n = 1;
    for (unsigned i = 0; i < g; ++i) n *= static_cast<std::size_t>(k);
    return n;
}

std::vector<Elem> VarFamily::tuple(std::size_t idx) const {
    std::vector<Elem> t(g, 0);
    for (unsigned i = g; i-- > 0;) {
        t[i] = static_cast<Elem>(idx % static_cast<std::size_t>(k));
        idx /= static_cast<std::size_t>(k);
    }
    return t;
}

std::size_t VarFamily::index_of(std::span<const Elem> t) const {
    if (t.size() != g) throw DimensionMismatch("tuple length differs from genus");
    std::size_t idx = 0;
    for (auto a : t) idx = idx * static_cast<std::size_t>(k) + a;
    return idx;
}

std::string VarFamily::var_name(std::size_t idx) const {
    if (idx >= x_count()) return "y" + std::to_string(idx - x_count());
    if (g == 1) return "x" + std::to_string(idx);
    std::string s = "x(";
    auto t = tuple(idx);
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(t[i]);
    }
    return s + ")";
}

std::string coeff_to_string(const Integer& c) { return equicode::to_string(c); }
std::string coeff_to_string(const Cyclotomic& c) { return c.to_string(); }

template <typename C>
void MultiPolyT<C>::add_term(const Exponent& e, const C& c) {
    if (e.size() != family_.arity()) throw DimensionMismatch("exponent arity differs from variable count");
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        if constexpr (std::is_same_v<C, Cyclotomic>) {
            Cyclotomic r = c.reduced();
            if (!r.is_zero()) terms_.emplace(e, std::move(r));
        } else {
            if (!coeff_is_zero(c)) terms_.emplace(e, c);
        }
        return;
    }
    it->second += c;
    if constexpr (std::is_same_v<C, Cyclotomic>) it->second = it->second.reduced();
    if (coeff_is_zero(it->second)) terms_.erase(it);
}

template <typename C>
const C* MultiPolyT<C>::find(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? nullptr : &it->second;
}

template <typename C>
std::string MultiPolyT<C>::to_string() const {
    std::string out;
    for (const auto& [e, c] : terms_) {
        std::string mono;
        for (std::size_t v = 0; v < e.size(); ++v) {
            if (e[v] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += power(family_.var_name(v), e[v]);
        }
        if constexpr (std::is_same_v<C, Integer>) {
            append_term(out, c < 0, with_coeff(equicode::to_string(Integer(abs(c))), mono));
        } else {
            if (auto z = c.as_integer()) {
                append_term(out, *z < 0, with_coeff(equicode::to_string(Integer(abs(*z))), mono));
            } else {
                const std::string cs = "(" + c.to_string() + ")";
                append_term(out, false, mono.empty() ? cs : cs + "*" + mono);
            }
        }
    }
    return out.empty() ? "0" : out;
}

template class MultiPolyT<Integer>;
template class MultiPolyT<Cyclotomic>;

Exponent monomial_exponent(const VarFamily& f, std::span<const std::size_t> vars) {
    Exponent e(f.arity(), 0);
    for (auto v : vars) {
        if (v >= e.size()) throw DimensionMismatch("variable index out of range");
        ++e[v];
    }
    return e;
}

CycloPoly poly_substitute_multi(const MultiPoly& p, const std::vector<LinearForm>& images, const VarFamily& target) {
    return substitute_impl(p, images, target);
}

CycloPoly poly_substitute_multi(const CycloPoly& p, const std::vector<LinearForm>& images, const VarFamily& target) {
    return substitute_impl(p, images, target);
}

CycloPoly to_cyclo(const MultiPoly& p) {
    CycloPoly out(p.family());
    for (const auto& [e, c] : p.terms()) out.add_term(e, Cyclotomic::from_integer(p.family().k, c));
    return out;
}

MultiPoly to_integer_poly(const CycloPoly& p) {
    MultiPoly out(p.family());
    for (const auto& [e, c] : p.terms()) {
        auto z = c.as_integer();
        if (!z) throw NonIntegerResult("coefficient " + c.to_string() + " is not a rational integer");
        out.add_term(e, *z);
    }
    return out;
}

MultiPoly divide_exact(const MultiPoly& p, const Integer& d) {
    if (d == 0) throw std::invalid_argument("division by zero");
    MultiPoly out(p.family());
    for (const auto& [e, c] : p.terms()) {
        if (!mpz_divisible_p(c.get_mpz_t(), d.get_mpz_t()))
            throw NonIntegerResult("coefficient " + to_string(c) + " not divisible by " + to_string(d));
        Integer q;
        mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
        out.add_term(e, q);
    }
    return out;
}

Integer coefficient_sum(const MultiPoly& p) {
    Integer s = 0;
    for (const auto& [e, c] : p.terms()) s += c;
    return s;
}

long homogeneous_degree(const MultiPoly& p) {
    long deg = -2;
    for (const auto& [e, c] : p.terms()) {
        long d = 0;
        for (auto x : e) d += x;
        if (deg == -2)
            deg = d;
        else if (deg != d)
            return -1;
    }
    return deg == -2 ? 0 : deg;
}

BivarPoly specialize_cwe(const MultiPoly& p) {
    const auto& f = p.family();
    if (f.g != 1 || f.paired) throw PreconditionFailed("specialize_cwe needs a plain g = 1 family");
    const long deg = homogeneous_degree(p);
    if (deg < 0) throw PreconditionFailed("polynomial is not homogeneous");
    BivarPoly out(static_cast<unsigned>(deg));
    for (const auto& [e, c] : p.terms()) out.add(static_cast<unsigned>(deg - e[0]), Rat(c));
    return out;
}

MultiPoly merge_pair(const MultiPoly& p) {
    const auto& f = p.family();
    if (!f.paired || f.g != 1) throw PreconditionFailed("merge_pair needs a paired g = 1 family");
    VarFamily plain{f.k, 1, false};
    const std::size_t nx = f.x_count();
    MultiPoly out(plain);
    for (const auto& [e, c] : p.terms()) {
        Exponent m(nx, 0);
        for (std::size_t a = 0; a < nx; ++a) m[a] = static_cast<std::uint16_t>(e[a] + e[nx + a]);
        out.add_term(m, c);
    }
    return out;
}

} // namespace equicode
