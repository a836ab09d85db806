#pragma once

// Polynomial containers for enumerators: homogeneous bivariate polynomials in
// x, y and sparse multivariate polynomials over a family of variables indexed
// by R^g (optionally paired with a y-family indexed by R).

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "equicode/exactmath.hpp"
#include "equicode/frobring.hpp"

namespace equicode {

/// sum_i c_i x^{d-i} y^i with rational coefficients.
class BivarPoly {
public:
    explicit BivarPoly(unsigned degree = 0) : degree_(degree) {}
    static BivarPoly monomial(unsigned degree, unsigned i, const Rat& c);

    unsigned degree() const { return degree_; }
    const std::map<unsigned, Rat>& coeffs() const { return coeffs_; }
    Rat coeff(unsigned i) const;
    /// Adds c to the coefficient of x^{d-i} y^i.
    void add(unsigned i, const Rat& c);
    bool is_zero() const { return coeffs_.empty(); }
    bool is_integral() const;
    Rat evaluate(const Rat& x, const Rat& y) const;

    BivarPoly scaled(const Rat& s) const;
    /// Exact quotient by (xy)^e. Throws NotDivisible.
    BivarPoly divide_xy_power(unsigned e) const;

    /// "x^4 + 3*x^2*y^2 - 1/2*y^4"; "0" for the zero polynomial.
    std::string to_string() const;

    friend BivarPoly operator+(const BivarPoly& a, const BivarPoly& b);
    friend bool operator==(const BivarPoly&, const BivarPoly&) = default;

private:
    unsigned degree_;
    std::map<unsigned, Rat> coeffs_;
};

/// a*x + b*y.
struct BivarForm {
    Rat x;
    Rat y;
};

/// p(x_expr, y_expr), expanded exactly.
BivarPoly poly_substitute_bivar(const BivarPoly& p, const BivarForm& x_expr, const BivarForm& y_expr);

/// Variables x_a for a in R^g (base-k lexicographic order, first entry most
/// significant), followed by y_a for a in R when paired.
struct VarFamily {
    int k = 2;
    unsigned g = 1;
    bool paired = false;

    std::size_t x_count() const;
    std::size_t arity() const { return x_count() + (paired ? static_cast<std::size_t>(k) : 0); }
    /// The R^g tuple labelling x-variable idx.
    std::vector<Elem> tuple(std::size_t idx) const;
    std::size_t index_of(std::span<const Elem> tuple) const;
    /// "x3", "x(1,2)", "y0".
    std::string var_name(std::size_t idx) const;

    friend bool operator==(const VarFamily&, const VarFamily&) = default;
};

using Exponent = std::vector<std::uint16_t>;

inline bool coeff_is_zero(const Integer& c) { return c == 0; }
inline bool coeff_is_zero(const Cyclotomic& c) { return c.is_zero(); }
std::string coeff_to_string(const Integer& c);
std::string coeff_to_string(const Cyclotomic& c);

/// Sparse polynomial; terms ordered by descending exponent vector, so that
/// x0^2 precedes x1*x3.
template <typename C>
class MultiPolyT {
public:
    using Terms = std::map<Exponent, C, std::greater<>>;

    explicit MultiPolyT(VarFamily family) : family_(family) {}

    const VarFamily& family() const { return family_; }
    const Terms& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Exponent& e, const C& c);
    /// Nullptr when the monomial is absent.
    const C* find(const Exponent& e) const;

    /// "x0^2 + 2*x1*x3 + x2^2"; "0" for the zero polynomial.
    std::string to_string() const;

    friend bool operator==(const MultiPolyT& a, const MultiPolyT& b) {
        return a.family_ == b.family_ && a.terms_ == b.terms_;
    }

private:
    VarFamily family_;
    Terms terms_;
};

extern template class MultiPolyT<Integer>;
extern template class MultiPolyT<Cyclotomic>;

using MultiPoly = MultiPolyT<Integer>;
using CycloPoly = MultiPolyT<Cyclotomic>;

/// Exponent vector for the monomial prod_i vars[i] (repeats allowed).
Exponent monomial_exponent(const VarFamily& f, std::span<const std::size_t> vars);

/// sum_j c_j v_j over target variables.
using LinearForm = std::vector<std::pair<std::size_t, Cyclotomic>>;

/// Replaces every source variable i by images[i] (a form in the target family).
CycloPoly poly_substitute_multi(const MultiPoly& p, const std::vector<LinearForm>& images, const VarFamily& target);
CycloPoly poly_substitute_multi(const CycloPoly& p, const std::vector<LinearForm>& images, const VarFamily& target);

CycloPoly to_cyclo(const MultiPoly& p);
/// Demotes reduced cyclotomic coefficients to integers. Throws NonIntegerResult.
MultiPoly to_integer_poly(const CycloPoly& p);
/// Exact division of every coefficient. Throws NonIntegerResult.
MultiPoly divide_exact(const MultiPoly& p, const Integer& d);

/// Sum of coefficients (the value at all variables = 1).
Integer coefficient_sum(const MultiPoly& p);
/// Common total degree of all terms, or -1 when p is not homogeneous (0 for zero p).
long homogeneous_degree(const MultiPoly& p);

/// x0 -> x and x_a -> y for a != 0. Requires g = 1 and no paired family.
BivarPoly specialize_cwe(const MultiPoly& p);

/// y_a -> x_a, turning a paired-family polynomial into a plain g = 1 one.
MultiPoly merge_pair(const MultiPoly& p);

} // namespace equicode
