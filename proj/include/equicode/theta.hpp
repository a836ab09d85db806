#pragma once

// Truncated q-expansions of lattice theta series (genus 1 and 2) and Jacobi
// theta series, the coordinate theta functions substituted into enumerators,
// and a numeric check of the Jacobi transformation formula.

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "equicode/enumerators.hpp"
#include "equicode/exactmath.hpp"
#include "equicode/gcode.hpp"
#include "equicode/lattice.hpp"
#include "equicode/polyring.hpp"
#include "equicode/report.hpp"

namespace equicode {

/// sum_m c_m q^{m/den}, kept for m <= cutoff.
struct QSeries {
    std::int64_t den = 1;
    std::int64_t cutoff = 0;
    std::map<std::int64_t, Integer> terms;

    /// 1 (the constant series) with the given truncation.
    static QSeries one(std::int64_t den, std::int64_t cutoff);
    Integer coeff(std::int64_t m) const;
    void add(std::int64_t m, const Integer& c);
    /// Lines "m/den: coeff" in ascending m.
    std::string to_text() const;
    /// "1 + 2q^(1/2) + 4q^2"
    std::string to_string() const;
    friend bool operator==(const QSeries&, const QSeries&) = default;
};

QSeries operator+(const QSeries& a, const QSeries& b);
QSeries operator*(const QSeries& a, const QSeries& b);
QSeries operator*(const Integer& s, const QSeries& a);
/// Same series over a multiple of its denominator.
QSeries with_den(const QSeries& a, std::int64_t den);

/// Genus 2: keys (m11, m12, m22) for exp(pi i tr(tau A)) with den*A11, 2*den*A12,
/// den*A22; kept for m11 + m22 <= cutoff.
struct QSeries2 {
    using Key = std::array<std::int64_t, 3>;
    std::int64_t den = 1;
    std::int64_t cutoff = 0;
    std::map<Key, Integer> terms;

    static QSeries2 one(std::int64_t den, std::int64_t cutoff);
    void add(const Key& m, const Integer& c);
    std::string to_text() const;
    friend bool operator==(const QSeries2&, const QSeries2&) = default;
};

QSeries2 operator+(const QSeries2& a, const QSeries2& b);
QSeries2 operator*(const QSeries2& a, const QSeries2& b);

/// sum c q^{m/den} zeta^{j/den} over keys (m, j), kept for m <= cutoff.
struct JacobiQSeries {
    using Key = std::pair<std::int64_t, std::int64_t>;
    std::int64_t den = 1;
    std::int64_t cutoff = 0;
    std::map<Key, Integer> terms;

    static JacobiQSeries one(std::int64_t den, std::int64_t cutoff);
    void add(const Key& m, const Integer& c);
    /// Sum over zeta powers: the z = 0 slice.
    QSeries at_zero() const;
    std::string to_text() const;
    friend bool operator==(const JacobiQSeries&, const JacobiQSeries&) = default;
};

JacobiQSeries operator+(const JacobiQSeries& a, const JacobiQSeries& b);
JacobiQSeries operator*(const JacobiQSeries& a, const JacobiQSeries& b);

/// Numerator cutoff floor(max_exponent * den).
std::int64_t exponent_cutoff(const Rat& max_exponent, std::int64_t den);

/// sum_{x in L, <x,x> <= max_exponent} q^{<x,x>}, den = norm_den(l).
QSeries theta_lattice(const Lattice& l, const Rat& max_exponent);

/// sum_{b in Z, b = a mod k} q^{b^2/k}, den = k.
QSeries theta_fa(const RingZk& ring, Elem a, const Rat& max_exponent);

/// Genus-2 version for a in R^2: b in Z^2 with b = a mod k, keys (b1^2, 2 b1 b2, b2^2), den = k.
QSeries2 theta_fa2(const RingZk& ring, Elem a1, Elem a2, const Rat& max_exponent);

/// sum_{b = a mod k} q^{b^2/k} zeta^b, den = k (zeta numerator b*k).
JacobiQSeries phi_a(const RingZk& ring, Elem a, const Rat& max_exponent);

/// Replaces x_a by images[a] in an integer polynomial of a plain g = 1 family.
QSeries substitute_series(const MultiPoly& p, const std::vector<QSeries>& images);
/// Genus-2 family: images indexed like VarFamily{k, 2}.
QSeries2 substitute_series2(const MultiPoly& p, const std::vector<QSeries2>& images);
/// Paired family: x_a -> x_images[a], y_a -> y_images[a].
JacobiQSeries substitute_jacobi(const MultiPoly& p, const std::vector<JacobiQSeries>& x_images,
                                const std::vector<JacobiQSeries>& y_images);

/// Genus-2 theta: pairs (x1, x2) with <x1,x1> + <x2,x2> <= max_exponent.
QSeries2 theta_lattice2(const Lattice& l, const Rat& max_exponent);

/// sum_x q^{<x,x>} zeta^{<x,y>}; y in stored coordinates. Throws NotMember.
JacobiQSeries jacobi_theta_lattice(const Lattice& l, std::span<const Rat> y, const Rat& max_exponent);

/// Lambda_0(C) theta_H in orbit coordinates (H-inner product = dot product of orbit coefficients).
Lattice orbit_image_lattice(const Code& c, const HaydenOperator& op);

/// Theta series (genus 1 or 2) of Lambda_0(C) theta_H against cwe^{(g)}_H(C theta_H) at x_a <- f_a.
Report verify_theta_correspondence(const Code& c, const HaydenOperator& op, unsigned genus, const Rat& max_exponent);

/// Which variable family of the Jacobi polynomial receives the zeta-carrying functions.
enum class JacobiAssignment {
    PhiOnT,          // x_a (places in T) <- phi_a, y_a <- psi_a; reference sqrt(k) 1_T
    PhiOnComplement, // x_a <- psi_a, y_a (places outside T) <- phi_a; reference sqrt(k) 1_{[t]\T}
};

/// CJ^H_{C theta_H, T} with the coordinate theta functions substituted, against the
/// Jacobi theta series of Lambda_0(C) theta_H with reference vector sqrt(k) 1_S,
/// S = T (PhiOnT) or its complement.
Report verify_jacobi_correspondence(const Code& c, const HaydenOperator& op, const JacobiSet& T,
                                    const Rat& max_exponent,
                                    JacobiAssignment assignment = JacobiAssignment::PhiOnT);

/// Which determinant enters the factor of the transformation formula.
enum class DetConvention {
    Gram,     // det of the Gram matrix, the squared covolume
    Covolume, // |det| of a square true basis matrix, the covolume itself
};

/// theta_{L*}(is) = det^{1/2} s^{-r/2} theta_L(i/s), both sides by direct summation
/// over norm balls large enough that e^{-pi w N} < tol/10. Throws NotConverged when
/// the balls would exceed the enumeration bound.
Report jacobi_formula_check(const Lattice& l, double s, double tol,
                            DetConvention convention = DetConvention::Gram);

} // namespace equicode
