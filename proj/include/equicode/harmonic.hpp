#pragma once

// Discrete harmonic functions on d-subsets of [t] and their extension to
// orbit-coordinate vectors.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "equicode/exactmath.hpp"
#include "equicode/frobring.hpp"
#include "equicode/gcode.hpp"
#include "equicode/polyring.hpp"

namespace equicode {

/// A sorted subset of {1..t}.
using Subset = std::vector<std::size_t>;

/// All d-subsets of {1..t} in lexicographic order.
std::vector<Subset> subsets(std::size_t t, std::size_t d);

/// A rational function on the d-subsets of [t]; absent subsets map to 0.
struct HarmonicFn {
    std::size_t t = 0;
    std::size_t d = 0;
    std::map<Subset, Rat> values;

    Rat at(const Subset& z) const;
    /// "{[1]: 1, [2]: -1}"
    std::string to_string() const;
    friend bool operator==(const HarmonicFn&, const HarmonicFn&) = default;
};

/// (gamma f)(y) = sum over d-subsets z containing y of f(z). Requires d >= 1.
HarmonicFn gamma(const HarmonicFn& f);
bool is_harmonic(const HarmonicFn& f);

/// Basis of ker gamma on functions of d-subsets, from an exact rational kernel.
std::vector<HarmonicFn> harm_basis(std::size_t t, std::size_t d);

/// 1-based positions of the nonzero orbit coefficients.
Subset h_support(const OrbitWord& u);

/// (k-1)^d * sum_{z subset of supp_H(u), |z| = d} f(z).
Rat f_tilde(const HarmonicFn& f, const OrbitWord& u, const RingZk& ring);

/// W^H_{D,f} / (xy)^d, of degree t - 2d. Throws NotDivisible.
BivarPoly z_poly(const OrbitCode& d, const HarmonicFn& f);

} // namespace equicode
