#pragma once

// Weight enumerators of codes and of submodules in orbit coordinates.

#include <cstddef>
#include <string>
#include <vector>

#include "equicode/gcode.hpp"
#include "equicode/harmonic.hpp"
#include "equicode/polyring.hpp"

namespace equicode {

/// T, a set of 1-based orbit-coordinate places; the complement is [t] \ T.
struct JacobiSet {
    std::vector<std::size_t> places; // sorted

    bool contains(std::size_t place) const;
    std::string to_string() const; // "{1,2}"
};

BivarPoly weight_enum(const Code& c);
BivarPoly h_weight_enum(const OrbitCode& d);

/// sum_u prod_a x_a^{n_a(u)} over the orbit coefficients of u.
MultiPoly cwe_h(const OrbitCode& d);

/// Genus-g version: the column (u_1[i],...,u_g[i]) of each g-tuple of words
/// picks the variable. Throws TooLarge when |D|^g exceeds the enumeration bound.
MultiPoly cwe_g(const OrbitCode& d, unsigned g);

/// sum_u f~(u) x^{t-wt(u)} y^{wt(u)}. Throws DimensionMismatch unless f.t = t.
BivarPoly harmonic_weight_enum(const OrbitCode& d, const HarmonicFn& f);

/// sum_u prod_a x_a^{#{i in T: u_i = a}} y_a^{#{i not in T: u_i = a}}.
MultiPoly jacobi_poly(const OrbitCode& d, const JacobiSet& T);

} // namespace equicode
