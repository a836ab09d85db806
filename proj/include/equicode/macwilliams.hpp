#pragma once

// MacWilliams transforms for every enumerator family, and drivers that check
// them against directly enumerated duals.

#include <optional>
#include <string>

#include "equicode/enumerators.hpp"
#include "equicode/gcode.hpp"
#include "equicode/harmonic.hpp"
#include "equicode/polyring.hpp"
#include "equicode/report.hpp"

namespace equicode {

/// (1/size) p(x + (k-1)y, x - y). Throws NonIntegerResult.
BivarPoly mw_hamming(const BivarPoly& p, const RingZk& ring, const Integer& size);

/// x_a -> sum_b chi(ab) x_b, then divide by size. Throws NonIntegerResult.
MultiPoly mw_cwe(const MultiPoly& p, const RingZk& ring, const Integer& size);

/// x_a -> sum_{b in R^g} chi(a.b) x_b, then divide by size^g, where size = |D|.
MultiPoly mw_cwe_g(const MultiPoly& p, const RingZk& ring, unsigned g, const Integer& size);

/// (-1)^d (k^d / size) z(x + (k-1)y, x - y).
BivarPoly mw_harmonic(const BivarPoly& z, const RingZk& ring, unsigned d, const Integer& size);

/// Both families transformed by x_a -> sum_b chi(ab) x_b, then divide by size.
MultiPoly mw_jacobi(const MultiPoly& p, const RingZk& ring, const Integer& size);

enum class Flavor { Hamming, Cwe, CweG, Harmonic, Jacobi };

std::string flavor_name(Flavor f);
/// Accepts "hamming", "cwe", "cweg" (or "cwe_g"), "harmonic", "jacobi". Throws ParseError.
Flavor parse_flavor(const std::string& name);

struct CheckOptions {
    unsigned genus = 2;                 // CweG
    std::optional<HarmonicFn> harmonic; // Harmonic; defaults to the d = 0 constant
    JacobiSet jacobi;                   // Jacobi
    /// Build the dual side as (perp C) theta_H scaled by M_H instead of the H-dual of C theta_H.
    bool via_code_dual = false;
};

/// Transforms the enumerator of D = C theta_H and compares it with the
/// enumerator of its H-dual, computed directly. Exact equality.
Report check_identity(Flavor flavor, const Code& c, const HaydenOperator& op, const CheckOptions& opts = {});

/// mw applied to the enumerator of D and then of the dual must give back the original.
Report check_double_transform(const OrbitCode& d);

} // namespace equicode
