#pragma once

// Lattices with a global 1/sqrt(s) scale: the stored rational basis B stands
// for the true basis B / sqrt(s). Construction A, G-lattice tests, the
// sublattice Lambda_0, Hayden projections and duals.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "equicode/exactmath.hpp"
#include "equicode/gcode.hpp"
#include "equicode/permgrp.hpp"
#include "equicode/report.hpp"

namespace equicode {

struct Lattice {
    std::size_t n = 0; // ambient dimension
    Integer k_scale = 1;
    RatMatrix basis;   // rows, linearly independent, kept in rational HNF

    std::size_t rank() const { return basis.rows(); }
    /// (1/s) B B^T.
    RatMatrix gram() const;
    /// det of the Gram matrix, i.e. the squared covolume.
    Rat gram_determinant() const;
    bool is_integral() const;

    friend bool operator==(const Lattice&, const Lattice&) = default;
};

/// Canonicalizes the row lattice of generators (HNF; zero rows dropped).
Lattice make_lattice(const RatMatrix& generators, const Integer& k_scale);

/// Same true lattice written with another scale. Throws PreconditionFailed
/// unless new_scale / k_scale is the square of a rational.
Lattice rescale(const Lattice& l, const Integer& new_scale);

/// Equal as sets of true vectors (rescaling to a common scale when possible).
bool same_lattice(const Lattice& a, const Lattice& b);

/// v in stored coordinates.
bool contains(const Lattice& l, std::span<const Rat> v);

/// (1/sqrt k){x in Z^n : x mod k in C}.
Lattice construction_a(const Code& c);
/// The same construction applied to a submodule given in orbit coordinates (ambient Z^t).
Lattice construction_a(const OrbitCode& d);

bool is_g_lattice(const Lattice& l, const PermGroup& g);

/// {v in Lambda : v theta in Lambda}. Requires a full-rank lattice.
Lattice lambda0(const Lattice& l, const RatMatrix& theta);

/// Lattice generated by the images v theta of the basis rows.
/// Throws NotDiscrete when the image rank differs from rank(theta) on a full-rank input.
Lattice project_lattice(const Lattice& l, const RatMatrix& theta);

/// Dual inside the row span: {u in span : <u, v> in Z for all v}.
Lattice dual_lattice(const Lattice& l);

/// An orbit-constant lattice rewritten in orbit coordinates (one entry per orbit).
/// Throws NotOrbitConstant.
Lattice to_orbit_coordinates(const Lattice& l, const OrbitPartition& p);

struct BallVector {
    std::vector<Integer> coords; // coefficients w.r.t. the basis
    Integer norm_num;            // <x, x> = norm_num / norm_den(l)
};

/// s * L^2 with L the common denominator of the basis: the denominator of every norm.
Integer norm_den(const Lattice& l);

/// Every lattice vector with <x, x> <= max_num / norm_den(l), by exact
/// Fincke-Pohst enumeration. Throws TooLarge past the enumeration bound.
std::vector<BallVector> ball(const Lattice& l, const Integer& max_num);

/// Stored coordinates x * B.
std::vector<Rat> ball_point(const Lattice& l, const BallVector& v);

/// (Lambda_0 theta)* = ker theta (+) Lambda_0* theta, checked as: the span-dual of
/// Lambda_0 theta equals the projection of the dual of Lambda_0, and the orthogonal
/// complement of its span equals ker theta.
Report verify_lattice_hayden(const Lattice& l, const RatMatrix& theta, const OrbitPartition& p);

/// is_g_code(C, G) == is_g_lattice(Lambda(C), G), plus Lambda_0(C) theta_H against
/// the orbit-coordinate Construction A lattice of C theta_H: basis equality and
/// vector-by-vector agreement on the ball of norm <= ball_norm.
Report verify_glattice_correspondence(const Code& c, const PermGroup& g, const HaydenOperator& op,
                                      const Rat& ball_norm = 6);

std::string to_string(const Lattice& l);

} // namespace equicode
