#pragma once

// Fixed and random test instances: a code, the group it is invariant under,
// and the subgroup H used for the Hayden projection.

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "equicode/frobring.hpp"
#include "equicode/gcode.hpp"
#include "equicode/permgrp.hpp"

namespace equicode {

struct Instance {
    std::string label;
    RingZk ring;
    PermGroup group;    // G
    PermGroup subgroup; // H, a subgroup of G
    Code code;
};

/// The self-dual Z_4 code of length 4 with G = H = <(1 2 3)(4)>.
Instance z4_example();

/// The 16 codewords of the Z_4 example, in listing order.
const std::vector<std::string>& z4_example_codewords();

struct RandomSpec {
    int k = 3;
    std::size_t n = 4;
    std::size_t h_order = 2; // cycle length of the generator of H; must be coprime to k
    std::size_t max_generators = 2;
};

/// A uniformly drawn cyclic H of order spec.h_order on n points, and the
/// H-closure of a few random words. G = H.
Instance random_instance(std::mt19937_64& rng, const RandomSpec& spec);

/// The parameter grid used by the sweeps: k in {2,3,4,5,6}, n <= 5,
/// |H| in {2,3} coprime to k (|H| = 5 for k = 6, the only option there).
std::vector<RandomSpec> sweep_specs();

/// A random code that is not invariant under the drawn group, found by
/// rejection. Throws PreconditionFailed when none turns up in 1000 draws.
Instance random_non_g_instance(std::mt19937_64& rng, const RandomSpec& spec);

PermGroup trivial_group(std::size_t n);

} // namespace equicode
