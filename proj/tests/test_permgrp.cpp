#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "equicode/errors.hpp"
#include "equicode/permgrp.hpp"
#include "oracles.hpp"

using namespace equicode;

namespace {

PermGroup group(std::size_t n, std::vector<std::string> cycles) {
    std::vector<Permutation> gens;
    for (const auto& c : cycles) gens.push_back(Permutation::parse(c, n));
    return group_closure(n, gens);
}

} // namespace

TEST_CASE("parsing and composition") {
    const Permutation p = Permutation::parse("(1 2 3)(4)", 4);
    CHECK(p.order() == 3);
    CHECK(p.to_string() == "(1 2 3)");
    CHECK((p * p * p).is_identity());
    CHECK(p * p.inverse() == Permutation(4));
    CHECK_THROWS_AS(Permutation::parse("(1 5)", 4), ParseError);
    CHECK_THROWS_AS(Permutation::parse("(1 2", 4), ParseError);
    CHECK_THROWS_AS(Permutation::parse("(1 2 1)", 4), ParseError);
}

TEST_CASE("group closure") {
    CHECK(group(4, {"(1 2 3)(4)"}).order() == 3);
    CHECK(group(4, {}).order() == 1);
    CHECK(group(4, {"(1 2)", "(3 4)"}).order() == 4);
    CHECK(group(5, {"(1 2 3 4 5)", "(1 2)"}).order() == 120);
    CHECK_THROWS_AS(group_closure(8, {Permutation::parse("(1 2 3 4 5 6 7 8)", 8), Permutation::parse("(1 2)", 8)}, 1000),
                    GroupTooLarge);
}

TEST_CASE("orbits") {
    const OrbitPartition p = orbits(group(4, {"(1 2 3)(4)"}));
    CHECK(p.to_string() == "{{1,2,3},{4}}");
    CHECK(p.count() == 2);
    CHECK(p.lengths == std::vector<std::size_t>{3, 1});
    CHECK(orbits(group(4, {})).count() == 4);
    CHECK(orbits(group(4, {"(1 2)", "(3 4)"})).to_string() == "{{1,2},{3,4}}");
    CHECK(orbits(group(5, {"(2 5)"})).to_string() == "{{1},{2,5},{3},{4}}");
}

TEST_CASE("hayden operator on the Z_4 example") {
    const RingZk z4(4);
    const HaydenOperator op = hayden(z4, group(4, {"(1 2 3)(4)"}));
    CHECK(op.inv_h == 3);
    CHECK(op.apply(std::vector<Elem>{1, 1, 1, 3}) == std::vector<Elem>{1, 1, 1, 3});
    CHECK(op.apply(std::vector<Elem>{0, 0, 2, 2}) == std::vector<Elem>{2, 2, 2, 2});
    CHECK(op.apply(std::vector<Elem>{0, 0, 0, 0}) == std::vector<Elem>{0, 0, 0, 0});
    CHECK_THROWS_AS(hayden(RingZk(6), group(4, {"(1 2 3)"})), NotInvertible);
}

TEST_CASE("hayden operator matches group averaging") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 60; ++trial) {
        const int k = 2 + static_cast<int>(rng() % 6);
        const std::size_t n = 3 + rng() % 3;
        std::vector<std::size_t> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        const PermGroup h = group_closure(n, {Permutation(perm)});
        if (std::gcd(static_cast<std::size_t>(k), h.order()) != 1) continue;
        const HaydenOperator op = hayden(RingZk(k), h);
        std::vector<Elem> v(n);
        for (auto& x : v) x = static_cast<Elem>(rng() % k);
        const auto img = op.apply(v);
        CHECK(img == oracle::average(k, h, v));
        CHECK(op.apply(img) == img); // idempotent
        // Real matrix: rows sum to one, and it fixes orbit-constant vectors.
        for (std::size_t i = 0; i < n; ++i) {
            Rat s = 0;
            for (std::size_t j = 0; j < n; ++j) s += op.matrix_real(i, j);
            CHECK(s == 1);
        }
    }
}

TEST_CASE("orbit length matrix") {
    CHECK(orbit_length_matrix(orbits(group(4, {"(1 2 3)(4)"}))).to_string() == "diag(3,3,3,1)");
    CHECK(orbit_length_matrix(OrbitPartition::trivial(3)).to_string() == "diag(1,1,1)");
    CHECK(orbit_length_matrix(orbits(group(4, {"(1 2)", "(3 4)"}))).to_string() == "diag(2,2,2,2)");
}

TEST_CASE("kernel of theta") {
    const RingZk z4(4);
    CHECK(ker_theta_mod(hayden(z4, group(4, {}))).size() == 1);
    const HaydenOperator op = hayden(z4, group(4, {"(1 2 3)(4)"}));
    const auto ker = ker_theta_mod(op);
    CHECK(ker.size() == 16);
    CHECK(std::find(ker.begin(), ker.end(), std::vector<Elem>{1, 3, 0, 0}) != ker.end());
    std::size_t count = 0;
    oracle::for_each_vector(4, 4, [&](const std::vector<Elem>& v) {
        if (op.apply(v) == std::vector<Elem>(4, 0)) ++count;
    });
    CHECK(count == ker.size());

    const RatMatrix basis = ker_theta_real_basis(op.partition);
    CHECK(basis.rows() == 2);
    CHECK(basis * op.matrix_real == RatMatrix(2, 4, std::vector<Rat>(8, Rat(0))));
    CHECK(ker_theta_real_basis(OrbitPartition::trivial(3)).rows() == 0);
    CHECK(ker_theta_real_basis(orbits(group(2, {"(1 2)"}))).rows() == 1);
}

TEST_CASE("enumeration guard") {
    CHECK(checked_power(4, 4) == 256);
    CHECK_THROWS_AS(require_enumerable(255, 30, "test"), TooLarge);
}
