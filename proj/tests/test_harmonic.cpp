#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "equicode/enumerators.hpp"
#include "equicode/errors.hpp"
#include "equicode/harmonic.hpp"
#include "equicode/instances.hpp"
#include "oracles.hpp"

using namespace equicode;

namespace {

HarmonicFn diff12() {
    HarmonicFn f{2, 1, {}};
    f.values[{1}] = 1;
    f.values[{2}] = -1;
    return f;
}

OrbitCode orbit_code(int k, std::size_t t, std::vector<std::vector<Elem>> ws) {
    std::vector<OrbitWord> out;
    for (auto& w : ws) out.push_back(OrbitWord{w});
    return make_orbit_code(RingZk(k), OrbitPartition::trivial(t), out);
}

std::size_t binom(std::size_t n, std::size_t r) {
    if (r > n) return 0;
    std::size_t out = 1;
    for (std::size_t i = 0; i < r; ++i) out = out * (n - i) / (i + 1);
    return out;
}

} // namespace

TEST_CASE("subsets") {
    CHECK(subsets(3, 2) == std::vector<Subset>{{1, 2}, {1, 3}, {2, 3}});
    CHECK(subsets(3, 0) == std::vector<Subset>{{}});
    CHECK(subsets(2, 3).empty());
}

TEST_CASE("gamma") {
    CHECK(gamma(diff12()).at({}) == 0);
    HarmonicFn zero{3, 1, {}};
    CHECK(gamma(zero).values.empty());
    HarmonicFn ones{3, 1, {}};
    for (std::size_t i = 1; i <= 3; ++i) ones.values[{i}] = 1;
    CHECK(gamma(ones).at({}) == 3);
    CHECK(is_harmonic(diff12()));
    CHECK_FALSE(is_harmonic(ones));
}

TEST_CASE("harmonic bases") {
    const auto b = harm_basis(2, 1);
    REQUIRE(b.size() == 1);
    CHECK(b[0].at({1}) == -b[0].at({2}));
    CHECK(harm_basis(3, 0).size() == 1);
    CHECK(harm_basis(4, 2).size() == 2);
    for (std::size_t t = 1; t <= 6; ++t)
        for (std::size_t d = 0; 2 * d <= t; ++d) {
            const auto basis = harm_basis(t, d);
            CHECK(basis.size() == binom(t, d) - (d == 0 ? 0 : binom(t, d - 1)));
            for (const auto& f : basis) CHECK(is_harmonic(f));
        }
}

TEST_CASE("f tilde") {
    const RingZk z4(4);
    CHECK(f_tilde(diff12(), OrbitWord{{1, 0}}, z4) == 3);
    CHECK(f_tilde(diff12(), OrbitWord{{1, 3}}, z4) == 0);
    CHECK(f_tilde(diff12(), OrbitWord{{0, 0}}, z4) == 0);
    const HarmonicFn c0 = harm_basis(2, 0).front();
    CHECK(f_tilde(c0, OrbitWord{{2, 3}}, z4) == c0.at({}));
}

TEST_CASE("f tilde closed form matches the definition") {
    for (int k : {2, 3, 4, 5})
        for (std::size_t t = 1; t <= 4; ++t)
            for (std::size_t d = 0; d <= 2 && 2 * d <= t; ++d)
                for (const auto& f : harm_basis(t, d))
                    oracle::for_each_vector(k, t, [&](const oracle::Vec& u) {
                        CHECK(f_tilde(f, OrbitWord{u}, RingZk(k)) == oracle::f_tilde(f, u, k));
                    });
}

TEST_CASE("harmonic weight enumerators and Z") {
    const OrbitCode d = orbit_code(4, 2, {{0, 0}, {1, 0}, {2, 0}, {3, 0}});
    const BivarPoly w = harmonic_weight_enum(d, diff12());
    CHECK(w.to_string() == "9*x*y");
    CHECK(z_poly(d, diff12()).to_string() == "9");
    CHECK(z_poly(d, diff12()).degree() == 0);

    const Instance in = z4_example();
    const OrbitCode ct = project_theta(in.code, hayden(in.ring, in.subgroup));
    CHECK(harmonic_weight_enum(ct, diff12()).is_zero());
    CHECK(z_poly(ct, diff12()).is_zero());
    const HarmonicFn c0 = harm_basis(2, 0).front();
    CHECK(harmonic_weight_enum(ct, c0) == h_weight_enum(ct).scaled(c0.at({})));
    CHECK(z_poly(ct, c0) == h_weight_enum(ct).scaled(c0.at({})));
    CHECK_THROWS_AS(harmonic_weight_enum(ct, HarmonicFn{3, 1, {}}), DimensionMismatch);
}

TEST_CASE("harmonic enumerators are divisible by (xy)^d") {
    std::mt19937_64 rng(31);
    for (const RandomSpec& spec : sweep_specs()) {
        const Instance in = random_instance(rng, spec);
        const OrbitCode d = project_theta(in.code, hayden(in.ring, in.subgroup));
        const std::size_t t = d.t();
        for (std::size_t deg = 0; deg <= 2 && 2 * deg <= t; ++deg)
            for (const auto& f : harm_basis(t, deg)) {
                const BivarPoly z = z_poly(d, f);
                CHECK(z.degree() == t - 2 * deg);
                // Every codeword of H-weight below deg contributes zero.
                for (const auto& u : d.words)
                    if (h_weight(u) < deg) CHECK(f_tilde(f, u, in.ring) == 0);
            }
    }
}
