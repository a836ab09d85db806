#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "equicode/enumerators.hpp"
#include "equicode/errors.hpp"
#include "equicode/instances.hpp"
#include "equicode/macwilliams.hpp"
#include "oracles.hpp"

using namespace equicode;

namespace {

OrbitCode example_ct() {
    const Instance in = z4_example();
    return project_theta(in.code, hayden(in.ring, in.subgroup));
}

OrbitCode orbit_code(int k, std::size_t t, std::vector<std::vector<Elem>> ws) {
    std::vector<OrbitWord> out;
    for (auto& w : ws) out.push_back(OrbitWord{w});
    return make_orbit_code(RingZk(k), OrbitPartition::trivial(t), out);
}

HarmonicFn diff12() {
    HarmonicFn f{2, 1, {}};
    f.values[{1}] = 1;
    f.values[{2}] = -1;
    return f;
}

const Flavor kAll[] = {Flavor::Hamming, Flavor::Cwe, Flavor::CweG, Flavor::Harmonic, Flavor::Jacobi};

} // namespace

TEST_CASE("Hamming transform") {
    const RingZk z4(4);
    BivarPoly w(2);
    w.add(0, 1);
    w.add(2, 3);
    CHECK(mw_hamming(w, z4, 4) == w);
    const BivarPoly zero = h_weight_enum(orbit_code(3, 3, {{0, 0, 0}}));
    CHECK(mw_hamming(zero, RingZk(3), 1).to_string() == "x^3 + 6*x^2*y + 12*x*y^2 + 8*y^3");
}

TEST_CASE("complete transform") {
    const RingZk z4(4);
    CHECK(mw_cwe(cwe_h(example_ct()), z4, 4).to_string() == "x0^2 + x1^2 + x2^2 + x3^2");
    CHECK(mw_cwe(cwe_h(example_ct()), z4, 4) == cwe_h(h_dual(example_ct())));
    const MultiPoly z = cwe_h(orbit_code(3, 2, {{0, 0}}));
    CHECK(mw_cwe(z, RingZk(3), 1) == cwe_h(orbit_code(3, 2, {{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {1, 2}, {2, 0}, {2, 1}, {2, 2}})));
    // k = 2: the complete enumerator is the Hamming one.
    const OrbitCode b = orbit_code(2, 3, {{0, 0, 0}, {1, 1, 0}});
    CHECK(specialize_cwe(mw_cwe(cwe_h(b), RingZk(2), 2)) == mw_hamming(h_weight_enum(b), RingZk(2), 2));
}

TEST_CASE("genus-g transform") {
    const RingZk z4(4);
    CHECK(mw_cwe_g(cwe_g(example_ct(), 1), z4, 1, 4) == mw_cwe(cwe_h(example_ct()), z4, 4));
    CHECK(mw_cwe_g(cwe_g(example_ct(), 2), z4, 2, 4) == cwe_g(h_dual(example_ct()), 2));
    const OrbitCode zero = orbit_code(2, 2, {{0, 0}});
    CHECK(mw_cwe_g(cwe_g(zero, 2), RingZk(2), 2, 1) == cwe_g(h_dual(zero), 2));
}

TEST_CASE("harmonic transform") {
    const RingZk z4(4);
    const OrbitCode d = orbit_code(4, 2, {{0, 0}, {1, 0}, {2, 0}, {3, 0}});
    CHECK(mw_harmonic(z_poly(d, diff12()), z4, 1, 4).to_string() == "-9");
    CHECK(z_poly(h_dual(d), diff12()).to_string() == "-9");
    CHECK(harmonic_weight_enum(h_dual(d), diff12()).to_string() == "-9*x*y");
    CHECK(mw_harmonic(BivarPoly(0), z4, 1, 4).is_zero());
    const BivarPoly w = h_weight_enum(example_ct());
    CHECK(mw_harmonic(w, z4, 0, 4) == mw_hamming(w, z4, 4));
}

TEST_CASE("Jacobi transform") {
    const RingZk z4(4);
    const MultiPoly j = jacobi_poly(example_ct(), JacobiSet{{1}});
    CHECK(mw_jacobi(j, z4, 4) == jacobi_poly(h_dual(example_ct()), JacobiSet{{1}}));
    for (const JacobiSet T : {JacobiSet{{}}, JacobiSet{{1, 2}}})
        CHECK(merge_pair(mw_jacobi(jacobi_poly(example_ct(), T), z4, 4)) == mw_cwe(cwe_h(example_ct()), z4, 4));
}

TEST_CASE("check_identity on the Z_4 example, both dual routes") {
    const Instance in = z4_example();
    const HaydenOperator op = hayden(in.ring, in.subgroup);
    for (Flavor f : kAll)
        for (bool via : {false, true}) {
            CheckOptions o;
            o.via_code_dual = via;
            o.jacobi = JacobiSet{{1}};
            if (f == Flavor::Harmonic) o.harmonic = diff12();
            const Report r = check_identity(f, in.code, op, o);
            CHECK_MESSAGE(r.pass, r.to_text());
        }
    const Report h = check_identity(Flavor::Hamming, in.code, op);
    CHECK(h.lhs == "x^2 + 3*y^2");
    CHECK(h.rhs == "x^2 + 3*y^2");
}

TEST_CASE("check_identity flags a wrong dual") {
    // Compare against an H-dual built from a code that is not H-invariant: the identity has no
    // reason to hold and the report must carry a witness.
    std::mt19937_64 rng(19);
    int failures = 0;
    for (int trial = 0; trial < 30; ++trial) {
        const Instance in = random_non_g_instance(rng, RandomSpec{3, 4, 2, 2});
        const HaydenOperator op = hayden(in.ring, in.subgroup);
        CheckOptions o;
        o.via_code_dual = true;
        const Report r = check_identity(Flavor::Cwe, in.code, op, o);
        if (!r.pass) {
            ++failures;
            CHECK(r.witness.has_value());
        }
    }
    CHECK(failures > 0);
}

TEST_CASE("transforms agree with complex evaluation") {
    std::mt19937_64 rng(43);
    for (const RandomSpec& spec : sweep_specs()) {
        if (spec.k > 5 || spec.n > 4) continue;
        const Instance in = random_instance(rng, spec);
        const OrbitCode d = project_theta(in.code, hayden(in.ring, in.subgroup));
        const OrbitCode hd = h_dual(d);
        const double size = static_cast<double>(d.size());
        const RingZk& r = in.ring;

        const MultiPoly c = cwe_h(d);
        auto x = oracle::random_point(rng, c.family().arity());
        CHECK(std::abs(oracle::mw_eval(c, x, spec.k, 1, size) - oracle::eval(cwe_h(hd), x)) < 1e-8);
        CHECK(std::abs(oracle::eval(mw_cwe(c, r, d.size()), x) - oracle::eval(cwe_h(hd), x)) < 1e-8);

        JacobiSet T;
        for (std::size_t i = 1; i <= d.t(); ++i)
            if (rng() % 2) T.places.push_back(i);
        const MultiPoly j = jacobi_poly(d, T);
        x = oracle::random_point(rng, j.family().arity());
        CHECK(std::abs(oracle::mw_eval(j, x, spec.k, 1, size) - oracle::eval(jacobi_poly(hd, T), x)) < 1e-8);

        if (d.size() <= 27) {
            const MultiPoly c2 = cwe_g(d, 2);
            x = oracle::random_point(rng, c2.family().arity());
            CHECK(std::abs(oracle::mw_eval(c2, x, spec.k, 2, size) - oracle::eval(cwe_g(hd, 2), x)) < 1e-6);
        }
    }
}

TEST_CASE("random sweep, every flavor, both routes, and trivial H") {
    std::mt19937_64 rng(47);
    for (const RandomSpec& spec : sweep_specs()) {
        const Instance in = random_instance(rng, spec);
        for (const PermGroup& h : {in.subgroup, trivial_group(spec.n)}) {
            const HaydenOperator op = hayden(in.ring, h);
            const std::size_t t = op.partition.count();
            for (Flavor f : kAll) {
                if (f == Flavor::CweG && (spec.k > 4 || t > 3)) continue;
                CheckOptions o;
                o.via_code_dual = rng() % 2;
                for (std::size_t i = 1; i <= t; ++i)
                    if (rng() % 2) o.jacobi.places.push_back(i);
                if (f == Flavor::Harmonic) {
                    const std::size_t deg = rng() % 3;
                    if (2 * deg > t) continue;
                    const auto basis = harm_basis(t, deg);
                    o.harmonic = basis[rng() % basis.size()];
                }
                const Report r = check_identity(f, in.code, op, o);
                CHECK_MESSAGE(r.pass, r.to_text());
            }
            CHECK(check_double_transform(project_theta(in.code, op)).pass);
        }
    }
}

TEST_CASE("flavor names") {
    CHECK(parse_flavor("cweg") == Flavor::CweG);
    CHECK(parse_flavor("cwe_g") == Flavor::CweG);
    CHECK(flavor_name(Flavor::Jacobi) == "jacobi");
    CHECK_THROWS_AS(parse_flavor("nope"), ParseError);
}
