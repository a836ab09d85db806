#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "equicode/errors.hpp"
#include "equicode/polyring.hpp"
#include "oracles.hpp"

using namespace equicode;

namespace {

BivarPoly bivar(unsigned d, std::vector<long> c) {
    BivarPoly p(d);
    for (unsigned i = 0; i < c.size(); ++i) p.add(i, Rat(c[i]));
    return p;
}

MultiPoly example_cwe() {
    const VarFamily f{4, 1, false};
    MultiPoly p(f);
    const std::size_t sq0[] = {0, 0}, mixed[] = {1, 3}, sq2[] = {2, 2};
    p.add_term(monomial_exponent(f, sq0), 1);
    p.add_term(monomial_exponent(f, mixed), 2);
    p.add_term(monomial_exponent(f, sq2), 1);
    return p;
}

} // namespace

TEST_CASE("bivariate substitution") {
    const BivarPoly w = bivar(2, {1, 0, 3});
    CHECK(w.to_string() == "x^2 + 3*y^2");
    const BivarPoly t = poly_substitute_bivar(w, {1, 3}, {1, -1}).scaled(make_rat(1, 4));
    CHECK(t == w);
    CHECK(poly_substitute_bivar(w, {1, 0}, {0, 1}) == w);
    CHECK(poly_substitute_bivar(bivar(2, {1}), {1, 1}, {1, -1}) == bivar(2, {1, 2, 1}));
    CHECK(BivarPoly(3).to_string() == "0");
}

TEST_CASE("bivariate substitution agrees with evaluation") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        const unsigned d = static_cast<unsigned>(rng() % 6);
        BivarPoly p(d);
        for (unsigned i = 0; i <= d; ++i) p.add(i, Rat(static_cast<long>(rng() % 11) - 5));
        const BivarForm a{Rat(static_cast<long>(rng() % 5) - 2), Rat(static_cast<long>(rng() % 5) - 2)};
        const BivarForm b{Rat(static_cast<long>(rng() % 5) - 2), Rat(static_cast<long>(rng() % 5) - 2)};
        const Rat x = make_rat(static_cast<long>(rng() % 7) - 3, 2), y = make_rat(static_cast<long>(rng() % 7) - 3, 3);
        const BivarPoly s = poly_substitute_bivar(p, a, b);
        CHECK(s.evaluate(x, y) == p.evaluate(a.x * x + a.y * y, b.x * x + b.y * y));
    }
}

TEST_CASE("division by powers of xy") {
    CHECK(bivar(2, {0, 9}).divide_xy_power(1) == bivar(0, {9}));
    CHECK_THROWS_AS(bivar(2, {1, 9}).divide_xy_power(1), NotDivisible);
    CHECK(BivarPoly(4).divide_xy_power(2).is_zero());
}

TEST_CASE("variable families") {
    const VarFamily g2{4, 2, false};
    CHECK(g2.x_count() == 16);
    CHECK(g2.var_name(g2.index_of(std::vector<Elem>{1, 2})) == "x(1,2)");
    const VarFamily paired{3, 1, true};
    CHECK(paired.arity() == 6);
    CHECK(paired.var_name(3) == "y0");
    for (std::size_t i = 0; i < g2.x_count(); ++i) CHECK(g2.index_of(g2.tuple(i)) == i);
}

TEST_CASE("character substitution of the Z_4 cwe") {
    const MultiPoly p = example_cwe();
    CHECK(p.to_string() == "x0^2 + 2*x1*x3 + x2^2");
    const VarFamily f = p.family();
    std::vector<LinearForm> images(4);
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = 0; b < 4; ++b) images[a].push_back({b, Cyclotomic::zeta_power(4, static_cast<long>(a * b))});
    const MultiPoly t = divide_exact(to_integer_poly(poly_substitute_multi(p, images, f)), 4);
    CHECK(t.to_string() == "x0^2 + x1^2 + x2^2 + x3^2");

    std::vector<LinearForm> id(4);
    for (std::size_t a = 0; a < 4; ++a) id[a].push_back({a, Cyclotomic::from_integer(4, 1)});
    CHECK(to_integer_poly(poly_substitute_multi(p, id, f)) == p);
    CHECK(poly_substitute_multi(MultiPoly(f), images, f).is_zero());
}

TEST_CASE("integrality demotion") {
    const VarFamily f{4, 1, false};
    CycloPoly c(f);
    const std::size_t v[] = {1};
    c.add_term(monomial_exponent(f, v), Cyclotomic::zeta_power(4, 1));
    CHECK_THROWS_AS(to_integer_poly(c), NonIntegerResult);
    MultiPoly p(f);
    p.add_term(monomial_exponent(f, v), 3);
    CHECK_THROWS_AS(divide_exact(p, 2), NonIntegerResult);
}

TEST_CASE("specialization and helpers") {
    const MultiPoly p = example_cwe();
    CHECK(specialize_cwe(p).to_string() == "x^2 + 3*y^2");
    CHECK(coefficient_sum(p) == 4);
    CHECK(homogeneous_degree(p) == 2);
    const VarFamily f{3, 1, false};
    MultiPoly m(f);
    const std::size_t x0[] = {0, 0, 0};
    m.add_term(monomial_exponent(f, x0), 1);
    CHECK(specialize_cwe(m).to_string() == "x^3");
}

TEST_CASE("multivariate substitution agrees with complex evaluation") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        const int k = 2 + static_cast<int>(rng() % 5);
        const VarFamily f{k, 1, false};
        MultiPoly p(f);
        for (int term = 0; term < 4; ++term) {
            std::vector<std::size_t> vars(3);
            for (auto& v : vars) v = rng() % f.x_count();
            p.add_term(monomial_exponent(f, vars), static_cast<long>(rng() % 5) + 1);
        }
        std::vector<LinearForm> images(f.x_count());
        for (auto& form : images)
            for (std::size_t b = 0; b < f.x_count(); ++b)
                if (rng() % 2) form.push_back({b, Cyclotomic::zeta_power(k, static_cast<long>(rng() % k))});
        const CycloPoly s = poly_substitute_multi(p, images, f);
        const auto x = oracle::random_point(rng, f.x_count());
        std::vector<oracle::cplx> img(f.x_count());
        for (std::size_t a = 0; a < img.size(); ++a)
            for (const auto& [b, c] : images[a]) {
                oracle::cplx cv = 0;
                for (std::size_t j = 0; j < c.coeffs().size(); ++j)
                    cv += c.coeffs()[j].get_d() * oracle::root_of_unity(k, static_cast<long>(j));
                img[a] += cv * x[b];
            }
        oracle::cplx direct = 0;
        for (const auto& [e, c] : s.terms()) {
            oracle::cplx cv = 0;
            for (std::size_t j = 0; j < c.coeffs().size(); ++j)
                cv += c.coeffs()[j].get_d() * oracle::root_of_unity(k, static_cast<long>(j));
            for (std::size_t i = 0; i < e.size(); ++i)
                for (int r = 0; r < e[i]; ++r) cv *= x[i];
            direct += cv;
        }
        CHECK(std::abs(direct - oracle::eval(p, img)) < 1e-8 * (1 + std::abs(direct)));
    }
}
