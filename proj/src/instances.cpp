#include "equicode/instances.hpp"

#include <algorithm>
#include <numeric>

#include "equicode/errors.hpp"

namespace equicode {

namespace {

std::size_t uniform(std::mt19937_64& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

// A permutation made of disjoint cycles of length len on randomly chosen points.
Permutation random_cycle_product(std::mt19937_64& rng, std::size_t n, std::size_t len) {
    std::vector<std::size_t> pts(n);
    std::iota(pts.begin(), pts.end(), std::size_t{0});
    for (std::size_t i = n; i > 1; --i) std::swap(pts[i - 1], pts[uniform(rng, i)]);
    const std::size_t cycles = 1 + uniform(rng, n / len);
    std::vector<std::size_t> images(n);
    std::iota(images.begin(), images.end(), std::size_t{0});
    for (std::size_t c = 0; c < cycles; ++c)
        for (std::size_t j = 0; j < len; ++j) images[pts[c * len + j]] = pts[c * len + (j + 1) % len];
    return Permutation(std::move(images));
}

Word random_word(std::mt19937_64& rng, const RingZk& ring, std::size_t n) {
    Word w;
    for (std::size_t i = 0; i < n; ++i) w.entries.push_back(static_cast<Elem>(uniform(rng, ring.size())));
    return w;
}

} // namespace

const std::vector<std::string>& z4_example_codewords() {
    static const std::vector<std::string> words = {"0000", "1113", "1311", "2020", "0022", "3331", "3133", "0202",
                                                   "2200", "3111", "1131", "2002", "0220", "1333", "3313", "2222"};
    return words;
}

Instance z4_example() {
    const RingZk ring(4);
    std::vector<Word> words;
    for (const auto& s : z4_example_codewords()) words.push_back(Word::parse(s, ring));
    PermGroup g = group_closure(4, {Permutation::parse("(1 2 3)(4)", 4)});
    return Instance{"Z_4 example", ring, g, g, Code::from_codewords(ring, 4, std::move(words))};
}

PermGroup trivial_group(std::size_t n) { return group_closure(n, {}); }

Instance random_instance(std::mt19937_64& rng, const RandomSpec& spec) {
    const RingZk ring(spec.k);
    if (spec.h_order < 2 || spec.h_order > spec.n) throw PreconditionFailed("H order must lie in 2..n");
    PermGroup h = group_closure(spec.n, {random_cycle_product(rng, spec.n, spec.h_order)});
    std::vector<Word> gens;
    const std::size_t r = 1 + uniform(rng, spec.max_generators);
    for (std::size_t i = 0; i < r; ++i) {
        Word w = random_word(rng, ring, spec.n);
        for (const auto& p : h.elements()) gens.push_back(Word{p.apply<Elem>(w.entries)});
    }
    Code c = code_span(ring, spec.n, std::move(gens));
    std::string label = ring.name() + " n=" + std::to_string(spec.n) + " H=<" + h.generators().front().to_string() +
                        "> |C|=" + std::to_string(c.size());
    return Instance{std::move(label), ring, h, h, std::move(c)};
}

Instance random_non_g_instance(std::mt19937_64& rng, const RandomSpec& spec) {
    const RingZk ring(spec.k);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        PermGroup h = group_closure(spec.n, {random_cycle_product(rng, spec.n, spec.h_order)});
        Code c = code_span(ring, spec.n, {random_word(rng, ring, spec.n)});
        if (is_g_code(c, h)) continue;
        std::string label = ring.name() + " n=" + std::to_string(spec.n) + " H=<" +
                            h.generators().front().to_string() + "> non-invariant |C|=" + std::to_string(c.size());
        return Instance{std::move(label), ring, h, h, std::move(c)};
    }
    throw PreconditionFailed("no non-invariant code found");
}

std::vector<RandomSpec> sweep_specs() {
    std::vector<RandomSpec> out;
    for (int k : {2, 3, 4, 5, 6})
        for (std::size_t n = 2; n <= 5; ++n)
            for (std::size_t h : {2, 3, 5}) {
                if (h > n || std::gcd(static_cast<std::size_t>(k), h) != 1) continue;
                if (h == 5 && k != 6) continue;
                out.push_back(RandomSpec{k, n, h, 2});
            }
    return out;
}

} // namespace equicode
