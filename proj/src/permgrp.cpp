#include "equicode/permgrp.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>

#include "equicode/errors.hpp"

namespace equicode {

Permutation::Permutation(std::size_t n) : images_(n) {
    std::iota(images_.begin(), images_.end(), std::size_t{0});
}

Permutation::Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (auto i : images_) {
        if (i >= images_.size() || seen[i]) throw std::invalid_argument("image array is not a bijection");
        seen[i] = true;
    }
}

Permutation Permutation::parse(const std::string& cycles, std::size_t n) {
    std::vector<std::size_t> images(n);
    std::iota(images.begin(), images.end(), std::size_t{0});
    std::vector<bool> used(n, false);
    std::size_t pos = 0;
    auto fail = [&](const std::string& why) {
        throw ParseError("bad cycle notation '" + cycles + "': " + why);
    };
    auto skip_ws = [&] {
        while (pos < cycles.size() && std::isspace(static_cast<unsigned char>(cycles[pos]))) ++pos;
    };
    skip_ws();
    while (pos < cycles.size()) {
        if (cycles[pos] != '(') fail("expected '('");
        ++pos;
        std::vector<std::size_t> cycle;
        for (;;) {
            while (pos < cycles.size() &&
                   (std::isspace(static_cast<unsigned char>(cycles[pos])) || cycles[pos] == ','))
                ++pos;
            if (pos >= cycles.size()) fail("unterminated cycle");
            if (cycles[pos] == ')') {
                ++pos;
                break;
            }
            if (!std::isdigit(static_cast<unsigned char>(cycles[pos]))) fail("expected a point");
            std::size_t p = 0;
            while (pos < cycles.size() && std::isdigit(static_cast<unsigned char>(cycles[pos])))
                p = p * 10 + static_cast<std::size_t>(cycles[pos++] - '0');
            if (p < 1 || p > n) fail("point " + std::to_string(p) + " outside 1.." + std::to_string(n));
            if (used[p - 1]) fail("point " + std::to_string(p) + " repeated");
            used[p - 1] = true;
            cycle.push_back(p - 1);
        }
        for (std::size_t i = 0; i < cycle.size(); ++i) images[cycle[i]] = cycle[(i + 1) % cycle.size()];
        skip_ws();
    }
    return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
    std::vector<std::size_t> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = i;
    return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (images_[i] != i) return false;
    return true;
}

std::size_t Permutation::order() const {
    std::size_t ord = 1;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (seen[i]) continue;
        std::size_t len = 0;
        for (std::size_t j = i; !seen[j]; j = images_[j]) {
            seen[j] = true;
            ++len;
        }
        ord = std::lcm(ord, len);
    }
    return ord;
}

std::string Permutation::to_string() const {
    std::string out;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (seen[i] || images_[i] == i) continue;
        out += "(";
        for (std::size_t j = i; !seen[j]; j = images_[j]) {
            seen[j] = true;
            if (j != i) out += " ";
            out += std::to_string(j + 1);
        }
        out += ")";
    }
    return out.empty() ? "()" : out;
}

Permutation operator*(const Permutation& g, const Permutation& h) {
    if (g.degree() != h.degree()) throw DimensionMismatch("permutation degree mismatch");
    std::vector<std::size_t> out(g.degree());
    for (std::size_t i = 0; i < g.degree(); ++i) out[i] = h.images_[g.images_[i]];
    return Permutation(std::move(out));
}

bool PermGroup::contains(const Permutation& p) const {
    return std::binary_search(elements_.begin(), elements_.end(), p);
}

PermGroup group_closure(std::size_t n, std::vector<Permutation> gens, std::size_t bound) {
    for (const auto& g : gens)
        if (g.degree() != n) throw DimensionMismatch("generator degree differs from n");
    std::set<Permutation> seen{Permutation(n)};
    std::vector<Permutation> frontier{Permutation(n)};
    while (!frontier.empty()) {
        std::vector<Permutation> next;
        for (const auto& x : frontier)
            for (const auto& g : gens) {
                Permutation y = x * g;
                if (seen.insert(y).second) {
                    if (seen.size() > bound)
                        throw GroupTooLarge("group order exceeds " + std::to_string(bound));
                    next.push_back(std::move(y));
                }
            }
        frontier = std::move(next);
    }
    PermGroup grp;
    grp.n_ = n;
    grp.generators_ = std::move(gens);
    grp.elements_.assign(seen.begin(), seen.end());
    return grp;
}

OrbitPartition OrbitPartition::trivial(std::size_t n) {
    OrbitPartition p;
    p.n = n;
    for (std::size_t i = 0; i < n; ++i) {
        p.orbit_of.push_back(i);
        p.orbits.push_back({i});
        p.lengths.push_back(1);
    }
    return p;
}

std::string OrbitPartition::to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < orbits.size(); ++i) {
        if (i) out += ",";
        out += "{";
        for (std::size_t j = 0; j < orbits[i].size(); ++j) {
            if (j) out += ",";
            out += std::to_string(orbits[i][j] + 1);
        }
        out += "}";
    }
    return out + "}";
}

OrbitPartition orbits(const PermGroup& g) {
    OrbitPartition p;
    p.n = g.degree();
    constexpr auto unassigned = std::numeric_limits<std::size_t>::max();
    p.orbit_of.assign(p.n, unassigned);
    for (std::size_t start = 0; start < p.n; ++start) {
        if (p.orbit_of[start] != unassigned) continue;
        const std::size_t idx = p.orbits.size();
        std::vector<std::size_t> orbit{start};
        p.orbit_of[start] = idx;
        for (std::size_t q = 0; q < orbit.size(); ++q)
            for (const auto& gen : g.generators()) {
                std::size_t img = gen.image(orbit[q]);
                if (p.orbit_of[img] == unassigned) {
                    p.orbit_of[img] = idx;
                    orbit.push_back(img);
                }
            }
        std::sort(orbit.begin(), orbit.end());
        p.lengths.push_back(orbit.size());
        p.orbits.push_back(std::move(orbit));
    }
    return p;
}

std::vector<Elem> HaydenOperator::apply(std::span<const Elem> v) const {
    const std::size_t n = v.size();
    if (n != partition.n) throw DimensionMismatch("vector length differs from operator degree");
    std::vector<Elem> out(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (v[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) out[j] = ring.add(out[j], ring.mul(v[i], matrix_mod[i][j]));
    }
    return out;
}

HaydenOperator hayden(const RingZk& ring, const PermGroup& h) {
    const std::size_t n = h.degree();
    const Elem inv = inverse(ring, static_cast<long>(h.order() % static_cast<std::size_t>(ring.modulus())));
    // Row i of sum_h P_h counts, per column j, the h with i h = j.
    std::vector<std::vector<std::size_t>> counts(n, std::vector<std::size_t>(n, 0));
    for (const auto& g : h.elements())
        for (std::size_t i = 0; i < n; ++i) ++counts[i][g.image(i)];
    std::vector<std::vector<Elem>> mod(n, std::vector<Elem>(n, 0));
    RatMatrix real(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            mod[i][j] = ring.mul(ring.reduce(static_cast<long>(counts[i][j])), inv);
            real(i, j) = make_rat(static_cast<unsigned long>(counts[i][j]), static_cast<unsigned long>(h.order()));
        }
    return HaydenOperator{ring, h, orbits(h), inv, std::move(mod), std::move(real)};
}

std::string OrbitLengthMatrix::to_string() const {
    std::string out = "diag(";
    for (std::size_t i = 0; i < diagonal.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(diagonal[i]);
    }
    return out + ")";
}

OrbitLengthMatrix orbit_length_matrix(const OrbitPartition& p) {
    OrbitLengthMatrix m;
    m.diagonal.resize(p.n);
    for (std::size_t j = 0; j < p.n; ++j) m.diagonal[j] = p.lengths[p.orbit_of[j]];
    return m;
}

std::size_t max_enumeration() {
    if (const char* env = std::getenv("EQUICODE_MAX_ENUM")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return 10'000'000;
}

std::size_t checked_power(std::size_t base, std::size_t exp) {
    std::size_t r = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (base != 0 && r > std::numeric_limits<std::size_t>::max() / base)
            return std::numeric_limits<std::size_t>::max();
        r *= base;
    }
    return r;
}

void require_enumerable(std::size_t base, std::size_t exp, const char* what) {
    const std::size_t total = checked_power(base, exp);
    if (total > max_enumeration())
        throw TooLarge(std::string(what) + ": " + std::to_string(base) + "^" + std::to_string(exp) +
                       " exceeds enumeration bound " + std::to_string(max_enumeration()));
}

std::vector<std::vector<Elem>> ker_theta_mod(const HaydenOperator& op) {
    const std::size_t n = op.partition.n;
    const std::size_t k = static_cast<std::size_t>(op.ring.modulus());
    require_enumerable(k, n, "ker_theta_mod");
    std::vector<std::vector<Elem>> out;
    std::vector<Elem> v(n, 0);
    const std::size_t total = checked_power(k, n);
    for (std::size_t idx = 0; idx < total; ++idx) {
        std::size_t rem = idx;
        for (std::size_t i = n; i-- > 0;) {
            v[i] = static_cast<Elem>(rem % k);
            rem /= k;
        }
        auto img = op.apply(v);
        if (std::all_of(img.begin(), img.end(), [](Elem e) { return e == 0; })) out.push_back(v);
    }
    return out;
}

RatMatrix ker_theta_real_basis(const OrbitPartition& p) {
    RatMatrix basis(0, p.n);
    for (const auto& orbit : p.orbits)
        for (std::size_t j = 0; j + 1 < orbit.size(); ++j) {
            std::vector<Rat> row(p.n, Rat(0));
            row[orbit[j]] = 1;
            row[orbit[j + 1]] = -1;
            basis.append_row(row);
        }
    return basis;
}

} // namespace equicode
