#include "equicode/harmonic.hpp"

#include <algorithm>

#include "equicode/enumerators.hpp"
#include "equicode/errors.hpp"

namespace equicode {

std::vector<Subset> subsets(std::size_t t, std::size_t d) {
    std::vector<Subset> out;
    if (d > t) return out;
    Subset z(d);
    for (std::size_t i = 0; i < d; ++i) z[i] = i + 1;
    for (;;) {
        out.push_back(z);
        std::size_t i = d;
        while (i > 0 && z[i - 1] == t - d + i) --i;
        if (i == 0) break;
        ++z[i - 1];
        for (std::size_t j = i; j < d; ++j) z[j] = z[j - 1] + 1;
    }
    return out;
}

Rat HarmonicFn::at(const Subset& z) const {
    auto it = values.find(z);
    return it == values.end() ? Rat(0) : it->second;
}

std::string HarmonicFn::to_string() const {
    std::string out = "{";
    bool first = true;
    for (const auto& [z, v] : values) {
        if (!first) out += ", ";
        first = false;
        out += "[";
        for (std::size_t i = 0; i < z.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(z[i]);
        }
        out += "]: " + equicode::to_string(v);
    }
    return out + "}";
}

HarmonicFn gamma(const HarmonicFn& f) {
    if (f.d == 0) throw PreconditionFailed("gamma needs d >= 1");
    HarmonicFn g{f.t, f.d - 1, {}};
    for (const auto& [z, v] : f.values) {
        if (v == 0) continue;
        for (std::size_t drop = 0; drop < z.size(); ++drop) {
            Subset y;
            for (std::size_t i = 0; i < z.size(); ++i)
                if (i != drop) y.push_back(z[i]);
            g.values[y] += v;
        }
    }
    std::erase_if(g.values, [](const auto& kv) { return kv.second == 0; });
    return g;
}

bool is_harmonic(const HarmonicFn& f) { return f.d == 0 || gamma(f).values.empty(); }

std::vector<HarmonicFn> harm_basis(std::size_t t, std::size_t d) {
    if (d > t) throw PreconditionFailed("harm_basis needs d <= t");
    const auto cols = subsets(t, d);
    std::vector<HarmonicFn> out;
    if (d == 0) {
        out.push_back(HarmonicFn{t, 0, {{Subset{}, Rat(1)}}});
        return out;
    }
    const auto rows = subsets(t, d - 1);
    RatMatrix inc(rows.size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (std::includes(cols[j].begin(), cols[j].end(), rows[i].begin(), rows[i].end())) inc(i, j) = 1;
    const RatMatrix ker = kernel_basis(inc);
    for (std::size_t r = 0; r < ker.rows(); ++r) {
        HarmonicFn f{t, d, {}};
        for (std::size_t j = 0; j < cols.size(); ++j)
            if (ker(r, j) != 0) f.values[cols[j]] = ker(r, j);
        out.push_back(std::move(f));
    }
    return out;
}

Subset h_support(const OrbitWord& u) {
    Subset s;
    for (std::size_t i = 0; i < u.coeffs.size(); ++i)
        if (u.coeffs[i] != 0) s.push_back(i + 1);
    return s;
}

Rat f_tilde(const HarmonicFn& f, const OrbitWord& u, const RingZk& ring) {
    if (f.t != u.coeffs.size()) throw DimensionMismatch("harmonic function lives on a different t");
    const Subset supp = h_support(u);
    if (supp.size() < f.d) return 0;
    Rat s = 0;
    for (const auto& pick : subsets(supp.size(), f.d)) {
        Subset z;
        for (auto p : pick) z.push_back(supp[p - 1]);
        s += f.at(z);
    }
    Integer mult = 1;
    for (std::size_t i = 0; i < f.d; ++i) mult *= ring.modulus() - 1;
    return s * Rat(mult);
}

BivarPoly z_poly(const OrbitCode& d, const HarmonicFn& f) {
    return harmonic_weight_enum(d, f).divide_xy_power(static_cast<unsigned>(f.d));
}

} // namespace equicode
