#include "equicode/enumerators.hpp"

#include <algorithm>

#include "equicode/errors.hpp"

namespace equicode {

bool JacobiSet::contains(std::size_t place) const {
    return std::binary_search(places.begin(), places.end(), place);
}

std::string JacobiSet::to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < places.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(places[i]);
    }
    return out + "}";
}

BivarPoly weight_enum(const Code& c) {
    BivarPoly p(static_cast<unsigned>(c.length()));
    for (const auto& w : c.codewords()) p.add(static_cast<unsigned>(weight(w)), Rat(1));
    return p;
}

BivarPoly h_weight_enum(const OrbitCode& d) {
    BivarPoly p(static_cast<unsigned>(d.t()));
    for (const auto& u : d.words) p.add(static_cast<unsigned>(h_weight(u)), Rat(1));
    return p;
}

MultiPoly cwe_h(const OrbitCode& d) { return cwe_g(d, 1); }

MultiPoly cwe_g(const OrbitCode& d, unsigned g) {
    if (g == 0) throw PreconditionFailed("genus must be positive");
    require_enumerable(d.size(), g, "cwe_g");
    const VarFamily fam{d.ring.modulus(), g, false};
    MultiPoly p(fam);
    const std::size_t t = d.t();
    const std::size_t k = static_cast<std::size_t>(d.ring.modulus());
    std::vector<std::size_t> pick(g, 0);
    for (;;) {
        Exponent e(fam.arity(), 0);
        for (std::size_t i = 0; i < t; ++i) {
            std::size_t idx = 0;
            for (unsigned j = 0; j < g; ++j) idx = idx * k + d.words[pick[j]].coeffs[i];
            ++e[idx];
        }
        p.add_term(e, Integer(1));
        unsigned j = g;
        while (j > 0 && ++pick[j - 1] == d.size()) pick[--j] = 0;
        if (j == 0) break;
    }
    return p;
}

BivarPoly harmonic_weight_enum(const OrbitCode& d, const HarmonicFn& f) {
    if (f.t != d.t()) throw DimensionMismatch("harmonic function lives on a different t");
    BivarPoly p(static_cast<unsigned>(d.t()));
    for (const auto& u : d.words) p.add(static_cast<unsigned>(h_weight(u)), f_tilde(f, u, d.ring));
    return p;
}

MultiPoly jacobi_poly(const OrbitCode& d, const JacobiSet& T) {
    const std::size_t t = d.t();
    for (auto place : T.places)
        if (place < 1 || place > t) throw DimensionMismatch("Jacobi place outside 1..t");
    const VarFamily fam{d.ring.modulus(), 1, true};
    const std::size_t nx = fam.x_count();
    MultiPoly p(fam);
    for (const auto& u : d.words) {
        Exponent e(fam.arity(), 0);
        for (std::size_t i = 0; i < t; ++i) ++e[(T.contains(i + 1) ? 0 : nx) + u.coeffs[i]];
        p.add_term(e, Integer(1));
    }
    return p;
}

} // namespace equicode
