#include "equicode/io.hpp"

#include <algorithm>
#include <fstream>

#include "equicode/errors.hpp"

namespace equicode {

namespace {

Word parse_word(const json& j, const RingZk& ring, std::size_t n) {
    Word w;
    if (j.is_string()) {
        w = Word::parse(j.get<std::string>(), ring);
    } else if (j.is_array()) {
        for (const auto& e : j) {
            if (!e.is_number_integer()) throw ParseError("word entries must be integers");
            const long v = e.get<long>();
            if (v < 0 || v >= ring.modulus()) throw ParseError("word entry " + std::to_string(v) + " out of range");
            w.entries.push_back(static_cast<Elem>(v));
        }
    } else {
        throw ParseError("a word is a digit string or an integer array");
    }
    if (w.size() != n) throw ParseError("word length " + std::to_string(w.size()) + " differs from length " + std::to_string(n));
    return w;
}

PermGroup parse_group(const json& j, std::size_t n, const char* what) {
    if (!j.is_array()) throw ParseError(std::string(what) + " must be an array of cycle strings");
    std::vector<Permutation> gens;
    for (const auto& g : j) {
        if (!g.is_string()) throw ParseError(std::string(what) + " entries must be cycle strings");
        gens.push_back(Permutation::parse(g.get<std::string>(), n));
    }
    return group_closure(n, std::move(gens));
}

Subset parse_subset_key(const std::string& key) {
    json arr;
    try {
        arr = json::parse(key);
    } catch (const json::exception&) {
        throw ParseError("bad subset key '" + key + "'");
    }
    if (!arr.is_array()) throw ParseError("bad subset key '" + key + "'");
    Subset z;
    for (const auto& e : arr) {
        if (!e.is_number_integer() || e.get<long>() < 1) throw ParseError("bad subset key '" + key + "'");
        z.push_back(e.get<std::size_t>());
    }
    std::sort(z.begin(), z.end());
    if (std::adjacent_find(z.begin(), z.end()) != z.end()) throw ParseError("repeated point in '" + key + "'");
    return z;
}

Rat parse_rat_json(const json& j) {
    try {
        if (j.is_string()) return parse_rat(j.get<std::string>());
        if (j.is_number_integer()) return Rat(j.get<long>());
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
    }
    throw ParseError("expected a rational as a string or an integer");
}

template <typename T>
T get_field(const json& j, const char* key) {
    if (!j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception&) {
        throw ParseError(std::string("field '") + key + "' has the wrong type");
    }
}

} // namespace

std::string subset_key(const Subset& z) {
    std::string s = "[";
    for (std::size_t i = 0; i < z.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(z[i]);
    }
    return s + "]";
}

HarmonicFn parse_harmonic(const json& j) {
    HarmonicFn f;
    f.t = get_field<std::size_t>(j, "t");
    f.d = get_field<std::size_t>(j, "d");
    if (!j.contains("values") || !j.at("values").is_object()) throw ParseError("harmonic 'values' must be an object");
    for (const auto& [key, val] : j.at("values").items()) {
        Subset z = parse_subset_key(key);
        if (z.size() != f.d) throw ParseError("subset " + key + " does not have d elements");
        if (!z.empty() && z.back() > f.t) throw ParseError("subset " + key + " leaves 1.." + std::to_string(f.t));
        Rat v = parse_rat_json(val);
        if (v != 0) f.values[z] = v;
    }
    return f;
}

json to_json(const HarmonicFn& f) {
    json values = json::object();
    for (const auto& [z, v] : f.values) values[subset_key(z)] = to_string(v);
    return json{{"t", f.t}, {"d", f.d}, {"values", values}};
}

ProblemSpec parse_problem(const json& j) {
    if (!j.is_object()) throw ParseError("problem spec must be a JSON object");
    const int k = get_field<int>(j, "modulus");
    if (k < 2 || k > RingZk::kMaxModulus) throw ParseError("modulus must lie in 2.." + std::to_string(RingZk::kMaxModulus));
    const auto n = get_field<std::size_t>(j, "length");
    if (n == 0) throw ParseError("length must be positive");
    const RingZk ring(k);
    PermGroup g = j.contains("group") ? parse_group(j.at("group"), n, "group") : trivial_group(n);
    PermGroup h = j.contains("subgroup") ? parse_group(j.at("subgroup"), n, "subgroup") : g;
    for (const auto& p : h.elements())
        if (!g.contains(p)) throw ParseError("subgroup element " + p.to_string() + " is not in the group");
    std::vector<Word> gens;
    if (j.contains("generators")) {
        if (!j.at("generators").is_array()) throw ParseError("generators must be an array");
        for (const auto& w : j.at("generators")) gens.push_back(parse_word(w, ring, n));
    }
    Code c = code_span(ring, n, std::move(gens));
    ProblemSpec spec{Instance{"spec", ring, std::move(g), std::move(h), std::move(c)}, {}, {}, {}};
    if (j.contains("g")) spec.genus = get_field<unsigned>(j, "g");
    if (j.contains("harmonic")) spec.harmonic = parse_harmonic(j.at("harmonic"));
    if (j.contains("T")) {
        JacobiSet T;
        for (const auto& e : j.at("T")) {
            if (!e.is_number_integer() || e.get<long>() < 1) throw ParseError("T entries must be positive integers");
            T.places.push_back(e.get<std::size_t>());
        }
        std::sort(T.places.begin(), T.places.end());
        T.places.erase(std::unique(T.places.begin(), T.places.end()), T.places.end());
        const std::size_t t = orbits(spec.instance.subgroup).count();
        if (!T.places.empty() && T.places.back() > t)
            throw ParseError("T place " + std::to_string(T.places.back()) + " exceeds the " + std::to_string(t) + " orbits");
        spec.jacobi = T;
    }
    return spec;
}

ProblemSpec load_problem(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError("invalid JSON in '" + path + "': " + e.what());
    }
    ProblemSpec spec = parse_problem(j);
    spec.instance.label = path;
    return spec;
}

json to_json(const Report& r) {
    json j{{"flavor", r.flavor}, {"pass", r.pass}, {"lhs", r.lhs}, {"rhs", r.rhs}};
    if (r.witness) j["witness"] = *r.witness;
    if (!r.detail.empty()) j["detail"] = r.detail;
    return j;
}

json to_json(const BivarPoly& p) {
    json terms = json::object();
    for (const auto& [i, c] : p.coeffs()) terms[std::to_string(i)] = to_string(c);
    return json{{"degree", p.degree()}, {"text", p.to_string()}, {"y_power_coeffs", terms}};
}

json to_json(const MultiPoly& p) {
    json terms = json::object();
    for (const auto& [e, c] : p.terms()) {
        std::string key = "[";
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (i) key += ",";
            key += std::to_string(e[i]);
        }
        terms[key + "]"] = to_string(c);
    }
    const auto& f = p.family();
    return json{{"family", {{"k", f.k}, {"g", f.g}, {"paired", f.paired}}}, {"text", p.to_string()}, {"terms", terms}};
}

json to_json(const Lattice& l) {
    json basis = json::array();
    for (std::size_t i = 0; i < l.rank(); ++i) {
        json row = json::array();
        for (const auto& v : l.basis.row(i)) row.push_back(to_string(v));
        basis.push_back(row);
    }
    return json{{"k_scale", to_string(l.k_scale)}, {"basis", basis}};
}

Lattice parse_lattice(const json& j) {
    if (!j.is_object() || !j.contains("basis") || !j.at("basis").is_array())
        throw ParseError("lattice needs a 'basis' array");
    Integer s = 1;
    if (j.contains("k_scale")) {
        const Rat v = parse_rat_json(j.at("k_scale"));
        if (!is_integral(v) || v <= 0) throw ParseError("k_scale must be a positive integer");
        s = v.get_num();
    }
    const auto& rows = j.at("basis");
    if (rows.empty()) throw ParseError("empty basis");
    const std::size_t n = rows.front().size();
    RatMatrix b(0, n);
    for (const auto& row : rows) {
        if (!row.is_array() || row.size() != n) throw ParseError("basis rows must have equal length");
        std::vector<Rat> r;
        for (const auto& e : row) r.push_back(parse_rat_json(e));
        b.append_row(r);
    }
    if (rank(b) != b.rows()) throw ParseError("basis rows are linearly dependent");
    return make_lattice(b, s);
}

json to_json(const QSeries& s) {
    json terms = json::object();
    for (const auto& [m, c] : s.terms) terms[std::to_string(m)] = to_string(c);
    return json{{"den", s.den}, {"cutoff", s.cutoff}, {"terms", terms}, {"text", s.to_string()}};
}

json words_json(const std::vector<Word>& words) {
    json arr = json::array();
    for (const auto& w : words) arr.push_back(w.to_string());
    return arr;
}

} // namespace equicode
