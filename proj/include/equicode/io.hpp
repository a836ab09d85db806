#pragma once

// JSON forms of problem specs, polynomials, lattices, series and reports.

#include <optional>
#include <string>

#include <json.hpp>

#include "equicode/enumerators.hpp"
#include "equicode/gcode.hpp"
#include "equicode/harmonic.hpp"
#include "equicode/instances.hpp"
#include "equicode/lattice.hpp"
#include "equicode/polyring.hpp"
#include "equicode/report.hpp"
#include "equicode/theta.hpp"

namespace equicode {

using json = nlohmann::json;

/// A problem spec:
///   {"modulus": 4, "length": 4, "group": ["(1 2 3)(4)"], "subgroup": [...],
///    "generators": [[1,1,1,3], "1311"], "g": 2, "T": [1],
///    "harmonic": {"t": 2, "d": 1, "values": {"[1]": "1", "[2]": "-1"}}}
/// "subgroup" defaults to the whole group. Throws ParseError.
struct ProblemSpec {
    Instance instance;
    std::optional<unsigned> genus;
    std::optional<HarmonicFn> harmonic;
    std::optional<JacobiSet> jacobi;
};

ProblemSpec parse_problem(const json& j);
ProblemSpec load_problem(const std::string& path);

HarmonicFn parse_harmonic(const json& j);
json to_json(const HarmonicFn& f);

/// Subset keys "[1,2]".
std::string subset_key(const Subset& z);

json to_json(const Report& r);
json to_json(const BivarPoly& p);
/// {"family": {...}, "terms": {"[2,0,0,0]": "1", ...}}
json to_json(const MultiPoly& p);
json to_json(const Lattice& l);
Lattice parse_lattice(const json& j);
json to_json(const QSeries& s);
json words_json(const std::vector<Word>& words);

} // namespace equicode
