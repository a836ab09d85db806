// Command-line front end: loads a problem (spec file, seeded random instance,
// or the built-in Z_4 example), runs one computation or check, and prints
// text or JSON. Exit status: 0 all checks passed, 1 a check failed, 2 bad input.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "equicode/enumerators.hpp"
#include "equicode/errors.hpp"
#include "equicode/gcode.hpp"
#include "equicode/harmonic.hpp"
#include "equicode/instances.hpp"
#include "equicode/io.hpp"
#include "equicode/lattice.hpp"
#include "equicode/macwilliams.hpp"
#include "equicode/theta.hpp"

using namespace equicode;

namespace {

struct Source {
    std::string spec_path;
    std::optional<std::uint64_t> seed;
    int modulus = 3;
    std::size_t length = 4;
    std::size_t h_order = 2;
};

struct Output {
    json doc = json{{"pass", true}, {"reports", json::array()}, {"values", json::object()}};
    std::ostringstream text;
    bool pass = true;

    void value(const std::string& key, const json& v, const std::string& shown) {
        doc["values"][key] = v;
        text << key << ": " << shown << "\n";
    }
    void value(const std::string& key, const std::string& v) { value(key, json(v), v); }
    void report(const Report& r) {
        doc["reports"].push_back(to_json(r));
        text << r.to_text();
        pass = pass && r.pass;
    }
    void check(const std::string& what, bool ok, const std::string& got, const std::string& want) {
        report(Report{what, ok, got, want, ok ? std::nullopt : std::optional<std::string>("expected " + want), ""});
    }
};

void add_source(CLI::App* sub, Source& src) {
    sub->add_option("--spec", src.spec_path, "problem spec JSON file");
    sub->add_option("--seed", src.seed, "draw a random G-code with this seed");
    sub->add_option("--modulus", src.modulus, "k for random instances")->check(CLI::Range(2, 255));
    sub->add_option("--length", src.length, "n for random instances")->check(CLI::Range(2, 8));
    sub->add_option("--h-order", src.h_order, "cycle length of the generator of H for random instances");
}

ProblemSpec load(const Source& src) {
    if (!src.spec_path.empty() && src.seed) throw ParseError("--spec and --seed cannot be combined");
    if (!src.spec_path.empty()) return load_problem(src.spec_path);
    if (src.seed) {
        std::mt19937_64 rng(*src.seed);
        RandomSpec rs{src.modulus, src.length, src.h_order, 2};
        if (std::gcd(static_cast<std::size_t>(src.modulus), src.h_order) != 1)
            throw ParseError("--h-order must be coprime to --modulus");
        return ProblemSpec{random_instance(rng, rs), {}, {}, {}};
    }
    return ProblemSpec{z4_example(), {}, {}, {}};
}

JacobiSet parse_places(const std::vector<std::size_t>& places) {
    JacobiSet T{places};
    std::sort(T.places.begin(), T.places.end());
    T.places.erase(std::unique(T.places.begin(), T.places.end()), T.places.end());
    return T;
}

// Every basis function of Harm_d for d = 0..max_d (empty once 2d > t).
std::vector<HarmonicFn> harmonic_functions(std::size_t t, std::size_t max_d) {
    std::vector<HarmonicFn> out;
    for (std::size_t d = 0; d <= max_d && 2 * d <= t; ++d)
        for (auto& f : harm_basis(t, d)) out.push_back(std::move(f));
    return out;
}

Rat parse_cutoff(const std::string& s) { return parse_rat(s); }

void describe_instance(Output& out, const Instance& in) {
    out.value("ring", in.ring.name());
    out.value("length", json(in.code.length()), std::to_string(in.code.length()));
    out.value("code_size", json(in.code.size()), std::to_string(in.code.size()));
    out.value("H_order", json(in.subgroup.order()), std::to_string(in.subgroup.order()));
}

void run_z4_example(Output& out) {
    const Instance in = z4_example();
    const HaydenOperator op = hayden(in.ring, in.subgroup);
    const OrbitCode d = project_theta(in.code, op);
    const OrbitCode hd = h_dual(d);
    const OrbitLengthMatrix m = orbit_length_matrix(op.partition);
    const OrbitCode via_perp = scale_by_M(project_theta(dual(in.code), op), m);
    const BivarPoly w = h_weight_enum(d);

    out.value("C", words_json(in.code.codewords()), words_to_string(in.code.codewords()));
    out.value("C_theta", words_json(d.expanded()), d.to_string());
    out.value("G_dual_C_theta", words_json(hd.expanded()), hd.to_string());
    out.value("M", m.to_string());
    out.value("perp_C_theta_M", words_json(via_perp.expanded()), via_perp.to_string());
    out.value("W_G", w.to_string());
    out.value("cwe_G", cwe_h(d).to_string());

    out.check("C_theta", d.to_string() == "{0000,1113,2222,3331}", d.to_string(), "{0000,1113,2222,3331}");
    out.check("G_dual_C_theta", hd.to_string() == "{0000,1111,2222,3333}", hd.to_string(), "{0000,1111,2222,3333}");
    out.check("M", m.to_string() == "diag(3,3,3,1)", m.to_string(), "diag(3,3,3,1)");
    out.check("G_dual_equals_perp_C_theta_M", hd.words == via_perp.words, via_perp.to_string(), hd.to_string());
    out.check("W_G", w.to_string() == "x^2 + 3*y^2", w.to_string(), "x^2 + 3*y^2");
    out.check("W_G_self_dual", mw_hamming(w, in.ring, 4) == w, mw_hamming(w, in.ring, 4).to_string(), w.to_string());
    out.report(verify_hayden(in.code, op));
    out.report(verify_orbit_matrix(in.code, op));
}

int emit(const Output& out, const std::string& format) {
    if (format == "json") {
        json doc = out.doc;
        doc["pass"] = out.pass;
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << out.text.str();
        std::cout << (out.pass ? "result: PASS" : "result: FAIL") << "\n";
    }
    return out.pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"equivariant code and lattice toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "text";
    app.add_option("--out", format, "output format")->check(CLI::IsMember({"text", "json"}));

    Source src;
    std::string flavor = "hamming";
    unsigned genus = 2;
    unsigned theta_genus = 1;
    std::size_t harmonic_d = 2;
    std::vector<std::size_t> places;
    bool via_dual = false;
    bool construction_a_flag = false;
    std::string cutoff = "8";
    double tol = 1e-9;
    std::vector<double> s_values{1.0, 2.0};
    std::string lattice_path;

    auto* orbits_cmd = app.add_subcommand("orbits", "orbit partition and orbit-length matrix of H");
    auto* project_cmd = app.add_subcommand("project", "C theta_H in orbit form");
    auto* dual_cmd = app.add_subcommand("dual", "dual code and H-dual of C theta_H");
    auto* enum_cmd = app.add_subcommand("enum", "enumerator of C theta_H");
    auto* mw_cmd = app.add_subcommand("mw-check", "MacWilliams identity check");
    auto* hayden_cmd = app.add_subcommand("hayden-check", "perp(C theta) = ker theta (+) (perp C) theta");
    auto* matrix_cmd = app.add_subcommand("orbit-matrix-check", "H-dual of C theta = (perp C theta) M");
    auto* lattice_cmd = app.add_subcommand("lattice", "Construction A lattice and its checks");
    auto* theta_cmd = app.add_subcommand("theta", "theta series against the substituted enumerator");
    auto* jtheta_cmd = app.add_subcommand("jacobi-theta", "Jacobi theta series against the Jacobi polynomial");
    auto* jformula_cmd = app.add_subcommand("jacobi-formula", "numeric Jacobi transformation formula");
    auto* example_cmd = app.add_subcommand("paper-example", "the Z_4 example with every expected value asserted");
    (void)example_cmd;

    for (auto* sub : {orbits_cmd, project_cmd, dual_cmd, enum_cmd, mw_cmd, hayden_cmd, matrix_cmd, lattice_cmd,
                      theta_cmd, jtheta_cmd, jformula_cmd})
        add_source(sub, src);
    for (auto* sub : {enum_cmd, mw_cmd}) {
        sub->add_option("--flavor", flavor, "hamming|cwe|cweg|harmonic|jacobi")
            ->check(CLI::IsMember({"hamming", "cwe", "cweg", "cwe_g", "harmonic", "jacobi"}));
        sub->add_option("--genus", genus, "genus for cweg")->check(CLI::Range(1, 3));
        sub->add_option("--d", harmonic_d, "largest harmonic degree when the problem file gives no function")->check(CLI::Range(0, 2));
        sub->add_option("--T", places, "Jacobi places (1-based orbit indices)")->delimiter(',');
    }
    mw_cmd->add_flag("--via-dual", via_dual, "build the dual side from perp C instead of the H-dual");
    lattice_cmd->add_flag("--construction-a", construction_a_flag, "Construction A of the code")->required();
    theta_cmd->add_option("--genus", theta_genus, "1 or 2")->check(CLI::Range(1, 2));
    theta_cmd->add_option("--cutoff", cutoff, "largest q-exponent kept (rational)");
    jtheta_cmd->add_option("--T", places, "Jacobi places")->delimiter(',');
    jtheta_cmd->add_option("--cutoff", cutoff, "largest q-exponent kept (rational)");
    jformula_cmd->add_option("--tol", tol, "absolute tolerance");
    jformula_cmd->add_option("--s", s_values, "evaluate at z = s i")->delimiter(',');
    jformula_cmd->add_option("--lattice", lattice_path, "lattice JSON file instead of Construction A");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    Output out;
    try {
        auto* sub = app.get_subcommands().front();
        const std::string name = sub->get_name();
        out.doc["command"] = name;
        if (name == "paper-example") {
            run_z4_example(out);
            return emit(out, format);
        }
        const ProblemSpec spec = load(src);
        const Instance& in = spec.instance;
        const HaydenOperator op = hayden(in.ring, in.subgroup);
        describe_instance(out, in);
        const JacobiSet T = places.empty() && spec.jacobi ? *spec.jacobi : parse_places(places);
        for (std::size_t p : T.places)
            if (p < 1 || p > op.partition.count())
                throw ParseError("--T place " + std::to_string(p) + " outside 1.." + std::to_string(op.partition.count()));

        if (name == "orbits") {
            out.value("orbits", op.partition.to_string());
            out.value("M", orbit_length_matrix(op.partition).to_string());
        } else if (name == "project") {
            const OrbitCode d = project_theta(in.code, op);
            out.value("C_theta", words_json(d.expanded()), d.to_string());
        } else if (name == "dual") {
            const Code perp = dual(in.code);
            out.value("perp_C", words_json(perp.codewords()), words_to_string(perp.codewords()));
            const OrbitCode hd = h_dual(project_theta(in.code, op));
            out.value("H_dual_C_theta", words_json(hd.expanded()), hd.to_string());
        } else if (name == "enum") {
            const OrbitCode d = project_theta(in.code, op);
            switch (parse_flavor(flavor)) {
            case Flavor::Hamming: {
                const auto p = h_weight_enum(d);
                out.value("enumerator", to_json(p), p.to_string());
                break;
            }
            case Flavor::Cwe: {
                const auto p = cwe_h(d);
                out.value("enumerator", to_json(p), p.to_string());
                break;
            }
            case Flavor::CweG: {
                const auto p = cwe_g(d, spec.genus.value_or(genus));
                out.value("enumerator", to_json(p), p.to_string());
                break;
            }
            case Flavor::Harmonic: {
                std::vector<HarmonicFn> fs;
                if (spec.harmonic)
                    fs.push_back(*spec.harmonic);
                else
                    fs = harmonic_functions(d.t(), harmonic_d);
                json arr = json::array();
                std::string shown;
                for (const auto& f : fs) {
                    const auto p = harmonic_weight_enum(d, f);
                    arr.push_back(json{{"f", to_json(f)}, {"enumerator", to_json(p)}});
                    shown += "\n  f=" + f.to_string() + ": " + p.to_string();
                }
                out.value("enumerators", arr, shown);
                break;
            }
            case Flavor::Jacobi: {
                const auto p = jacobi_poly(d, T);
                out.value("enumerator", to_json(p), p.to_string());
                break;
            }
            }
        } else if (name == "mw-check") {
            const Flavor f = parse_flavor(flavor);
            CheckOptions opts;
            opts.genus = spec.genus.value_or(genus);
            opts.jacobi = T;
            opts.via_code_dual = via_dual;
            if (f == Flavor::Harmonic) {
                std::vector<HarmonicFn> fs;
                const std::size_t t = op.partition.count();
                if (spec.harmonic)
                    fs.push_back(*spec.harmonic);
                else
                    fs = harmonic_functions(t, harmonic_d);
                for (const auto& fn : fs) {
                    opts.harmonic = fn;
                    out.report(check_identity(f, in.code, op, opts));
                }
            } else {
                out.report(check_identity(f, in.code, op, opts));
            }
        } else if (name == "hayden-check") {
            out.report(verify_hayden(in.code, op));
        } else if (name == "orbit-matrix-check") {
            out.report(verify_orbit_matrix(in.code, op));
        } else if (name == "lattice") {
            const Lattice lam = construction_a(in.code);
            out.value("lattice", to_json(lam), to_string(lam));
            out.value("gram_determinant", to_string(lam.gram_determinant()));
            out.value("integral", json(lam.is_integral()), lam.is_integral() ? "yes" : "no");
            const Lattice l0 = lambda0(lam, op.matrix_real);
            out.value("lambda0", to_json(l0), to_string(l0));
            const Lattice img = orbit_image_lattice(in.code, op);
            out.value("lambda0_theta_orbit", to_json(img), to_string(img));
            out.report(verify_lattice_hayden(lam, op.matrix_real, op.partition));
            out.report(verify_glattice_correspondence(in.code, in.group, op));
        } else if (name == "theta") {
            const Rat c = parse_cutoff(cutoff);
            if (theta_genus == 1) {
                const QSeries s = theta_lattice(orbit_image_lattice(in.code, op), c);
                out.value("theta", to_json(s), s.to_string());
            }
            out.report(verify_theta_correspondence(in.code, op, theta_genus, c));
        } else if (name == "jacobi-theta") {
            out.report(verify_jacobi_correspondence(in.code, op, T, parse_cutoff(cutoff)));
        } else if (name == "jacobi-formula") {
            Lattice l = construction_a(in.code);
            if (!lattice_path.empty()) {
                std::ifstream f(lattice_path);
                if (!f) throw ParseError("cannot open '" + lattice_path + "'");
                json j;
                try {
                    j = json::parse(f);
                } catch (const json::exception& e) {
                    throw ParseError(std::string("invalid lattice JSON: ") + e.what());
                }
                l = parse_lattice(j);
            }
            out.value("lattice", to_json(l), to_string(l));
            for (double s : s_values) out.report(jacobi_formula_check(l, s, tol));
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        out.report(Report{"error", false, e.what(), "", std::string(e.what()), ""});
    }
    return emit(out, format);
}
