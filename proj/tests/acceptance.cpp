// Acceptance run: one PASS/FAIL line per criterion, each under its time limit.
// Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "equicode/enumerators.hpp"
#include "equicode/errors.hpp"
#include "equicode/gcode.hpp"
#include "equicode/harmonic.hpp"
#include "equicode/instances.hpp"
#include "equicode/lattice.hpp"
#include "equicode/macwilliams.hpp"
#include "equicode/theta.hpp"
#include "oracles.hpp"

using namespace equicode;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;
    std::string first_failure;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) first_failure = what;
        pass = pass && ok;
    }
};

bool run(int id, const char* title, double limit_s, const std::function<void(Outcome&)>& body) {
    Outcome out;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(out);
    } catch (const std::exception& e) {
        out.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.require(secs < limit_s, "time limit exceeded");
    std::printf("criterion %2d %-34s %s (%s; %.2f s, limit %.0f s)%s%s\n", id, title, out.pass ? "PASS" : "FAIL",
                out.detail.str().c_str(), secs, limit_s, out.pass ? "" : "\n    first failure: ",
                out.pass ? "" : out.first_failure.c_str());
    std::fflush(stdout);
    return out.pass;
}

std::set<std::string> strings(const std::vector<Word>& ws) {
    std::set<std::string> out;
    for (const auto& w : ws) out.insert(w.to_string());
    return out;
}

// The Z_4 example followed by random instances cycling through the parameter grid.
std::vector<Instance> sweep(std::size_t random_count, std::uint64_t seed) {
    std::vector<Instance> out{z4_example()};
    std::mt19937_64 rng(seed);
    const auto specs = sweep_specs();
    for (std::size_t i = 0; i < random_count; ++i) out.push_back(random_instance(rng, specs[i % specs.size()]));
    return out;
}

HaydenOperator op_of(const Instance& in) { return hayden(in.ring, in.subgroup); }

std::set<oracle::Vec> coeff_set(const OrbitCode& d) {
    std::set<oracle::Vec> out;
    for (const auto& w : d.words) out.insert(w.coeffs);
    return out;
}

void criterion1(Outcome& o) {
    const Instance in = z4_example();
    const HaydenOperator op = op_of(in);
    const OrbitCode ct = project_theta(in.code, op);
    const OrbitCode hd = h_dual(ct);
    const OrbitLengthMatrix m = orbit_length_matrix(op.partition);
    const OrbitCode perp_m = scale_by_M(project_theta(dual(in.code), op), m);
    const BivarPoly w = h_weight_enum(hd);

    o.require(strings(ct.expanded()) == std::set<std::string>{"0000", "1113", "3331", "2222"}, "C theta");
    o.require(ct.to_string() == "{0000,1113,2222,3331}", "C theta text");
    o.require(strings(hd.expanded()) == std::set<std::string>{"0000", "1111", "2222", "3333"}, "G-dual of C theta");
    o.require(hd.to_string() == "{0000,1111,2222,3333}", "G-dual text");
    o.require(m.to_string() == "diag(3,3,3,1)", "M_H");
    o.require(perp_m == hd, "G-dual = (perp C theta) M");
    o.require(w.to_string() == "x^2 + 3*y^2", "W^G");
    o.require(h_weight_enum(ct).to_string() == "x^2 + 3*y^2", "W^G of C theta");
    o.detail << "C.theta=" << ct.to_string() << " G-dual=" << hd.to_string() << " M=" << m.to_string()
             << " W=" << w.to_string();
}

void criterion2(Outcome& o, const std::vector<Instance>& inst) {
    std::size_t checked = 0;
    for (const Instance& in : inst) {
        const HaydenOperator op = op_of(in);
        const Report r = verify_hayden(in.code, op);
        o.require(r.pass, in.label + ": " + r.detail);
        // Independent brute force: perp(C theta) against ker theta + (perp C) theta.
        const int k = in.ring.modulus();
        const std::size_t n = in.code.length();
        const auto lhs = oracle::scan_dual(k, n, oracle::project(k, in.subgroup, oracle::word_set(in.code.codewords())));
        const auto perp_theta = oracle::project(k, in.subgroup, oracle::scan_dual(k, n, oracle::word_set(in.code.codewords())));
        std::set<oracle::Vec> ker, rhs;
        oracle::for_each_vector(k, n, [&](const oracle::Vec& v) {
            if (oracle::average(k, in.subgroup, v) == oracle::Vec(n, 0)) ker.insert(v);
        });
        for (const auto& a : ker)
            for (const auto& b : perp_theta) {
                oracle::Vec s(n);
                for (std::size_t i = 0; i < n; ++i) s[i] = static_cast<Elem>((a[i] + b[i]) % k);
                rhs.insert(s);
            }
        o.require(lhs == rhs, in.label + ": oracle set equality");
        o.require(lhs.size() == ker.size() * perp_theta.size(), in.label + ": oracle directness");
        ++checked;
    }
    o.detail << checked << " instances incl. the Z_4 example";
}

void criterion3(Outcome& o, const std::vector<Instance>& inst) {
    for (const Instance& in : inst) {
        const HaydenOperator op = op_of(in);
        const Report r = verify_orbit_matrix(in.code, op);
        o.require(r.pass, in.label + ": " + r.detail);
        const int k = in.ring.modulus();
        const OrbitCode ct = project_theta(in.code, op);
        const auto direct = oracle::orbit_dual(k, op.partition, coeff_set(ct));
        std::set<oracle::Vec> scaled;
        for (const auto& v : oracle::project(k, in.subgroup, oracle::word_set(dual(in.code).codewords()))) {
            oracle::Vec c = oracle::to_orbit(op.partition, v);
            for (std::size_t i = 0; i < c.size(); ++i)
                c[i] = static_cast<Elem>((c[i] * op.partition.lengths[i]) % static_cast<std::size_t>(k));
            scaled.insert(c);
        }
        o.require(direct == scaled, in.label + ": oracle orbit-matrix equality");
    }
    o.detail << inst.size() << " instances";
}

void criterion4(Outcome& o) {
    std::mt19937_64 rng(404);
    const auto specs = sweep_specs();
    const Flavor flavors[] = {Flavor::Hamming, Flavor::Cwe, Flavor::CweG, Flavor::Harmonic, Flavor::Jacobi};
    std::map<Flavor, std::size_t> random_runs, trivial_runs, checks;

    auto check = [&](Flavor f, const Instance& in, const HaydenOperator& op, bool trivial) {
        const std::size_t t = op.partition.count();
        std::vector<CheckOptions> opts;
        for (bool via : {true, false}) {
            CheckOptions base;
            base.via_code_dual = via;
            base.genus = 2;
            for (std::size_t i = 1; i <= t; ++i)
                if (rng() % 2) base.jacobi.places.push_back(i);
            if (f == Flavor::Harmonic) {
                for (std::size_t d = 0; d <= 2 && 2 * d <= t; ++d)
                    for (const auto& fn : harm_basis(t, d)) {
                        CheckOptions h = base;
                        h.harmonic = fn;
                        opts.push_back(h);
                    }
            } else {
                opts.push_back(base);
            }
        }
        for (const auto& opt : opts) {
            const Report r = check_identity(f, in.code, op, opt);
            o.require(r.pass, flavor_name(f) + " on " + in.label + (trivial ? " (trivial H)" : "") + ": " + r.detail +
                                  (r.witness ? " witness " + *r.witness : ""));
            ++checks[f];
        }
    };

    for (Flavor f : flavors) {
        const Instance ex = z4_example();
        check(f, ex, op_of(ex), false);
        std::size_t i = 0;
        while (random_runs[f] < 50) {
            const RandomSpec& spec = specs[i++ % specs.size()];
            // The genus-2 enumerator has k^2 variables and |D|^2 pairs; keep it to small rings.
            if (f == Flavor::CweG && (spec.k > 4 || spec.n > 4)) continue;
            const Instance in = random_instance(rng, spec);
            check(f, in, op_of(in), false);
            ++random_runs[f];
            if (random_runs[f] % 5 == 0) {
                check(f, in, hayden(in.ring, trivial_group(spec.n)), true);
                ++trivial_runs[f];
            }
        }
    }
    // With H trivial the H-dual is the ordinary dual and M_H = I: the classical identity, checked
    // here against the enumerators of perp C computed straight from the code.
    std::size_t classical = 0;
    for (std::size_t i = 0; i < 20; ++i) {
        const RandomSpec& spec = specs[i % specs.size()];
        const Instance in = random_instance(rng, spec);
        const Code perp = dual(in.code);
        const BivarPoly lhs = mw_hamming(weight_enum(in.code), in.ring, Integer(in.code.size()));
        o.require(lhs == weight_enum(perp), in.label + ": classical Hamming identity");
        const MultiPoly cl = mw_cwe(cwe_h(as_orbit_code(in.code)), in.ring, Integer(in.code.size()));
        o.require(cl == cwe_h(as_orbit_code(perp)), in.label + ": classical complete identity");
        ++classical;
    }
    for (Flavor f : flavors)
        o.detail << flavor_name(f) << " " << random_runs[f] << "+1 inst/" << trivial_runs[f] << " trivial-H/" << checks[f]
                 << " checks; ";
    o.detail << classical << " classical";
}

void criterion5(Outcome& o, const std::vector<Instance>& inst) {
    std::size_t fns = 0, words = 0;
    // The definitional sum depends on u only through supp(u); cache it per (k, f, support).
    std::map<std::tuple<int, std::string, oracle::Vec>, Rat> memo;
    for (const Instance& in : inst) {
        const OrbitCode d = project_theta(in.code, op_of(in));
        const std::size_t t = d.t();
        if (t > 5) continue;
        const int k = in.ring.modulus();
        const bool oracle_ok = checked_power(static_cast<std::size_t>(k), t) <= 100000;
        for (std::size_t deg = 0; deg <= 2 && 2 * deg <= t; ++deg)
            for (const auto& f : harm_basis(t, deg)) {
                ++fns;
                const BivarPoly w = harmonic_weight_enum(d, f);
                const BivarPoly z = z_poly(d, f);
                o.require(z.degree() == t - 2 * deg, in.label + ": deg Z");
                // (xy)^deg * Z = W, coefficient by coefficient.
                BivarPoly back(static_cast<unsigned>(t));
                for (const auto& [i, c] : z.coeffs()) back.add(i + static_cast<unsigned>(deg), c);
                o.require(back == w, in.label + ": W = (xy)^d Z");
                if (!oracle_ok) continue;
                const std::string fkey = f.to_string() + "/" + std::to_string(t);
                for (const auto& u : d.words) {
                    oracle::Vec supp(t);
                    for (std::size_t i = 0; i < t; ++i) supp[i] = u.coeffs[i] != 0;
                    auto key = std::make_tuple(k, fkey, supp);
                    auto it = memo.find(key);
                    if (it == memo.end()) it = memo.emplace(key, oracle::f_tilde(f, u.coeffs, k)).first;
                    o.require(f_tilde(f, u, in.ring) == it->second, in.label + ": f~ oracle");
                    ++words;
                }
            }
    }
    o.detail << fns << " harmonic functions, " << words << " f~ values against the definition";
}

void criterion6(Outcome& o, const std::vector<Instance>& inst) {
    for (const Instance& in : inst) {
        const Lattice l = construction_a(in.code);
        Integer kn;
        mpz_ui_pow_ui(kn.get_mpz_t(), static_cast<unsigned long>(in.ring.modulus()), in.code.length());
        const Integer size(in.code.size());
        o.require(l.gram_determinant() * size * size == Rat(kn), in.label + ": det^2 |C|^2 = k^n");
    }
    const Instance ex = z4_example();
    const Lattice lp = construction_a(ex.code);
    o.require(lp.gram_determinant() == 1, "Z_4 example: det 1");
    o.require(lp.is_integral(), "Z_4 example: integral Gram");
    o.require(verify_glattice_correspondence(ex.code, ex.group, op_of(ex)).pass, "Z_4 example: G-lattice report");

    std::mt19937_64 rng(606);
    const auto specs = sweep_specs();
    std::size_t pairs = 0, i = 0;
    while (pairs < 50) {
        const RandomSpec& spec = specs[i++ % specs.size()];
        const Instance pos = random_instance(rng, spec);
        Instance neg = pos;
        try {
            neg = random_non_g_instance(rng, spec);
        } catch (const PreconditionFailed&) {
            continue;
        }
        const bool pc = is_g_code(pos.code, pos.group), pl = is_g_lattice(construction_a(pos.code), pos.group);
        const bool nc = is_g_code(neg.code, neg.group), nl = is_g_lattice(construction_a(neg.code), neg.group);
        o.require(pc && pl, pos.label + ": positive instance");
        o.require(!nc && !nl, neg.label + ": negative instance");
        const Report r = verify_glattice_correspondence(pos.code, pos.group, op_of(pos));
        o.require(r.pass, pos.label + ": " + r.detail);
        ++pairs;
    }
    o.detail << inst.size() << " determinants, " << pairs << " positive/negative pairs";
}

void criterion7(Outcome& o) {
    std::mt19937_64 rng(707);
    const auto specs = sweep_specs();
    std::vector<Instance> g1{z4_example()};
    for (std::size_t i = 0; g1.size() < 21; ++i) g1.push_back(random_instance(rng, specs[(3 * i) % specs.size()]));
    for (const Instance& in : g1) {
        const Report r = verify_theta_correspondence(in.code, op_of(in), 1, 8);
        o.require(r.pass, in.label + " genus 1: " + r.detail + (r.witness ? " " + *r.witness : ""));
    }
    std::vector<Instance> g2{z4_example()};
    for (std::size_t i = 0; g2.size() < 5; ++i) {
        const RandomSpec& spec = specs[i % specs.size()];
        if (spec.k > 4 || spec.n > 4) continue;
        g2.push_back(random_instance(rng, spec));
    }
    for (const Instance& in : g2) {
        const Report r = verify_theta_correspondence(in.code, op_of(in), 2, 4);
        o.require(r.pass, in.label + " genus 2: " + r.detail + (r.witness ? " " + *r.witness : ""));
    }
    o.detail << g1.size() << " genus-1 to q^8, " << g2.size() << " genus-2 to combined 4";
}

void criterion8(Outcome& o) {
    const Instance in = z4_example();
    const HaydenOperator op = op_of(in);
    for (const JacobiSet& T : {JacobiSet{{}}, JacobiSet{{1}}, JacobiSet{{1, 2}}}) {
        const Report r = verify_jacobi_correspondence(in.code, op, T, 4, JacobiAssignment::PhiOnT);
        o.require(r.pass, "T=" + T.to_string() + ": " + r.lhs + " vs " + r.rhs + (r.witness ? " diff " + *r.witness : ""));
        o.detail << "T=" << T.to_string() << (r.pass ? " ok " : " MISMATCH ");
    }
    o.detail << "(y_T = sqrt(k) 1_T)";
}

void criterion9(Outcome& o) {
    auto line = [](const Rat& b) { return make_lattice(RatMatrix::from_rows({{b}}, 1), 1); };
    const HaydenOperator sw = hayden(RingZk(3), group_closure(2, {Permutation::parse("(1 2)", 2)}));
    const Lattice rank1 = project_lattice(lambda0(make_lattice(RatMatrix::identity(2), 1), sw.matrix_real), sw.matrix_real);
    const std::vector<std::pair<std::string, Lattice>> cases{
        {"Z", line(1)},
        {"2Z", line(2)},
        {"(1/2)Z", line(make_rat(1, 2))},
        {"Lambda(Z_4 example)", construction_a(z4_example().code)},
        {"Z(1,1) in R^2", rank1},
    };
    double worst = 0;
    for (const auto& [name, l] : cases)
        for (double s : {1.0, 2.0}) {
            const Report r = jacobi_formula_check(l, s, 1e-9);
            worst = std::max(worst, std::abs(std::stod(r.lhs) - std::stod(r.rhs)));
            o.require(r.pass, name + " at z=" + std::to_string(s) + "i: " + r.lhs + " vs " + r.rhs);
        }
    o.detail << cases.size() << " lattices x z in {i, 2i}, max |LHS-RHS| " << worst << ", tol 1e-9";
}

void criterion10(Outcome& o, const std::vector<Instance>& inst) {
    for (const Instance& in : inst) {
        o.require(dual(dual(in.code)).codewords() == in.code.codewords(), in.label + ": bidual code");
        const OrbitCode ct = project_theta(in.code, op_of(in));
        o.require(h_dual(h_dual(ct)) == ct, in.label + ": H-bidual");
        const Report r = check_double_transform(ct);
        o.require(r.pass, in.label + ": double MacWilliams " + r.detail);
        const Lattice l = construction_a(in.code);
        o.require(same_lattice(dual_lattice(dual_lattice(l)), l), in.label + ": lattice bidual");
        const Lattice img = orbit_image_lattice(in.code, op_of(in));
        o.require(same_lattice(dual_lattice(dual_lattice(img)), img), in.label + ": orbit lattice bidual");
    }
    o.detail << inst.size() << " instances";
}

} // namespace

int main() {
    const std::vector<Instance> inst = sweep(220, 20260101);
    bool ok = true;
    ok &= run(1, "Z_4 example values", 1, criterion1);
    ok &= run(2, "Hayden theorem (codes)", 60, [&](Outcome& o) { criterion2(o, inst); });
    ok &= run(3, "orbit-length matrix theorem", 60, [&](Outcome& o) { criterion3(o, inst); });
    ok &= run(4, "MacWilliams suite", 120, criterion4);
    ok &= run(5, "harmonic structure", 60, [&](Outcome& o) { criterion5(o, inst); });
    ok &= run(6, "Construction A", 60, [&](Outcome& o) { criterion6(o, inst); });
    ok &= run(7, "theta correspondence", 60, criterion7);
    ok &= run(8, "Jacobi correspondence", 60, criterion8);
    ok &= run(9, "Jacobi transformation formula", 5, criterion9);
    ok &= run(10, "bidual and involution properties", 60, [&](Outcome& o) { criterion10(o, inst); });
    std::printf("acceptance: %s\n", ok ? "ALL PASS" : "FAILURES");
    return ok ? 0 : 1;
}
