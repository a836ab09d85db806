#include "equicode/macwilliams.hpp"

#include "equicode/errors.hpp"

namespace equicode {

namespace {

// x_a -> sum_b chi(a.b) x_b on a g-tuple family, optionally for the paired y-family too.
std::vector<LinearForm> character_images(const VarFamily& fam) {
    const int k = fam.k;
    const std::size_t nx = fam.x_count();
    std::vector<LinearForm> images;
    for (std::size_t a = 0; a < nx; ++a) {
        const auto ta = fam.tuple(a);
        LinearForm form;
        for (std::size_t b = 0; b < nx; ++b) {
            const auto tb = fam.tuple(b);
            long dot = 0;
            for (std::size_t i = 0; i < ta.size(); ++i) dot += long{ta[i]} * tb[i];
            form.emplace_back(b, Cyclotomic::zeta_power(k, dot % k));
        }
        images.push_back(std::move(form));
    }
    if (fam.paired)
        for (std::size_t a = 0; a < static_cast<std::size_t>(k); ++a) {
            LinearForm form;
            for (std::size_t b = 0; b < static_cast<std::size_t>(k); ++b)
                form.emplace_back(nx + b, Cyclotomic::zeta_power(k, static_cast<long>((a * b) % k)));
            images.push_back(std::move(form));
        }
    return images;
}

MultiPoly character_transform(const MultiPoly& p, const RingZk& ring, const Integer& divisor) {
    if (p.family().k != ring.modulus()) throw DimensionMismatch("polynomial family lives over another ring");
    const CycloPoly expanded = poly_substitute_multi(p, character_images(p.family()), p.family());
    return divide_exact(to_integer_poly(expanded), divisor);
}

BivarPoly hamming_substitution(const BivarPoly& p, const RingZk& ring) {
    return poly_substitute_bivar(p, BivarForm{1, ring.modulus() - 1}, BivarForm{1, -1});
}

std::string diff_witness(const MultiPoly& a, const MultiPoly& b) {
    for (const auto& [e, c] : a.terms()) {
        const Integer* other = b.find(e);
        if (!other || *other != c) {
            MultiPoly mono(a.family());
            mono.add_term(e, Integer(1));
            return "coefficient of " + mono.to_string() + ": " + to_string(c) + " vs " +
                   (other ? to_string(*other) : std::string("0"));
        }
    }
    for (const auto& [e, c] : b.terms())
        if (!a.find(e)) {
            MultiPoly mono(b.family());
            mono.add_term(e, Integer(1));
            return "coefficient of " + mono.to_string() + ": 0 vs " + to_string(c);
        }
    return "families differ";
}

std::string diff_witness(const BivarPoly& a, const BivarPoly& b) {
    if (a.degree() != b.degree())
        return "degree " + std::to_string(a.degree()) + " vs " + std::to_string(b.degree());
    for (unsigned i = 0; i <= a.degree(); ++i)
        if (a.coeff(i) != b.coeff(i))
            return "coefficient of x^" + std::to_string(a.degree() - i) + "*y^" + std::to_string(i) + ": " +
                   to_string(a.coeff(i)) + " vs " + to_string(b.coeff(i));
    return "";
}

template <typename P>
void fill(Report& r, const P& lhs, const P& rhs) {
    r.lhs = lhs.to_string();
    r.rhs = rhs.to_string();
    r.pass = lhs == rhs;
    if (!r.pass) r.witness = diff_witness(lhs, rhs);
}

} // namespace

BivarPoly mw_hamming(const BivarPoly& p, const RingZk& ring, const Integer& size) {
    BivarPoly out = hamming_substitution(p, ring).scaled(make_rat(1, size));
    if (!out.is_integral()) throw NonIntegerResult("Hamming transform " + out.to_string() + " is not integral");
    return out;
}

MultiPoly mw_cwe(const MultiPoly& p, const RingZk& ring, const Integer& size) {
    if (p.family().g != 1 || p.family().paired) throw PreconditionFailed("mw_cwe needs a plain g = 1 family");
    return character_transform(p, ring, size);
}

MultiPoly mw_cwe_g(const MultiPoly& p, const RingZk& ring, unsigned g, const Integer& size) {
    if (p.family().g != g || p.family().paired) throw PreconditionFailed("polynomial family is not of genus g");
    Integer divisor = 1;
    for (unsigned i = 0; i < g; ++i) divisor *= size;
    return character_transform(p, ring, divisor);
}

BivarPoly mw_harmonic(const BivarPoly& z, const RingZk& ring, unsigned d, const Integer& size) {
    Integer kd = 1;
    for (unsigned i = 0; i < d; ++i) kd *= ring.modulus();
    Rat factor = make_rat(kd, size);
    if (d % 2 == 1) factor = -factor;
    return hamming_substitution(z, ring).scaled(factor);
}

MultiPoly mw_jacobi(const MultiPoly& p, const RingZk& ring, const Integer& size) {
    if (p.family().g != 1 || !p.family().paired) throw PreconditionFailed("mw_jacobi needs a paired family");
    return character_transform(p, ring, size);
}

std::string flavor_name(Flavor f) {
    switch (f) {
    case Flavor::Hamming: return "hamming";
    case Flavor::Cwe: return "cwe";
    case Flavor::CweG: return "cweg";
    case Flavor::Harmonic: return "harmonic";
    case Flavor::Jacobi: return "jacobi";
    }
    return "?";
}

Flavor parse_flavor(const std::string& name) {
    if (name == "hamming") return Flavor::Hamming;
    if (name == "cwe") return Flavor::Cwe;
    if (name == "cweg" || name == "cwe_g") return Flavor::CweG;
    if (name == "harmonic") return Flavor::Harmonic;
    if (name == "jacobi") return Flavor::Jacobi;
    throw ParseError("unknown flavor '" + name + "'");
}

Report check_identity(Flavor flavor, const Code& c, const HaydenOperator& op, const CheckOptions& opts) {
    const RingZk& ring = c.ring();
    const OrbitCode d = project_theta(c, op);
    const OrbitCode dual_side = opts.via_code_dual
                                    ? scale_by_M(project_theta(dual(c), op), orbit_length_matrix(op.partition))
                                    : h_dual(d);
    const Integer size = static_cast<unsigned long>(d.size());

    Report r;
    r.flavor = flavor_name(flavor);
    r.detail = ring.name() + ", n=" + std::to_string(c.length()) + ", t=" + std::to_string(d.t()) +
               ", |H|=" + std::to_string(op.group.order()) + ", |D|=" + std::to_string(d.size()) +
               (opts.via_code_dual ? ", dual via perp C" : ", dual via H-dual");
    switch (flavor) {
    case Flavor::Hamming:
        fill(r, mw_hamming(h_weight_enum(d), ring, size), h_weight_enum(dual_side));
        break;
    case Flavor::Cwe:
        fill(r, mw_cwe(cwe_h(d), ring, size), cwe_h(dual_side));
        break;
    case Flavor::CweG:
        r.detail += ", g=" + std::to_string(opts.genus);
        fill(r, mw_cwe_g(cwe_g(d, opts.genus), ring, opts.genus, size), cwe_g(dual_side, opts.genus));
        break;
    case Flavor::Harmonic: {
        const HarmonicFn f = opts.harmonic.value_or(HarmonicFn{d.t(), 0, {{Subset{}, Rat(1)}}});
        if (!is_harmonic(f)) throw PreconditionFailed("function is not harmonic");
        r.detail += ", d=" + std::to_string(f.d) + ", f=" + f.to_string();
        fill(r, mw_harmonic(z_poly(d, f), ring, static_cast<unsigned>(f.d), size), z_poly(dual_side, f));
        break;
    }
    case Flavor::Jacobi:
        r.detail += ", T=" + opts.jacobi.to_string();
        fill(r, mw_jacobi(jacobi_poly(d, opts.jacobi), ring, size), jacobi_poly(dual_side, opts.jacobi));
        break;
    }
    return r;
}

Report check_double_transform(const OrbitCode& d) {
    const OrbitCode dd = h_dual(d);
    const Integer size = static_cast<unsigned long>(d.size());
    const Integer dual_size = static_cast<unsigned long>(dd.size());
    Report r;
    r.flavor = "double-transform";
    r.detail = d.ring.name() + ", t=" + std::to_string(d.t()) + ", |D|=" + std::to_string(d.size());
    const BivarPoly w = h_weight_enum(d);
    const MultiPoly cw = cwe_h(d);
    const BivarPoly w2 = mw_hamming(mw_hamming(w, d.ring, size), d.ring, dual_size);
    const MultiPoly cw2 = mw_cwe(mw_cwe(cw, d.ring, size), d.ring, dual_size);
    r.lhs = w2.to_string() + " | " + cw2.to_string();
    r.rhs = w.to_string() + " | " + cw.to_string();
    r.pass = w2 == w && cw2 == cw;
    if (!r.pass) r.witness = w2 != w ? diff_witness(w2, w) : diff_witness(cw2, cw);
    return r;
}

} // namespace equicode
