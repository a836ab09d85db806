#include "equicode/gcode.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

#include "equicode/errors.hpp"

namespace equicode {

namespace {

std::string entries_to_string(std::span<const Elem> v) {
    const bool digits = std::all_of(v.begin(), v.end(), [](Elem e) { return e < 10; });
    std::string out;
    if (digits) {
        for (auto e : v) out += static_cast<char>('0' + e);
        return out;
    }
    out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(v[i]);
    }
    return out + "]";
}

// Odometer over Z_k^n, most significant coordinate first.
bool next_vector(std::vector<Elem>& v, int k) {
    for (std::size_t i = v.size(); i-- > 0;) {
        if (++v[i] < k) return true;
        v[i] = 0;
    }
    return false;
}

template <typename T>
void sort_unique(std::vector<T>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

// span <- span + Z_k g. Throws TooLarge past the enumeration bound.
void extend_span(const RingZk& ring, std::set<Word>& span, const Word& g) {
    std::vector<Word> multiples;
    for (int s = 1; s < ring.modulus(); ++s) multiples.push_back(scale(ring, static_cast<Elem>(s), g));
    std::vector<Word> added;
    for (const auto& w : span)
        for (const auto& m : multiples) {
            Word x = add(ring, w, m);
            if (!span.contains(x)) added.push_back(std::move(x));
        }
    span.insert(added.begin(), added.end());
    if (span.size() > max_enumeration()) throw TooLarge("code span exceeds enumeration bound");
}

std::string summarize(const std::vector<Word>& words) {
    if (words.size() <= 64) return words_to_string(words);
    return "<" + std::to_string(words.size()) + " words>";
}

} // namespace

std::string Word::to_string() const { return entries_to_string(entries); }

Word Word::parse(const std::string& digits, const RingZk& ring) {
    Word w;
    for (char ch : digits) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) throw ParseError("bad word '" + digits + "'");
        int v = ch - '0';
        if (v >= ring.modulus()) throw ParseError("digit out of range in '" + digits + "'");
        w.entries.push_back(static_cast<Elem>(v));
    }
    return w;
}

Word add(const RingZk& ring, const Word& a, const Word& b) {
    if (a.size() != b.size()) throw DimensionMismatch("word length mismatch");
    Word r{a.entries};
    for (std::size_t i = 0; i < r.size(); ++i) r.entries[i] = ring.add(a.entries[i], b.entries[i]);
    return r;
}

Word scale(const RingZk& ring, Elem s, const Word& w) {
    Word r{w.entries};
    for (auto& e : r.entries) e = ring.mul(s, e);
    return r;
}

Elem inner(const RingZk& ring, std::span<const Elem> a, std::span<const Elem> b) {
    if (a.size() != b.size()) throw DimensionMismatch("inner product length mismatch");
    long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += long{a[i]} * b[i];
    return ring.reduce(s);
}

std::size_t weight(const Word& w) {
    return static_cast<std::size_t>(std::count_if(w.entries.begin(), w.entries.end(), [](Elem e) { return e != 0; }));
}

std::string words_to_string(const std::vector<Word>& words) {
    std::string out = "{";
    for (std::size_t i = 0; i < words.size(); ++i) {
        if (i) out += ",";
        out += words[i].to_string();
    }
    return out + "}";
}

Code Code::from_codewords(const RingZk& ring, std::size_t n, std::vector<Word> words) {
    for (const auto& w : words)
        if (w.size() != n) throw DimensionMismatch("codeword length differs from n");
    sort_unique(words);
    // Greedy generating subset: every word outside the running span becomes a generator.
    std::set<Word> span{Word{std::vector<Elem>(n, 0)}};
    std::vector<Word> gens;
    for (const auto& w : words) {
        if (span.contains(w)) continue;
        gens.push_back(w);
        extend_span(ring, span, w);
        if (span.size() > words.size()) break;
    }
    Code c(ring, n);
    c.codewords_.assign(span.begin(), span.end());
    if (c.codewords_ != words) throw PreconditionFailed("codeword list is not closed under + and scalar *");
    c.generators_ = std::move(gens);
    return c;
}

bool Code::contains(const Word& w) const { return std::binary_search(codewords_.begin(), codewords_.end(), w); }

Code code_span(const RingZk& ring, std::size_t n, std::vector<Word> gens) {
    for (const auto& g : gens)
        if (g.size() != n) throw DimensionMismatch("generator length differs from n");
    std::set<Word> span{Word{std::vector<Elem>(n, 0)}};
    for (const auto& g : gens) extend_span(ring, span, g);
    Code c(ring, n);
    c.codewords_.assign(span.begin(), span.end());
    c.generators_ = std::move(gens);
    return c;
}

bool is_g_code(const Code& c, const PermGroup& g) {
    if (g.degree() != c.length()) throw DimensionMismatch("group degree differs from code length");
    for (const auto& w : c.codewords())
        for (const auto& p : g.generators())
            if (!c.contains(Word{p.apply<Elem>(w.entries)})) return false;
    return true;
}

Code dual(const Code& c) {
    const std::size_t n = c.length();
    const int k = c.ring().modulus();
    require_enumerable(static_cast<std::size_t>(k), n, "dual");
    const auto& checks = c.generators().empty() ? c.codewords() : c.generators();
    std::vector<Word> out;
    std::vector<Elem> v(n, 0);
    do {
        bool ok = true;
        for (const auto& g : checks)
            if (inner(c.ring(), v, g.entries) != 0) {
                ok = false;
                break;
            }
        if (ok) out.push_back(Word{v});
    } while (next_vector(v, k));
    Code d = Code::from_codewords(c.ring(), n, std::move(out));
    if (checked_power(static_cast<std::size_t>(k), n) != c.size() * d.size())
        throw std::logic_error("|C| * |dual C| != k^n");
    return d;
}

std::string OrbitWord::to_string() const { return entries_to_string(coeffs); }

bool OrbitCode::contains(const OrbitWord& w) const { return std::binary_search(words.begin(), words.end(), w); }

std::vector<Word> OrbitCode::expanded() const {
    std::vector<Word> out;
    out.reserve(words.size());
    for (const auto& w : words) out.push_back(expand(w, partition));
    std::sort(out.begin(), out.end());
    return out;
}

std::string OrbitCode::to_string() const { return words_to_string(expanded()); }

OrbitCode make_orbit_code(const RingZk& ring, OrbitPartition partition, std::vector<OrbitWord> words) {
    for (const auto& w : words)
        if (w.coeffs.size() != partition.count()) throw DimensionMismatch("orbit word length differs from t");
    sort_unique(words);
    return OrbitCode{ring, std::move(partition), std::move(words)};
}

OrbitCode as_orbit_code(const Code& c) {
    std::vector<OrbitWord> words;
    for (const auto& w : c.codewords()) words.push_back(OrbitWord{w.entries});
    return make_orbit_code(c.ring(), OrbitPartition::trivial(c.length()), std::move(words));
}

OrbitWord orbit_form(const Word& w, const OrbitPartition& p) {
    if (w.size() != p.n) throw DimensionMismatch("word length differs from partition degree");
    OrbitWord u;
    for (const auto& orbit : p.orbits) {
        const Elem v = w.entries[orbit.front()];
        for (auto j : orbit)
            if (w.entries[j] != v)
                throw NotOrbitConstant(w.to_string() + " is not constant on orbit " + std::to_string(orbit.front() + 1));
        u.coeffs.push_back(v);
    }
    return u;
}

Word expand(const OrbitWord& u, const OrbitPartition& p) {
    if (u.coeffs.size() != p.count()) throw DimensionMismatch("orbit word length differs from t");
    Word w{std::vector<Elem>(p.n, 0)};
    for (std::size_t j = 0; j < p.n; ++j) w.entries[j] = u.coeffs[p.orbit_of[j]];
    return w;
}

std::size_t h_weight(const OrbitWord& u) {
    return static_cast<std::size_t>(std::count_if(u.coeffs.begin(), u.coeffs.end(), [](Elem e) { return e != 0; }));
}

OrbitCode project_theta(const Code& c, const HaydenOperator& op) {
    if (op.ring != c.ring()) throw DimensionMismatch("operator ring differs from code ring");
    std::vector<OrbitWord> words;
    words.reserve(c.size());
    for (const auto& w : c.codewords()) words.push_back(orbit_form(Word{op.apply(w.entries)}, op.partition));
    return make_orbit_code(c.ring(), op.partition, std::move(words));
}

OrbitCode h_dual(const OrbitCode& d) {
    const std::size_t t = d.t();
    const int k = d.ring.modulus();
    require_enumerable(static_cast<std::size_t>(k), t, "h_dual");
    std::vector<OrbitWord> out;
    std::vector<Elem> v(t, 0);
    do {
        bool ok = true;
        for (const auto& u : d.words)
            if (inner(d.ring, u.coeffs, v) != 0) {
                ok = false;
                break;
            }
        if (ok) out.push_back(OrbitWord{v});
    } while (next_vector(v, k));
    return make_orbit_code(d.ring, d.partition, std::move(out));
}

OrbitCode scale_by_M(const OrbitCode& d, const OrbitLengthMatrix& m) {
    if (m.diagonal.size() != d.partition.n) throw DimensionMismatch("orbit length matrix size differs from n");
    std::vector<OrbitWord> out;
    out.reserve(d.words.size());
    for (const auto& u : d.words) {
        OrbitWord s = u;
        for (std::size_t i = 0; i < s.coeffs.size(); ++i) {
            const auto len = m.diagonal[d.partition.orbits[i].front()];
            s.coeffs[i] = d.ring.mul(s.coeffs[i], d.ring.reduce(static_cast<long>(len)));
        }
        out.push_back(std::move(s));
    }
    return make_orbit_code(d.ring, d.partition, std::move(out));
}

Report verify_hayden(const Code& c, const HaydenOperator& op) {
    if (!is_g_code(c, op.group)) throw PreconditionFailed("code is not invariant under H");
    const RingZk& ring = c.ring();
    const std::size_t n = c.length();
    require_enumerable(static_cast<std::size_t>(ring.modulus()), n, "verify_hayden");

    // C theta_H is spanned by the images of the generators.
    std::vector<Word> span_theta;
    for (const auto& g : c.generators()) span_theta.push_back(Word{op.apply(g.entries)});

    std::vector<Word> lhs;
    std::vector<Elem> v(n, 0);
    do {
        bool ok = true;
        for (const auto& w : span_theta)
            if (inner(ring, v, w.entries) != 0) {
                ok = false;
                break;
            }
        if (ok) lhs.push_back(Word{v});
    } while (next_vector(v, ring.modulus()));

    std::vector<Word> ker;
    for (auto& e : ker_theta_mod(op)) ker.push_back(Word{std::move(e)});
    std::vector<Word> dual_theta;
    const Code perp = dual(c);
    for (const auto& w : perp.codewords()) dual_theta.push_back(Word{op.apply(w.entries)});
    sort_unique(dual_theta);

    std::vector<Word> rhs;
    rhs.reserve(ker.size() * dual_theta.size());
    for (const auto& a : ker)
        for (const auto& b : dual_theta) rhs.push_back(add(ring, a, b));
    sort_unique(rhs);

    Report r;
    r.flavor = "hayden";
    r.lhs = summarize(lhs);
    r.rhs = "ker(" + std::to_string(ker.size()) + ") + perpC.theta(" + std::to_string(dual_theta.size()) +
            ") = " + summarize(rhs);
    r.detail = ring.name() + ", n=" + std::to_string(n) + ", |H|=" + std::to_string(op.group.order()) +
               ", |C|=" + std::to_string(c.size());
    const bool sets_equal = lhs == rhs;
    const bool direct = ker.size() * dual_theta.size() == lhs.size();
    r.pass = sets_equal && direct;
    if (!sets_equal) {
        std::vector<Word> diff;
        std::set_symmetric_difference(lhs.begin(), lhs.end(), rhs.begin(), rhs.end(), std::back_inserter(diff));
        r.witness = "sets differ at " + diff.front().to_string();
    } else if (!direct) {
        r.witness = "sum not direct: |ker|*|perpC.theta| = " + std::to_string(ker.size() * dual_theta.size()) +
                    " but |lhs| = " + std::to_string(lhs.size());
    }
    return r;
}

Report verify_orbit_matrix(const Code& c, const HaydenOperator& op) {
    const OrbitCode lhs = h_dual(project_theta(c, op));
    const OrbitCode rhs = scale_by_M(project_theta(dual(c), op), orbit_length_matrix(op.partition));
    Report r;
    r.flavor = "orbit-matrix";
    r.lhs = lhs.to_string();
    r.rhs = rhs.to_string();
    r.detail = c.ring().name() + ", n=" + std::to_string(c.length()) + ", |H|=" + std::to_string(op.group.order());
    r.pass = lhs.words == rhs.words;
    if (!r.pass) {
        std::vector<OrbitWord> diff;
        std::set_symmetric_difference(lhs.words.begin(), lhs.words.end(), rhs.words.begin(), rhs.words.end(),
                                      std::back_inserter(diff));
        r.witness = "sets differ at " + expand(diff.front(), op.partition).to_string();
    }
    return r;
}

} // namespace equicode
