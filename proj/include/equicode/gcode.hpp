#pragma once

// Linear codes over Z_k held as explicit codeword sets, their G-invariance,
// duals, Hayden projections and orbit-coordinate forms.

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "equicode/frobring.hpp"
#include "equicode/permgrp.hpp"
#include "equicode/report.hpp"

namespace equicode {

struct Word {
    std::vector<Elem> entries;

    std::size_t size() const { return entries.size(); }
    /// "1113" when every entry is a single digit, "[1,12,3]" otherwise.
    std::string to_string() const;
    static Word parse(const std::string& digits, const RingZk& ring);
    friend auto operator<=>(const Word&, const Word&) = default;
};

Word add(const RingZk& ring, const Word& a, const Word& b);
Word scale(const RingZk& ring, Elem s, const Word& w);
Elem inner(const RingZk& ring, std::span<const Elem> a, std::span<const Elem> b);
std::size_t weight(const Word& w);

/// An R-submodule of Z_k^n, stored as its sorted codeword set.
class Code {
public:
    /// Validates closure under addition and scalar multiplication.
    static Code from_codewords(const RingZk& ring, std::size_t n, std::vector<Word> words);

    const RingZk& ring() const { return ring_; }
    std::size_t length() const { return n_; }
    std::size_t size() const { return codewords_.size(); }
    const std::vector<Word>& codewords() const { return codewords_; }
    /// Generators the code was spanned from (a greedy generating subset when built from a list).
    const std::vector<Word>& generators() const { return generators_; }
    bool contains(const Word& w) const;

    friend bool operator==(const Code& a, const Code& b) {
        return a.ring_ == b.ring_ && a.n_ == b.n_ && a.codewords_ == b.codewords_;
    }

private:
    friend Code code_span(const RingZk&, std::size_t, std::vector<Word>);
    Code(RingZk ring, std::size_t n) : ring_(ring), n_(n) {}

    RingZk ring_;
    std::size_t n_;
    std::vector<Word> codewords_;
    std::vector<Word> generators_;
};

/// All Z_k-linear combinations of gens. Throws TooLarge past the enumeration bound.
Code code_span(const RingZk& ring, std::size_t n, std::vector<Word> gens);

/// True iff c g lies in C for every codeword c and every generator g of the group.
bool is_g_code(const Code& c, const PermGroup& g);

/// {u : (u, v) = 0 for all v in C}, by enumeration of Z_k^n.
Code dual(const Code& c);

/// Coefficients (u_1..u_t) of an orbit-constant vector.
struct OrbitWord {
    std::vector<Elem> coeffs;

    std::string to_string() const;
    friend auto operator<=>(const OrbitWord&, const OrbitWord&) = default;
};

/// A submodule of V theta_H written in orbit coordinates.
struct OrbitCode {
    RingZk ring;
    OrbitPartition partition;
    std::vector<OrbitWord> words; // sorted, deduplicated

    std::size_t t() const { return partition.count(); }
    std::size_t size() const { return words.size(); }
    bool contains(const OrbitWord& w) const;
    /// The codewords as length-n vectors.
    std::vector<Word> expanded() const;
    /// "{0000,1113,2222,3331}" using expanded words.
    std::string to_string() const;
    friend bool operator==(const OrbitCode& a, const OrbitCode& b) {
        return a.ring == b.ring && a.partition == b.partition && a.words == b.words;
    }
};

OrbitCode make_orbit_code(const RingZk& ring, OrbitPartition partition, std::vector<OrbitWord> words);

/// The code itself under the trivial (all-singleton) partition.
OrbitCode as_orbit_code(const Code& c);

/// Throws NotOrbitConstant.
OrbitWord orbit_form(const Word& w, const OrbitPartition& p);
Word expand(const OrbitWord& u, const OrbitPartition& p);

std::size_t h_weight(const OrbitWord& u);

/// C theta_H in orbit coordinates.
OrbitCode project_theta(const Code& c, const HaydenOperator& op);

/// Dual under (u, v)_H = sum u_i v_i, by enumeration of Z_k^t.
OrbitCode h_dual(const OrbitCode& d);

/// u_i -> m_i u_i (mod k).
OrbitCode scale_by_M(const OrbitCode& d, const OrbitLengthMatrix& m);

/// Checks ^perp(C theta_H) = ker theta_H (+) (^perp C) theta_H as sets, and
/// that the sum is direct. Throws PreconditionFailed unless C is H-invariant.
Report verify_hayden(const Code& c, const HaydenOperator& op);

/// Checks ^perp_H(C theta_H) = (^perp C theta_H) M_H.
Report verify_orbit_matrix(const Code& c, const HaydenOperator& op);

/// "{w1,w2,...}" for a sorted word list.
std::string words_to_string(const std::vector<Word>& words);

} // namespace equicode
