#pragma once

// Coordinate permutation groups, orbits and the Hayden averaging operator.
//
// Convention: a permutation g acts on the right of a vector v by
//     (v g)_i = v_{i g^{-1}},   equivalently (v g)_{i g} = v_i,
// and products compose left to right: i (g h) = (i g) h.
// Points are 1-based in text (cycle notation), 0-based in memory.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "equicode/exactmath.hpp"
#include "equicode/frobring.hpp"

namespace equicode {

class Permutation {
public:
    /// Identity on n points.
    explicit Permutation(std::size_t n);
    /// images[i] = i g, 0-based. Throws std::invalid_argument unless a bijection.
    explicit Permutation(std::vector<std::size_t> images);

    /// Parses "(1 2 3)(4)" or "(1,2,3)"; omitted points are fixed.
    static Permutation parse(const std::string& cycles, std::size_t n);

    std::size_t degree() const { return images_.size(); }
    std::size_t image(std::size_t i) const { return images_[i]; }
    const std::vector<std::size_t>& images() const { return images_; }

    Permutation inverse() const;
    bool is_identity() const;
    std::size_t order() const;

    /// Right action on a vector of coordinates.
    template <typename T>
    std::vector<T> apply(std::span<const T> v) const {
        std::vector<T> out(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) out[images_[i]] = v[i];
        return out;
    }

    /// Cycle notation with 1-based points, fixed points omitted; "()" for identity.
    std::string to_string() const;

    /// Left-to-right product: apply *this first, then h.
    friend Permutation operator*(const Permutation& g, const Permutation& h);
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<std::size_t> images_;
};

class PermGroup {
public:
    static constexpr std::size_t kDefaultBound = 10080;

    std::size_t degree() const { return n_; }
    std::size_t order() const { return elements_.size(); }
    const std::vector<Permutation>& generators() const { return generators_; }
    /// Sorted lexicographically on image arrays; the identity comes first.
    const std::vector<Permutation>& elements() const { return elements_; }
    bool contains(const Permutation& p) const;

private:
    friend PermGroup group_closure(std::size_t, std::vector<Permutation>, std::size_t);
    std::size_t n_ = 0;
    std::vector<Permutation> generators_;
    std::vector<Permutation> elements_;
};

/// Enumerates the group generated by gens. Throws GroupTooLarge past bound.
PermGroup group_closure(std::size_t n, std::vector<Permutation> gens,
                        std::size_t bound = PermGroup::kDefaultBound);

struct OrbitPartition {
    std::size_t n = 0;
    std::vector<std::size_t> orbit_of;             // coordinate -> orbit index
    std::vector<std::vector<std::size_t>> orbits;  // sorted, ordered by minimum element
    std::vector<std::size_t> lengths;              // m_i

    std::size_t count() const { return orbits.size(); }
    static OrbitPartition trivial(std::size_t n);
    /// "{{1,2,3},{4}}" with 1-based points.
    std::string to_string() const;
    friend bool operator==(const OrbitPartition&, const OrbitPartition&) = default;
};

OrbitPartition orbits(const PermGroup& g);

/// theta_H = |H|^{-1} sum_{h in H} h, both over Z_k and over Q.
struct HaydenOperator {
    RingZk ring;
    PermGroup group;
    OrbitPartition partition;
    Elem inv_h;
    std::vector<std::vector<Elem>> matrix_mod; // n x n over Z_k, row-vector convention v * M
    RatMatrix matrix_real;

    std::vector<Elem> apply(std::span<const Elem> v) const;
};

/// Throws NotInvertible when gcd(|H|, k) > 1.
HaydenOperator hayden(const RingZk& ring, const PermGroup& h);

/// diag(l_1..l_n) with l_j the length of the orbit containing j.
struct OrbitLengthMatrix {
    std::vector<std::size_t> diagonal;
    std::string to_string() const; // "diag(3,3,3,1)"
    friend bool operator==(const OrbitLengthMatrix&, const OrbitLengthMatrix&) = default;
};

OrbitLengthMatrix orbit_length_matrix(const OrbitPartition& p);

/// Every v in Z_k^n with v theta_H = 0, by enumeration. Throws TooLarge.
std::vector<std::vector<Elem>> ker_theta_mod(const HaydenOperator& op);

/// Rows e_i - e_j for consecutive members of each orbit: a basis of ker theta_H over Q.
RatMatrix ker_theta_real_basis(const OrbitPartition& p);

/// Enumeration guard for k^n-sized scans: EQUICODE_MAX_ENUM or 10^7.
std::size_t max_enumeration();
/// base^exp, saturating at SIZE_MAX.
std::size_t checked_power(std::size_t base, std::size_t exp);
void require_enumerable(std::size_t base, std::size_t exp, const char* what);

} // namespace equicode
