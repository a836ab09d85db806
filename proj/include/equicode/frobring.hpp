#pragma once

#include <cstdint>
#include <string>

#include "equicode/exactmath.hpp"

namespace equicode {

using Elem = std::uint8_t;

/// The base ring Z_k (F_p when k = p is prime; arithmetic is identical).
class RingZk {
public:
    static constexpr int kMaxModulus = 255;

    explicit RingZk(int k);

    int modulus() const { return k_; }
    int size() const { return k_; }
    bool is_prime_field() const { return prime_; }

    Elem reduce(long v) const {
        long r = v % k_;
        return static_cast<Elem>(r < 0 ? r + k_ : r);
    }
    Elem add(Elem a, Elem b) const { return static_cast<Elem>((a + b) % k_); }
    Elem sub(Elem a, Elem b) const { return static_cast<Elem>((a + k_ - b) % k_); }
    Elem mul(Elem a, Elem b) const { return static_cast<Elem>((int{a} * b) % k_); }
    Elem neg(Elem a) const { return static_cast<Elem>((k_ - a) % k_); }

    std::string name() const;

    friend bool operator==(const RingZk&, const RingZk&) = default;

private:
    int k_;
    bool prime_;
};

/// chi(a) = zeta_k^a, the generating character of Z_k.
Cyclotomic char_value(const RingZk& ring, Elem a);

/// sum_{b in Z_k} chi(a*b), reduced; equals k when a = 0 and 0 otherwise.
Cyclotomic char_sum(const RingZk& ring, Elem a);

/// m^{-1} mod k. Throws NotInvertible when gcd(m, k) > 1.
Elem inverse(const RingZk& ring, long m);

} // namespace equicode
