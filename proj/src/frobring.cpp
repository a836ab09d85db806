#include "equicode/frobring.hpp"

#include <numeric>
#include <stdexcept>

#include "equicode/errors.hpp"

namespace equicode {

namespace {

bool is_prime(int k) {
    if (k < 2) return false;
    for (int d = 2; d * d <= k; ++d)
        if (k % d == 0) return false;
    return true;
}

} // namespace

RingZk::RingZk(int k) : k_(k), prime_(is_prime(k)) {
    if (k < 2 || k > kMaxModulus)
        throw std::invalid_argument("modulus must lie in [2, " + std::to_string(kMaxModulus) + "]");
}

std::string RingZk::name() const { return (prime_ ? "F_" : "Z_") + std::to_string(k_); }

Cyclotomic char_value(const RingZk& ring, Elem a) {
    return Cyclotomic::zeta_power(ring.modulus(), a).reduced();
}

Cyclotomic char_sum(const RingZk& ring, Elem a) {
    Cyclotomic s(ring.modulus());
    for (int b = 0; b < ring.modulus(); ++b) s += Cyclotomic::zeta_power(ring.modulus(), long{a} * b);
    return s.reduced();
}

Elem inverse(const RingZk& ring, long m) {
    const long k = ring.modulus();
    long r = m % k;
    if (r < 0) r += k;
    if (std::gcd(r, k) != 1)
        throw NotInvertible(std::to_string(m) + " is not a unit in " + ring.name());
    for (long x = 1; x < k; ++x)
        if ((r * x) % k == 1) return static_cast<Elem>(x);
    throw NotInvertible(std::to_string(m) + " is not a unit in " + ring.name());
}

} // namespace equicode
