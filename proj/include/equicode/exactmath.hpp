#pragma once

// Exact arithmetic substrate: big integers and rationals (GMP), cyclotomic
// numbers in Z[x]/(x^k - 1), and integer/rational matrix algorithms.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace equicode {

using Integer = mpz_class;
using Rat = mpq_class;

// Builds num/den in lowest terms with a positive denominator.
Rat make_rat(const Integer& num, const Integer& den = 1);
Rat parse_rat(const std::string& text);
std::string to_string(const Integer& v);
std::string to_string(const Rat& v);
bool is_integral(const Rat& v);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);
// Floor division with a mathematically correct result for negative operands.
Integer floor_div(const Integer& a, const Integer& b);
Integer mod_floor(const Integer& a, const Integer& b);
Integer floor(const Rat& v);
Integer ceil(const Rat& v);

/// Coefficients of the k-th cyclotomic polynomial Phi_k, lowest degree first.
/// Computed by exact division of x^k - 1 by Phi_d for every proper divisor d.
const std::vector<Integer>& cyclotomic_polynomial(int k);
int euler_phi(int k);

/// An element of Z[zeta_k], stored as a group-ring element
/// sum_j coeffs[j] * zeta_k^j with j in [0, k).
///
/// Arithmetic happens in Z[x]/(x^k - 1); equality reduces both sides
/// modulo Phi_k first, so two values compare equal iff they are the same
/// complex number.
class Cyclotomic {
public:
    explicit Cyclotomic(int k);
    Cyclotomic(int k, std::vector<Integer> coeffs);

    static Cyclotomic from_integer(int k, const Integer& v);
    static Cyclotomic zeta_power(int k, long exponent);

    int conductor() const { return k_; }
    const std::vector<Integer>& coeffs() const { return coeffs_; }
    bool is_canonical() const { return canonical_; }

    /// Canonical representative: degree < phi(k) after division by Phi_k.
    Cyclotomic reduced() const;
    bool is_zero() const;
    /// The rational integer this value equals, if it is one.
    std::optional<Integer> as_integer() const;

    Cyclotomic mul_zeta(long exponent) const;

    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Integer& s);
    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator*(Cyclotomic a, const Integer& s) { return a *= s; }
    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

    /// Reduced form, e.g. "1 + 2*z4 - z4^3"; rational integers print plainly.
    std::string to_string() const;

private:
    int k_;
    std::vector<Integer> coeffs_;
    bool canonical_ = false;
};

Cyclotomic cyclo_reduce(const Cyclotomic& v);

/// Dense row-major matrix over Integer or Rat.
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<T> data);
    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
    std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::vector<T> row_vector(std::size_t i) const { return {row(i).begin(), row(i).end()}; }

    void append_row(std::span<const T> r);
    void swap_rows(std::size_t a, std::size_t b);
    Matrix transpose() const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rat>;

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
RatMatrix operator*(const Rat& s, const RatMatrix& m);
std::vector<Rat> row_times(std::span<const Rat> x, const RatMatrix& m);

RatMatrix to_rat(const IntMatrix& m);
/// Least common multiple of all denominators (1 for an empty matrix).
Integer common_denominator(const RatMatrix& m);
/// Requires every entry of d*m to be integral.
IntMatrix scale_to_int(const RatMatrix& m, const Integer& d);

/// Row-style Hermite normal form of the row lattice of m. Zero rows are
/// dropped; pivots are positive and entries above a pivot lie in [0, pivot).
IntMatrix hnf(const IntMatrix& m);
/// HNF of a rational row lattice (denominators cleared, then restored).
RatMatrix hnf(const RatMatrix& m);

struct SmithForm {
    IntMatrix left;     // unimodular U
    IntMatrix diagonal; // D = U * A * V
    IntMatrix right;    // unimodular V
};
SmithForm smith_normal_form(const IntMatrix& a);

/// Basis (rows) of { x in Z^r : x * m in Z^r } for a square rational m.
IntMatrix snf_preimage(const RatMatrix& m);

/// Fraction-free (Bareiss) determinant.
Integer determinant(const IntMatrix& m);
Rat determinant(const RatMatrix& m);

struct EchelonForm {
    RatMatrix reduced;               // reduced row echelon form, zero rows kept at the bottom
    std::vector<std::size_t> pivots; // pivot column per nonzero row
};
EchelonForm rref(const RatMatrix& m);
std::size_t rank(const RatMatrix& m);
std::optional<RatMatrix> inverse(const RatMatrix& m);
/// Basis (rows) of { f : m * f^T = 0 }, scaled to primitive integer rows.
RatMatrix kernel_basis(const RatMatrix& m);
/// Coefficients x with x * b = v, if v lies in the row span of b.
std::optional<std::vector<Rat>> solve_left(const RatMatrix& b, std::span<const Rat> v);
/// True iff the two row spans agree as Q-vector spaces.
bool same_row_span(const RatMatrix& a, const RatMatrix& b);

} // namespace equicode
