#include "equicode/exactmath.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

#include "equicode/errors.hpp"

namespace equicode {

Rat make_rat(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

Rat parse_rat(const std::string& text) {
    try {
        auto slash = text.find('/');
        if (slash == std::string::npos) return Rat(Integer(text));
        const Integer den(text.substr(slash + 1));
        if (den == 0) throw ParseError("zero denominator in '" + text + "'");
        return make_rat(Integer(text.substr(0, slash)), den);
    } catch (const std::invalid_argument&) {
        throw ParseError("not a rational number: '" + text + "'");
    }
}

std::string to_string(const Integer& v) { return v.get_str(); }

std::string to_string(const Rat& v) {
    if (v.get_den() == 1) return v.get_num().get_str();
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

bool is_integral(const Rat& v) { return v.get_den() == 1; }

Integer gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Integer lcm(const Integer& a, const Integer& b) {
    Integer l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

Integer floor_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Integer mod_floor(const Integer& a, const Integer& b) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Integer floor(const Rat& v) { return floor_div(v.get_num(), v.get_den()); }

Integer ceil(const Rat& v) {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), v.get_num().get_mpz_t(), v.get_den().get_mpz_t());
    return q;
}

// ---------------------------------------------------------------------------
// Cyclotomic polynomials

namespace {

using Poly = std::vector<Integer>;

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division by a monic divisor; throws if the remainder is nonzero.
Poly exact_divide(Poly num, const Poly& den) {
    trim(num);
    const std::size_t dd = den.size() - 1;
    if (num.size() < den.size()) {
        if (!num.empty()) throw std::logic_error("cyclotomic division not exact");
        return {};
    }
    Poly q(num.size() - dd, 0);
    for (std::size_t i = num.size(); i-- > dd;) {
        Integer c = num[i];
        if (c == 0) continue;
        q[i - dd] = c;
        for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
    }
    trim(num);
    if (!num.empty()) throw std::logic_error("cyclotomic division not exact");
    return q;
}

// Remainder of p modulo a monic polynomial m, in place.
void reduce_mod_monic(std::vector<Integer>& p, const Poly& m) {
    const std::size_t dm = m.size() - 1;
    for (std::size_t i = p.size(); i-- > dm;) {
        if (p[i] == 0) continue;
        Integer c = p[i];
        for (std::size_t j = 0; j <= dm; ++j) p[i - dm + j] -= c * m[j];
    }
}

} // namespace

const std::vector<Integer>& cyclotomic_polynomial(int k) {
    if (k < 1) throw std::invalid_argument("cyclotomic conductor must be positive");
    static std::mutex mu;
    static std::map<int, Poly> cache;
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find(k); it != cache.end()) return it->second;
    }
    Poly p(static_cast<std::size_t>(k) + 1, 0);
    p[0] = -1;
    p[static_cast<std::size_t>(k)] = 1;
    for (int d = 1; d < k; ++d)
        if (k % d == 0) p = exact_divide(std::move(p), cyclotomic_polynomial(d));
    std::lock_guard lock(mu);
    return cache.emplace(k, std::move(p)).first->second;
}

int euler_phi(int k) { return static_cast<int>(cyclotomic_polynomial(k).size()) - 1; }

Cyclotomic::Cyclotomic(int k) : k_(k), coeffs_(static_cast<std::size_t>(k), 0), canonical_(true) {
    if (k < 1) throw std::invalid_argument("cyclotomic conductor must be positive");
}

Cyclotomic::Cyclotomic(int k, std::vector<Integer> coeffs) : k_(k), coeffs_(std::move(coeffs)) {
    if (k < 1) throw std::invalid_argument("cyclotomic conductor must be positive");
    // Fold any longer polynomial through x^k = 1.
    if (coeffs_.size() > static_cast<std::size_t>(k)) {
        for (std::size_t i = static_cast<std::size_t>(k); i < coeffs_.size(); ++i)
            coeffs_[i % static_cast<std::size_t>(k)] += coeffs_[i];
    }
    coeffs_.resize(static_cast<std::size_t>(k), 0);
}

Cyclotomic Cyclotomic::from_integer(int k, const Integer& v) {
    Cyclotomic c(k);
    c.coeffs_[0] = v;
    return c;
}

Cyclotomic Cyclotomic::zeta_power(int k, long exponent) {
    Cyclotomic c(k);
    long e = exponent % k;
    if (e < 0) e += k;
    c.coeffs_[static_cast<std::size_t>(e)] = 1;
    c.canonical_ = false;
    return c;
}

Cyclotomic Cyclotomic::reduced() const {
    if (canonical_) return *this;
    Cyclotomic r = *this;
    reduce_mod_monic(r.coeffs_, cyclotomic_polynomial(k_));
    r.canonical_ = true;
    return r;
}

bool Cyclotomic::is_zero() const {
    auto r = reduced();
    return std::all_of(r.coeffs_.begin(), r.coeffs_.end(), [](const Integer& c) { return c == 0; });
}

std::optional<Integer> Cyclotomic::as_integer() const {
    auto r = reduced();
    for (std::size_t i = 1; i < r.coeffs_.size(); ++i)
        if (r.coeffs_[i] != 0) return std::nullopt;
    return r.coeffs_[0];
}

Cyclotomic Cyclotomic::mul_zeta(long exponent) const {
    long e = exponent % k_;
    if (e < 0) e += k_;
    Cyclotomic r(k_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        r.coeffs_[(i + static_cast<std::size_t>(e)) % coeffs_.size()] = coeffs_[i];
    r.canonical_ = false;
    return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    if (o.k_ != k_) throw std::invalid_argument("cyclotomic conductor mismatch");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    canonical_ = canonical_ && o.canonical_;
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
    if (o.k_ != k_) throw std::invalid_argument("cyclotomic conductor mismatch");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    canonical_ = canonical_ && o.canonical_;
    return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Integer& s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.k_ != b.k_) throw std::invalid_argument("cyclotomic conductor mismatch");
    const std::size_t k = a.coeffs_.size();
    Cyclotomic r(a.k_);
    for (std::size_t i = 0; i < k; ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < k; ++j)
            if (b.coeffs_[j] != 0) r.coeffs_[(i + j) % k] += a.coeffs_[i] * b.coeffs_[j];
    }
    r.canonical_ = false;
    return r;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.k_ != b.k_) return false;
    return (a - b).is_zero();
}

std::string Cyclotomic::to_string() const {
    auto r = reduced();
    std::string out;
    const std::string z = "z" + std::to_string(k_);
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i) {
        const Integer& c = r.coeffs_[i];
        if (c == 0) continue;
        Integer mag = abs(c);
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        if (i == 0) {
            out += mag.get_str();
            continue;
        }
        if (mag != 1) out += mag.get_str() + "*";
        out += z;
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

Cyclotomic cyclo_reduce(const Cyclotomic& v) { return v.reduced(); }

// ---------------------------------------------------------------------------
// Matrices

template <typename T>
Matrix<T>::Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows * cols) throw std::invalid_argument("matrix data size mismatch");
}

template <typename T>
Matrix<T> Matrix<T>::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

template <typename T>
Matrix<T> Matrix<T>::from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw std::invalid_argument("ragged matrix rows");
        std::copy(rows[i].begin(), rows[i].end(), m.row(i).begin());
    }
    return m;
}

template <typename T>
void Matrix<T>::append_row(std::span<const T> r) {
    if (rows_ == 0 && cols_ == 0) cols_ = r.size();
    if (r.size() != cols_) throw std::invalid_argument("row length mismatch");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
}

template <typename T>
void Matrix<T>::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

template <typename T>
Matrix<T> Matrix<T>::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

template class Matrix<Integer>;
template class Matrix<Rat>;

namespace {

template <typename T>
Matrix<T> multiply(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.cols() != b.rows()) throw DimensionMismatch("matrix product shape mismatch");
    Matrix<T> c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t l = 0; l < a.cols(); ++l) {
            if (a(i, l) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, l) * b(l, j);
        }
    return c;
}

} // namespace

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) { return multiply(a, b); }
RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) { return multiply(a, b); }

RatMatrix operator*(const Rat& s, const RatMatrix& m) {
    RatMatrix r = m;
    for (std::size_t i = 0; i < r.rows(); ++i)
        for (auto& v : r.row(i)) v *= s;
    return r;
}

std::vector<Rat> row_times(std::span<const Rat> x, const RatMatrix& m) {
    if (x.size() != m.rows()) throw DimensionMismatch("vector-matrix shape mismatch");
    std::vector<Rat> out(m.cols(), Rat(0));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) out[j] += x[i] * m(i, j);
    }
    return out;
}

RatMatrix to_rat(const IntMatrix& m) {
    RatMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
    return r;
}

Integer common_denominator(const RatMatrix& m) {
    Integer d = 1;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (const auto& v : m.row(i)) d = lcm(d, v.get_den());
    return d;
}

IntMatrix scale_to_int(const RatMatrix& m, const Integer& d) {
    IntMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            Rat v = m(i, j) * d;
            if (!is_integral(v)) throw std::invalid_argument("scale_to_int: entry not integral");
            r(i, j) = v.get_num();
        }
    return r;
}

namespace {

void row_axpy(IntMatrix& m, std::size_t dst, const Integer& q, std::size_t src) {
    for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) -= q * m(src, j);
}

void col_axpy(IntMatrix& m, std::size_t dst, const Integer& q, std::size_t src) {
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) -= q * m(i, src);
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

} // namespace

IntMatrix hnf(const IntMatrix& input) {
    IntMatrix a = input;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        // Euclid down the column until a single nonzero entry remains at row r.
        for (;;) {
            std::optional<std::size_t> best;
            for (std::size_t i = r; i < a.rows(); ++i)
                if (a(i, c) != 0 && (!best || abs(a(i, c)) < abs(a(*best, c)))) best = i;
            if (!best) break;
            a.swap_rows(r, *best);
            bool clean = true;
            for (std::size_t i = r + 1; i < a.rows(); ++i) {
                if (a(i, c) == 0) continue;
                row_axpy(a, i, floor_div(a(i, c), a(r, c)), r);
                if (a(i, c) != 0) clean = false;
            }
            if (clean) break;
        }
        if (a(r, c) == 0) continue;
        if (a(r, c) < 0)
            for (auto& v : a.row(r)) v = -v;
        for (std::size_t i = 0; i < r; ++i) row_axpy(a, i, floor_div(a(i, c), a(r, c)), r);
        ++r;
    }
    IntMatrix out(0, a.cols());
    for (std::size_t i = 0; i < r; ++i) out.append_row(a.row(i));
    return out;
}

RatMatrix hnf(const RatMatrix& m) {
    Integer d = common_denominator(m);
    RatMatrix h = to_rat(hnf(scale_to_int(m, d)));
    return Rat(1, 1) / Rat(d) * h;
}

SmithForm smith_normal_form(const IntMatrix& input) {
    IntMatrix a = input;
    IntMatrix u = IntMatrix::identity(a.rows());
    IntMatrix v = IntMatrix::identity(a.cols());
    const std::size_t steps = std::min(a.rows(), a.cols());
    for (std::size_t t = 0; t < steps; ++t) {
        for (;;) {
            // Bring the smallest nonzero entry of the trailing block to (t, t).
            std::optional<std::pair<std::size_t, std::size_t>> best;
            for (std::size_t i = t; i < a.rows(); ++i)
                for (std::size_t j = t; j < a.cols(); ++j)
                    if (a(i, j) != 0 && (!best || abs(a(i, j)) < abs(a(best->first, best->second))))
                        best = {i, j};
            if (!best) break;
            a.swap_rows(t, best->first);
            u.swap_rows(t, best->first);
            swap_cols(a, t, best->second);
            swap_cols(v, t, best->second);

            bool clean = true;
            for (std::size_t i = t + 1; i < a.rows(); ++i) {
                if (a(i, t) == 0) continue;
                Integer q = floor_div(a(i, t), a(t, t));
                row_axpy(a, i, q, t);
                row_axpy(u, i, q, t);
                if (a(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < a.cols(); ++j) {
                if (a(t, j) == 0) continue;
                Integer q = floor_div(a(t, j), a(t, t));
                col_axpy(a, j, q, t);
                col_axpy(v, j, q, t);
                if (a(t, j) != 0) clean = false;
            }
            if (!clean) continue;
            // Divisibility chain: fold a row whose entry a(t, t) fails to divide into row t.
            std::optional<std::size_t> bad;
            for (std::size_t i = t + 1; i < a.rows() && !bad; ++i)
                for (std::size_t j = t + 1; j < a.cols(); ++j)
                    if (a(i, j) % a(t, t) != 0) {
                        bad = i;
                        break;
                    }
            if (!bad) break;
            row_axpy(a, t, Integer(-1), *bad);
            row_axpy(u, t, Integer(-1), *bad);
        }
        if (a(t, t) < 0) {
            for (std::size_t j = 0; j < a.cols(); ++j) a(t, j) = -a(t, j);
            for (std::size_t j = 0; j < u.cols(); ++j) u(t, j) = -u(t, j);
        }
    }
    return {std::move(u), std::move(a), std::move(v)};
}

IntMatrix snf_preimage(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("snf_preimage expects a square matrix");
    const std::size_t r = m.rows();
    const Integer d = common_denominator(m);
    const SmithForm snf = smith_normal_form(scale_to_int(m, d));
    // x*A = 0 (mod d) with U*A*V = D  <=>  w*D = 0 (mod d) for w = x*U^{-1}.
    IntMatrix basis(0, r);
    for (std::size_t i = 0; i < r; ++i) {
        const Integer s = snf.diagonal(i, i);
        const Integer factor = d / gcd(d, s);
        std::vector<Integer> row(r);
        for (std::size_t j = 0; j < r; ++j) row[j] = factor * snf.left(i, j);
        basis.append_row(row);
    }
    return hnf(basis);
}

Integer determinant(const IntMatrix& input) {
    if (input.rows() != input.cols()) throw DimensionMismatch("determinant of non-square matrix");
    const std::size_t n = input.rows();
    if (n == 0) return 1;
    IntMatrix a = input;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

Rat determinant(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("determinant of non-square matrix");
    Integer d = common_denominator(m);
    Integer scaled = determinant(scale_to_int(m, d));
    Integer denom;
    mpz_pow_ui(denom.get_mpz_t(), d.get_mpz_t(), m.rows());
    return make_rat(scaled, denom);
}

EchelonForm rref(const RatMatrix& m) {
    EchelonForm e{m, {}};
    RatMatrix& a = e.reduced;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t p = r;
        while (p < a.rows() && a(p, c) == 0) ++p;
        if (p == a.rows()) continue;
        a.swap_rows(r, p);
        Rat inv = 1 / a(r, c);
        for (auto& v : a.row(r)) v *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || a(i, c) == 0) continue;
            Rat f = a(i, c);
            for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
        }
        e.pivots.push_back(c);
        ++r;
    }
    return e;
}

std::size_t rank(const RatMatrix& m) { return rref(m).pivots.size(); }

std::optional<RatMatrix> inverse(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("inverse of non-square matrix");
    const std::size_t n = m.rows();
    RatMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    EchelonForm e = rref(aug);
    if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
    RatMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
    return inv;
}

RatMatrix kernel_basis(const RatMatrix& m) {
    EchelonForm e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;
    RatMatrix basis(0, m.cols());
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rat> v(m.cols(), Rat(0));
        v[f] = 1;
        for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, f);
        Integer d = 1;
        for (const auto& x : v) d = lcm(d, x.get_den());
        Integer g = 0;
        for (auto& x : v) {
            x *= d;
            g = gcd(g, x.get_num());
        }
        if (g != 0)
            for (auto& x : v) x /= g;
        basis.append_row(v);
    }
    return basis;
}

std::optional<std::vector<Rat>> solve_left(const RatMatrix& b, std::span<const Rat> v) {
    if (v.size() != b.cols()) throw DimensionMismatch("solve_left: vector length mismatch");
    // Solve b^T x^T = v^T.
    RatMatrix aug(b.cols(), b.rows() + 1);
    for (std::size_t i = 0; i < b.cols(); ++i) {
        for (std::size_t j = 0; j < b.rows(); ++j) aug(i, j) = b(j, i);
        aug(i, b.rows()) = v[i];
    }
    EchelonForm e = rref(aug);
    if (!e.pivots.empty() && e.pivots.back() == b.rows()) return std::nullopt;
    std::vector<Rat> x(b.rows(), Rat(0));
    for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = e.reduced(i, b.rows());
    return x;
}

bool same_row_span(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols() != b.cols()) return false;
    RatMatrix both = a;
    for (std::size_t i = 0; i < b.rows(); ++i) both.append_row(b.row(i));
    const std::size_t rb = rank(both);
    return rank(a) == rb && rank(b) == rb;
}

} // namespace equicode
