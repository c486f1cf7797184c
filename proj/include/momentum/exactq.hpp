#pragma once

// Exact rational scalars, vectors and matrices.
//
// Every weight, root, vertex and facet normal in the library lives in one of
// these types. Scalars are GMP rationals, kept in lowest terms with a positive
// denominator, so equality and ordering are structural.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace momentum {

// Errors shared by every module.
struct ShapeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};
// A request that is well formed but falls outside what the library can
// certify. The message names the result that would be needed.
struct UnsupportedCase : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw DomainError("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(long num, long den = 1) {
    return make_rational(Integer(num), Integer(den));
}

// "p/q" or "p", optional leading sign, no whitespace.
inline Rational parse_rational(std::string_view text) {
    auto valid_int = [](std::string_view s, bool allow_sign) {
        if (s.empty()) return false;
        std::size_t i = 0;
        if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? "1" : text.substr(slash + 1);
    if (!valid_int(num, true) || !valid_int(den, false))
        throw DomainError("malformed rational literal '" + std::string(text) + "'");
    std::string n(num);
    if (!n.empty() && n[0] == '+') n.erase(0, 1);
    return make_rational(Integer(n), Integer(std::string(den)));
}

inline std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

enum class Basis { fundamental_weights, ambient };

// Vector of rationals. The basis tag is informational; equality and ordering
// compare coordinates only.
class QVec {
public:
    QVec() = default;
    explicit QVec(std::size_t n, Basis basis = Basis::fundamental_weights)
        : coords_(n, Rational(0)), basis_(basis) {}
    QVec(std::initializer_list<Rational> xs) : coords_(xs) {}
    explicit QVec(std::vector<Rational> xs, Basis basis = Basis::fundamental_weights)
        : coords_(std::move(xs)), basis_(basis) {}

    static QVec from_ints(std::initializer_list<long> xs) {
        QVec v;
        for (long x : xs) v.coords_.emplace_back(x);
        return v;
    }
    static QVec unit(std::size_t n, std::size_t i) {
        QVec v(n);
        v[i] = 1;
        return v;
    }

    std::size_t size() const { return coords_.size(); }
    bool empty() const { return coords_.empty(); }
    Basis basis() const { return basis_; }

    Rational& operator[](std::size_t i) { return coords_[i]; }
    const Rational& operator[](std::size_t i) const { return coords_[i]; }

    auto begin() { return coords_.begin(); }
    auto end() { return coords_.end(); }
    auto begin() const { return coords_.begin(); }
    auto end() const { return coords_.end(); }

    const std::vector<Rational>& coords() const { return coords_; }

    bool is_zero() const {
        return std::all_of(coords_.begin(), coords_.end(), [](const Rational& x) { return x == 0; });
    }
    bool is_integral() const {
        return std::all_of(coords_.begin(), coords_.end(),
                           [](const Rational& x) { return x.get_den() == 1; });
    }

    QVec& operator+=(const QVec& o) {
        check_same(o);
        for (std::size_t i = 0; i < size(); ++i) coords_[i] += o.coords_[i];
        return *this;
    }
    QVec& operator-=(const QVec& o) {
        check_same(o);
        for (std::size_t i = 0; i < size(); ++i) coords_[i] -= o.coords_[i];
        return *this;
    }
    QVec& operator*=(const Rational& s) {
        for (auto& x : coords_) x *= s;
        return *this;
    }

    friend QVec operator+(QVec a, const QVec& b) { return a += b; }
    friend QVec operator-(QVec a, const QVec& b) { return a -= b; }
    friend QVec operator-(QVec a) {
        for (auto& x : a.coords_) x = -x;
        return a;
    }
    friend QVec operator*(const Rational& s, QVec a) { return a *= s; }
    friend QVec operator*(QVec a, const Rational& s) { return a *= s; }

    friend bool operator==(const QVec& a, const QVec& b) { return a.coords_ == b.coords_; }
    friend bool operator!=(const QVec& a, const QVec& b) { return !(a == b); }
    friend bool operator<(const QVec& a, const QVec& b) {
        return std::lexicographical_compare(a.coords_.begin(), a.coords_.end(),
                                            b.coords_.begin(), b.coords_.end());
    }

    friend std::ostream& operator<<(std::ostream& os, const QVec& v) {
        os << '(';
        for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << to_string(v[i]);
        return os << ')';
    }

private:
    void check_same(const QVec& o) const {
        if (o.size() != size()) throw ShapeError("vector length mismatch");
    }

    std::vector<Rational> coords_;
    Basis basis_ = Basis::fundamental_weights;
};

inline Rational dot(const QVec& a, const QVec& b) {
    if (a.size() != b.size()) throw ShapeError("dot: length mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// Scales a nonzero vector by a positive factor to the primitive integer vector
// on the same ray. The zero vector is returned unchanged.
inline QVec primitive(const QVec& v) {
    Integer l = 1;
    for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
    Integer g = 0;
    std::vector<Integer> ints;
    ints.reserve(v.size());
    for (const auto& x : v) {
        Integer n = x.get_num() * (l / x.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
        ints.push_back(std::move(n));
    }
    if (g == 0) return v;
    QVec out(v.size(), v.basis());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rational(ints[i] / g);
    return out;
}

class QMat {
public:
    QMat() = default;
    QMat(std::size_t rows, std::size_t cols) : rows_(rows, QVec(cols)), cols_(cols) {}
    explicit QMat(std::vector<QVec> rows) : rows_(std::move(rows)) {
        cols_ = rows_.empty() ? 0 : rows_.front().size();
        for (const auto& r : rows_)
            if (r.size() != cols_) throw ShapeError("ragged matrix rows");
    }
    QMat(std::initializer_list<std::initializer_list<long>> rows) {
        for (const auto& r : rows) {
            QVec v;
            v = QVec(std::vector<Rational>(r.begin(), r.end()));
            rows_.push_back(std::move(v));
        }
        cols_ = rows_.empty() ? 0 : rows_.front().size();
        for (const auto& r : rows_)
            if (r.size() != cols_) throw ShapeError("ragged matrix rows");
    }

    static QMat identity(std::size_t n) {
        QMat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return rows_[i][j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return rows_[i][j]; }
    const QVec& row(std::size_t i) const { return rows_[i]; }
    const std::vector<QVec>& row_list() const { return rows_; }

    QMat transpose() const {
        QMat t(cols_, rows());
        for (std::size_t i = 0; i < rows(); ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    QVec operator*(const QVec& x) const {
        if (x.size() != cols_) throw ShapeError("matrix-vector shape mismatch");
        QVec y(rows());
        for (std::size_t i = 0; i < rows(); ++i) y[i] = dot(rows_[i], x);
        return y;
    }

    QMat operator*(const QMat& b) const {
        if (b.rows() != cols_) throw ShapeError("matrix-matrix shape mismatch");
        QMat c(rows(), b.cols());
        for (std::size_t i = 0; i < rows(); ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                if ((*this)(i, k) == 0) continue;
                for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += (*this)(i, k) * b(k, j);
            }
        return c;
    }

    friend bool operator==(const QMat& a, const QMat& b) {
        return a.cols_ == b.cols_ && a.rows_ == b.rows_;
    }

private:
    std::vector<QVec> rows_;
    std::size_t cols_ = 0;
};

// Reduced row echelon form. Returns the pivot column of each nonzero row; the
// zero rows are dropped from `m`.
inline std::vector<std::size_t> rref_in_place(std::vector<QVec>& m, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[r], m[p]);
        Rational inv = 1 / m[r][c];
        m[r] *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rational f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    m.resize(r);
    return pivots;
}

// Rank by fraction-free (Bareiss) elimination.
inline std::size_t rank(const QMat& a) {
    if (a.rows() == 0 || a.cols() == 0) return 0;
    // clear denominators row by row; rank is unaffected
    std::vector<std::vector<Integer>> m;
    for (const auto& r : a.row_list()) {
        QVec p = primitive(r);
        std::vector<Integer> row;
        for (const auto& x : p) row.push_back(x.get_num());
        m.push_back(std::move(row));
    }
    const std::size_t rows = m.size(), cols = a.cols();
    Integer prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[r], m[p]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return r;
}

// Exact solution of A x = b, or nullopt when the system is inconsistent. For
// underdetermined systems the free variables are set to zero.
inline std::optional<QVec> solve(const QMat& a, const QVec& b) {
    if (b.size() != a.rows()) throw ShapeError("solve: right-hand side length differs from row count");
    const std::size_t n = a.cols();
    std::vector<QVec> aug;
    aug.reserve(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        QVec r(n + 1);
        for (std::size_t j = 0; j < n; ++j) r[j] = a(i, j);
        r[n] = b[i];
        aug.push_back(std::move(r));
    }
    auto pivots = rref_in_place(aug, n + 1);
    if (!pivots.empty() && pivots.back() == n) return std::nullopt;
    QVec x(n);
    for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug[k][n];
    return x;
}

inline std::optional<QMat> inverse(const QMat& a) {
    if (a.rows() != a.cols()) throw ShapeError("inverse of non-square matrix");
    const std::size_t n = a.rows();
    std::vector<QVec> aug;
    for (std::size_t i = 0; i < n; ++i) {
        QVec r(2 * n);
        for (std::size_t j = 0; j < n; ++j) r[j] = a(i, j);
        r[n + i] = 1;
        aug.push_back(std::move(r));
    }
    auto pivots = rref_in_place(aug, 2 * n);
    if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
    QMat inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug[i][n + j];
    return inv;
}

}  // namespace momentum
