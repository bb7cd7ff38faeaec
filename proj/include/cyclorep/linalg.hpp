#pragma once

#include <cmath>
#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cyclorep/cyclo.hpp"

namespace cyclorep {

using CycloVec = std::vector<CycloNum>;

inline CycloVec zero_vec(int d, std::size_t n) { return CycloVec(n, CycloNum::zero(d)); }

inline CycloVec unit_vec(int d, std::size_t n, std::size_t i) {
    CycloVec v = zero_vec(d, n);
    v[i] = CycloNum::one(d);
    return v;
}

inline CycloVec conj(const CycloVec& v) {
    CycloVec r;
    r.reserve(v.size());
    for (const auto& x : v) r.push_back(x.conj());
    return r;
}

inline bool is_zero(const CycloVec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

/// Dense row-major matrix over K_d.
class CycloMatrix {
public:
    CycloMatrix() : f_(&Field::get(1)), rows_(0), cols_(0) {}
    CycloMatrix(const Field& f, std::size_t rows, std::size_t cols)
        : f_(&f), rows_(rows), cols_(cols), e_(rows * cols, CycloNum(f)) {}

    static CycloMatrix zero(int d, std::size_t rows, std::size_t cols) {
        return CycloMatrix(Field::get(d), rows, cols);
    }
    static CycloMatrix identity(int d, std::size_t n) { return scalar(CycloNum::one(d), n); }
    static CycloMatrix scalar(const CycloNum& z, std::size_t n) {
        CycloMatrix m(z.field(), n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = z;
        return m;
    }
    static CycloMatrix diag(const CycloVec& v) {
        if (v.empty()) fail(ErrorKind::ShapeMismatch, "diag of empty vector");
        CycloMatrix m(v[0].field(), v.size(), v.size());
        for (std::size_t i = 0; i < v.size(); ++i) m(i, i) = v[i];
        return m;
    }
    static CycloMatrix from_columns(int d, std::size_t rows, const std::vector<CycloVec>& cols) {
        CycloMatrix m(Field::get(d), rows, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != rows) fail(ErrorKind::ShapeMismatch, "column length");
            for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
        }
        return m;
    }

    const Field& field() const { return *f_; }
    int d() const { return f_->d(); }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    CycloNum& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const CycloNum& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
    const std::vector<CycloNum>& entries() const { return e_; }

    CycloVec column(std::size_t j) const {
        CycloVec v;
        v.reserve(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
        return v;
    }
    CycloVec row(std::size_t i) const {
        return CycloVec(e_.begin() + i * cols_, e_.begin() + (i + 1) * cols_);
    }

    CycloMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
        if (r0 + nr > rows_ || c0 + nc > cols_) fail(ErrorKind::ShapeMismatch, "block out of range");
        CycloMatrix b(*f_, nr, nc);
        for (std::size_t i = 0; i < nr; ++i)
            for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
        return b;
    }

    CycloMatrix transpose() const {
        CycloMatrix t(*f_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    /// Entrywise complex conjugate (no transpose).
    CycloMatrix conj() const {
        CycloMatrix c(*this);
        for (auto& x : c.e_) x = x.conj();
        return c;
    }

    CycloMatrix galois(long long t) const {
        CycloMatrix c(*this);
        for (auto& x : c.e_) x = x.galois(t);
        return c;
    }

    CycloMatrix& operator+=(const CycloMatrix& o) {
        same_shape(o);
        for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
        return *this;
    }
    CycloMatrix& operator-=(const CycloMatrix& o) {
        same_shape(o);
        for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
        return *this;
    }
    CycloMatrix& operator*=(const CycloNum& z) {
        for (auto& x : e_) x *= z;
        return *this;
    }

    friend CycloMatrix operator+(CycloMatrix a, const CycloMatrix& b) { return a += b; }
    friend CycloMatrix operator-(CycloMatrix a, const CycloMatrix& b) { return a -= b; }
    friend CycloMatrix operator*(CycloMatrix a, const CycloNum& z) { return a *= z; }
    friend CycloMatrix operator*(const CycloNum& z, CycloMatrix a) { return a *= z; }
    CycloMatrix operator-() const {
        CycloMatrix r(*this);
        for (auto& x : r.e_) x = -x;
        return r;
    }

    friend CycloMatrix operator*(const CycloMatrix& a, const CycloMatrix& b) {
        if (a.cols_ != b.rows_) fail(ErrorKind::ShapeMismatch, "matrix product");
        if (a.f_ != b.f_) fail(ErrorKind::ModulusMismatch, "matrix product");
        CycloMatrix r(*a.f_, a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const CycloNum& x = a(i, k);
                if (x.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const CycloNum& y = b(k, j);
                    if (!y.is_zero()) r(i, j) += x * y;
                }
            }
        return r;
    }

    friend CycloVec operator*(const CycloMatrix& a, const CycloVec& v) {
        if (a.cols_ != v.size()) fail(ErrorKind::ShapeMismatch, "matrix-vector product");
        CycloVec r = zero_vec(a.d(), a.rows_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k)
                if (!a(i, k).is_zero() && !v[k].is_zero()) r[i] += a(i, k) * v[k];
        return r;
    }

    friend bool operator==(const CycloMatrix& a, const CycloMatrix& b) {
        if (a.f_ != b.f_) fail(ErrorKind::ModulusMismatch, "matrix comparison");
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const CycloMatrix& a, const CycloMatrix& b) { return !(a == b); }

private:
    void same_shape(const CycloMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) fail(ErrorKind::ShapeMismatch, "matrix sum");
        if (f_ != o.f_) fail(ErrorKind::ModulusMismatch, "matrix sum");
    }

    const Field* f_;
    std::size_t rows_, cols_;
    std::vector<CycloNum> e_;
};

inline CycloMatrix conj_transpose(const CycloMatrix& m) { return m.conj().transpose(); }

/// Row-vector times matrix.
inline CycloVec row_times(const CycloVec& x, const CycloMatrix& m) {
    if (x.size() != m.rows()) fail(ErrorKind::ShapeMismatch, "vector-matrix product");
    CycloVec r = zero_vec(m.d(), m.cols());
    for (std::size_t k = 0; k < m.rows(); ++k)
        if (!x[k].is_zero())
            for (std::size_t j = 0; j < m.cols(); ++j) r[j] += x[k] * m(k, j);
    return r;
}

inline CycloNum dot(const CycloVec& a, const CycloVec& b) {
    if (a.size() != b.size() || a.empty()) fail(ErrorKind::ShapeMismatch, "dot product");
    CycloNum s = CycloNum::zero(a[0].d());
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

struct Echelon {
    CycloMatrix r;                   // reduced row echelon form
    std::vector<std::size_t> pivots;  // pivot column per nonzero row
    int swaps = 0;
    CycloNum scale;                  // product of pivots divided out
};

/// Gauss-Jordan elimination over K_d.
inline Echelon row_reduce(CycloMatrix m) {
    Echelon out;
    out.scale = CycloNum::one(m.d());
    std::size_t row = 0;
    for (std::size_t c = 0; c < m.cols() && row < m.rows(); ++c) {
        std::size_t p = row;
        while (p < m.rows() && m(p, c).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != row) {
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
            ++out.swaps;
        }
        CycloNum piv = m(row, c);
        out.scale *= piv;
        CycloNum inv = piv.inverse();
        for (std::size_t j = c; j < m.cols(); ++j) m(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, c).is_zero()) continue;
            CycloNum f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (!m(row, j).is_zero()) m(i, j) -= f * m(row, j);
        }
        out.pivots.push_back(c);
        ++row;
    }
    out.r = std::move(m);
    return out;
}

inline std::size_t rank(const CycloMatrix& m) { return row_reduce(m).pivots.size(); }

inline CycloNum determinant(const CycloMatrix& m) {
    if (!m.square()) fail(ErrorKind::ShapeMismatch, "determinant of non-square matrix");
    if (m.rows() == 0) return CycloNum::one(m.d());
    Echelon e = row_reduce(m);
    if (e.pivots.size() < m.rows()) return CycloNum::zero(m.d());
    return e.swaps % 2 ? -e.scale : e.scale;
}

inline CycloMatrix inverse(const CycloMatrix& m) {
    if (!m.square()) fail(ErrorKind::ShapeMismatch, "inverse of non-square matrix");
    const std::size_t n = m.rows();
    CycloMatrix aug(m.field(), n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = CycloNum::one(m.d());
    }
    Echelon e = row_reduce(std::move(aug));
    if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) fail(ErrorKind::Singular, "matrix is singular");
    return e.r.block(0, n, n, n);
}

inline std::vector<CycloVec> kernel_basis(const CycloMatrix& m) {
    Echelon e = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<CycloVec> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        CycloVec v = unit_vec(m.d(), m.cols(), f);
        for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.r(r, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Some x with a*x = b, or nullopt when inconsistent.
inline std::optional<CycloVec> solve(const CycloMatrix& a, const CycloVec& b) {
    if (b.size() != a.rows()) fail(ErrorKind::ShapeMismatch, "solve right-hand side");
    CycloMatrix aug(a.field(), a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    Echelon e = row_reduce(std::move(aug));
    if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
    CycloVec x = zero_vec(a.d(), a.cols());
    for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.r(r, a.cols());
    return x;
}

inline CycloMatrix power(const CycloMatrix& m, unsigned e) {
    CycloMatrix r = CycloMatrix::identity(m.d(), m.rows()), b = m;
    while (e) {
        if (e & 1u) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

/// (M - I)^s = 0.
inline bool is_unipotent(const CycloMatrix& m) {
    if (!m.square()) fail(ErrorKind::ShapeMismatch, "is_unipotent of non-square matrix");
    CycloMatrix n = m - CycloMatrix::identity(m.d(), m.rows());
    return power(n, static_cast<unsigned>(m.rows())) == CycloMatrix::zero(m.d(), m.rows(), m.rows());
}

/// Least t in [1, bound] with M^t = I, or nullopt.
inline std::optional<int> multiplicative_order(const CycloMatrix& m, int bound) {
    if (!m.square()) fail(ErrorKind::ShapeMismatch, "order of non-square matrix");
    const CycloMatrix id = CycloMatrix::identity(m.d(), m.rows());
    CycloMatrix p = m;
    for (int t = 1; t <= bound; ++t) {
        if (p == id) return t;
        p = p * m;
    }
    return std::nullopt;
}

/// Concatenated coefficient vector over Q.
inline std::vector<Rational> realify(const CycloVec& v) {
    std::vector<Rational> out;
    for (const auto& x : v) out.insert(out.end(), x.coeffs().begin(), x.coeffs().end());
    return out;
}

/// Incrementally maintained echelon basis of a Q-subspace of Q^N.
class QSpan {
public:
    /// Returns true when v enlarged the span.
    bool add(std::vector<Rational> v) {
        for (const auto& [col, b] : basis_) {
            if (v[col] == 0) continue;
            Rational f = v[col];
            for (std::size_t j = 0; j < v.size(); ++j)
                if (b[j] != 0) v[j] -= f * b[j];
        }
        std::size_t col = 0;
        while (col < v.size() && v[col] == 0) ++col;
        if (col == v.size()) return false;
        Rational inv = 1 / v[col];
        for (auto& x : v) x *= inv;
        for (auto& [c, b] : basis_) {
            if (b[col] == 0) continue;
            Rational f = b[col];
            for (std::size_t j = 0; j < v.size(); ++j)
                if (v[j] != 0) b[j] -= f * v[j];
        }
        basis_.emplace_back(col, std::move(v));
        return true;
    }
    std::size_t rank() const { return basis_.size(); }

private:
    std::vector<std::pair<std::size_t, std::vector<Rational>>> basis_;
};

/// Rank of the realification of K_d-vectors over Q.
inline std::size_t rank_over_q(const std::vector<CycloVec>& vectors) {
    QSpan s;
    for (const auto& v : vectors) s.add(realify(v));
    return s.rank();
}

struct Inertia {
    int pos = 0, neg = 0, zero = 0;
    friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Eigenvalues of a real symmetric matrix by cyclic Jacobi sweeps.
inline std::vector<double> jacobi_eigenvalues(std::vector<std::vector<double>> a) {
    const std::size_t n = a.size();
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0, total = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                total += a[i][j] * a[i][j];
                if (i != j) off += a[i][j] * a[i][j];
            }
        if (off <= 1e-30 * (total + 1e-300)) break;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                if (std::abs(a[p][q]) < 1e-300) continue;
                double theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
                double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
                double c = 1 / std::sqrt(t * t + 1), s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    double akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
    }
    std::vector<double> ev(n);
    for (std::size_t i = 0; i < n; ++i) ev[i] = a[i][i];
    return ev;
}

/// Inertia of the Hermitian H = -i * embed(G) for an anti-Hermitian J-Gram G.
inline Inertia inertia(const CycloMatrix& g, double tol = 1e-7) {
    if (!g.square()) fail(ErrorKind::ShapeMismatch, "inertia of non-square matrix");
    if (conj_transpose(g) != -g) fail(ErrorKind::NotAntiHermitian, "G* != -G");
    const std::size_t s = g.rows();
    std::vector<std::vector<double>> real(2 * s, std::vector<double>(2 * s, 0.0));
    const std::complex<double> minus_i(0, -1);
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j) {
            std::complex<double> h = minus_i * g(i, j).embed();
            real[i][j] = h.real();
            real[i][s + j] = -h.imag();
            real[s + i][j] = h.imag();
            real[s + i][s + j] = h.real();
        }
    Inertia out;
    for (double ev : jacobi_eigenvalues(std::move(real))) {
        double a = std::abs(ev);
        if (a > tol / 10 && a < tol * 10)
            fail(ErrorKind::AmbiguousSign, "eigenvalue " + std::to_string(ev) + " too close to tolerance");
        if (ev > tol) ++out.pos;
        else if (ev < -tol) ++out.neg;
        else ++out.zero;
    }
    // The realification doubles every eigenvalue.
    out.pos /= 2;
    out.neg /= 2;
    out.zero /= 2;
    return out;
}

}  // namespace cyclorep
