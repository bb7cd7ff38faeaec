#pragma once

#include <cmath>
#include <complex>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>
#include <vector>

#include "cyclorep/errors.hpp"
#include "cyclorep/rational.hpp"

namespace cyclorep {

using Poly = std::vector<Rational>;  // lowest degree first

namespace poly {

inline void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

inline Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

inline Poly sub(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

/// Long division a = q*b + r. b must be nonzero.
inline std::pair<Poly, Poly> divmod(Poly a, Poly b) {
    trim(a);
    trim(b);
    if (b.empty()) fail(ErrorKind::DivisionByZero, "polynomial division by zero");
    const int db = degree(b);
    if (degree(a) < db) return {{}, a};
    Poly q(a.size() - b.size() + 1, Rational(0));
    const Rational lead = b.back();
    for (int k = degree(a); k >= db; --k) {
        if (a[k] == 0) continue;
        Rational c = a[k] / lead;
        q[k - db] = c;
        for (int j = 0; j <= db; ++j) a[k - db + j] -= c * b[j];
    }
    trim(q);
    trim(a);
    return {q, a};
}

}  // namespace poly

/// Phi_d by exact division of x^d - 1 by Phi_e for proper divisors e of d.
inline Poly cyclotomic_poly(int d) {
    if (d < 1) fail(ErrorKind::InvalidParameter, "cyclotomic_poly needs d >= 1");
    Poly num(d + 1, Rational(0));
    num[0] = -1;
    num[d] = 1;
    for (int e = 1; e < d; ++e) {
        if (d % e != 0) continue;
        auto [q, r] = poly::divmod(num, cyclotomic_poly(e));
        if (!r.empty()) fail(ErrorKind::InvalidParameter, "inexact cyclotomic division");
        num = q;
    }
    return num;
}

inline int euler_phi(int d) {
    int r = 0;
    for (int i = 1; i <= d; ++i)
        if (std::gcd(i, d) == 1) ++r;
    return r;
}

class CycloNum;

/// Per-d data for K_d = Q(zeta_d): Phi_d and reduced powers of zeta.
class Field {
public:
    static const Field& get(int d) {
        static std::mutex mu;
        static std::map<int, std::unique_ptr<Field>> registry;
        if (d < 1) fail(ErrorKind::InvalidParameter, "field modulus must be >= 1");
        std::lock_guard<std::mutex> lock(mu);
        auto& slot = registry[d];
        if (!slot) slot.reset(new Field(d));
        return *slot;
    }

    int d() const { return d_; }
    int phi() const { return phi_; }
    const Poly& modulus() const { return modulus_; }
    /// Coefficients of zeta^s reduced mod Phi_d, 0 <= s < d.
    const Poly& zeta_pow(int s) const { return powers_[((s % d_) + d_) % d_]; }

    /// Reduce a polynomial of any degree into the power basis (length phi).
    Poly reduce(Poly p) const {
        for (int k = static_cast<int>(p.size()) - 1; k >= phi_; --k) {
            if (p[k] == 0) continue;
            Rational c = p[k];
            for (int j = 0; j <= phi_; ++j) p[k - phi_ + j] -= c * modulus_[j];
        }
        p.resize(phi_, Rational(0));
        return p;
    }

private:
    explicit Field(int d) : d_(d), phi_(euler_phi(d)), modulus_(cyclotomic_poly(d)) {
        powers_.reserve(d);
        for (int s = 0; s < d; ++s) {
            Poly x(s + 1, Rational(0));
            x[s] = 1;
            powers_.push_back(reduce(std::move(x)));
        }
    }

    int d_;
    int phi_;
    Poly modulus_;
    std::vector<Poly> powers_;
};

/// Element of K_d in the power basis 1, zeta, ..., zeta^{phi-1}.
class CycloNum {
public:
    CycloNum() : CycloNum(Field::get(1)) {}
    explicit CycloNum(const Field& f) : f_(&f), c_(f.phi(), Rational(0)) {}
    CycloNum(const Field& f, const Rational& r) : CycloNum(f) { c_[0] = r; }
    CycloNum(const Field& f, Poly coeffs) : f_(&f), c_(f.reduce(std::move(coeffs))) {}

    static CycloNum zero(int d) { return CycloNum(Field::get(d)); }
    static CycloNum one(int d) { return CycloNum(Field::get(d), Rational(1)); }
    static CycloNum rational(int d, const Rational& r) { return CycloNum(Field::get(d), r); }
    static CycloNum zeta_pow(int d, long long s) {
        const Field& f = Field::get(d);
        CycloNum z(f);
        z.c_ = f.zeta_pow(static_cast<int>(((s % d) + d) % d));
        return z;
    }

    const Field& field() const { return *f_; }
    int d() const { return f_->d(); }
    const Poly& coeffs() const { return c_; }

    bool is_zero() const {
        for (const auto& x : c_)
            if (x != 0) return false;
        return true;
    }

    /// True when the value lies in Q.
    bool is_rational() const {
        for (std::size_t i = 1; i < c_.size(); ++i)
            if (c_[i] != 0) return false;
        return true;
    }

    CycloNum& operator+=(const CycloNum& o) {
        check(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    CycloNum& operator-=(const CycloNum& o) {
        check(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    CycloNum& operator*=(const CycloNum& o) {
        check(o);
        c_ = f_->reduce(poly::mul(c_, o.c_));
        return *this;
    }
    CycloNum& operator*=(const Rational& r) {
        for (auto& x : c_) x *= r;
        return *this;
    }
    CycloNum& operator/=(const CycloNum& o) { return *this *= o.inverse(); }

    friend CycloNum operator+(CycloNum a, const CycloNum& b) { return a += b; }
    friend CycloNum operator-(CycloNum a, const CycloNum& b) { return a -= b; }
    friend CycloNum operator*(CycloNum a, const CycloNum& b) { return a *= b; }
    friend CycloNum operator*(CycloNum a, const Rational& r) { return a *= r; }
    friend CycloNum operator*(const Rational& r, CycloNum a) { return a *= r; }
    friend CycloNum operator/(CycloNum a, const CycloNum& b) { return a /= b; }
    CycloNum operator-() const {
        CycloNum r(*this);
        for (auto& x : r.c_) x = -x;
        return r;
    }

    friend bool operator==(const CycloNum& a, const CycloNum& b) {
        a.check(b);
        return a.c_ == b.c_;
    }
    friend bool operator!=(const CycloNum& a, const CycloNum& b) { return !(a == b); }

    /// Inverse by extended Euclid against Phi_d.
    CycloNum inverse() const {
        if (is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero");
        Poly r0 = f_->modulus(), r1 = c_;
        poly::trim(r1);
        Poly s0, s1{Rational(1)};
        while (!r1.empty()) {
            auto [q, r] = poly::divmod(r0, r1);
            Poly s2 = poly::sub(s0, poly::mul(q, s1));
            r0 = std::move(r1);
            r1 = std::move(r);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        // r0 is a nonzero constant because Phi_d is irreducible.
        Rational g = r0[0];
        for (auto& x : s0) x /= g;
        return CycloNum(*f_, std::move(s0));
    }

    /// zeta -> zeta^t, gcd(t, d) = 1.
    CycloNum galois(long long t) const {
        const int d = f_->d();
        long long tm = ((t % d) + d) % d;
        if (std::gcd<long long>(tm, d) != 1) fail(ErrorKind::NotCoprime, "galois exponent not coprime to d");
        CycloNum r(*f_);
        for (int j = 0; j < f_->phi(); ++j) {
            if (c_[j] == 0) continue;
            const Poly& z = f_->zeta_pow(static_cast<int>((j * tm) % d));
            for (int i = 0; i < f_->phi(); ++i) r.c_[i] += c_[j] * z[i];
        }
        return r;
    }

    /// Complex conjugation, zeta -> zeta^{d-1}.
    CycloNum conj() const { return galois(f_->d() - 1); }

    bool is_real() const { return *this == conj(); }

    /// Fixed embedding zeta -> exp(-2 pi i / d).
    std::complex<double> embed() const {
        std::complex<double> s = 0;
        const double th = -2.0 * M_PI / f_->d();
        for (int j = 0; j < f_->phi(); ++j) {
            if (c_[j] == 0) continue;
            s += c_[j].get_d() * std::polar(1.0, th * j);
        }
        return s;
    }

    /// Human-readable polynomial in z.
    std::string to_string() const {
        std::string out;
        for (int j = 0; j < f_->phi(); ++j) {
            if (c_[j] == 0) continue;
            Rational a = abs(c_[j]);
            bool neg = c_[j] < 0;
            if (out.empty()) out += neg ? "-" : "";
            else out += neg ? " - " : " + ";
            std::string mono = j == 0 ? "" : (j == 1 ? "z" : "z^" + std::to_string(j));
            if (mono.empty()) out += a.get_str();
            else if (a == 1) out += mono;
            else out += a.get_str() + "*" + mono;
        }
        return out.empty() ? "0" : out;
    }

private:
    void check(const CycloNum& o) const {
        if (f_ != o.f_)
            fail(ErrorKind::ModulusMismatch,
                 "K_" + std::to_string(f_->d()) + " vs K_" + std::to_string(o.f_->d()));
    }

    const Field* f_;
    Poly c_;
};

/// Order of zeta_d^s, i.e. d / gcd(d, s mod d).
inline int order_of_power(int d, long long s) {
    long long r = ((s % d) + d) % d;
    return static_cast<int>(d / std::gcd<long long>(d, r));
}

/// Least s >= 1 with z^s = 1, searched up to `bound`; 0 if none.
inline int multiplicative_order(const CycloNum& z, int bound) {
    CycloNum one = CycloNum::one(z.d());
    CycloNum p = z;
    for (int s = 1; s <= bound; ++s) {
        if (p == one) return s;
        p *= z;
    }
    return 0;
}

}  // namespace cyclorep
