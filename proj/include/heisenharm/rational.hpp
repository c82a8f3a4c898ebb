// Exact rational and Gaussian-rational arithmetic.
//
// Rational is an arbitrary-precision fraction kept in lowest terms with a
// positive denominator, so equality is structural. GaussianRational is the
// field Q(i) built on top of it; it is the coefficient type for all symbolic
// work in this library.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace heisenharm {

using BigInt = boost::multiprecision::cpp_int;

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long v) : num_(v), den_(1) {}
    Rational(BigInt v) : num_(std::move(v)), den_(1) {}
    Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
        canonicalize();
    }
    Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == 1 && den_ == 1; }
    bool is_integer() const { return den_ == 1; }
    int sgn() const { return num_.sign(); }

    friend Rational operator-(const Rational& a) {
        Rational r;
        r.num_ = -a.num_;
        r.den_ = a.den_;
        return r;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }

    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    // Serialized form is "p/q", or just "p" when q == 1.
    std::string str() const {
        std::string s = num_.str();
        if (den_ != 1) s += "/" + den_.str();
        return s;
    }

    double to_double() const {
        return num_.convert_to<double>() / den_.convert_to<double>();
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& q) {
        return os << q.str();
    }

private:
    void canonicalize() {
        if (num_.is_zero()) {
            den_ = 1;
            return;
        }
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        BigInt g = boost::multiprecision::gcd(num_, den_);
        if (g != 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    BigInt num_;
    BigInt den_;  // always > 0
};

inline Rational abs(const Rational& q) { return q.sgn() < 0 ? -q : q; }

inline Rational pow(const Rational& base, unsigned exp) {
    Rational r(1);
    Rational b = base;
    unsigned e = exp;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

/// Rising factorial (a)_n = a(a+1)...(a+n-1), with (a)_0 = 1.
inline Rational pochhammer(const Rational& a, unsigned n) {
    Rational r(1);
    for (unsigned j = 0; j < n; ++j) r *= a + Rational(static_cast<long long>(j));
    return r;
}

inline Rational factorial(unsigned n) {
    BigInt r = 1;
    for (unsigned j = 2; j <= n; ++j) r *= j;
    return Rational(r);
}

/// Generalized binomial coefficient x(x-1)...(x-v+1)/v!, defined for any
/// rational upper argument (including negative integers).
inline Rational gen_binomial(const Rational& x, unsigned v) {
    Rational r(1);
    for (unsigned j = 0; j < v; ++j) r *= x - Rational(static_cast<long long>(j));
    return r / factorial(v);
}

class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(Rational re) : re_(std::move(re)) {}
    GaussianRational(long long re) : re_(re) {}
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

    GaussianRational conj() const { return GaussianRational(re_, -im_); }

    Rational norm_sq() const { return re_ * re_ + im_ * im_; }

    friend GaussianRational operator-(const GaussianRational& a) {
        return GaussianRational(-a.re_, -a.im_);
    }
    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return GaussianRational(a.re_ + b.re_, a.im_ + b.im_);
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return GaussianRational(a.re_ - b.re_, a.im_ - b.im_);
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return GaussianRational(a.re_ * b.re_ - a.im_ * b.im_,
                                a.re_ * b.im_ + a.im_ * b.re_);
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        if (b.is_zero()) throw std::domain_error("GaussianRational: division by zero");
        Rational n = b.norm_sq();
        GaussianRational p = a * b.conj();
        return GaussianRational(p.re_ / n, p.im_ / n);
    }

    GaussianRational& operator+=(const GaussianRational& b) { return *this = *this + b; }
    GaussianRational& operator-=(const GaussianRational& b) { return *this = *this - b; }
    GaussianRational& operator*=(const GaussianRational& b) { return *this = *this * b; }
    GaussianRational& operator/=(const GaussianRational& b) { return *this = *this / b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) {
        return !(a == b);
    }

    std::complex<double> to_complex() const {
        return {re_.to_double(), im_.to_double()};
    }

    // Human-readable form, e.g. "3/2", "i", "1-2i". JSON output uses the
    // {"re": ..., "im": ...} record instead (see json_io).
    std::string str() const {
        if (im_.is_zero()) return re_.str();
        std::string s;
        if (!re_.is_zero()) s = re_.str() + (im_.sgn() > 0 ? "+" : "");
        if (im_ == Rational(1)) s += "i";
        else if (im_ == Rational(-1)) s += "-i";
        else s += im_.str() + "i";
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const GaussianRational& g) {
        return os << g.str();
    }

private:
    Rational re_;
    Rational im_;
};

inline GaussianRational pow(const GaussianRational& base, unsigned exp) {
    GaussianRational r(1);
    GaussianRational b = base;
    unsigned e = exp;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

/// Exact rank of a row matrix over Q(i) by Gauss-Jordan elimination.
inline int gaussian_elimination_rank(std::vector<std::vector<GaussianRational>> rows) {
    if (rows.empty()) return 0;
    const std::size_t ncols = rows.front().size();
    int rank = 0;
    std::size_t r = 0;
    for (std::size_t lead = 0; r < rows.size() && lead < ncols; ++lead) {
        std::size_t pivot = r;
        while (pivot < rows.size() && rows[pivot][lead].is_zero()) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[r], rows[pivot]);
        GaussianRational inv = GaussianRational(1) / rows[r][lead];
        for (std::size_t j = lead; j < ncols; ++j) rows[r][j] = inv * rows[r][j];
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][lead].is_zero()) continue;
            GaussianRational f = rows[i][lead];
            for (std::size_t j = lead; j < ncols; ++j)
                rows[i][j] = rows[i][j] - f * rows[r][j];
        }
        ++r;
        ++rank;
    }
    return rank;
}

}  // namespace heisenharm
