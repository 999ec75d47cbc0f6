#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace treeconn {

// Exact rational over 64-bit integers, always normalized with a positive
// denominator. Comparisons cross-multiply in 128 bits. Condition evaluation
// never leaves this type, so no floating point enters any verdict.
class Rational {
public:
    constexpr Rational() = default;
    constexpr Rational(long long n) : num_(n) {}  // implicit: ints mix freely
    constexpr Rational(int n) : num_(n) {}
    constexpr Rational(long long n, long long d) : num_(n), den_(d) {
        if (den_ == 0) throw std::domain_error("rational with zero denominator");
        normalize();
    }

    constexpr long long numerator() const { return num_; }
    constexpr long long denominator() const { return den_; }

    constexpr Rational operator-() const { return Rational(-num_, den_); }

    constexpr Rational& operator+=(const Rational& o) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    constexpr Rational& operator-=(const Rational& o) { return *this += -o; }
    constexpr Rational& operator*=(const Rational& o) {
        num_ *= o.num_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    constexpr Rational& operator/=(const Rational& o) {
        if (o.num_ == 0) throw std::domain_error("rational division by zero");
        num_ *= o.den_;
        den_ *= o.num_;
        normalize();
        return *this;
    }

    friend constexpr Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend constexpr Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend constexpr Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend constexpr Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend constexpr bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend constexpr std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
        __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
        return lhs < rhs ? std::strong_ordering::less
                         : (lhs > rhs ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    long long num_ = 0;
    long long den_ = 1;

    constexpr void normalize() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0) den_ = 1;
    }
};

}  // namespace treeconn
