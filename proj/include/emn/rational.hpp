#ifndef EMN_RATIONAL_HPP
#define EMN_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace emn {

/// Exact rational number on 64-bit integers.
///
/// Every operation computes through 128-bit intermediates, reduces, and
/// throws std::overflow_error if the reduced value no longer fits in 64
/// bits. Several invariants of the embedding layer (Euler contributions,
/// the control-point threshold) require exact comparisons, so silent
/// wraparound or a fall-back to floating point would be a correctness bug,
/// not a precision issue.
class Rational {
public:
    constexpr Rational() : num_(0), den_(1) {}
    Rational(std::int64_t value) : num_(value), den_(1) {}

    Rational(std::int64_t num, std::int64_t den) {
        if (den == 0) throw std::domain_error("rational: zero denominator");
        norm_store(static_cast<__int128>(num), static_cast<__int128>(den));
    }

    std::int64_t num() const noexcept { return num_; }
    std::int64_t den() const noexcept { return den_; }

    friend Rational operator-(const Rational& x) {
        return Rational(safe(-static_cast<__int128>(x.num_)), x.den_);
    }

    friend Rational operator+(const Rational& x, const Rational& y) {
        return from128(i128(x.num_) * y.den_ + i128(y.num_) * x.den_,
                       i128(x.den_) * y.den_);
    }
    friend Rational operator-(const Rational& x, const Rational& y) {
        return from128(i128(x.num_) * y.den_ - i128(y.num_) * x.den_,
                       i128(x.den_) * y.den_);
    }
    friend Rational operator*(const Rational& x, const Rational& y) {
        return from128(i128(x.num_) * y.num_, i128(x.den_) * y.den_);
    }
    friend Rational operator/(const Rational& x, const Rational& y) {
        if (y.num_ == 0) throw std::domain_error("rational: division by zero");
        return from128(i128(x.num_) * y.den_, i128(x.den_) * y.num_);
    }

    Rational& operator+=(const Rational& x) { return *this = *this + x; }
    Rational& operator-=(const Rational& x) { return *this = *this - x; }
    Rational& operator*=(const Rational& x) { return *this = *this * x; }
    Rational& operator/=(const Rational& x) { return *this = *this / x; }

    // Cross multiplication in 128 bits cannot overflow, so comparisons never throw.
    friend bool operator==(const Rational& x, const Rational& y) {
        return x.num_ == y.num_ && x.den_ == y.den_;
    }
    friend bool operator!=(const Rational& x, const Rational& y) { return !(x == y); }
    friend bool operator<(const Rational& x, const Rational& y) {
        return i128(x.num_) * y.den_ < i128(y.num_) * x.den_;
    }
    friend bool operator>(const Rational& x, const Rational& y) { return y < x; }
    friend bool operator<=(const Rational& x, const Rational& y) { return !(y < x); }
    friend bool operator>=(const Rational& x, const Rational& y) { return !(x < y); }

    /// Largest integer <= value (floor division toward minus infinity).
    std::int64_t floor() const {
        std::int64_t q = num_ / den_;
        if (num_ % den_ != 0 && num_ < 0) --q;
        return q;
    }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& x) {
        return os << x.str();
    }

private:
    static __int128 i128(std::int64_t v) { return static_cast<__int128>(v); }

    static std::int64_t safe(__int128 v) {
        if (v > INT64_MAX || v < INT64_MIN)
            throw std::overflow_error("rational: value exceeds 64-bit range");
        return static_cast<std::int64_t>(v);
    }

    static Rational from128(__int128 num, __int128 den) {
        Rational r;
        r.norm_store(num, den);
        return r;
    }

    void norm_store(__int128 num, __int128 den) {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        __int128 a = num < 0 ? -num : num;
        __int128 b = den;
        while (b != 0) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        if (a != 0) {
            num /= a;
            den /= a;
        } else {
            den = 1; // num == 0
        }
        num_ = safe(num);
        den_ = safe(den);
    }

    std::int64_t num_;
    std::int64_t den_;
};

} // namespace emn

#endif
