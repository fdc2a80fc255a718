#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace pbias {

// Exact rational number. Values that fit in 64-bit numerator/denominator
// are kept inline; anything larger is carried by a shared GMP rational.
// Both representations are canonical (lowest terms, positive denominator),
// and a value is stored inline whenever it fits.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t n) { // NOLINT(google-explicit-constructor)
        if (n == INT64_MIN) *this = from_i128(n, 1);
        else n_ = n;
    }
    Rational(std::int64_t num, std::int64_t den);

    static Rational from_mpq(const mpq_class& q);
    // Accepts "p/q", integers and plain decimals ("0.01"). Throws
    // std::invalid_argument on anything else.
    static Rational parse(std::string_view text);

    mpq_class to_mpq() const;
    double to_double() const;
    std::string str() const;

    int sign() const { return big_ ? sgn(*big_) : (n_ > 0) - (n_ < 0); }
    bool is_zero() const { return !big_ && n_ == 0; }
    bool is_integer() const { return big_ ? big_->get_den() == 1 : d_ == 1; }
    bool is_small() const { return !big_; }
    // Numerator / denominator as decimal strings.
    std::string numerator() const;
    std::string denominator() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        std::int64_t s;
        if (!a.big_ && !b.big_ && a.d_ == 1 && b.d_ == 1 && !__builtin_add_overflow(a.n_, b.n_, &s) &&
            s != INT64_MIN) {
            Rational r;
            r.n_ = s;
            return r;
        }
        return add_general(a, b);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        std::int64_t s;
        if (!a.big_ && !b.big_ && a.d_ == 1 && b.d_ == 1 && !__builtin_sub_overflow(a.n_, b.n_, &s) &&
            s != INT64_MIN) {
            Rational r;
            r.n_ = s;
            return r;
        }
        return sub_general(a, b);
    }
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);

    friend bool operator==(const Rational& a, const Rational& b) {
        if (!a.big_ && !b.big_) return a.n_ == b.n_ && a.d_ == b.d_;
        if (a.big_ && b.big_) return *a.big_ == *b.big_;
        return false; // canonical: a value that fits is never stored big
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        if (!a.big_ && !b.big_) {
            __int128 l = static_cast<__int128>(a.n_) * b.d_;
            __int128 r = static_cast<__int128>(b.n_) * a.d_;
            return l <=> r;
        }
        return slow_compare(a, b);
    }

    std::size_t hash() const;

    static Rational pow(const Rational& base, int exponent);
    static Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

private:
    static std::strong_ordering slow_compare(const Rational& a, const Rational& b);
    static Rational from_i128(__int128 num, __int128 den);
    static Rational add_general(const Rational& a, const Rational& b);
    static Rational sub_general(const Rational& a, const Rational& b);

    std::int64_t n_ = 0;
    std::int64_t d_ = 1;
    std::shared_ptr<const mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

} // namespace pbias

template <>
struct std::hash<pbias::Rational> {
    std::size_t operator()(const pbias::Rational& q) const noexcept { return q.hash(); }
};
