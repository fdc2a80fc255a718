#include "pbias/rational.hpp"

#include <cctype>
#include <cmath>
#include <functional>
#include <ostream>
#include <stdexcept>

namespace pbias {

namespace {

constexpr __int128 kMax = INT64_MAX;
constexpr __int128 kMin = -static_cast<__int128>(INT64_MAX); // INT64_MIN kept out of the inline range

unsigned __int128 gcd_u128(unsigned __int128 a, unsigned __int128 b) {
    while (b != 0) {
        unsigned __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
    while (b != 0) {
        std::uint64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::uint64_t uabs(std::int64_t x) {
    return x < 0 ? static_cast<std::uint64_t>(0) - static_cast<std::uint64_t>(x)
                 : static_cast<std::uint64_t>(x);
}

mpz_class to_mpz(__int128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(0) - static_cast<unsigned __int128>(v)
                              : static_cast<unsigned __int128>(v);
    mpz_class hi(static_cast<unsigned long>(u >> 64));
    mpz_class lo(static_cast<unsigned long>(u & 0xffffffffffffffffULL));
    mpz_class r = (hi << 64) + lo;
    return neg ? mpz_class(-r) : r;
}

} // namespace

Rational Rational::from_i128(__int128 num, __int128 den) {
    if (den == 0) throw std::domain_error("division by zero");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    if (num >= kMin && num <= kMax && den <= kMax) {
        std::uint64_t g = gcd_u64(uabs(static_cast<std::int64_t>(num)), static_cast<std::uint64_t>(den));
        Rational r;
        r.n_ = static_cast<std::int64_t>(num) / static_cast<std::int64_t>(g);
        r.d_ = r.n_ == 0 ? 1 : static_cast<std::int64_t>(den) / static_cast<std::int64_t>(g);
        return r;
    }
    unsigned __int128 un = num < 0 ? static_cast<unsigned __int128>(-num)
                                   : static_cast<unsigned __int128>(num);
    unsigned __int128 g = gcd_u128(un, static_cast<unsigned __int128>(den));
    if (g > 1) {
        num /= static_cast<__int128>(g);
        den /= static_cast<__int128>(g);
    }
    if (num == 0) den = 1;
    Rational r;
    if (num >= kMin && num <= kMax && den <= kMax) {
        r.n_ = static_cast<std::int64_t>(num);
        r.d_ = static_cast<std::int64_t>(den);
        return r;
    }
    mpq_class q(to_mpz(num), to_mpz(den));
    r.big_ = std::make_shared<const mpq_class>(std::move(q));
    return r;
}

Rational::Rational(std::int64_t num, std::int64_t den) { *this = from_i128(num, den); }

Rational Rational::from_mpq(const mpq_class& q0) {
    mpq_class q(q0);
    q.canonicalize();
    Rational r;
    const mpz_class& num = q.get_num();
    const mpz_class& den = q.get_den();
    if (num.fits_slong_p() && den.fits_slong_p() && num.get_si() != INT64_MIN) {
        r.n_ = num.get_si();
        r.d_ = den.get_si();
        return r;
    }
    r.big_ = std::make_shared<const mpq_class>(std::move(q));
    return r;
}

mpq_class Rational::to_mpq() const {
    if (big_) return *big_;
    return mpq_class(mpz_class(static_cast<long>(n_)), mpz_class(static_cast<long>(d_)));
}

double Rational::to_double() const {
    if (big_) return big_->get_d();
    return static_cast<double>(n_) / static_cast<double>(d_);
}

std::string Rational::str() const {
    if (big_) return big_->get_str();
    if (d_ == 1) return std::to_string(n_);
    return std::to_string(n_) + "/" + std::to_string(d_);
}

std::string Rational::numerator() const {
    return big_ ? big_->get_num().get_str() : std::to_string(n_);
}

std::string Rational::denominator() const {
    return big_ ? big_->get_den().get_str() : std::to_string(d_);
}

Rational Rational::parse(std::string_view text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    auto bad = [&] { return std::invalid_argument("not a rational: '" + std::string(text) + "'"); };
    if (s.empty()) throw bad();
    auto digits_only = [](std::string_view v, bool allow_sign) {
        std::size_t i = 0;
        if (allow_sign && !v.empty() && (v[0] == '-' || v[0] == '+')) i = 1;
        if (i == v.size()) return false;
        for (; i < v.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(v[i]))) return false;
        return true;
    };
    auto strip_plus = [](std::string v) { return (!v.empty() && v[0] == '+') ? v.substr(1) : v; };
    if (auto slash = s.find('/'); slash != std::string::npos) {
        std::string a = s.substr(0, slash), b = s.substr(slash + 1);
        if (!digits_only(a, true) || !digits_only(b, false)) throw bad();
        mpz_class den(b);
        if (den == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
        return from_mpq(mpq_class(mpz_class(strip_plus(a)), den));
    }
    if (auto dot = s.find('.'); dot != std::string::npos) {
        std::string a = s.substr(0, dot), b = s.substr(dot + 1);
        bool neg = !a.empty() && a[0] == '-';
        if (!a.empty() && (a[0] == '-' || a[0] == '+')) a = a.substr(1);
        if (a.empty()) a = "0";
        if (b.empty() || !digits_only(a, false) || !digits_only(b, false)) throw bad();
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, b.size());
        mpz_class num = mpz_class(a) * scale + mpz_class(b);
        if (neg) num = -num;
        return from_mpq(mpq_class(num, scale));
    }
    if (!digits_only(s, true)) throw bad();
    return from_mpq(mpq_class(mpz_class(strip_plus(s))));
}

Rational Rational::operator-() const {
    if (!big_) {
        Rational r;
        r.n_ = -n_; // n_ never equals INT64_MIN
        r.d_ = d_;
        return r;
    }
    return from_mpq(-*big_);
}

Rational Rational::add_general(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        if (a.d_ == 1 && b.d_ == 1) {
            __int128 s = static_cast<__int128>(a.n_) + b.n_;
            if (s >= kMin && s <= kMax) {
                Rational r;
                r.n_ = static_cast<std::int64_t>(s);
                return r;
            }
        }
        if (a.d_ == b.d_)
            return Rational::from_i128(static_cast<__int128>(a.n_) + b.n_, a.d_);
        return Rational::from_i128(static_cast<__int128>(a.n_) * b.d_ + static_cast<__int128>(b.n_) * a.d_,
                                   static_cast<__int128>(a.d_) * b.d_);
    }
    return Rational::from_mpq(a.to_mpq() + b.to_mpq());
}

Rational Rational::sub_general(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        if (a.d_ == 1 && b.d_ == 1) {
            __int128 s = static_cast<__int128>(a.n_) - b.n_;
            if (s >= kMin && s <= kMax) {
                Rational r;
                r.n_ = static_cast<std::int64_t>(s);
                return r;
            }
        }
        if (a.d_ == b.d_)
            return Rational::from_i128(static_cast<__int128>(a.n_) - b.n_, a.d_);
        return Rational::from_i128(static_cast<__int128>(a.n_) * b.d_ - static_cast<__int128>(b.n_) * a.d_,
                                   static_cast<__int128>(a.d_) * b.d_);
    }
    return Rational::from_mpq(a.to_mpq() - b.to_mpq());
}

Rational operator*(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        if (a.n_ == 0 || b.n_ == 0) return Rational();
        // cross-reduce so the products are already in lowest terms
        std::int64_t g1 = static_cast<std::int64_t>(gcd_u64(uabs(a.n_), static_cast<std::uint64_t>(b.d_)));
        std::int64_t g2 = static_cast<std::int64_t>(gcd_u64(uabs(b.n_), static_cast<std::uint64_t>(a.d_)));
        __int128 num = static_cast<__int128>(a.n_ / g1) * (b.n_ / g2);
        __int128 den = static_cast<__int128>(a.d_ / g2) * (b.d_ / g1);
        if (num >= kMin && num <= kMax && den <= kMax) {
            Rational r;
            r.n_ = static_cast<std::int64_t>(num);
            r.d_ = static_cast<std::int64_t>(den);
            return r;
        }
        return Rational::from_i128(num, den);
    }
    return Rational::from_mpq(a.to_mpq() * b.to_mpq());
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("division by zero");
    if (!b.big_) {
        Rational inv;
        inv.n_ = b.n_ < 0 ? -b.d_ : b.d_;
        inv.d_ = b.n_ < 0 ? -b.n_ : b.n_;
        return a * inv;
    }
    return Rational::from_mpq(a.to_mpq() / b.to_mpq());
}

std::strong_ordering Rational::slow_compare(const Rational& a, const Rational& b) {
    int c = cmp(a.to_mpq(), b.to_mpq());
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::size_t Rational::hash() const {
    if (big_) return std::hash<std::string>{}(big_->get_str());
    return std::hash<std::int64_t>{}(n_) * 31u + std::hash<std::int64_t>{}(d_);
}

Rational Rational::pow(const Rational& base, int exponent) {
    if (exponent < 0) return Rational(1) / pow(base, -exponent);
    Rational result(1), b = base;
    while (exponent > 0) {
        if (exponent & 1) result *= b;
        b *= b;
        exponent >>= 1;
    }
    return result;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

} // namespace pbias
