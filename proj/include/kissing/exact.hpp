#ifndef KISSING_EXACT_HPP
#define KISSING_EXACT_HPP

// Arbitrary-precision integers and reduced rationals on top of GMP.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace kissing {

using BigInt = mpz_class;

/// Exact rational number, always stored in lowest terms with a positive
/// denominator.
class BigRational {
public:
    BigRational() = default;
    BigRational(long value) : value_(value) {}
    BigRational(const BigInt& value) : value_(value) {}
    BigRational(const BigInt& num, const BigInt& den) {
        if (den == 0) {
            throw std::domain_error("BigRational: zero denominator");
        }
        value_ = mpq_class(num, den);
        value_.canonicalize();
    }

    /// Parses "p/q" or "p".
    static BigRational parse(std::string_view text) {
        const auto slash = text.find('/');
        try {
            if (slash == std::string_view::npos) {
                return BigRational(BigInt(std::string(text)));
            }
            return BigRational(BigInt(std::string(text.substr(0, slash))),
                               BigInt(std::string(text.substr(slash + 1))));
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("BigRational: malformed rational '" + std::string(text) + "'");
        }
    }

    BigInt numerator() const { return value_.get_num(); }
    BigInt denominator() const { return value_.get_den(); }
    int sign() const { return sgn(value_); }
    bool is_integer() const { return value_.get_den() == 1; }

    BigInt floor() const {
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
        return q;
    }
    BigInt ceil() const {
        BigInt q;
        mpz_cdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
        return q;
    }

    std::string str() const { return value_.get_str(); }
    double to_double() const { return value_.get_d(); }

    const mpq_class& raw() const { return value_; }

    BigRational& operator+=(const BigRational& o) { value_ += o.value_; return *this; }
    BigRational& operator-=(const BigRational& o) { value_ -= o.value_; return *this; }
    BigRational& operator*=(const BigRational& o) { value_ *= o.value_; return *this; }
    BigRational& operator/=(const BigRational& o) {
        if (o.value_ == 0) {
            throw std::domain_error("BigRational: division by zero");
        }
        value_ /= o.value_;
        return *this;
    }

    friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
    friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
    friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
    friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }
    friend BigRational operator-(const BigRational& a) { return from_raw(-a.value_); }

    friend bool operator==(const BigRational& a, const BigRational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const BigRational& r) { return os << r.str(); }

private:
    static BigRational from_raw(mpq_class v) {
        BigRational r;
        r.value_ = std::move(v);
        return r;
    }

    mpq_class value_;
};

inline BigInt abs_int(const BigInt& v) { return abs(v); }

inline BigInt gcd_int(const BigInt& a, const BigInt& b) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

/// a / b where b is known to divide a exactly.
inline BigInt exact_div(const BigInt& a, const BigInt& b) {
    BigInt q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline BigInt pow_int(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

/// Human-readable distance for a squared value: "1/sqrt(q)" when the
/// numerator is 1, otherwise "sqrt(p/q)".
inline std::string surd_from_squared(const BigRational& sq) {
    if (sq.sign() == 0) {
        return "0";
    }
    if (sq.numerator() == 1) {
        return "1/sqrt(" + sq.denominator().get_str() + ")";
    }
    return "sqrt(" + sq.str() + ")";
}

} // namespace kissing

#endif // KISSING_EXACT_HPP
