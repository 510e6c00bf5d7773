#ifndef KISSING_POLY_HPP
#define KISSING_POLY_HPP

// Univariate polynomials in k with integer coefficients, Sturm-sequence
// real-root isolation, and the exact sign decisions built on it.

#include "certificate.hpp"
#include "exact.hpp"

#include <algorithm>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kissing {

class IntPoly {
public:
    IntPoly() = default;

    /// Coefficients from low to high degree; trailing zeros are dropped.
    explicit IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { normalize(); }
    IntPoly(std::initializer_list<long> coeffs) {
        c_.reserve(coeffs.size());
        for (long v : coeffs) {
            c_.emplace_back(v);
        }
        normalize();
    }

    static IntPoly constant(const BigInt& v) { return IntPoly(std::vector<BigInt>{v}); }
    /// The polynomial a + b*k.
    static IntPoly affine(const BigInt& a, const BigInt& b) { return IntPoly(std::vector<BigInt>{a, b}); }
    static IntPoly variable() { return affine(0, 1); }

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<BigInt>& coefficients() const { return c_; }

    BigInt coeff(std::size_t i) const { return i < c_.size() ? c_[i] : BigInt(0); }
    const BigInt& leading() const {
        if (c_.empty()) {
            throw std::domain_error("IntPoly: zero polynomial has no leading coefficient");
        }
        return c_.back();
    }

    BigInt eval(const BigInt& k) const {
        BigInt acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            acc = acc * k + *it;
        }
        return acc;
    }

    BigRational eval(const BigRational& k) const {
        if (k.is_integer()) {
            return BigRational(eval(k.numerator()));
        }
        // sum c_i p^i q^(n-i), divided by q^n
        const BigInt p = k.numerator();
        const BigInt q = k.denominator();
        BigInt acc = 0;
        BigInt qpow = 1;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            acc = acc * p + *it * qpow;
            qpow *= q;
        }
        if (c_.empty()) {
            return BigRational(0);
        }
        return BigRational(acc, pow_int(q, static_cast<unsigned long>(degree())));
    }

    /// Sign of p(k) without forming the rational value.
    int sign_at(const BigRational& k) const {
        const BigInt p = k.numerator();
        const BigInt q = k.denominator();
        BigInt acc = 0;
        BigInt qpow = 1;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            acc = acc * p + *it * qpow;
            qpow *= q;
        }
        return sgn(acc);
    }

    IntPoly derivative() const {
        std::vector<BigInt> d;
        for (std::size_t i = 1; i < c_.size(); ++i) {
            d.push_back(c_[i] * static_cast<unsigned long>(i));
        }
        return IntPoly(std::move(d));
    }

    /// gcd of the coefficients, positive; 0 for the zero polynomial.
    BigInt content() const {
        BigInt g = 0;
        for (const auto& v : c_) {
            g = gcd_int(g, v);
        }
        return g;
    }

    /// Divided by its content, with positive leading coefficient.
    IntPoly primitive_part() const {
        if (is_zero()) {
            return {};
        }
        BigInt g = content();
        if (c_.back() < 0) {
            g = -g;
        }
        std::vector<BigInt> out;
        out.reserve(c_.size());
        for (const auto& v : c_) {
            out.push_back(exact_div(v, g));
        }
        return IntPoly(std::move(out));
    }

    IntPoly& operator+=(const IntPoly& o) {
        if (o.c_.size() > c_.size()) {
            c_.resize(o.c_.size());
        }
        for (std::size_t i = 0; i < o.c_.size(); ++i) {
            c_[i] += o.c_[i];
        }
        normalize();
        return *this;
    }
    IntPoly& operator-=(const IntPoly& o) {
        if (o.c_.size() > c_.size()) {
            c_.resize(o.c_.size());
        }
        for (std::size_t i = 0; i < o.c_.size(); ++i) {
            c_[i] -= o.c_[i];
        }
        normalize();
        return *this;
    }
    IntPoly& operator*=(const BigInt& s) {
        for (auto& v : c_) {
            v *= s;
        }
        normalize();
        return *this;
    }

    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator-(IntPoly a) {
        for (auto& v : a.c_) {
            v = -v;
        }
        return a;
    }
    friend IntPoly operator*(IntPoly a, const BigInt& s) { return a *= s; }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
        if (a.is_zero() || b.is_zero()) {
            return {};
        }
        std::vector<BigInt> out(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                out[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return IntPoly(std::move(out));
    }

    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

    /// e.g. "8k^4 - 24k^3 + 40k^2 - 28k + 10".
    std::string str(char var = 'k') const {
        if (c_.empty()) {
            return "0";
        }
        std::ostringstream os;
        bool first = true;
        for (int i = degree(); i >= 0; --i) {
            const BigInt& v = c_[static_cast<std::size_t>(i)];
            if (v == 0) {
                continue;
            }
            BigInt mag = abs(v);
            if (first) {
                if (v < 0) {
                    os << '-';
                }
            } else {
                os << (v < 0 ? " - " : " + ");
            }
            first = false;
            if (mag != 1 || i == 0) {
                os << mag.get_str();
            }
            if (i >= 1) {
                os << var;
            }
            if (i >= 2) {
                os << '^' << i;
            }
        }
        return os.str();
    }

private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) {
            c_.pop_back();
        }
    }

    std::vector<BigInt> c_;
};

namespace detail {

// Remainder of |lc(b)|^(deg a - deg b + 1) * a modulo b, computed over the
// integers. The positive multiplier keeps the sign structure Sturm chains
// rely on.
inline IntPoly scaled_remainder(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) {
        throw std::domain_error("IntPoly: division by zero polynomial");
    }
    if (a.degree() < b.degree()) {
        return a;
    }
    const BigInt lc = abs(b.leading());
    std::vector<BigInt> r = a.coefficients();
    const int db = b.degree();
    const auto& bc = b.coefficients();
    for (int d = a.degree(); d >= db; --d) {
        // r <- |lc| * r - sgn(lc) * r_d * x^(d-db) * b
        const BigInt top = r[static_cast<std::size_t>(d)];
        for (auto& v : r) {
            v *= lc;
        }
        if (top != 0) {
            const BigInt factor = b.leading() < 0 ? BigInt(-top) : top;
            for (int j = 0; j <= db; ++j) {
                r[static_cast<std::size_t>(d - db + j)] -= factor * bc[static_cast<std::size_t>(j)];
            }
        }
        r.pop_back();
    }
    return IntPoly(std::move(r));
}

/// Exact quotient a / b where b divides a in Z[k].
inline IntPoly exact_quotient(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) {
        throw std::domain_error("IntPoly: division by zero polynomial");
    }
    if (a.is_zero()) {
        return {};
    }
    std::vector<BigInt> r = a.coefficients();
    const int db = b.degree();
    const auto& bc = b.coefficients();
    std::vector<BigInt> q(static_cast<std::size_t>(std::max(a.degree() - db + 1, 0)));
    for (int d = a.degree(); d >= db; --d) {
        const BigInt& top = r[static_cast<std::size_t>(d)];
        if (top == 0) {
            continue;
        }
        if (!mpz_divisible_p(top.get_mpz_t(), b.leading().get_mpz_t())) {
            throw std::domain_error("IntPoly: inexact polynomial division");
        }
        const BigInt t = exact_div(top, b.leading());
        q[static_cast<std::size_t>(d - db)] = t;
        for (int j = 0; j <= db; ++j) {
            r[static_cast<std::size_t>(d - db + j)] -= t * bc[static_cast<std::size_t>(j)];
        }
    }
    for (int j = 0; j < db && j <= a.degree(); ++j) {
        if (r[static_cast<std::size_t>(j)] != 0) {
            throw std::domain_error("IntPoly: inexact polynomial division");
        }
    }
    return IntPoly(std::move(q));
}

/// p divided by its (positive) content; signs are preserved.
inline IntPoly divide_content(const IntPoly& p) {
    if (p.is_zero()) {
        return p;
    }
    const BigInt g = p.content();
    std::vector<BigInt> out;
    out.reserve(p.coefficients().size());
    for (const auto& v : p.coefficients()) {
        out.push_back(exact_div(v, g));
    }
    return IntPoly(std::move(out));
}

} // namespace detail

/// Primitive gcd with positive leading coefficient (0 if both are zero).
inline IntPoly poly_gcd(IntPoly a, IntPoly b) {
    a = a.primitive_part();
    b = b.primitive_part();
    while (!b.is_zero()) {
        IntPoly r = detail::scaled_remainder(a, b).primitive_part();
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

/// Primitive polynomial with the same distinct roots as p, each simple.
inline IntPoly square_free_part(const IntPoly& p) {
    if (p.is_zero()) {
        throw std::domain_error("square_free_part: zero polynomial");
    }
    if (p.degree() <= 0) {
        return p.primitive_part();
    }
    const IntPoly g = poly_gcd(p, p.derivative());
    return detail::exact_quotient(p.primitive_part(), g).primitive_part();
}

/// Sturm chain p, p', -rem, ... with every member reduced to its primitive
/// part (positive rescaling only).
class SturmSequence {
public:
    explicit SturmSequence(const IntPoly& p) {
        if (p.is_zero()) {
            throw std::domain_error("SturmSequence: zero polynomial");
        }
        chain_.push_back(p);
        IntPoly next = p.derivative();
        while (!next.is_zero()) {
            chain_.push_back(detail::divide_content(next));
            const auto n = chain_.size();
            next = -detail::scaled_remainder(chain_[n - 2], chain_[n - 1]);
        }
    }

    const std::vector<IntPoly>& chain() const { return chain_; }

    /// Sign changes along the chain at x, zeros skipped.
    int variations_at(const BigRational& x) const {
        int changes = 0;
        int last = 0;
        for (const auto& q : chain_) {
            const int s = q.sign_at(x);
            if (s == 0) {
                continue;
            }
            if (last != 0 && s != last) {
                ++changes;
            }
            last = s;
        }
        return changes;
    }

    /// Distinct roots in the half-open interval (lo, hi].
    int count_in(const BigRational& lo, const BigRational& hi) const {
        return variations_at(lo) - variations_at(hi);
    }

    int variations_at_infinity(bool positive) const {
        int changes = 0;
        int last = 0;
        for (const auto& q : chain_) {
            int s = sgn(q.leading());
            if (!positive && q.degree() % 2 == 1) {
                s = -s;
            }
            if (last != 0 && s != last) {
                ++changes;
            }
            last = s;
        }
        return changes;
    }

    int total_real_roots() const { return variations_at_infinity(false) - variations_at_infinity(true); }

private:
    std::vector<IntPoly> chain_;
};

/// Either an exact rational root (lo == hi) or an open interval (lo, hi)
/// holding exactly one root, with neither endpoint a root.
struct RootInterval {
    BigRational lo;
    BigRational hi;

    bool exact() const { return lo == hi; }
    bool contains(const BigRational& x) const { return exact() ? x == lo : (lo < x && x < hi); }
    std::string str() const { return exact() ? "{" + lo.str() + "}" : "(" + lo.str() + ", " + hi.str() + ")"; }
    friend bool operator==(const RootInterval&, const RootInterval&) = default;
};

struct RootIsolation {
    std::vector<RootInterval> intervals;  // ascending, pairwise disjoint
    bool multiplicity_free = true;        // input had no repeated roots
};

/// Root isolation bound to one polynomial; the square-free part and its
/// Sturm chain are computed once.
class RootIsolator {
public:
    explicit RootIsolator(const IntPoly& p)
        : original_(check_nonzero(p)), square_free_(square_free_part(original_)), sturm_(square_free_) {}

    const IntPoly& square_free() const { return square_free_; }
    const SturmSequence& sturm() const { return sturm_; }
    bool multiplicity_free() const { return square_free_.degree() == original_.degree(); }

    /// Every root lies strictly inside (-B, B).
    BigInt root_bound() const {
        const BigInt lead = abs(square_free_.leading());
        BigInt m = 0;
        for (int i = 0; i < square_free_.degree(); ++i) {
            m = std::max(m, BigInt(abs(square_free_.coeff(static_cast<std::size_t>(i)))));
        }
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), m.get_mpz_t(), lead.get_mpz_t());
        return q + 2;
    }

    RootIsolation isolate(const BigRational& max_width = BigRational(1)) const {
        RootIsolation out;
        out.multiplicity_free = multiplicity_free();
        if (square_free_.degree() <= 0) {
            return out;
        }
        const BigRational bound(root_bound());
        split(-bound, bound, sturm_.count_in(-bound, bound), max_width, out.intervals);
        return out;
    }

    /// Replaces an interval whose closure contains `point` by one that
    /// lies entirely on one side of it, or by the exact root `point`.
    RootInterval separate(RootInterval iv, const BigRational& point) const {
        if (iv.exact()) {
            return iv;
        }
        if (iv.lo < point && point < iv.hi) {
            if (square_free_.sign_at(point) == 0) {
                return {point, point};
            }
            if (sturm_.count_in(iv.lo, point) == 1) {
                iv.hi = point;
            } else {
                iv.lo = point;
            }
        }
        while (iv.hi == point || iv.lo == point) {
            const BigRational mid = midpoint(iv.lo, iv.hi);
            if (square_free_.sign_at(mid) == 0) {
                return {mid, mid};
            }
            if (sturm_.count_in(iv.lo, mid) == 1) {
                iv.hi = mid;
            } else {
                iv.lo = mid;
            }
        }
        return iv;
    }

private:
    static const IntPoly& check_nonzero(const IntPoly& p) {
        if (p.is_zero()) {
            throw std::domain_error("isolate_real_roots: zero polynomial (all reals are roots)");
        }
        return p;
    }

    static BigRational midpoint(const BigRational& a, const BigRational& b) {
        return (a + b) / BigRational(2);
    }

    // Roots in (lo, hi], `count` of them, appended in ascending order.
    void split(const BigRational& lo, const BigRational& hi, int count, const BigRational& max_width,
               std::vector<RootInterval>& out) const {
        if (count == 0) {
            return;
        }
        if (count == 1 && hi - lo <= max_width) {
            finish(lo, hi, out);
            return;
        }
        const BigRational mid = midpoint(lo, hi);
        const int left = sturm_.count_in(lo, mid);
        split(lo, mid, left, max_width, out);
        split(mid, hi, count - left, max_width, out);
    }

    void finish(BigRational lo, BigRational hi, std::vector<RootInterval>& out) const {
        for (;;) {
            if (square_free_.sign_at(hi) == 0) {
                out.push_back({hi, hi});
                return;
            }
            if (square_free_.sign_at(lo) != 0) {
                out.push_back({lo, hi});
                return;
            }
            const BigRational mid = midpoint(lo, hi);
            if (sturm_.count_in(mid, hi) == 1) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
    }

    IntPoly original_;
    IntPoly square_free_;
    SturmSequence sturm_;
};

/// Disjoint ascending intervals, one per distinct real root, each of width
/// at most 1.
inline RootIsolation isolate_real_roots(const IntPoly& p) { return RootIsolator(p).isolate(); }

struct PositivityCertificate {
    Certificate certificate;
    RootIsolation roots;                               // none straddles k0
    std::vector<std::pair<BigInt, BigInt>> evaluations;  // (k, p(k)) actually checked
    std::optional<BigRational> max_root_upper;          // largest upper end over `roots`
};

/// Decides p(k) > 0 for every integer k >= k0.
inline PositivityCertificate positive_for_all_integers_geq(const IntPoly& p, const BigInt& k0) {
    PositivityCertificate out;
    const std::string subject = p.str() + " > 0 for all integers k >= " + k0.get_str();
    if (p.is_zero()) {
        out.certificate = Certificate::fail(subject, {"p = 0"}, "identically zero");
        return out;
    }

    const RootIsolator iso(p);
    out.roots = iso.isolate();
    const BigRational start(k0);
    for (auto& iv : out.roots.intervals) {
        iv = iso.separate(iv, start);
    }
    std::vector<std::string> witnesses;
    for (const auto& iv : out.roots.intervals) {
        witnesses.push_back("root in " + iv.str());
        if (!out.max_root_upper || *out.max_root_upper < iv.hi) {
            out.max_root_upper = iv.hi;
        }
    }

    auto check_at = [&](const BigInt& k) {
        BigInt v = p.eval(k);
        out.evaluations.emplace_back(k, v);
        witnesses.push_back("p(" + k.get_str() + ") = " + v.get_str());
        return v > 0;
    };

    // Past the largest root the sign is that of the leading coefficient.
    BigInt last = k0;
    if (out.max_root_upper && *out.max_root_upper >= start) {
        last = out.max_root_upper->ceil();
    }
    for (BigInt k = k0; k <= last; ++k) {
        if (!check_at(k)) {
            out.certificate = Certificate::fail(subject, std::move(witnesses), "non-positive value");
            return out;
        }
    }
    if (p.leading() < 0) {
        check_at(last + 1);
        out.certificate = Certificate::fail(subject, std::move(witnesses), "negative leading coefficient");
        return out;
    }
    out.certificate = Certificate::pass(subject, std::move(witnesses));
    return out;
}

struct IntegerSolutions {
    bool all = false;            // every integer k >= k0 qualifies
    std::vector<BigInt> values;  // ascending, only meaningful when !all
};

/// Every integer k >= k0 with |p(k)| = target.
inline IntegerSolutions integer_solutions_of_abs_eq(const IntPoly& p, const BigInt& target, const BigInt& k0) {
    if (target < 0) {
        throw std::invalid_argument("integer_solutions_of_abs_eq: negative target");
    }
    IntegerSolutions out;
    if (p.is_constant()) {
        out.all = abs(p.coeff(0)) == target;
        return out;
    }
    const IntPoly shift = IntPoly::constant(target);
    std::vector<IntPoly> equations{p - shift};
    if (target != 0) {
        equations.push_back(p + shift);
    }
    for (const auto& q : equations) {
        for (const auto& iv : isolate_real_roots(q).intervals) {
            for (BigInt k = iv.lo.ceil(); BigRational(k) <= iv.hi; ++k) {
                if (k >= k0 && q.eval(k) == 0) {
                    out.values.push_back(k);
                }
            }
        }
    }
    std::sort(out.values.begin(), out.values.end());
    out.values.erase(std::unique(out.values.begin(), out.values.end()), out.values.end());
    return out;
}

} // namespace kissing

#endif // KISSING_POLY_HPP
