#ifndef KISSING_XPOINT_HPP
#define KISSING_XPOINT_HPP

// The nine-coordinate encoding of a simplex pair: x1..x6 are the two
// columns of the edge matrix A (column-major), x7..x9 the offset b.

#include "exact.hpp"

#include <array>
#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>

namespace kissing {

using Coords9 = std::array<BigInt, 9>;

inline Coords9 make_coords9(const std::array<long, 9>& v) {
    Coords9 out;
    for (std::size_t i = 0; i < 9; ++i) {
        out[i] = v[i];
    }
    return out;
}

inline std::string to_string(const Coords9& x) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < 9; ++i) {
        os << (i ? "," : "") << x[i].get_str();
    }
    os << ')';
    return os.str();
}

/// Lattice point of [-k,k]^9 carrying its k.
class XPoint {
public:
    XPoint(Coords9 x, BigInt k) : x_(std::move(x)), k_(std::move(k)) {
        if (k_ < 1) {
            throw std::invalid_argument("XPoint: k must be positive");
        }
        for (const auto& v : x_) {
            if (abs(v) > k_) {
                throw std::invalid_argument("XPoint: coordinate " + v.get_str() + " outside [-k,k] for k = " +
                                            k_.get_str());
            }
        }
    }
    XPoint(const std::array<long, 9>& x, long k) : XPoint(make_coords9(x), BigInt(k)) {}

    const Coords9& coords() const { return x_; }
    const BigInt& k() const { return k_; }
    /// Zero-based: x[0] is x1.
    const BigInt& operator[](std::size_t i) const { return x_[i]; }

    friend bool operator==(const XPoint&, const XPoint&) = default;

private:
    Coords9 x_;
    BigInt k_;
};

// f and g are written once over any commutative ring so the same
// expressions serve integer points and polynomial substitutions.

/// x1(x6x8 - x5x9) + x2(x4x9 - x6x7) + x3(x5x7 - x4x8), i.e. -det[A | b].
template <class R>
R f_expr(const std::array<R, 9>& x) {
    return x[0] * (x[5] * x[7] - x[4] * x[8]) + x[1] * (x[3] * x[8] - x[5] * x[6]) +
           x[2] * (x[4] * x[6] - x[3] * x[7]);
}

/// Sum of the three squared 2x2 minors of A, i.e. det(A^t A).
template <class R>
R g_expr(const std::array<R, 9>& x) {
    const R m12 = x[0] * x[4] - x[1] * x[3];
    const R m13 = x[0] * x[5] - x[2] * x[3];
    const R m23 = x[1] * x[5] - x[2] * x[4];
    return m12 * m12 + m13 * m13 + m23 * m23;
}

inline BigInt f_val(const XPoint& x) { return f_expr(x.coords()); }
inline BigInt g_val(const XPoint& x) { return g_expr(x.coords()); }

/// -x1 + x2 + x3 + x4 + x5 + x6.
inline BigInt h_val(const XPoint& x) {
    return -x[0] + x[1] + x[2] + x[3] + x[4] + x[5];
}

} // namespace kissing

#endif // KISSING_XPOINT_HPP
