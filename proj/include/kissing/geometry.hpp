#ifndef KISSING_GEOMETRY_HPP
#define KISSING_GEOMETRY_HPP

// Exact squared distances between lattice points, segments and triangles.
//
// The kernels in `kernel::` are templates over the integer type so the
// brute-force enumeration can run them on machine integers; the public
// functions below run them on BigInt. Planar inputs are embedded in R^3
// with a zero third coordinate.

#include "exact.hpp"
#include "xpoint.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace kissing {

template <class Int>
using Vec3 = std::array<Int, 3>;

/// num / den with den > 0, not necessarily reduced.
template <class Int>
struct Ratio {
    Int num;
    Int den;
};

namespace kernel {

template <class Int>
struct wide {
    using type = Int;
};
template <>
struct wide<std::int64_t> {
    using type = __int128;
};

template <class Int>
inline Int dot(const Vec3<Int>& a, const Vec3<Int>& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

template <class Int>
inline Vec3<Int> sub(const Vec3<Int>& a, const Vec3<Int>& b) {
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

template <class Int>
inline bool less(const Ratio<Int>& a, const Ratio<Int>& b) {
    using W = typename wide<Int>::type;
    return W(a.num) * W(b.den) < W(b.num) * W(a.den);
}

template <class Int>
inline int compare(const Ratio<Int>& a, const Ratio<Int>& b) {
    using W = typename wide<Int>::type;
    const W l = W(a.num) * W(b.den);
    const W r = W(b.num) * W(a.den);
    return l < r ? -1 : (r < l ? 1 : 0);
}

template <class Int>
inline Ratio<Int> min_ratio(const Ratio<Int>& a, const Ratio<Int>& b) {
    return less(b, a) ? b : a;
}

/// Point p to segment [a, b], a != b.
template <class Int>
Ratio<Int> point_segment(const Vec3<Int>& p, const Vec3<Int>& a, const Vec3<Int>& b) {
    const Vec3<Int> u = sub(b, a);
    const Vec3<Int> w = sub(p, a);
    const Int t = dot(w, u);
    if (t <= 0) {
        return {dot(w, w), Int(1)};
    }
    const Int uu = dot(u, u);
    if (t >= uu) {
        const Vec3<Int> v = sub(p, b);
        return {dot(v, v), Int(1)};
    }
    return {Int(dot(w, w) * uu - t * t), uu};
}

/// Segment [a1, b1] to segment [a2, b2], both non-degenerate.
template <class Int>
Ratio<Int> segment_segment(const Vec3<Int>& a1, const Vec3<Int>& b1, const Vec3<Int>& a2,
                           const Vec3<Int>& b2) {
    const Vec3<Int> u1 = sub(b1, a1);
    const Vec3<Int> u2 = sub(b2, a2);
    const Vec3<Int> r = sub(a1, a2);
    const Int uu1 = dot(u1, u1);
    const Int uu2 = dot(u2, u2);
    const Int u12 = dot(u1, u2);
    const Int det = uu1 * uu2 - u12 * u12;
    if (det > 0) {
        const Int ru1 = dot(r, u1);
        const Int ru2 = dot(r, u2);
        // critical point of |r + t u1 - s u2|^2 is (tn / det, sn / det)
        const Int tn = u12 * ru2 - uu2 * ru1;
        const Int sn = uu1 * ru2 - u12 * ru1;
        if (tn >= 0 && tn <= det && sn >= 0 && sn <= det) {
            Vec3<Int> v;
            for (int i = 0; i < 3; ++i) {
                v[i] = r[i] * det + tn * u1[i] - sn * u2[i];
            }
            return {dot(v, v), Int(det * det)};
        }
    }
    Ratio<Int> best = point_segment(a1, a2, b2);
    best = min_ratio(best, point_segment(b1, a2, b2));
    best = min_ratio(best, point_segment(a2, a1, b1));
    best = min_ratio(best, point_segment(b2, a1, b1));
    return best;
}

/// Point p to the triangle q0 q1 q2, vertices not collinear.
template <class Int>
Ratio<Int> point_triangle(const Vec3<Int>& p, const Vec3<Int>& q0, const Vec3<Int>& q1,
                          const Vec3<Int>& q2) {
    const Vec3<Int> e1 = sub(q1, q0);
    const Vec3<Int> e2 = sub(q2, q0);
    const Vec3<Int> w = sub(p, q0);
    const Int a = dot(e1, e1);
    const Int b = dot(e1, e2);
    const Int c = dot(e2, e2);
    const Int det = a * c - b * b;
    const Int d1 = dot(w, e1);
    const Int d2 = dot(w, e2);
    // foot of the perpendicular is q0 + (sn e1 + tn e2) / det
    const Int sn = c * d1 - b * d2;
    const Int tn = a * d2 - b * d1;
    if (sn >= 0 && tn >= 0 && sn + tn <= det) {
        Vec3<Int> v;
        for (int i = 0; i < 3; ++i) {
            v[i] = w[i] * det - sn * e1[i] - tn * e2[i];
        }
        return {dot(v, v), Int(det * det)};
    }
    Ratio<Int> best = point_segment(p, q0, q1);
    best = min_ratio(best, point_segment(p, q1, q2));
    best = min_ratio(best, point_segment(p, q0, q2));
    return best;
}

template <class Int>
bool collinear(const Vec3<Int>& a, const Vec3<Int>& b, const Vec3<Int>& c) {
    const Vec3<Int> u = sub(b, a);
    const Vec3<Int> v = sub(c, a);
    return u[1] * v[2] - u[2] * v[1] == 0 && u[2] * v[0] - u[0] * v[2] == 0 && u[0] * v[1] - u[1] * v[0] == 0;
}

} // namespace kernel

/// Lattice point of [0,k]^d, d in {2, 3}.
class LatticePoint {
public:
    LatticePoint(std::vector<BigInt> coords, BigInt k) : coords_(std::move(coords)), k_(std::move(k)) {
        if (coords_.size() != 2 && coords_.size() != 3) {
            throw std::invalid_argument("LatticePoint: dimension must be 2 or 3");
        }
        if (k_ < 1) {
            throw std::invalid_argument("LatticePoint: k must be positive");
        }
        for (const auto& c : coords_) {
            if (c < 0 || c > k_) {
                throw std::invalid_argument("LatticePoint: coordinate " + c.get_str() + " outside [0, " +
                                            k_.get_str() + "]");
            }
        }
    }
    LatticePoint(std::initializer_list<long> coords, long k)
        : LatticePoint(std::vector<BigInt>(coords.begin(), coords.end()), BigInt(k)) {}

    std::size_t dim() const { return coords_.size(); }
    const BigInt& k() const { return k_; }
    const std::vector<BigInt>& coords() const { return coords_; }
    const BigInt& operator[](std::size_t i) const { return coords_[i]; }

    Vec3<BigInt> embed() const { return {coords_[0], coords_[1], dim() == 3 ? coords_[2] : BigInt(0)}; }

    std::string str() const {
        std::ostringstream os;
        os << '(';
        for (std::size_t i = 0; i < coords_.size(); ++i) {
            os << (i ? "," : "") << coords_[i].get_str();
        }
        os << ')';
        return os.str();
    }

    friend bool operator==(const LatticePoint& a, const LatticePoint& b) {
        return a.coords_ == b.coords_ && a.k_ == b.k_;
    }

private:
    std::vector<BigInt> coords_;
    BigInt k_;
};

/// A lattice point, segment or triangle with affinely independent vertices.
class LatticeSimplex {
public:
    explicit LatticeSimplex(std::vector<LatticePoint> vertices) : v_(std::move(vertices)) {
        if (v_.empty() || v_.size() > 3) {
            throw std::invalid_argument("LatticeSimplex: expected 1 to 3 vertices");
        }
        for (const auto& p : v_) {
            if (p.dim() != v_[0].dim() || p.k() != v_[0].k()) {
                throw std::invalid_argument("LatticeSimplex: vertices disagree on d or k");
            }
        }
        for (std::size_t i = 0; i < v_.size(); ++i) {
            for (std::size_t j = i + 1; j < v_.size(); ++j) {
                if (v_[i] == v_[j]) {
                    throw std::invalid_argument("LatticeSimplex: repeated vertex " + v_[i].str());
                }
            }
        }
        if (v_.size() == 3 && kernel::collinear(v_[0].embed(), v_[1].embed(), v_[2].embed())) {
            throw std::invalid_argument("LatticeSimplex: collinear triangle vertices");
        }
    }
    LatticeSimplex(std::initializer_list<LatticePoint> vertices)
        : LatticeSimplex(std::vector<LatticePoint>(vertices)) {}

    /// Affine dimension: 0 point, 1 segment, 2 triangle.
    int dimension() const { return static_cast<int>(v_.size()) - 1; }
    std::size_t dim() const { return v_[0].dim(); }
    const BigInt& k() const { return v_[0].k(); }
    const std::vector<LatticePoint>& vertices() const { return v_; }
    const LatticePoint& operator[](std::size_t i) const { return v_[i]; }

    std::string str() const {
        std::string out;
        for (std::size_t i = 0; i < v_.size(); ++i) {
            out += (i ? "-" : "") + v_[i].str();
        }
        return out;
    }

    friend bool operator==(const LatticeSimplex&, const LatticeSimplex&) = default;

private:
    std::vector<LatticePoint> v_;
};

struct SqDistance {
    BigRational value;

    bool intersecting() const { return value.sign() == 0; }
    friend bool operator==(const SqDistance&, const SqDistance&) = default;
};

namespace detail {

inline SqDistance to_sq_distance(const Ratio<BigInt>& r) { return {BigRational(r.num, r.den)}; }

inline void require_same_space(const LatticeSimplex& a, const LatticeSimplex& b) {
    if (a.dim() != b.dim() || a.k() != b.k()) {
        throw std::invalid_argument("simplices live in different spaces (d or k differ)");
    }
}

inline void require_shape(const LatticeSimplex& s, int dimension, const char* what) {
    if (s.dimension() != dimension) {
        throw std::invalid_argument(std::string("expected a ") + what + ", got " + s.str());
    }
}

} // namespace detail

inline SqDistance sq_dist_point_segment(const LatticePoint& p, const LatticeSimplex& s) {
    detail::require_shape(s, 1, "segment");
    if (p.dim() != s.dim() || p.k() != s.k()) {
        throw std::invalid_argument("point and segment live in different spaces");
    }
    return detail::to_sq_distance(kernel::point_segment(p.embed(), s[0].embed(), s[1].embed()));
}

inline SqDistance sq_dist_segment_segment(const LatticeSimplex& s1, const LatticeSimplex& s2) {
    detail::require_shape(s1, 1, "segment");
    detail::require_shape(s2, 1, "segment");
    detail::require_same_space(s1, s2);
    return detail::to_sq_distance(
        kernel::segment_segment(s1[0].embed(), s1[1].embed(), s2[0].embed(), s2[1].embed()));
}

inline SqDistance sq_dist_point_triangle(const LatticePoint& p, const LatticeSimplex& t) {
    detail::require_shape(t, 2, "triangle");
    if (p.dim() != t.dim() || p.k() != t.k()) {
        throw std::invalid_argument("point and triangle live in different spaces");
    }
    return detail::to_sq_distance(kernel::point_triangle(p.embed(), t[0].embed(), t[1].embed(), t[2].embed()));
}

/// Distance between any two simplices whose dimensions sum to at most 2.
inline SqDistance sq_dist(const LatticeSimplex& a, const LatticeSimplex& b) {
    detail::require_same_space(a, b);
    const int da = a.dimension();
    const int db = b.dimension();
    if (da > db) {
        return sq_dist(b, a);
    }
    if (da == 0 && db == 0) {
        const auto v = kernel::sub(a[0].embed(), b[0].embed());
        return {BigRational(kernel::dot(v, v))};
    }
    if (da == 0 && db == 1) {
        return sq_dist_point_segment(a[0], b);
    }
    if (da == 0 && db == 2) {
        return sq_dist_point_triangle(a[0], b);
    }
    if (da == 1 && db == 1) {
        return sq_dist_segment_segment(a, b);
    }
    throw std::invalid_argument("sq_dist: unsupported simplex pair " + a.str() + " / " + b.str());
}

/// Squared distance between the affine hulls encoded by x: f(x)^2 / g(x).
inline SqDistance sq_dist_affine_hulls(const XPoint& x) {
    const BigInt g = g_val(x);
    if (g == 0) {
        throw std::domain_error("sq_dist_affine_hulls: A^tA is singular (g(x) = 0)");
    }
    const BigInt f = f_val(x);
    return {BigRational(f * f, g)};
}

} // namespace kissing

#endif // KISSING_GEOMETRY_HPP
