#ifndef KISSING_TEST_SUPPORT_HPP
#define KISSING_TEST_SUPPORT_HPP

// Random generators and independent oracles shared by the unit tests and
// the acceptance binary. Nothing here calls into the kernels under test.

#include "kissing/kissing.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

namespace kissing::testing {

using I3 = std::array<long long, 3>;

class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}
    long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }
    bool coin() { return uniform(0, 1) == 1; }
    std::mt19937_64& engine() { return gen_; }

private:
    std::mt19937_64 gen_;
};

inline I3 random_point(Rng& r, long k, std::size_t d = 3) {
    I3 p{0, 0, 0};
    for (std::size_t i = 0; i < d; ++i) {
        p[i] = r.uniform(0, k);
    }
    return p;
}

inline LatticePoint to_lattice(const I3& p, long k, std::size_t d = 3) {
    std::vector<BigInt> c;
    for (std::size_t i = 0; i < d; ++i) {
        c.emplace_back(static_cast<long>(p[i]));
    }
    return LatticePoint(std::move(c), BigInt(k));
}

inline LatticeSimplex segment(const I3& a, const I3& b, long k, std::size_t d = 3) {
    return LatticeSimplex{to_lattice(a, k, d), to_lattice(b, k, d)};
}

inline std::pair<I3, I3> random_segment(Rng& r, long k, std::size_t d = 3) {
    I3 a = random_point(r, k, d);
    I3 b = random_point(r, k, d);
    while (a == b) {
        b = random_point(r, k, d);
    }
    return {a, b};
}

inline I3 sub3(const I3& a, const I3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
inline long long dot3(const I3& a, const I3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
inline I3 cross3(const I3& a, const I3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
inline bool is_zero3(const I3& a) { return a[0] == 0 && a[1] == 0 && a[2] == 0; }

inline bool collinear3(const I3& a, const I3& b, const I3& c) { return is_zero3(cross3(sub3(b, a), sub3(c, a))); }

inline std::array<I3, 3> random_triangle(Rng& r, long k) {
    for (;;) {
        std::array<I3, 3> t{random_point(r, k), random_point(r, k), random_point(r, k)};
        if (!collinear3(t[0], t[1], t[2])) {
            return t;
        }
    }
}

// --- intersection oracles (orientation predicates, no distances) ----------

// p on the closed segment [a, b]
inline bool on_segment(const I3& p, const I3& a, const I3& b) {
    if (!collinear3(a, b, p)) {
        return false;
    }
    const long long t = dot3(sub3(p, a), sub3(b, a));
    return t >= 0 && t <= dot3(sub3(b, a), sub3(b, a));
}

// orientation of (a, b, c) in the coordinate plane dropping `axis`
inline int orient2(const I3& a, const I3& b, const I3& c, int axis) {
    const int i = axis == 0 ? 1 : 0;
    const int j = axis == 2 ? 1 : 2;
    const long long v = (b[i] - a[i]) * (c[j] - a[j]) - (b[j] - a[j]) * (c[i] - a[i]);
    return (v > 0) - (v < 0);
}

inline int dominant_axis(const I3& n) {
    int axis = 0;
    for (int i = 1; i < 3; ++i) {
        if (std::llabs(n[i]) > std::llabs(n[axis])) {
            axis = i;
        }
    }
    return axis;
}

inline bool segments_intersect(const I3& a1, const I3& b1, const I3& a2, const I3& b2) {
    if (on_segment(a1, a2, b2) || on_segment(b1, a2, b2) || on_segment(a2, a1, b1) || on_segment(b2, a1, b1)) {
        return true;
    }
    const I3 u1 = sub3(b1, a1);
    const I3 u2 = sub3(b2, a2);
    const I3 n = cross3(u1, u2);
    if (is_zero3(n)) {
        return false;  // parallel, and no endpoint lies on the other segment
    }
    if (dot3(n, sub3(a2, a1)) != 0) {
        return false;  // skew
    }
    const int ax = dominant_axis(n);
    const int o1 = orient2(a1, b1, a2, ax);
    const int o2 = orient2(a1, b1, b2, ax);
    const int o3 = orient2(a2, b2, a1, ax);
    const int o4 = orient2(a2, b2, b1, ax);
    return o1 * o2 < 0 && o3 * o4 < 0;
}

inline bool point_in_triangle(const I3& p, const I3& q0, const I3& q1, const I3& q2) {
    const I3 n = cross3(sub3(q1, q0), sub3(q2, q0));
    if (dot3(n, sub3(p, q0)) != 0) {
        return false;
    }
    const int ax = dominant_axis(n);
    const int s0 = orient2(q0, q1, p, ax);
    const int s1 = orient2(q1, q2, p, ax);
    const int s2 = orient2(q2, q0, p, ax);
    const bool has_neg = s0 < 0 || s1 < 0 || s2 < 0;
    const bool has_pos = s0 > 0 || s1 > 0 || s2 > 0;
    return !(has_neg && has_pos);
}

// --- grid-search distance oracle ------------------------------------------

// Minimum over s, t in {0, 1/n, ..., 1} of |a1 + s u1 - a2 - t u2|^2.
inline BigRational grid_sq_dist(const I3& a1, const I3& b1, const I3& a2, const I3& b2, long n) {
    const I3 u1 = sub3(b1, a1);
    const I3 u2 = sub3(b2, a2);
    long long best = -1;
    for (long i = 0; i <= n; ++i) {
        for (long j = 0; j <= n; ++j) {
            long long s = 0;
            for (int c = 0; c < 3; ++c) {
                const long long v = n * (a1[c] - a2[c]) + i * u1[c] - j * u2[c];
                s += v * v;
            }
            if (best < 0 || s < best) {
                best = s;
            }
        }
    }
    return BigRational(BigInt(static_cast<long>(best)), BigInt(n * n));
}

// True when sqrt(approx) <= sqrt(exact) + sqrt(err2), decided exactly.
inline bool within_root_bound(const BigRational& approx, const BigRational& exact, const BigRational& err2) {
    const BigRational lhs = approx - exact - err2;
    if (lhs.sign() <= 0) {
        return true;
    }
    return lhs * lhs <= BigRational(4) * exact * err2;
}

// Rational upper bound on (h/2 (|u1| + |u2|))^2 for grid step h = 1/n.
inline BigRational grid_error_bound(const I3& a1, const I3& b1, const I3& a2, const I3& b2, long n) {
    const I3 u1 = sub3(b1, a1);
    const I3 u2 = sub3(b2, a2);
    // (|u1| + |u2|)^2 <= 2(|u1|^2 + |u2|^2)
    return BigRational(BigInt(static_cast<long>(2 * (dot3(u1, u1) + dot3(u2, u2)))), BigInt(4 * n * n));
}

// --- model oracles -------------------------------------------------------

inline Coords9 random_coords(Rng& r, long k) {
    Coords9 x;
    for (auto& v : x) {
        v = r.uniform(-k, k);
    }
    return x;
}

// Cofactor expansion along the first row of [A1 A2 b] with A1 = (x1,x2,x3),
// A2 = (x4,x5,x6), b = (x7,x8,x9) as columns.
inline BigInt det_A_b(const Coords9& x) {
    const BigInt m[3][3] = {{x[0], x[3], x[6]}, {x[1], x[4], x[7]}, {x[2], x[5], x[8]}};
    BigInt det = 0;
    for (int c = 0; c < 3; ++c) {
        const int c1 = c == 0 ? 1 : 0;
        const int c2 = c == 2 ? 1 : 2;
        const BigInt minor = m[1][c1] * m[2][c2] - m[1][c2] * m[2][c1];
        det += (c % 2 == 0 ? 1 : -1) * m[0][c] * minor;
    }
    return det;
}

// det(A^t A) from the Gram matrix.
inline BigInt gram_det(const Coords9& x) {
    BigInt aa = 0;
    BigInt bb = 0;
    BigInt ab = 0;
    for (std::size_t i = 0; i < 3; ++i) {
        aa += x[i] * x[i];
        bb += x[i + 3] * x[i + 3];
        ab += x[i] * x[i + 3];
    }
    return aa * bb - ab * ab;
}

// Sample of Y(k): sign-constrained head, then each x_{i+6} drawn from the
// interval its three box inequalities and |x| <= k leave open.
inline std::optional<XPoint> random_Y_point(Rng& r, long k, int tries = 200) {
    for (int t = 0; t < tries; ++t) {
        std::array<long, 9> x{};
        x[0] = r.uniform(-k, 0);
        for (std::size_t i = 1; i < 6; ++i) {
            x[i] = r.uniform(0, k);
        }
        bool ok = true;
        for (std::size_t i = 0; i < 3 && ok; ++i) {
            const long lo = std::max({-k, x[i] - k, -k - x[i + 3], x[i] - x[i + 3] - k});
            const long hi = std::min({k, x[i] + k, k - x[i + 3], x[i] - x[i + 3] + k});
            ok = lo <= hi;
            if (ok) {
                x[i + 6] = r.uniform(lo, hi);
            }
        }
        if (ok) {
            return XPoint(x, k);
        }
    }
    return std::nullopt;
}

// Moves that keep |f| and g: row permutation and joint row negation.
inline Coords9 permute_rows(const Coords9& x, const std::array<int, 3>& perm) {
    Coords9 y;
    for (std::size_t i = 0; i < 3; ++i) {
        const auto s = static_cast<std::size_t>(perm[i]);
        y[i] = x[s];
        y[i + 3] = x[s + 3];
        y[i + 6] = x[s + 6];
    }
    return y;
}

inline Coords9 negate_rows(const Coords9& x, int mask) {
    Coords9 y = x;
    for (std::size_t i = 0; i < 3; ++i) {
        if ((mask >> i) & 1) {
            y[i] = -y[i];
            y[i + 3] = -y[i + 3];
            y[i + 6] = -y[i + 6];
        }
    }
    return y;
}

inline Coords9 negate_column(const Coords9& x, std::size_t col) {
    Coords9 y = x;
    for (std::size_t i = 0; i < 3; ++i) {
        y[3 * col + i] = -y[3 * col + i];
    }
    return y;
}

// --- symmetry oracle -------------------------------------------------------

// Least plain concatenation [n_a, a..., n_b, b...] over every cube symmetry,
// vertex order and exchange of the two simplices.
inline std::vector<long> brute_canonical(const std::vector<I3>& a, const std::vector<I3>& b, long k,
                                         std::size_t d) {
    std::vector<long> best;
    const auto group = cube_symmetries(d);
    for (const auto& g : group) {
        auto image = [&](std::vector<I3> s) {
            for (auto& p : s) {
                I3 q;
                for (std::size_t i = 0; i < 3; ++i) {
                    const long long v = p[static_cast<std::size_t>(g.perm[i])];
                    q[i] = g.flip[i] ? k - v : v;
                }
                p = q;
            }
            std::sort(s.begin(), s.end());
            return s;
        };
        for (int swap = 0; swap < 2; ++swap) {
            std::vector<I3> first = image(swap ? b : a);
            std::vector<I3> second = image(swap ? a : b);
            do {
                do {
                    std::vector<long> key{static_cast<long>(first.size())};
                    for (const auto& p : first) {
                        key.insert(key.end(), p.begin(), p.end());
                    }
                    key.push_back(static_cast<long>(second.size()));
                    for (const auto& p : second) {
                        key.insert(key.end(), p.begin(), p.end());
                    }
                    if (best.empty() || key < best) {
                        best = key;
                    }
                } while (std::next_permutation(second.begin(), second.end()));
            } while (std::next_permutation(first.begin(), first.end()));
        }
    }
    return best;
}

inline std::vector<long> to_longs(const CanonicalKey& key) {
    std::vector<long> out;
    for (const auto& v : key.values) {
        out.push_back(v.get_si());
    }
    return out;
}

} // namespace kissing::testing

#endif // KISSING_TEST_SUPPORT_HPP
