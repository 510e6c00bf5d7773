#ifndef KISSING_MODEL_HPP
#define KISSING_MODEL_HPP

// Encoding of simplex pairs as points of [-k,k]^9, the sets Y(k) and Z(k),
// and the affine embedding phi_k with its symbolic composition.

#include "geometry.hpp"
#include "poly.hpp"
#include "xpoint.hpp"

#include <stdexcept>
#include <utility>

namespace kissing {

/// Packs a segment pair (columns p1-p0, q1-q0; b = q0-p0) or a point and a
/// triangle (columns q1-q0, q2-q0; b = q0-P) into nine coordinates. A
/// triangle given first is swapped to second.
inline XPoint encode_pair(const LatticeSimplex& P, const LatticeSimplex& Q) {
    if (P.dim() != 3 || Q.dim() != 3) {
        throw std::invalid_argument("encode_pair: simplices must live in R^3");
    }
    if (P.k() != Q.k()) {
        throw std::invalid_argument("encode_pair: simplices disagree on k");
    }
    if (P.dimension() + Q.dimension() != 2) {
        throw std::invalid_argument("encode_pair: dimensions sum to " +
                                    std::to_string(P.dimension() + Q.dimension()) + ", expected 2");
    }
    if (P.dimension() == 2) {
        return encode_pair(Q, P);
    }
    Coords9 x;
    const auto put = [&x](std::size_t offset, const LatticePoint& to, const LatticePoint& from) {
        for (std::size_t i = 0; i < 3; ++i) {
            x[offset + i] = to[i] - from[i];
        }
    };
    if (P.dimension() == 1) {
        put(0, P[1], P[0]);
        put(3, Q[1], Q[0]);
        put(6, Q[0], P[0]);
    } else {
        put(0, Q[1], Q[0]);
        put(3, Q[2], Q[0]);
        put(6, Q[0], P[0]);
    }
    return XPoint(std::move(x), P.k());
}

/// x1 <= 0, x2..x6 >= 0 and the three box inequalities per row i:
/// |x_i - x_{i+6}|, |x_{i+3} + x_{i+6}|, |x_i - x_{i+3} - x_{i+6}| <= k.
inline bool in_Y(const XPoint& x) {
    if (x[0] > 0) {
        return false;
    }
    for (std::size_t i = 1; i < 6; ++i) {
        if (x[i] < 0) {
            return false;
        }
    }
    const BigInt& k = x.k();
    for (std::size_t i = 0; i < 3; ++i) {
        if (abs(x[i] - x[i + 6]) > k || abs(x[i + 3] + x[i + 6]) > k || abs(x[i] - x[i + 3] - x[i + 6]) > k) {
            return false;
        }
    }
    return true;
}

/// Sign conditions of Y(k), and |x_i| = |x_{i+3}| = k never holds jointly.
inline bool in_Z(const XPoint& x) {
    if (x[0] > 0) {
        return false;
    }
    for (std::size_t i = 1; i < 6; ++i) {
        if (x[i] < 0) {
            return false;
        }
    }
    const BigInt& k = x.k();
    for (std::size_t i = 0; i < 3; ++i) {
        if (abs(x[i]) == k && abs(x[i + 3]) == k) {
            return false;
        }
    }
    return true;
}

struct SetTag {
    bool in_Y = false;
    bool in_Z = false;
};

inline SetTag classify(const XPoint& x) { return {in_Y(x), in_Z(x)}; }

/// phi_k as nine affine polynomials in k: -k + x_i for i in {1,7},
/// k - x_i for 2 <= i <= 6, x_i for i in {8,9}.
inline std::array<IntPoly, 9> phi_polys(const Coords9& x) {
    std::array<IntPoly, 9> out;
    for (std::size_t i = 0; i < 9; ++i) {
        if (i == 0 || i == 6) {
            out[i] = IntPoly::affine(x[i], -1);
        } else if (i <= 5) {
            out[i] = IntPoly::affine(-x[i], 1);
        } else {
            out[i] = IntPoly::constant(x[i]);
        }
    }
    return out;
}

inline XPoint phi_apply(const Coords9& x, const BigInt& k) {
    if (k < 1) {
        throw std::invalid_argument("phi_apply: k must be positive");
    }
    const auto polys = phi_polys(x);
    Coords9 out;
    for (std::size_t i = 0; i < 9; ++i) {
        out[i] = polys[i].eval(k);
    }
    return XPoint(std::move(out), k);
}

struct ComposedPolys {
    IntPoly f;  // f o phi_k, degree <= 3
    IntPoly g;  // g o phi_k, degree <= 4
};

inline ComposedPolys compose_phi(const Coords9& x) {
    const auto polys = phi_polys(x);
    return {f_expr(polys), g_expr(polys)};
}

} // namespace kissing

#endif // KISSING_MODEL_HPP
