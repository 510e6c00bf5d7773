#ifndef KISSING_SYMMETRY_HPP
#define KISSING_SYMMETRY_HPP

// Symmetries of the cube [0,k]^d (coordinate permutations composed with
// reflections x_i -> k - x_i) and canonical keys of simplex pairs under
// those symmetries, vertex relabeling and exchange of the two simplices.

#include "geometry.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>
#include <vector>

namespace kissing {

struct CubeSymmetry {
    std::array<int, 3> perm{0, 1, 2};  // output axis i reads input axis perm[i]
    std::array<bool, 3> flip{false, false, false};

    template <class Int>
    Vec3<Int> apply(const Vec3<Int>& p, const Int& k) const {
        Vec3<Int> out;
        for (std::size_t i = 0; i < 3; ++i) {
            const Int& v = p[static_cast<std::size_t>(perm[i])];
            out[i] = flip[i] ? Int(k - v) : v;
        }
        return out;
    }
};

/// All 2^d d! symmetries of [0,k]^d for d in {2, 3}; planar ones fix axis 2.
inline std::vector<CubeSymmetry> cube_symmetries(std::size_t d) {
    std::vector<CubeSymmetry> out;
    std::array<int, 3> perm{0, 1, 2};
    const auto n = static_cast<int>(d);
    do {
        if (d == 2 && perm[2] != 2) {
            continue;
        }
        for (int mask = 0; mask < (1 << n); ++mask) {
            CubeSymmetry s;
            s.perm = perm;
            for (int i = 0; i < n; ++i) {
                s.flip[static_cast<std::size_t>(i)] = (mask >> i) & 1;
            }
            out.push_back(s);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

namespace detail {

// [n_a, a sorted flat..., n_b, b sorted flat...] with (a) <= (b).
template <class Int>
std::vector<Int> normal_form(std::vector<Vec3<Int>> a, std::vector<Vec3<Int>> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    auto flat = [](const std::vector<Vec3<Int>>& s) {
        std::vector<Int> out{Int(static_cast<long>(s.size()))};
        for (const auto& p : s) {
            out.insert(out.end(), p.begin(), p.end());
        }
        return out;
    };
    std::vector<Int> fa = flat(a);
    std::vector<Int> fb = flat(b);
    if (fb < fa) {
        std::swap(fa, fb);
    }
    fa.insert(fa.end(), fb.begin(), fb.end());
    return fa;
}

} // namespace detail

/// Lexicographically least normal form over the symmetry group.
template <class Int>
std::vector<Int> canonical_key(const std::vector<Vec3<Int>>& a, const std::vector<Vec3<Int>>& b, const Int& k,
                               const std::vector<CubeSymmetry>& group) {
    std::vector<Int> best;
    std::vector<Vec3<Int>> ia(a.size());
    std::vector<Vec3<Int>> ib(b.size());
    for (const auto& g : group) {
        for (std::size_t i = 0; i < a.size(); ++i) {
            ia[i] = g.apply(a[i], k);
        }
        for (std::size_t i = 0; i < b.size(); ++i) {
            ib[i] = g.apply(b[i], k);
        }
        auto key = detail::normal_form(ia, ib);
        if (best.empty() || key < best) {
            best = std::move(key);
        }
    }
    return best;
}

struct CanonicalKey {
    std::vector<BigInt> values;

    std::string str() const {
        std::string out;
        for (std::size_t i = 0; i < values.size(); ++i) {
            out += (i ? " " : "") + values[i].get_str();
        }
        return out;
    }
    friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
    friend bool operator<(const CanonicalKey& a, const CanonicalKey& b) { return a.values < b.values; }
};

inline std::vector<Vec3<BigInt>> embedded_vertices(const LatticeSimplex& s) {
    std::vector<Vec3<BigInt>> out;
    for (const auto& v : s.vertices()) {
        out.push_back(v.embed());
    }
    return out;
}

/// Canonical key of the unordered pair {P, Q} in [0,k]^d.
inline CanonicalKey canonicalize_pair(const LatticeSimplex& P, const LatticeSimplex& Q) {
    detail::require_same_space(P, Q);
    return {canonical_key(embedded_vertices(P), embedded_vertices(Q), P.k(), cube_symmetries(P.dim()))};
}

/// Rebuilds the representative pair a canonical key spells out.
inline std::pair<LatticeSimplex, LatticeSimplex> decode_key(const CanonicalKey& key, std::size_t d,
                                                             const BigInt& k) {
    std::size_t pos = 0;
    auto take = [&]() {
        const auto n = key.values.at(pos++).get_ui();
        std::vector<LatticePoint> verts;
        for (unsigned long i = 0; i < n; ++i) {
            std::vector<BigInt> c(key.values.begin() + static_cast<long>(pos),
                                  key.values.begin() + static_cast<long>(pos + 3));
            pos += 3;
            c.resize(d);
            verts.emplace_back(std::move(c), k);
        }
        return LatticeSimplex(std::move(verts));
    };
    LatticeSimplex a = take();
    LatticeSimplex b = take();
    return {std::move(a), std::move(b)};
}

} // namespace kissing

#endif // KISSING_SYMMETRY_HPP
