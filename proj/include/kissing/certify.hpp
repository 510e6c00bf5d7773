#ifndef KISSING_CERTIFY_HPP
#define KISSING_CERTIFY_HPP

// The polynomial certificates behind the closed form of eps(3,k) for
// k >= 6: the candidate sets B and A, the positivity check over B, the
// search over A, and the reduction of its survivors to one extremal pair.

#include "certificate.hpp"
#include "model.hpp"
#include "poly.hpp"
#include "symmetry.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace kissing {

/// 8k^4 - 24k^3 + 40k^2 - 28k + 10 = 2(2k^2 - 4k + 5)(2k^2 - 2k + 1).
inline IntPoly extremal_g_poly() { return IntPoly{10, -28, 40, -24, 8}; }

/// 5k^4 - 24k^3 + 40k^2 - 28k + 10, the gap between extremal_g_poly and 3k^4.
inline IntPoly three_k4_gap_poly() { return IntPoly{10, -28, 40, -24, 5}; }

/// 1 / (2(2k^2 - 4k + 5)(2k^2 - 2k + 1)).
inline BigRational closed_form_sq_value(long k) {
    return BigRational(BigInt(1), extremal_g_poly().eval(BigInt(k)));
}

/// P* from (k,2,1) to (0,k-1,k) and Q* from the origin to (k-1,k,k), k >= 2.
inline std::pair<LatticeSimplex, LatticeSimplex> star_pair(long k) {
    if (k < 2) {
        throw std::invalid_argument("star_pair: defined for k >= 2");
    }
    return {LatticeSimplex{LatticePoint({k, 2, 1}, k), LatticePoint({0, k - 1, k}, k)},
            LatticeSimplex{LatticePoint({0, 0, 0}, k), LatticePoint({k - 1, k, k}, k)}};
}

/// The eight survivors of the search over A.
inline std::vector<Coords9> extremal_points() {
    const std::array<std::array<long, 9>, 8> rows{{
        {0, 1, 3, 1, 0, 0, 0, -1, -2},
        {0, 1, 3, 1, 0, 0, 1, 0, -1},
        {0, 3, 1, 1, 0, 0, 0, -2, -1},
        {0, 3, 1, 1, 0, 0, 1, -1, 0},
        {1, 0, 0, 0, 1, 3, 0, 1, 2},
        {1, 0, 0, 0, 1, 3, 1, 0, 1},
        {1, 0, 0, 0, 3, 1, 0, 2, 1},
        {1, 0, 0, 0, 3, 1, 1, 1, 0},
    }};
    std::vector<Coords9> out;
    for (const auto& r : rows) {
        out.push_back(make_coords9(r));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Candidate sets

namespace detail {

// Non-negative 6-tuples with the given total, x_i + x_{i+3} >= 1, in
// lexicographic order.
inline std::vector<std::array<long, 6>> head_tuples(long total) {
    std::vector<std::array<long, 6>> out;
    std::array<long, 6> t{};
    auto rec = [&](auto&& self, std::size_t i, long left) -> void {
        if (i == 5) {
            t[5] = left;
            if (t[0] + t[3] >= 1 && t[1] + t[4] >= 1 && t[2] + t[5] >= 1) {
                out.push_back(t);
            }
            return;
        }
        for (long v = 0; v <= left; ++v) {
            t[i] = v;
            self(self, i + 1, left - v);
        }
    };
    rec(rec, 0, total);
    return out;
}

} // namespace detail

struct CandidateSetB {
    std::vector<Coords9> points;
};

struct CandidateSetA {
    std::vector<Coords9> points;
};

/// Points of N^9 whose first six coordinates sum to 6, last three vanish,
/// and x_i + x_{i+3} >= 1.
inline CandidateSetB gen_B() {
    CandidateSetB out;
    for (const auto& t : detail::head_tuples(6)) {
        Coords9 x;
        for (std::size_t i = 0; i < 6; ++i) {
            x[i] = t[i];
        }
        for (std::size_t i = 6; i < 9; ++i) {
            x[i] = 0;
        }
        out.points.push_back(std::move(x));
    }
    std::sort(out.points.begin(), out.points.end());
    return out;
}

/// Points of N^7 x Z^2 whose first six coordinates sum to at most 5 with
/// x_i + x_{i+3} >= 1, and x7 <= x1 + x4, -x2 <= x8 <= x5, -x3 <= x9 <= x6.
inline CandidateSetA gen_A() {
    CandidateSetA out;
    for (long total = 0; total <= 5; ++total) {
        for (const auto& t : detail::head_tuples(total)) {
            for (long x7 = 0; x7 <= t[0] + t[3]; ++x7) {
                for (long x8 = -t[1]; x8 <= t[4]; ++x8) {
                    for (long x9 = -t[2]; x9 <= t[5]; ++x9) {
                        out.points.push_back(make_coords9({t[0], t[1], t[2], t[3], t[4], t[5], x7, x8, x9}));
                    }
                }
            }
        }
    }
    std::sort(out.points.begin(), out.points.end());
    return out;
}

// ---------------------------------------------------------------------------
// Positivity of the gap polynomial over B

struct GapCheckReport {
    Certificate certificate;
    std::size_t points_checked = 0;
    std::optional<BigRational> max_root_upper;  // over every isolating interval of every point
    std::optional<BigInt> min_value_at_k0;      // min over x of the gap polynomial at k0
    std::vector<Coords9> failures;
};

/// For every x in B: target(k) - g(phi_k(x)) > 0 at every integer k >= k0.
inline GapCheckReport check_prop1(const CandidateSetB& B, const IntPoly& target = extremal_g_poly(),
                               const BigInt& k0 = 6) {
    GapCheckReport out;
    std::vector<std::string> witnesses;
    for (const auto& x : B.points) {
        const IntPoly gap = target - compose_phi(x).g;
        const auto cert = positive_for_all_integers_geq(gap, k0);
        ++out.points_checked;
        if (cert.max_root_upper && (!out.max_root_upper || *out.max_root_upper < *cert.max_root_upper)) {
            out.max_root_upper = cert.max_root_upper;
        }
        for (const auto& [k, v] : cert.evaluations) {
            if (k == k0 && (!out.min_value_at_k0 || v < *out.min_value_at_k0)) {
                out.min_value_at_k0 = v;
            }
        }
        if (!cert.certificate.passed()) {
            out.failures.push_back(x);
            witnesses.push_back(to_string(x) + ": " + gap.str() + " [" + cert.certificate.notes + "]");
        }
    }
    const std::string subject = "g(phi_k(x)) < " + target.str() + " for all x in B, integers k >= " + k0.get_str();
    std::string notes = std::to_string(out.points_checked) + " points; max isolating upper end " +
                        (out.max_root_upper ? out.max_root_upper->str() : std::string("none")) +
                        "; min value at k=" + k0.get_str() + " " +
                        (out.min_value_at_k0 ? out.min_value_at_k0->get_str() : std::string("none"));
    if (out.failures.empty()) {
        out.certificate = Certificate::pass(subject, {}, std::move(notes));
    } else {
        out.certificate = Certificate::fail(subject, std::move(witnesses), std::move(notes));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Search over A

/// Integers k >= start: finitely many listed values plus, optionally, every
/// integer from `tail_from` on.
struct IntegerSet {
    std::vector<BigInt> values;
    std::optional<BigInt> tail_from;

    bool empty() const { return values.empty() && !tail_from; }
    bool contains(const BigInt& k) const {
        return (tail_from && k >= *tail_from) || std::binary_search(values.begin(), values.end(), k);
    }
    std::string str() const {
        std::string out = "{";
        for (std::size_t i = 0; i < values.size(); ++i) {
            out += (i ? ", " : "") + values[i].get_str();
        }
        if (tail_from) {
            out += std::string(values.empty() ? "" : ", ") + "all k >= " + tail_from->get_str();
        }
        return out + "}";
    }
};

/// {k >= k0 integer : p(k) >= 0}.
inline IntegerSet nonnegative_integers_geq(const IntPoly& p, const BigInt& k0) {
    IntegerSet out;
    if (p.is_zero() || (p.is_constant() && p.leading() > 0)) {
        out.tail_from = k0;
        return out;
    }
    if (p.is_constant()) {
        return out;
    }
    BigInt last = k0 - 1;
    for (const auto& iv : isolate_real_roots(p).intervals) {
        last = std::max(last, iv.hi.ceil());
    }
    for (BigInt k = k0; k <= last; ++k) {
        if (p.eval(k) >= 0) {
            out.values.push_back(k);
        }
    }
    if (p.leading() > 0) {
        out.tail_from = std::max(k0, BigInt(last + 1));
    }
    return out;
}

enum class FilterOrder { unit_f_first, g_bound_first };

struct ExtremalHit {
    Coords9 x;
    ComposedPolys polys;
    IntegerSet qualifying_k;   // k >= 6 with |f| = 1 and g >= target
    bool holds_for_all_k = false;  // f constant +-1 and g identical to the target
};

struct ExtremalSearchReport {
    Certificate certificate;
    std::size_t points_searched = 0;
    std::vector<ExtremalHit> hits;  // in the order of A
};

/// Every x in A for which some integer k >= k0 has |f(phi_k(x))| = 1 and
/// g(phi_k(x)) >= target(k).
inline std::optional<ExtremalHit> search_point(const Coords9& x, const IntPoly& target, const BigInt& k0,
                                            FilterOrder order) {
    ComposedPolys polys = compose_phi(x);
    const IntPoly gap = polys.g - target;
    IntegerSet unit_f;
    IntegerSet g_bound;

    auto solve_unit = [&] {
        const auto sol = integer_solutions_of_abs_eq(polys.f, 1, k0);
        IntegerSet s;
        if (sol.all) {
            s.tail_from = k0;
        } else {
            s.values = sol.values;
        }
        return s;
    };

    if (order == FilterOrder::unit_f_first) {
        unit_f = solve_unit();
        if (unit_f.empty()) {
            return std::nullopt;
        }
        g_bound = nonnegative_integers_geq(gap, k0);
    } else {
        g_bound = nonnegative_integers_geq(gap, k0);
        if (g_bound.empty()) {
            return std::nullopt;
        }
        unit_f = solve_unit();
    }

    IntegerSet both;
    for (const auto& k : unit_f.values) {
        if (g_bound.contains(k)) {
            both.values.push_back(k);
        }
    }
    for (const auto& k : g_bound.values) {
        if (unit_f.tail_from && k >= *unit_f.tail_from) {
            both.values.push_back(k);
        }
    }
    if (unit_f.tail_from && g_bound.tail_from) {
        both.tail_from = std::max(*unit_f.tail_from, *g_bound.tail_from);
    }
    std::sort(both.values.begin(), both.values.end());
    both.values.erase(std::unique(both.values.begin(), both.values.end()), both.values.end());
    if (both.tail_from) {
        std::erase_if(both.values, [&](const BigInt& k) { return k >= *both.tail_from; });
    }
    if (both.empty()) {
        return std::nullopt;
    }
    ExtremalHit hit{x, std::move(polys), std::move(both), false};
    hit.holds_for_all_k = hit.polys.f.is_constant() && abs(hit.polys.f.coeff(0)) == 1 && hit.polys.g == target;
    return hit;
}

inline ExtremalSearchReport search_prop2(const CandidateSetA& A, FilterOrder order = FilterOrder::unit_f_first,
                                const IntPoly& target = extremal_g_poly(), const BigInt& k0 = 6) {
    ExtremalSearchReport out;
    std::vector<std::string> witnesses;
    std::vector<std::string> bad;
    for (const auto& x : A.points) {
        ++out.points_searched;
        if (auto hit = search_point(x, target, k0, order)) {
            std::string line = to_string(x) + ": f = " + hit->polys.f.str() + ", g = " + hit->polys.g.str() +
                               ", k in " + hit->qualifying_k.str();
            if (!hit->holds_for_all_k) {
                bad.push_back(line);
            }
            witnesses.push_back(std::move(line));
            out.hits.push_back(std::move(*hit));
        }
    }
    const std::string subject = "points of A with |f(phi_k(x))| = 1 and g(phi_k(x)) >= " + target.str() +
                                " for some integer k >= " + k0.get_str();
    std::string notes = std::to_string(out.hits.size()) + " of " + std::to_string(out.points_searched) +
                        " points qualify";
    if (out.hits.empty()) {
        out.certificate = Certificate::fail(subject, {"no qualifying point"}, std::move(notes));
    } else if (!bad.empty()) {
        out.certificate = Certificate::fail(subject, std::move(bad),
                                            notes + "; listed points qualify only for some k");
    } else {
        out.certificate = Certificate::pass(subject, std::move(witnesses),
                                            notes + "; each has f constant +-1 and g equal to the target");
    }
    return out;
}

// ---------------------------------------------------------------------------
// Back from encodings to segments

/// Segment pair (p0 = t, p1 = t + A_1, q0 = t + b, q1 = q0 + A_2) inside
/// [0,k]^3 for the least feasible translation t.
inline std::pair<LatticeSimplex, LatticeSimplex> reconstruct_pair(const XPoint& x) {
    if (g_val(x) <= 0) {
        throw std::domain_error("reconstruct_pair: g(x) = 0, columns of A are dependent");
    }
    const BigInt& k = x.k();
    std::array<BigInt, 3> t;
    for (std::size_t i = 0; i < 3; ++i) {
        // offsets of p1, q0, q1 relative to p0 along axis i
        const std::array<BigInt, 4> offsets{BigInt(0), x[i], x[i + 6], BigInt(x[i + 6] + x[i + 3])};
        const BigInt lo = -*std::min_element(offsets.begin(), offsets.end());
        const BigInt hi = k - *std::max_element(offsets.begin(), offsets.end());
        if (lo > hi) {
            throw std::domain_error("reconstruct_pair: " + to_string(x.coords()) + " not realizable in [0," +
                                    k.get_str() + "]^3");
        }
        t[i] = lo;
    }
    auto point = [&](std::initializer_list<std::size_t> offsets) {
        std::vector<BigInt> c(t.begin(), t.end());
        for (std::size_t off : offsets) {
            for (std::size_t i = 0; i < 3; ++i) {
                c[i] += x[off + i];
            }
        }
        return LatticePoint(std::move(c), k);
    };
    LatticeSimplex P{point({}), point({0})};
    LatticeSimplex Q{point({6}), point({6, 3})};
    return {std::move(P), std::move(Q)};
}

/// Every hit, embedded at k, realized as segments and canonicalized, must
/// match the canonical key of (P*, Q*) at the same k.
inline Certificate check_star_equivalence(const std::vector<Coords9>& points, long k = 6) {
    const auto [ps, qs] = star_pair(k);
    const CanonicalKey star = canonicalize_pair(ps, qs);
    std::vector<std::string> mismatches;
    std::vector<std::string> matches;
    for (const auto& x : points) {
        try {
            const auto [P, Q] = reconstruct_pair(phi_apply(x, k));
            if (canonicalize_pair(P, Q) == star) {
                matches.push_back(to_string(x) + " -> " + P.str() + " / " + Q.str());
            } else {
                mismatches.push_back(to_string(x) + " -> " + P.str() + " / " + Q.str());
            }
        } catch (const std::exception& e) {
            mismatches.push_back(to_string(x) + ": " + e.what());
        }
    }
    const std::string subject = "qualifying points are symmetric images of (P*, Q*) at k = " + std::to_string(k);
    if (points.empty()) {
        return Certificate::fail(subject, {"no points given"});
    }
    if (!mismatches.empty()) {
        return Certificate::fail(subject, std::move(mismatches));
    }
    return Certificate::pass(subject, std::move(matches), "canonical key " + star.str());
}

/// 5k^4 - 24k^3 + 40k^2 - 28k + 10 > 0 for every positive integer k.
inline PositivityCertificate check_quartic_gap() { return positive_for_all_integers_geq(three_k4_gap_poly(), 1); }

} // namespace kissing

#endif // KISSING_CERTIFY_HPP
