#ifndef KISSING_ENUMERATE_HPP
#define KISSING_ENUMERATE_HPP

// Exhaustive computation of eps(d,k)^2 for small d and k: every lattice
// point/segment, segment/segment or point/triangle pair of [0,k]^d is
// measured exactly and the smallest positive value kept with its
// witnesses, deduplicated by canonical key.

#include "certificate.hpp"
#include "certify.hpp"
#include "geometry.hpp"
#include "symmetry.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace kissing {

enum class PairClass { point_segment, segment_segment, point_triangle };

inline const char* to_string(PairClass c) {
    switch (c) {
    case PairClass::point_segment:
        return "point-segment";
    case PairClass::segment_segment:
        return "segment-segment";
    case PairClass::point_triangle:
        return "point-triangle";
    }
    return "?";
}

inline PairClass parse_pair_class(const std::string& s) {
    for (auto c : {PairClass::point_segment, PairClass::segment_segment, PairClass::point_triangle}) {
        if (s == to_string(c)) {
            return c;
        }
    }
    throw std::invalid_argument("unknown pair class '" + s + "'");
}

inline std::vector<PairClass> default_classes(int d) {
    if (d == 2) {
        return {PairClass::point_segment};
    }
    return {PairClass::segment_segment, PairClass::point_triangle};
}

struct EnumOptions {
    std::vector<PairClass> classes;  // empty: every class relevant to d
    std::uint64_t budget = 10'000'000;
    unsigned workers = 0;  // 0: hardware concurrency
};

struct SimplexPair {
    LatticeSimplex first;
    LatticeSimplex second;
};

struct EpsResult {
    int d = 0;
    long k = 0;
    std::vector<PairClass> classes;
    std::optional<BigRational> eps_squared;  // smallest positive squared distance seen
    std::vector<SimplexPair> witnesses;      // one representative per canonical key, ascending
    std::vector<CanonicalKey> witness_keys;
    std::uint64_t witness_pairs = 0;  // enumerated pairs attaining eps_squared
    std::uint64_t pairs_examined = 0;
    std::uint64_t pairs_total = 0;
    bool complete = false;
};

class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(EpsResult partial)
        : std::runtime_error("pair budget exceeded after " + std::to_string(partial.pairs_examined) + " of " +
                             std::to_string(partial.pairs_total) + " pairs"),
          partial_(std::move(partial)) {}

    const EpsResult& partial() const { return partial_; }

private:
    EpsResult partial_;
};

namespace detail {

template <class Int>
struct LatticeCells {
    std::vector<Vec3<Int>> points;
    std::vector<std::array<std::uint32_t, 2>> segments;
    std::vector<std::array<std::uint32_t, 3>> triangles;
};

template <class Int>
LatticeCells<Int> build_cells(int d, long k, bool need_triangles) {
    LatticeCells<Int> cells;
    const long zmax = d == 3 ? k : 0;
    for (long x = 0; x <= k; ++x) {
        for (long y = 0; y <= k; ++y) {
            for (long z = 0; z <= zmax; ++z) {
                cells.points.push_back({Int(x), Int(y), Int(z)});
            }
        }
    }
    const auto n = static_cast<std::uint32_t>(cells.points.size());
    for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t j = i + 1; j < n; ++j) {
            cells.segments.push_back({i, j});
        }
    }
    if (need_triangles) {
        for (std::uint32_t i = 0; i < n; ++i) {
            for (std::uint32_t j = i + 1; j < n; ++j) {
                for (std::uint32_t l = j + 1; l < n; ++l) {
                    if (!kernel::collinear(cells.points[i], cells.points[j], cells.points[l])) {
                        cells.triangles.push_back({i, j, l});
                    }
                }
            }
        }
    }
    return cells;
}

// One outer index of one class; `count` inner partners from `begin`.
struct WorkUnit {
    PairClass cls;
    std::uint32_t outer;
    std::uint64_t begin;
    std::uint64_t count;
};

struct RawWitness {
    PairClass cls;
    std::uint32_t a;
    std::uint32_t b;
    friend auto operator<=>(const RawWitness&, const RawWitness&) = default;
};

template <class Int>
struct WorkerState {
    bool found = false;
    Ratio<Int> best{Int(0), Int(1)};
    std::vector<RawWitness> witnesses;
    std::uint64_t examined = 0;

    void offer(const Ratio<Int>& r, const RawWitness& w) {
        if (r.num == 0) {
            return;
        }
        if (!found) {
            found = true;
            best = r;
            witnesses.assign(1, w);
            return;
        }
        const int c = kernel::compare(r, best);
        if (c < 0) {
            best = r;
            witnesses.assign(1, w);
        } else if (c == 0) {
            witnesses.push_back(w);
        }
    }
};

template <class Int>
void run_unit(const LatticeCells<Int>& cells, const WorkUnit& u, WorkerState<Int>& st) {
    const auto& pts = cells.points;
    const std::uint64_t end = u.begin + u.count;
    switch (u.cls) {
    case PairClass::point_segment: {
        const auto& p = pts[u.outer];
        for (std::uint64_t j = u.begin; j < end; ++j) {
            const auto& s = cells.segments[j];
            st.offer(kernel::point_segment(p, pts[s[0]], pts[s[1]]),
                     {u.cls, u.outer, static_cast<std::uint32_t>(j)});
        }
        break;
    }
    case PairClass::segment_segment: {
        const auto& s1 = cells.segments[u.outer];
        for (std::uint64_t j = u.begin; j < end; ++j) {
            const auto& s2 = cells.segments[j];
            st.offer(kernel::segment_segment(pts[s1[0]], pts[s1[1]], pts[s2[0]], pts[s2[1]]),
                     {u.cls, u.outer, static_cast<std::uint32_t>(j)});
        }
        break;
    }
    case PairClass::point_triangle: {
        const auto& p = pts[u.outer];
        for (std::uint64_t j = u.begin; j < end; ++j) {
            const auto& t = cells.triangles[j];
            st.offer(kernel::point_triangle(p, pts[t[0]], pts[t[1]], pts[t[2]]),
                     {u.cls, u.outer, static_cast<std::uint32_t>(j)});
        }
        break;
    }
    }
    st.examined += u.count;
}

template <class Int>
std::pair<std::vector<Vec3<Int>>, std::vector<Vec3<Int>>> witness_vertices(const LatticeCells<Int>& cells,
                                                                           const RawWitness& w) {
    const auto& pts = cells.points;
    switch (w.cls) {
    case PairClass::point_segment: {
        const auto& s = cells.segments[w.b];
        return {{pts[w.a]}, {pts[s[0]], pts[s[1]]}};
    }
    case PairClass::segment_segment: {
        const auto& s1 = cells.segments[w.a];
        const auto& s2 = cells.segments[w.b];
        return {{pts[s1[0]], pts[s1[1]]}, {pts[s2[0]], pts[s2[1]]}};
    }
    case PairClass::point_triangle: {
        const auto& t = cells.triangles[w.b];
        return {{pts[w.a]}, {pts[t[0]], pts[t[1]], pts[t[2]]}};
    }
    }
    return {};
}

template <class Int>
BigInt to_big(const Int& v) {
    if constexpr (std::is_same_v<Int, BigInt>) {
        return v;
    } else {
        return BigInt(static_cast<long>(v));
    }
}

template <class Int>
EpsResult eps_scan(int d, long k, const std::vector<PairClass>& classes, std::uint64_t budget, unsigned workers) {
    const bool need_triangles =
        std::find(classes.begin(), classes.end(), PairClass::point_triangle) != classes.end();
    const auto cells = build_cells<Int>(d, k, need_triangles);

    std::vector<WorkUnit> units;
    std::uint64_t total = 0;
    for (PairClass cls : classes) {
        const auto npts = static_cast<std::uint32_t>(cells.points.size());
        const auto nseg = static_cast<std::uint32_t>(cells.segments.size());
        switch (cls) {
        case PairClass::point_segment:
            for (std::uint32_t p = 0; p < npts; ++p) {
                units.push_back({cls, p, 0, nseg});
            }
            break;
        case PairClass::segment_segment:
            for (std::uint32_t i = 0; i + 1 < nseg; ++i) {
                units.push_back({cls, i, std::uint64_t(i) + 1, std::uint64_t(nseg) - i - 1});
            }
            break;
        case PairClass::point_triangle:
            for (std::uint32_t p = 0; p < npts; ++p) {
                units.push_back({cls, p, 0, cells.triangles.size()});
            }
            break;
        }
    }
    for (const auto& u : units) {
        total += u.count;
    }

    // Truncate deterministically at the budget.
    std::uint64_t allowed = std::min(total, budget);
    {
        std::uint64_t acc = 0;
        std::size_t keep = 0;
        for (; keep < units.size() && acc < allowed; ++keep) {
            const std::uint64_t take = std::min(units[keep].count, allowed - acc);
            units[keep].count = take;
            acc += take;
        }
        units.resize(keep);
    }

    if (workers == 0) {
        workers = std::max(1u, std::thread::hardware_concurrency());
    }
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(units.size(), 1)));
    std::vector<WorkerState<Int>> states(workers);
    std::atomic<std::size_t> next{0};
    auto work = [&](WorkerState<Int>& st) {
        for (std::size_t i = next++; i < units.size(); i = next++) {
            run_unit(cells, units[i], st);
        }
    };
    if (workers == 1) {
        work(states[0]);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back(work, std::ref(states[w]));
        }
        for (auto& t : pool) {
            t.join();
        }
    }

    // Deterministic merge: global minimum, then witnesses sorted by key.
    EpsResult out;
    out.d = d;
    out.k = k;
    out.classes = classes;
    out.pairs_total = total;
    std::optional<Ratio<Int>> best;
    for (const auto& st : states) {
        out.pairs_examined += st.examined;
        if (st.found && (!best || kernel::less(st.best, *best))) {
            best = st.best;
        }
    }
    out.complete = out.pairs_examined == total;
    if (!best) {
        return out;
    }
    out.eps_squared = BigRational(to_big(best->num), to_big(best->den));

    std::vector<RawWitness> raw;
    for (const auto& st : states) {
        if (st.found && kernel::compare(st.best, *best) == 0) {
            raw.insert(raw.end(), st.witnesses.begin(), st.witnesses.end());
        }
    }
    std::sort(raw.begin(), raw.end());
    out.witness_pairs = raw.size();

    const auto group = cube_symmetries(static_cast<std::size_t>(d));
    std::set<std::vector<Int>> keys;
    for (const auto& w : raw) {
        const auto [a, b] = witness_vertices(cells, w);
        keys.insert(canonical_key(a, b, Int(k), group));
    }
    for (const auto& key : keys) {
        CanonicalKey big;
        for (const auto& v : key) {
            big.values.push_back(to_big(v));
        }
        auto [first, second] = decode_key(big, static_cast<std::size_t>(d), BigInt(k));
        out.witnesses.push_back({std::move(first), std::move(second)});
        out.witness_keys.push_back(std::move(big));
    }
    return out;
}

// Machine integers are exact for every intermediate of the kernels up to
// this bound (numerators stay below 2^63, cross products below 2^127).
inline constexpr long machine_int_max_k = 24;

} // namespace detail

/// Exact eps(d,k)^2 over the selected pair classes. Throws BudgetExceeded,
/// carrying the partial result, when more than `budget` pairs are needed.
inline EpsResult eps_bruteforce(int d, long k, const EnumOptions& options = {}) {
    if (d != 2 && d != 3) {
        throw std::invalid_argument("eps_bruteforce: d must be 2 or 3");
    }
    if (k < 1) {
        throw std::invalid_argument("eps_bruteforce: k must be positive");
    }
    if (options.budget < 1) {
        throw std::invalid_argument("eps_bruteforce: budget must be positive");
    }
    std::vector<PairClass> classes = options.classes.empty() ? default_classes(d) : options.classes;
    for (PairClass c : classes) {
        const bool ok = d == 2 ? c == PairClass::point_segment : c != PairClass::point_segment;
        if (!ok) {
            throw std::invalid_argument(std::string("eps_bruteforce: class ") + to_string(c) +
                                        " has dimensions not summing to d-1 for d = " + std::to_string(d));
        }
    }
    std::sort(classes.begin(), classes.end());
    classes.erase(std::unique(classes.begin(), classes.end()), classes.end());

    EpsResult result = k <= detail::machine_int_max_k
                           ? detail::eps_scan<std::int64_t>(d, k, classes, options.budget, options.workers)
                           : detail::eps_scan<BigInt>(d, k, classes, options.budget, options.workers);
    if (!result.complete) {
        throw BudgetExceeded(std::move(result));
    }
    return result;
}

/// Number of non-collinear lattice triples of [0,k]^3.
inline std::uint64_t count_lattice_triangles(long k) {
    return detail::build_cells<std::int64_t>(3, k, true).triangles.size();
}

struct GapReport {
    Certificate certificate;
    BigRational segment_eps_squared;
    std::optional<BigRational> point_triangle_min;
    std::uint64_t triangles = 0;
};

/// Every point outside a lattice triangle of [0,k]^3 lies strictly farther
/// from it than the closest pair of disjoint lattice segments.
inline GapReport check_point_triangle_gap(long k, EnumOptions options = {}) {
    GapReport out;
    options.classes = {PairClass::segment_segment};
    const EpsResult seg = eps_bruteforce(3, k, options);
    options.classes = {PairClass::point_triangle};
    const EpsResult tri = eps_bruteforce(3, k, options);
    out.segment_eps_squared = *seg.eps_squared;
    out.point_triangle_min = tri.eps_squared;
    out.triangles = count_lattice_triangles(k);
    const std::string subject = "point-triangle gap exceeds eps(3," + std::to_string(k) + ")";
    const std::string values = "min point-triangle " +
                               (tri.eps_squared ? tri.eps_squared->str() : std::string("none")) +
                               ", segment eps " + seg.eps_squared->str();
    if (!tri.eps_squared || *seg.eps_squared < *tri.eps_squared) {
        out.certificate = Certificate::pass(subject, {values}, std::to_string(out.triangles) + " triangles");
    } else {
        std::vector<std::string> w{values};
        for (const auto& p : tri.witnesses) {
            w.push_back(p.first.str() + " / " + p.second.str());
        }
        out.certificate = Certificate::fail(subject, std::move(w));
    }
    return out;
}

struct ClosedFormRow {
    long k;
    BigRational brute_force;
    BigRational formula;
};

struct ClosedFormReport {
    Certificate certificate;
    std::vector<ClosedFormRow> rows;
};

/// Brute force against 1/(2(2k^2-4k+5)(2k^2-2k+1)) for k = 1..max_k: equal
/// everywhere except k = 3, where the closed form must fail.
inline ClosedFormReport verify_theorem1_smallk(long max_k = 3, const EnumOptions& options = {}) {
    ClosedFormReport out;
    std::vector<std::string> lines;
    bool ok = true;
    for (long k = 1; k <= max_k; ++k) {
        EnumOptions o = options;
        o.classes = default_classes(3);
        const EpsResult r = eps_bruteforce(3, k, o);
        ClosedFormRow row{k, *r.eps_squared, closed_form_sq_value(k)};
        const bool equal = row.brute_force == row.formula;
        const bool expected = k != 3;
        ok = ok && equal == expected;
        lines.push_back("k=" + std::to_string(k) + ": brute force " + row.brute_force.str() + (equal ? " == " : " != ") +
                        "formula " + row.formula.str() + (equal == expected ? "" : "  <-- unexpected"));
        out.rows.push_back(std::move(row));
    }
    const std::string subject = "closed form for eps(3,k)^2 against brute force at k = 1.." + std::to_string(max_k) +
                                ": equal except at k = 3";
    out.certificate = ok ? Certificate::pass(subject, std::move(lines)) : Certificate::fail(subject, std::move(lines));
    return out;
}

struct EpsTableRow {
    int d;
    long k;
    BigRational expected;
    std::optional<BigRational> computed;
};

/// Known eps(d,k)^2 for d = 2 (k <= 4) and d = 3 (k <= 3).
inline std::vector<EpsTableRow> eps_table_expected() {
    return {
        {2, 1, BigRational(1, 2), {}},   {2, 2, BigRational(1, 5), {}},   {2, 3, BigRational(1, 13), {}},
        {2, 4, BigRational(1, 25), {}},  {3, 1, BigRational(1, 6), {}},   {3, 2, BigRational(1, 50), {}},
        {3, 3, BigRational(1, 299), {}},
    };
}

struct EpsTableReport {
    Certificate certificate;
    std::vector<EpsTableRow> rows;
};

inline EpsTableReport reproduce_eps_table(const EnumOptions& options = {}) {
    EpsTableReport out;
    out.rows = eps_table_expected();
    std::vector<std::string> lines;
    bool ok = true;
    for (auto& row : out.rows) {
        EnumOptions o = options;
        o.classes = default_classes(row.d);
        row.computed = eps_bruteforce(row.d, row.k, o).eps_squared;
        const bool match = row.computed && *row.computed == row.expected;
        ok = ok && match;
        lines.push_back("d=" + std::to_string(row.d) + " k=" + std::to_string(row.k) + ": 1/eps = " +
                        surd_from_squared(BigRational(1) / *row.computed) + " (eps^2 = " + row.computed->str() +
                        (match ? ")" : ", expected " + row.expected.str() + ")"));
    }
    out.certificate = ok ? Certificate::pass("eps(d,k) table for d <= 3", std::move(lines))
                         : Certificate::fail("eps(d,k) table for d <= 3", std::move(lines));
    return out;
}

} // namespace kissing

#endif // KISSING_ENUMERATE_HPP
