#ifndef KISSING_CLI_HPP
#define KISSING_CLI_HPP

// Command dispatcher behind the `kissing` executable. Kept in a header so
// tests can drive it with string streams.
//
// Exit status: 0 when everything requested passed, 1 when a certificate
// failed or the pair budget ran out, 2 on usage or input errors.

#include "certify.hpp"
#include "enumerate.hpp"
#include "io.hpp"
#include "model.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace kissing::cli {

inline constexpr int exit_pass = 0;
inline constexpr int exit_fail = 1;
inline constexpr int exit_usage = 2;

struct RunConfig {
    std::string command;
    int d = 3;
    long k = 0;
    std::vector<std::string> classes;
    std::uint64_t budget = 10'000'000;
    unsigned workers = 0;
    std::string format = "text";
    std::string out;

    // certify
    bool prop1 = false;
    bool prop2 = false;
    bool prop31 = false;
    bool table1 = false;
    bool equiv = false;
    bool gap = false;
    bool all = false;

    // distance
    std::string p;
    std::string q;
    std::string input;
};

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

namespace detail {

inline bool structured(const RunConfig& c) { return c.format == "structured"; }

inline EnumOptions enum_options(const RunConfig& c) {
    EnumOptions o;
    for (const auto& s : c.classes) {
        o.classes.push_back(parse_pair_class(s));
    }
    o.budget = c.budget;
    o.workers = c.workers;
    return o;
}

inline void print_certificate(std::ostream& os, const Certificate& c, std::size_t max_witnesses = 50) {
    os << (c.passed() ? "PASS  " : "FAIL  ") << c.subject << '\n';
    if (!c.notes.empty()) {
        os << "      " << c.notes << '\n';
    }
    for (std::size_t i = 0; i < c.witnesses.size() && i < max_witnesses; ++i) {
        os << "      " << c.witnesses[i] << '\n';
    }
    if (max_witnesses > 0 && c.witnesses.size() > max_witnesses) {
        os << "      ... " << c.witnesses.size() - max_witnesses << " more\n";
    }
}

inline Json coords_json(const Coords9& x) {
    Json a = Json::array();
    for (const auto& v : x) {
        a.push_back(v.get_si());
    }
    return a;
}

inline void print_eps(std::ostream& os, const EpsResult& r) {
    const std::string name = "eps(" + std::to_string(r.d) + "," + std::to_string(r.k) + ")";
    if (!r.complete) {
        os << "INCOMPLETE: pair budget exhausted, values below are partial\n";
    }
    os << "classes: ";
    for (std::size_t i = 0; i < r.classes.size(); ++i) {
        os << (i ? ", " : "") << to_string(r.classes[i]);
    }
    os << '\n';
    os << "pairs examined: " << r.pairs_examined << " of " << r.pairs_total << '\n';
    if (!r.eps_squared) {
        os << name << ": no disjoint pair found\n";
        return;
    }
    os << name << "^2 = " << r.eps_squared->str() << '\n';
    os << name << " = " << surd_from_squared(*r.eps_squared) << '\n';
    os << "witness pairs: " << r.witness_pairs << " (" << r.witnesses.size() << " up to symmetry)\n";
    for (std::size_t i = 0; i < r.witnesses.size(); ++i) {
        os << "  " << r.witnesses[i].first.str() << "  /  " << r.witnesses[i].second.str() << "    [key "
           << r.witness_keys[i].str() << "]\n";
    }
}

inline void emit(const RunConfig& c, const std::string& text, std::ostream& out) {
    if (c.out.empty()) {
        out << text;
        return;
    }
    std::ofstream f(c.out, std::ios::binary);
    if (!f) {
        throw UsageError("cannot open output file '" + c.out + "'");
    }
    f << text;
}

} // namespace detail

inline int cmd_eps(const RunConfig& c, std::ostream& out) {
    if (c.k < 1) {
        throw UsageError("--k must be at least 1");
    }
    EpsResult result;
    int status = exit_pass;
    try {
        result = eps_bruteforce(c.d, c.k, detail::enum_options(c));
    } catch (const BudgetExceeded& e) {
        result = e.partial();
        status = exit_fail;
    }
    std::ostringstream text;
    if (detail::structured(c)) {
        StructuredReport rep("eps");
        add_eps_result(rep, result);
        text << rep.serialize();
    } else {
        detail::print_eps(text, result);
    }
    detail::emit(c, text.str(), out);
    return status;
}

inline int cmd_certify(const RunConfig& c, std::ostream& out) {
    RunConfig sel = c;
    if (!(sel.prop1 || sel.prop2 || sel.prop31 || sel.table1 || sel.equiv || sel.gap)) {
        sel.all = true;
    }
    if (sel.all) {
        sel.prop1 = sel.prop2 = sel.prop31 = sel.table1 = sel.equiv = true;
    }
    StructuredReport rep("certify");
    std::ostringstream text;
    bool ok = true;
    auto record = [&](const Certificate& cert, Json extra = Json::object()) {
        ok = ok && cert.passed();
        Json j = to_json(cert);
        j.update(extra);
        rep.add(std::move(j));
        detail::print_certificate(text, cert);
    };

    if (sel.prop1) {
        const auto r = check_prop1(gen_B());
        record(r.certificate, {{"points", r.points_checked},
                               {"max_root_upper", r.max_root_upper ? r.max_root_upper->str() : ""},
                               {"min_value_at_k0", r.min_value_at_k0 ? r.min_value_at_k0->get_str() : ""}});
    }
    std::vector<Coords9> hits;
    if (sel.prop2 || sel.equiv) {
        const auto r = search_prop2(gen_A());
        for (const auto& h : r.hits) {
            hits.push_back(h.x);
        }
        if (sel.prop2) {
            record(r.certificate, {{"points", r.points_searched}, {"hits", r.hits.size()}});
            for (const auto& h : r.hits) {
                rep.add({{"type", "extremal-point"},
                         {"x", detail::coords_json(h.x)},
                         {"f", h.polys.f.str()},
                         {"g", h.polys.g.str()},
                         {"k", h.qualifying_k.str()}});
            }
        }
    }
    if (sel.equiv) {
        record(check_star_equivalence(hits, 6));
    }
    if (sel.prop31) {
        const auto r = check_quartic_gap();
        Json roots = Json::array();
        for (const auto& iv : r.roots.intervals) {
            roots.push_back(iv.str());
        }
        record(r.certificate, {{"root_intervals", roots}});
    }
    if (sel.table1) {
        EnumOptions o = detail::enum_options(c);
        o.classes.clear();
        const auto r = verify_theorem1_smallk(3, o);
        record(r.certificate);
        for (const auto& row : r.rows) {
            rep.add({{"type", "closed-form-row"},
                     {"k", row.k},
                     {"brute_force", row.brute_force.str()},
                     {"formula", row.formula.str()}});
        }
    }
    if (sel.gap) {
        EnumOptions o = detail::enum_options(c);
        for (long k = 1; k <= 3; ++k) {
            record(check_point_triangle_gap(k, o).certificate);
        }
    }
    text << (ok ? "all certificates passed\n" : "some certificates FAILED\n");
    detail::emit(c, detail::structured(c) ? rep.serialize() : text.str(), out);
    return ok ? exit_pass : exit_fail;
}

inline int cmd_table1(const RunConfig& c, std::ostream& out) {
    EnumOptions o = detail::enum_options(c);
    o.classes.clear();
    const auto r = reproduce_eps_table(o);
    std::ostringstream text;
    StructuredReport rep("table1");
    text << "  d  k  eps^2       1/eps\n";
    for (const auto& row : r.rows) {
        const std::string sq = row.computed ? row.computed->str() : "-";
        const std::string inv = row.computed ? surd_from_squared(BigRational(1) / *row.computed) : "-";
        text << "  " << row.d << "  " << row.k << "  " << sq << std::string(sq.size() < 10 ? 10 - sq.size() : 1, ' ')
             << "  " << inv << (row.computed && *row.computed == row.expected ? "" : "   expected " + row.expected.str())
             << '\n';
        rep.add({{"type", "eps-table-row"},
                 {"d", row.d},
                 {"k", row.k},
                 {"eps_squared", sq},
                 {"expected", row.expected.str()}});
    }
    rep.add(to_json(r.certificate));
    detail::print_certificate(text, r.certificate, 0);
    detail::emit(c, detail::structured(c) ? rep.serialize() : text.str(), out);
    return r.certificate.passed() ? exit_pass : exit_fail;
}

inline int cmd_distance(const RunConfig& c, std::ostream& out) {
    std::optional<std::pair<LatticeSimplex, LatticeSimplex>> pair;
    if (!c.input.empty()) {
        std::ifstream f(c.input);
        if (!f) {
            throw UsageError("cannot read '" + c.input + "'");
        }
        pair = read_simplex_pair(f);
    } else {
        if (c.p.empty() || c.q.empty()) {
            throw UsageError("distance needs --input FILE or both --p and --q");
        }
        if (c.k < 1) {
            throw UsageError("--k must be at least 1");
        }
        pair.emplace(parse_simplex_flag(c.p, static_cast<std::size_t>(c.d), c.k),
                     parse_simplex_flag(c.q, static_cast<std::size_t>(c.d), c.k));
    }
    const auto& [P, Q] = *pair;
    const SqDistance dist = sq_dist(P, Q);

    std::ostringstream text;
    Json rec{{"type", "distance"},
             {"d", P.dim()},
             {"k", P.k().get_si()},
             {"first", to_json(P)},
             {"second", to_json(Q)},
             {"squared_distance", dist.value.str()},
             {"disjoint", !dist.intersecting()}};
    text << "P = " << P.str() << '\n' << "Q = " << Q.str() << '\n';
    text << "squared distance: " << dist.value.str();
    text << (dist.intersecting() ? "  (not disjoint)\n" : "\n");
    if (!dist.intersecting()) {
        text << "distance: " << surd_from_squared(dist.value) << '\n';
    }
    if (P.dim() == 3 && P.dimension() + Q.dimension() == 2) {
        const XPoint x = encode_pair(P, Q);
        const BigInt f = f_val(x);
        const BigInt g = g_val(x);
        const SetTag tag = classify(x);
        text << "encoding x = " << to_string(x.coords()) << '\n';
        text << "f = " << f.get_str() << ", g = " << g.get_str() << ", h = " << h_val(x).get_str() << '\n';
        text << "in Y(k): " << (tag.in_Y ? "yes" : "no") << ", in Z(k): " << (tag.in_Z ? "yes" : "no") << '\n';
        rec["encoding"] = detail::coords_json(x.coords());
        rec["f"] = f.get_str();
        rec["g"] = g.get_str();
        rec["h"] = h_val(x).get_str();
        rec["in_Y"] = tag.in_Y;
        rec["in_Z"] = tag.in_Z;
        if (g > 0) {
            const auto hull = sq_dist_affine_hulls(x);
            text << "affine hull squared distance f^2/g = " << hull.value.str() << '\n';
            rec["affine_hull_squared_distance"] = hull.value.str();
        }
    } else {
        text << "encoding: not applicable (needs d = 3 and dimensions summing to 2)\n";
    }
    StructuredReport rep("distance");
    rep.add(std::move(rec));
    detail::emit(c, detail::structured(c) ? rep.serialize() : text.str(), out);
    return exit_pass;
}

inline int run(const RunConfig& c, std::ostream& out) {
    if (c.format != "text" && c.format != "structured") {
        throw UsageError("--format must be text or structured");
    }
    if (c.d != 2 && c.d != 3) {
        throw UsageError("--d must be 2 or 3");
    }
    if (c.budget < 1) {
        throw UsageError("--budget must be at least 1");
    }
    if (c.command == "eps") {
        return cmd_eps(c, out);
    }
    if (c.command == "certify") {
        return cmd_certify(c, out);
    }
    if (c.command == "table1") {
        return cmd_table1(c, out);
    }
    if (c.command == "distance") {
        return cmd_distance(c, out);
    }
    throw UsageError("unknown command '" + c.command + "'");
}

/// Parses argv and runs the selected command.
inline int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact minimal distances between disjoint lattice simplices"};
    app.require_subcommand(1);
    RunConfig c;

    auto common = [&c](CLI::App* sub) {
        sub->add_option("--format", c.format, "text or structured")->check(CLI::IsMember({"text", "structured"}));
        sub->add_option("--out", c.out, "write the report to PATH instead of stdout");
    };
    auto enumeration = [&c](CLI::App* sub) {
        sub->add_option("--budget", c.budget, "maximum number of simplex pairs to examine");
        sub->add_option("--workers", c.workers, "worker threads (0: machine parallelism)");
    };

    auto* eps = app.add_subcommand("eps", "brute-force eps(d,k)");
    eps->add_option("--d", c.d, "dimension, 2 or 3")->check(CLI::IsMember({2, 3}));
    eps->add_option("--k", c.k, "side length of the cube")->required();
    eps->add_option("--classes", c.classes, "point-segment,segment-segment,point-triangle")->delimiter(',');
    enumeration(eps);
    common(eps);

    auto* certify = app.add_subcommand("certify", "run certificate checks (all when no flag is given)");
    certify->add_flag("--prop1", c.prop1, "gap polynomial positive on B for k >= 6");
    certify->add_flag("--prop2", c.prop2, "search of A for extremal points");
    certify->add_flag("--equiv", c.equiv, "extremal points are images of (P*, Q*)");
    certify->add_flag("--prop31", c.prop31, "5k^4 - 24k^3 + 40k^2 - 28k + 10 > 0 for k >= 1");
    certify->add_flag("--table1", c.table1, "closed form against brute force for k <= 3");
    certify->add_flag("--gap", c.gap, "point-triangle distances exceed eps(3,k) for k <= 3");
    certify->add_flag("--all", c.all, "every check except --gap");
    enumeration(certify);
    common(certify);

    auto* table1 = app.add_subcommand("table1", "eps(d,k) for d = 2, k <= 4 and d = 3, k <= 3");
    enumeration(table1);
    common(table1);

    auto* distance = app.add_subcommand("distance", "exact distance between two lattice simplices");
    distance->add_option("--d", c.d, "dimension, 2 or 3")->check(CLI::IsMember({2, 3}));
    distance->add_option("--k", c.k, "side length of the cube");
    distance->add_option("--p", c.p, "first simplex, e.g. \"0,0,0;1,2,2\"");
    distance->add_option("--q", c.q, "second simplex");
    distance->add_option("--input", c.input, "simplex file: header 'd k', one vertex per line, blank line between");
    common(distance);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_pass : exit_usage;
    }
    for (auto* sub : app.get_subcommands()) {
        c.command = sub->get_name();
    }
    try {
        return run(c, out);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
}

} // namespace kissing::cli

#endif // KISSING_CLI_HPP
