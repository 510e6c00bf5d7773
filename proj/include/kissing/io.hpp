#ifndef KISSING_IO_HPP
#define KISSING_IO_HPP

// Reading simplex pairs and writing the line-delimited structured report.
//
// Simplex file:
//     d k            header
//     x y z          one vertex per line
//     <blank line>   separates the two simplices
//
// Structured report: JSON Lines. The first line is the header
// {"command":...,"schema":"kissing-report","version":1}; every following
// line is one object with a "type" member (eps, witness, certificate,
// distance, eps-table-row, closed-form-row, extremal-point). Rationals are "p/q" strings.

#include "certificate.hpp"
#include "enumerate.hpp"
#include "geometry.hpp"
#include "json.hpp"

#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace kissing {

// ---------------------------------------------------------------------------
// Simplex input

namespace detail {

inline std::vector<BigInt> parse_ints(const std::string& line, char sep) {
    std::vector<BigInt> out;
    std::string cell;
    std::istringstream is(line);
    while (std::getline(is, cell, sep)) {
        std::istringstream cs(cell);
        std::string tok;
        while (cs >> tok) {
            try {
                out.emplace_back(tok);
            } catch (const std::invalid_argument&) {
                throw std::invalid_argument("malformed integer '" + tok + "'");
            }
        }
    }
    return out;
}

inline LatticeSimplex simplex_from_rows(const std::vector<std::vector<BigInt>>& rows, std::size_t d,
                                        const BigInt& k) {
    std::vector<LatticePoint> verts;
    for (const auto& r : rows) {
        if (r.size() != d) {
            throw std::invalid_argument("vertex has " + std::to_string(r.size()) + " coordinates, expected " +
                                        std::to_string(d));
        }
        verts.emplace_back(r, k);
    }
    return LatticeSimplex(std::move(verts));
}

} // namespace detail

/// Parses the simplex file format described above.
inline std::pair<LatticeSimplex, LatticeSimplex> read_simplex_pair(std::istream& in) {
    std::string line;
    std::vector<BigInt> header;
    while (header.empty() && std::getline(in, line)) {
        header = detail::parse_ints(line, ' ');
    }
    if (header.size() != 2) {
        throw std::invalid_argument("simplex file: expected header line 'd k'");
    }
    const auto d = header[0].get_ui();
    const BigInt k = header[1];
    if (header[0] != 2 && header[0] != 3) {
        throw std::invalid_argument("simplex file: d must be 2 or 3");
    }
    std::vector<std::vector<std::vector<BigInt>>> groups(1);
    while (std::getline(in, line)) {
        auto row = detail::parse_ints(line, ' ');
        if (row.empty()) {
            if (!groups.back().empty()) {
                groups.emplace_back();
            }
            continue;
        }
        groups.back().push_back(std::move(row));
    }
    if (groups.back().empty()) {
        groups.pop_back();
    }
    if (groups.size() != 2) {
        throw std::invalid_argument("simplex file: expected two vertex blocks separated by a blank line, got " +
                                    std::to_string(groups.size()));
    }
    return {detail::simplex_from_rows(groups[0], d, k), detail::simplex_from_rows(groups[1], d, k)};
}

/// "x,y,z;x,y,z" as used by the --p/--q flags.
inline LatticeSimplex parse_simplex_flag(const std::string& text, std::size_t d, const BigInt& k) {
    std::vector<std::vector<BigInt>> rows;
    std::istringstream is(text);
    std::string vertex;
    while (std::getline(is, vertex, ';')) {
        auto row = detail::parse_ints(vertex, ',');
        if (!row.empty()) {
            rows.push_back(std::move(row));
        }
    }
    if (rows.empty()) {
        throw std::invalid_argument("empty simplex '" + text + "'");
    }
    return detail::simplex_from_rows(rows, d, k);
}

// ---------------------------------------------------------------------------
// Structured report

using Json = nlohmann::json;

class StructuredReport {
public:
    static constexpr const char* schema = "kissing-report";
    static constexpr int version = 1;

    explicit StructuredReport(std::string command) : command_(std::move(command)) {}

    const std::string& command() const { return command_; }
    const std::vector<Json>& records() const { return records_; }

    void add(Json record) {
        if (!record.is_object() || !record.contains("type")) {
            throw std::invalid_argument("report record must be an object with a 'type'");
        }
        records_.push_back(std::move(record));
    }

    std::string serialize() const {
        std::string out = Json{{"schema", schema}, {"version", version}, {"command", command_}}.dump();
        out += '\n';
        for (const auto& r : records_) {
            out += r.dump();
            out += '\n';
        }
        return out;
    }

    static StructuredReport parse(std::string_view text) {
        std::istringstream is{std::string(text)};
        std::string line;
        if (!std::getline(is, line)) {
            throw std::invalid_argument("report: empty input");
        }
        const Json header = Json::parse(line);
        if (header.value("schema", "") != schema || header.value("version", 0) != version) {
            throw std::invalid_argument("report: unsupported schema or version");
        }
        StructuredReport rep(header.at("command").get<std::string>());
        while (std::getline(is, line)) {
            if (!line.empty()) {
                rep.add(Json::parse(line));
            }
        }
        return rep;
    }

private:
    std::string command_;
    std::vector<Json> records_;
};

inline Json to_json(const LatticeSimplex& s) {
    Json verts = Json::array();
    for (const auto& v : s.vertices()) {
        Json c = Json::array();
        for (const auto& x : v.coords()) {
            c.push_back(x.get_si());
        }
        verts.push_back(std::move(c));
    }
    return verts;
}

inline Json to_json(const Certificate& c) {
    return {{"type", "certificate"},
            {"subject", c.subject},
            {"verdict", to_string(c.verdict)},
            {"witnesses", c.witnesses},
            {"notes", c.notes}};
}

inline void add_eps_result(StructuredReport& rep, const EpsResult& r) {
    Json classes = Json::array();
    for (auto c : r.classes) {
        classes.push_back(to_string(c));
    }
    rep.add({{"type", "eps"},
             {"d", r.d},
             {"k", r.k},
             {"classes", classes},
             {"eps_squared", r.eps_squared ? r.eps_squared->str() : std::string()},
             {"distance", r.eps_squared ? surd_from_squared(*r.eps_squared) : std::string()},
             {"complete", r.complete},
             {"pairs_examined", r.pairs_examined},
             {"pairs_total", r.pairs_total},
             {"witness_pairs", r.witness_pairs}});
    for (std::size_t i = 0; i < r.witnesses.size(); ++i) {
        rep.add({{"type", "witness"},
                 {"index", i},
                 {"first", to_json(r.witnesses[i].first)},
                 {"second", to_json(r.witnesses[i].second)},
                 {"key", r.witness_keys[i].str()}});
    }
}

} // namespace kissing

#endif // KISSING_IO_HPP
