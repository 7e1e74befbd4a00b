#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ild/plmap.hpp"

namespace ild {

// Textual map definition. Line-oriented, UTF-8, '#' starts a comment:
//
//   map <name>
//   meta <key> <value ...>
//   point <x> <y>
//
// Rationals are written "p/q" or "p"; decimal literals are rejected so that
// documents stay exact by construction. Breakpoints may appear in any order
// and are sorted on parse. File extension: .ildmap
struct MapSpecDocument {
    std::string name;
    std::vector<std::pair<Rat, Rat>> breakpoints;  // sorted by x
    std::map<std::string, std::string> metadata;   // sorted by key

    PLMap to_map() const { return PLMap::create(breakpoints); }

    bool operator==(const MapSpecDocument& o) const {
        return name == o.name && breakpoints == o.breakpoints && metadata == o.metadata;
    }
};

// Backward-orbit specification: coordinates (x_0, x_1, ...) of a point of the
// inverse limit, as a finite prefix plus an optional eventually-periodic tail
// x_{m+1+j} = cycle[j mod L]. Map consistency f(x_{k+1}) = x_k is validated
// at use time, not at parse time, so one orbit file can be tried against
// several maps. File extension: .ildorbit
struct OrbitSpec {
    std::vector<Rat> prefix;  // x_0 ... x_m, never empty
    std::vector<Rat> cycle;   // empty means the orbit is only finitely specified

    bool has_tail() const { return !cycle.empty(); }

    // Number of coordinates available (infinite with a tail).
    long long coord_count() const {
        return has_tail() ? -1 : static_cast<long long>(prefix.size());
    }
    bool long_enough(long long k) const {
        return has_tail() || static_cast<long long>(prefix.size()) > k;
    }

    const Rat& coord(long long k) const {
        if (k < static_cast<long long>(prefix.size())) return prefix[static_cast<std::size_t>(k)];
        if (!has_tail())
            throw OrbitTooShort(static_cast<long long>(prefix.size()), k + 1);
        long long j = (k - static_cast<long long>(prefix.size())) %
                      static_cast<long long>(cycle.size());
        return cycle[static_cast<std::size_t>(j)];
    }

    // All coordinate values that ever occur.
    std::vector<Rat> distinct_coords() const {
        std::vector<Rat> v = prefix;
        v.insert(v.end(), cycle.begin(), cycle.end());
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
        return v;
    }

    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < prefix.size(); ++i) {
            if (i) s += ", ";
            s += rat_to_string(prefix[i]);
        }
        if (has_tail()) {
            s += " | cycle: ";
            for (std::size_t i = 0; i < cycle.size(); ++i) {
                if (i) s += ", ";
                s += rat_to_string(cycle[i]);
            }
        }
        return s;
    }

    bool operator==(const OrbitSpec& o) const {
        return prefix == o.prefix && cycle == o.cycle;
    }
};

namespace detail {

inline std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || text[i] == '\n') {
            std::string_view line = text.substr(start, i - start);
            if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
            lines.push_back(line);
            start = i + 1;
        }
    }
    if (!lines.empty() && lines.back().empty()) lines.pop_back();
    return lines;
}

struct Token {
    std::string_view text;
    std::size_t column;  // 1-based
};

inline std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> toks;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == '#') break;
        if (line[i] == ' ' || line[i] == '\t') {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '#') ++i;
        toks.push_back(Token{line.substr(start, i - start), start + 1});
    }
    return toks;
}

inline bool valid_identifier(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
                  c == '_' || c == '-' || c == '@' || c == '.';
        if (!ok) return false;
    }
    return true;
}

inline Rat parse_rat_at(const Token& tok, int line_no) {
    RatParseResult r = try_parse_rat(tok.text);
    if (!r.value)
        throw ParseError(line_no, static_cast<int>(tok.column + r.error_pos), r.error);
    return *std::move(r.value);
}

}  // namespace detail

inline MapSpecDocument parse_map(std::string_view text) {
    MapSpecDocument doc;
    bool saw_map = false;
    auto lines = detail::split_lines(text);
    for (std::size_t ln = 0; ln < lines.size(); ++ln) {
        int line_no = static_cast<int>(ln + 1);
        auto toks = detail::tokenize(lines[ln]);
        if (toks.empty()) continue;
        std::string_view verb = toks[0].text;
        if (verb == "map") {
            if (toks.size() != 2)
                throw ParseError(line_no, static_cast<int>(toks[0].column),
                                 "expected: map <name>");
            if (saw_map) throw ParseError(line_no, static_cast<int>(toks[0].column),
                                          "duplicate map header");
            if (!detail::valid_identifier(toks[1].text))
                throw ParseError(line_no, static_cast<int>(toks[1].column), "invalid map name");
            doc.name = std::string(toks[1].text);
            saw_map = true;
        } else if (verb == "point") {
            if (toks.size() != 3)
                throw ParseError(line_no, static_cast<int>(toks[0].column),
                                 "expected: point <x> <y>");
            Rat x = detail::parse_rat_at(toks[1], line_no);
            Rat y = detail::parse_rat_at(toks[2], line_no);
            doc.breakpoints.emplace_back(std::move(x), std::move(y));
        } else if (verb == "meta") {
            if (toks.size() < 3)
                throw ParseError(line_no, static_cast<int>(toks[0].column),
                                 "expected: meta <key> <value>");
            std::string value;
            for (std::size_t i = 2; i < toks.size(); ++i) {
                if (i > 2) value += " ";
                value += std::string(toks[i].text);
            }
            doc.metadata[std::string(toks[1].text)] = value;
        } else {
            throw ParseError(line_no, static_cast<int>(toks[0].column),
                             "unknown directive '" + std::string(verb) + "'");
        }
    }
    if (!saw_map) throw ParseError(1, 1, "missing map header");

    std::sort(doc.breakpoints.begin(), doc.breakpoints.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    // PLMap::create enforces range/surjectivity/flatness; documents are
    // additionally required to be corner-exact (no collinear triple), since
    // a normalizing round-trip would not be the identity.
    for (std::size_t i = 1; i + 1 < doc.breakpoints.size(); ++i) {
        const auto& a = doc.breakpoints[i - 1];
        const auto& b = doc.breakpoints[i];
        const auto& c = doc.breakpoints[i + 1];
        if ((b.second - a.second) * (c.first - a.first) ==
            (c.second - a.second) * (b.first - a.first))
            throw SpecError("collinear interior breakpoint at x = " + rat_to_string(b.first));
    }
    doc.to_map();  // validation only
    return doc;
}

// Canonical serialization: LF line endings, header first, metadata sorted by
// key, breakpoints sorted by x. parse(serialize(d)) == d, and serialization
// of a parsed canonical document is byte-identical to the input.
inline std::string serialize_map(const MapSpecDocument& doc) {
    std::string out = "map " + doc.name + "\n";
    for (const auto& [k, v] : doc.metadata) out += "meta " + k + " " + v + "\n";
    for (const auto& [x, y] : doc.breakpoints)
        out += "point " + rat_to_string(x) + " " + rat_to_string(y) + "\n";
    return out;
}

// Comma-separated coordinates with an optional "| cycle: a, b, ..." suffix.
inline OrbitSpec parse_orbit_text(std::string_view text) {
    OrbitSpec orbit;
    std::string flat;
    for (char c : text) flat += (c == '\n' || c == '\r' || c == '\t') ? ' ' : c;

    auto bar = flat.find('|');
    std::string head = flat.substr(0, bar);
    std::string tail = bar == std::string::npos ? "" : flat.substr(bar + 1);

    auto parse_list = [](const std::string& s, std::vector<Rat>& out, std::size_t offset) {
        std::size_t pos = 0;
        while (pos <= s.size()) {
            std::size_t comma = s.find(',', pos);
            std::string item = s.substr(pos, comma == std::string::npos ? std::string::npos
                                                                        : comma - pos);
            std::size_t b = item.find_first_not_of(" \t");
            std::size_t e = item.find_last_not_of(" \t");
            if (b == std::string::npos)
                throw ParseError(1, static_cast<int>(offset + pos + 1), "empty orbit entry");
            RatParseResult r = try_parse_rat(std::string_view(item).substr(b, e - b + 1));
            if (!r.value)
                throw ParseError(1, static_cast<int>(offset + pos + b + 1 + r.error_pos),
                                 r.error);
            out.push_back(*std::move(r.value));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
    };

    parse_list(head, orbit.prefix, 0);
    if (bar != std::string::npos) {
        std::size_t b = tail.find_first_not_of(" \t");
        if (b == std::string::npos || tail.compare(b, 6, "cycle:") != 0)
            throw ParseError(1, static_cast<int>(bar + 2), "expected 'cycle:' after '|'");
        parse_list(tail.substr(b + 6), orbit.cycle, bar + 1 + b + 6);
    }
    return orbit;
}

// Validates every backward link f(x_k) = x_{k-1}, including the cycle seam
// and the wrap-around. Throws ConsistencyError naming the first violated
// link k (the index of the coordinate being consumed).
inline void validate_orbit(const OrbitSpec& orbit, const PLMap& f) {
    auto check = [&](const Rat& from, const Rat& to, long long k) {
        Rat got = f.eval(from);
        if (got != to)
            throw ConsistencyError(k, "f(" + rat_to_string(from) + ") = " + rat_to_string(got) +
                                          " != " + rat_to_string(to));
    };
    long long m = static_cast<long long>(orbit.prefix.size()) - 1;
    for (long long k = 1; k <= m; ++k)
        check(orbit.prefix[static_cast<std::size_t>(k)],
              orbit.prefix[static_cast<std::size_t>(k - 1)], k);
    if (orbit.has_tail()) {
        long long L = static_cast<long long>(orbit.cycle.size());
        check(orbit.cycle[0], orbit.prefix.back(), m + 1);
        for (long long j = 1; j < L; ++j)
            check(orbit.cycle[static_cast<std::size_t>(j)],
                  orbit.cycle[static_cast<std::size_t>(j - 1)], m + 1 + j);
        check(orbit.cycle[0], orbit.cycle.back(), m + 1 + L);
    }
}

inline OrbitSpec parse_orbit(std::string_view text, const PLMap& f) {
    OrbitSpec orbit = parse_orbit_text(text);
    validate_orbit(orbit, f);
    return orbit;
}

}  // namespace ild
