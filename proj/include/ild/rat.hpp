#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "ild/errors.hpp"

namespace ild {

// Exact rational scalar. Stored in lowest terms with positive denominator;
// all arithmetic is exact, no rounding anywhere in the engine.
using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Rat rat(long long num, long long den = 1) { return Rat(num, den); }

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }
inline const Rat& rat_min(const Rat& a, const Rat& b) { return a < b ? a : b; }
inline const Rat& rat_max(const Rat& a, const Rat& b) { return a < b ? b : a; }
inline int rat_sign(const Rat& r) { return r < 0 ? -1 : (r > 0 ? 1 : 0); }

// Wire format: "p/q" or "p" (q omitted when 1).
inline std::string rat_to_string(const Rat& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
        s += "/";
        s += denominator(r).str();
    }
    return s;
}

struct RatParseResult {
    std::optional<Rat> value;
    std::string error;      // set when !value
    std::size_t error_pos = 0;  // 0-based offset into the input
};

// Accepts an optional sign, digits, and an optional "/digits" suffix.
// Decimal literals are rejected on purpose: the wire format is exact.
inline RatParseResult try_parse_rat(std::string_view s) {
    RatParseResult out;
    std::size_t i = 0;
    auto fail = [&](std::size_t pos, std::string msg) {
        out.error = std::move(msg);
        out.error_pos = pos;
        return out;
    };
    if (s.empty()) return fail(0, "empty rational literal");
    bool neg = false;
    if (s[i] == '+' || s[i] == '-') {
        neg = (s[i] == '-');
        ++i;
    }
    std::size_t num_begin = i;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
    if (i == num_begin) return fail(i, "expected digits");
    if (i < s.size() && s[i] == '.')
        return fail(i, "decimal literals are not accepted; write 1/2 instead of 0.5");
    BigInt num(std::string(s.substr(num_begin, i - num_begin)));
    BigInt den = 1;
    if (i < s.size() && s[i] == '/') {
        ++i;
        std::size_t den_begin = i;
        while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
        if (i == den_begin) return fail(i, "expected digits after '/'");
        den = BigInt(std::string(s.substr(den_begin, i - den_begin)));
        if (den == 0) return fail(den_begin, "zero denominator");
    }
    if (i != s.size()) return fail(i, "trailing characters in rational literal");
    Rat v(num, den);
    if (neg) v = -v;
    out.value = v;
    return out;
}

inline Rat parse_rat(std::string_view s) {
    RatParseResult r = try_parse_rat(s);
    if (!r.value) throw DomainError(r.error);
    return *std::move(r.value);
}

// Exact decimal rendering with `digits` fractional digits, round half away
// from zero. The only place the engine ever leaves rational arithmetic is
// this rendering step (SVG emission).
inline std::string rat_to_decimal(const Rat& r, int digits) {
    BigInt num = numerator(r);
    BigInt den = denominator(r);
    bool neg = num < 0;
    if (neg) num = -num;
    BigInt scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    BigInt scaled = num * scale;
    BigInt q = scaled / den;
    BigInt rem = scaled % den;
    if (rem * 2 >= den) ++q;
    BigInt ip = q / scale;
    BigInt fp = q % scale;
    std::string out = neg && q != 0 ? "-" : "";
    out += ip.str();
    if (digits > 0) {
        std::string frac = fp.str();
        frac.insert(0, static_cast<std::size_t>(digits) - frac.size(), '0');
        out += ".";
        out += frac;
    }
    return out;
}

}  // namespace ild
