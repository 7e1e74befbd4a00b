#pragma once

#include <stdexcept>
#include <string>

namespace ild {

// Argument outside the unit interval or otherwise out of a function's domain.
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Textual input could not be lexed/parsed. Positions are 1-based.
struct ParseError : std::runtime_error {
    int line;
    int column;
    ParseError(int line_, int column_, const std::string& msg)
        : std::runtime_error("parse error at " + std::to_string(line_) + ":" +
                             std::to_string(column_) + ": " + msg),
          line(line_),
          column(column_) {}
};

// Syntactically valid map definition that violates a construction invariant
// (duplicate abscissa, not surjective, flat segment, ...).
struct SpecError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Piece/lap growth of an iterate passed the configured budget.
struct BudgetExceeded : std::runtime_error {
    long long pieces;
    explicit BudgetExceeded(long long pieces_)
        : std::runtime_error("iterate budget exceeded: " + std::to_string(pieces_) + " pieces"),
          pieces(pieces_) {}
};

// Backward-orbit link f(x_k) != x_{k-1}; k is the index of the offending coordinate.
struct ConsistencyError : std::runtime_error {
    long long k;
    ConsistencyError(long long k_, const std::string& detail)
        : std::runtime_error("orbit inconsistent at link " + std::to_string(k_) + ": " + detail),
          k(k_) {}
};

struct OrbitTooShort : std::runtime_error {
    OrbitTooShort(long long have, long long need)
        : std::runtime_error("orbit provides " + std::to_string(have) +
                             " coordinates, need " + std::to_string(need)) {}
};

// endpoint_construct precondition: the chosen critical point must recur on itself.
struct NotRecurrent : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The shifted reference point next to a critical value does not exist
// (the critical orbit never re-enters the open interval).
struct UndefinedTilde : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace ild
