#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace weylflag {

// Exact rationals. All arithmetic in the library is exact; floats never appear.
using Rat = mpq_class;

// Raised when an operation's mathematical precondition is violated
// (as opposed to malformed input, which raises std::invalid_argument).
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

inline Rat make_rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Parses "p", "-p" or "p/q". Whitespace is not accepted.
Rat parse_rat(const std::string& s);

// "p" or "p/q", canonical form with the sign on the numerator.
inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

std::string join(const std::vector<std::string>& parts, const std::string& sep);

}  // namespace weylflag
