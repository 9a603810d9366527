#pragma once

#include <gmpxx.h>

#include <string>

namespace lb {

// Exact rational scalar. mpq_class keeps the denominator positive and the
// fraction reduced after every operation.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Parses "p/q" or "p". Throws std::invalid_argument on malformed input.
Rat rat_parse(const std::string& s);

// Serializes as "p/q", or "p" when the denominator is 1.
std::string rat_str(const Rat& r);

inline int rat_sign(const Rat& r) { return sgn(r); }

}  // namespace lb
