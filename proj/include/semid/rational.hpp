#pragma once

#include <gmpxx.h>

#include <string>

namespace semid {

/// Exact arbitrary-precision rational. All engine arithmetic is exact;
/// no floating point enters any algebraic computation.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat rat(const std::string& s) {
    Rat r(s);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rat& r) { return r.get_str(); }

}  // namespace semid
