#ifndef TROPMIX_RAT_HPP
#define TROPMIX_RAT_HPP

#include <boost/rational.hpp>

#include <cstdint>
#include <numeric>
#include <string>

namespace tropmix {

/// Exact rational scalar used throughout. Inputs are integers, so the
/// denominators that actually occur stay tiny (cycle lengths, (n+1)^2
/// epsilon scalings, midpoints); int64 components are more than enough.
using Rat = boost::rational<long long>;

inline Rat rat(long long num, long long den = 1) { return Rat(num, den); }

/// Largest integer <= r.
inline long long rat_floor(const Rat& r) {
    long long q = r.numerator() / r.denominator();
    if (r.numerator() % r.denominator() != 0 && r.numerator() < 0) --q;
    return q;
}

/// Smallest integer >= r.
inline long long rat_ceil(const Rat& r) { return -rat_floor(-r); }

/// Nearest integer, ties toward +infinity.
inline long long rat_round(const Rat& r) { return rat_floor(r + Rat(1, 2)); }

inline Rat rat_abs(const Rat& r) { return r < Rat(0) ? -r : r; }

inline bool rat_is_integer(const Rat& r) { return r.denominator() == 1; }

inline std::string rat_to_string(const Rat& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace tropmix

#endif
