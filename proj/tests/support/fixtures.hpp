#ifndef TROPMIX_TESTS_FIXTURES_HPP
#define TROPMIX_TESTS_FIXTURES_HPP

#include <tropmix/system.hpp>

namespace tropmix::testing {

// Two-variable system used across the suites: a bounded non-closed region
// with all four coefficient classes exercised.
inline MixedSystem running_example() {
    return parse_system(
        "dim 2\n"
        "-2*x2 <= 0~ + 0~*x1\n"
        "-3 <= x1\n"
        "0 <= 1*x1 + 0~*x2\n"
        "-2 <= x2\n"
        "x1 <= 3~*x2\n"
        "-2*x1 <= 0~ + -1*x2\n");
}

// Its projection onto the second coordinate, exactly as produced by one
// elimination step (canonical order, before any reduction).
inline MixedSystem running_example_projected() {
    return parse_system(
        "dim 1\n"
        "-2 <= x1\n"
        "-oo <= 3~*x1\n"
        "-oo <= 0~ + -1*x1\n"
        "-oo <= 0~ + 3~*x1\n"
        "-oo <= 2~ + 1~*x1\n"
        "-3 <= 3~*x1\n"
        "-3 <= 2~ + 1*x1\n"
        "0 <= 4~*x1\n"
        "0 <= 3~ + 2*x1\n");
}

inline Point pt(std::initializer_list<long long> cs) {
    Point p;
    for (long long c : cs) p.coords.push_back(MaxPlus(c));
    return p;
}

inline MaxPlus ninf() { return MaxPlus::neg_inf(); }

}  // namespace tropmix::testing

#endif
