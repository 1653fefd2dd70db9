#ifndef TROPMIX_ATOMS_HPP
#define TROPMIX_ATOMS_HPP

#include <tropmix/germ.hpp>

#include <string>
#include <vector>

namespace tropmix {

// Atomic difference constraints shared by zone descriptions and timed-automata
// guards:  x_i REL k  or  x_i REL k + x_j  with integer k.

struct Atom {
    enum Rel { Lt, Le, Eq, Ge, Gt };

    int var = 0;    // 1-based
    Rel rel = Le;
    MaxPlus bound;  // k; -oo allowed ("x1 > -oo")
    int other = 0;  // 1-based second variable, or 0 for plain bounds
};

/// Parses a comma-separated atom list ("x1 >= 1, x2 < 3 + x1"). The literal
/// "true" (alone) denotes the empty conjunction. Variable names are x1..xn.
std::vector<Atom> parse_atoms(const std::string& text, int dim);

std::string to_string(const Atom& a);
std::string to_string(const std::vector<Atom>& atoms);

}  // namespace tropmix

#endif
