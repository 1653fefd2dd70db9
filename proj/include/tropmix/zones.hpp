#ifndef TROPMIX_ZONES_HPP
#define TROPMIX_ZONES_HPP

#include <tropmix/atoms.hpp>
#include <tropmix/system.hpp>

#include <optional>
#include <vector>

namespace tropmix {

// ── Zones over Rmax^n ───────────────────────────────────────────────────────
// Conjunctions of bounds  m_i ◁ x_i,  x_i ◁ M_i,  x_i ◁ k_ij + x_j  with
// ◁ in {<=, <}. Absent upper/difference bounds mean unconstrained; a lower
// bound of -oo (non-strict) means unconstrained below.

struct ZoneBound {
    MaxPlus bound;
    bool strict = false;

    friend bool operator==(const ZoneBound& a, const ZoneBound& b) {
        return a.bound == b.bound && a.strict == b.strict;
    }
};

struct Zone {
    int dim = 0;
    std::vector<ZoneBound> lower;                        // default (-oo, non-strict)
    std::vector<std::optional<ZoneBound>> upper;         // nullopt: no upper bound
    std::vector<std::vector<std::optional<ZoneBound>>> diff;  // x_i ◁ k + x_j

    Zone() = default;
    explicit Zone(int n)
        : dim(n),
          lower(n),
          upper(n),
          diff(n, std::vector<std::optional<ZoneBound>>(n)) {}

    bool contains(const Point& p) const;

    /// Conjoins a constraint, keeping the tighter of colliding bounds.
    void add_lower(int var, ZoneBound b);
    void add_upper(int var, ZoneBound b);
    void add_diff(int var, int other, ZoneBound b);

    friend bool operator==(const Zone& a, const Zone& b) {
        return a.dim == b.dim && a.lower == b.lower && a.upper == b.upper && a.diff == b.diff;
    }
};

/// Intersection (bound-wise tightening) of two zones on the same variables.
Zone zone_intersect(const Zone& a, const Zone& b);

/// Exact translation into mixed inequalities: non-strict bounds become plain
/// rows, strict ones use 0~-scaled coefficients, and strict bounds involving
/// -oo use (+oo)-guard rows. The solution sets coincide.
MixedSystem zone_to_mixed(const Zone& z);

/// Expands a system into a finite union of zones by choosing, per row, the
/// maximizing right-hand term; strict difference choices split into the
/// generic branch and the all--oo corner. Only nonempty zones are returned
/// (emptiness checked through zone_to_mixed and the game-based test), and
/// their union equals the solution set. Throws std::length_error when more
/// than max_zones zones would be produced.
std::vector<Zone> mixed_to_zones(const MixedSystem& sys, size_t max_zones = 4096);

/// Textual form: comma-separated atoms ("x1 >= 1, x1 < 7, x1 < 3 + x2"),
/// "true" for the unconstrained zone.
Zone zone_from_atoms(const std::vector<Atom>& atoms, int dim);
Zone parse_zone(const std::string& text, int dim);
std::vector<Atom> zone_atoms(const Zone& z);
std::string print_zone(const Zone& z);

}  // namespace tropmix

#endif
