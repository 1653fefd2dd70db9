#ifndef TROPMIX_MPG_HPP
#define TROPMIX_MPG_HPP

#include <tropmix/system.hpp>

#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace tropmix {

// ── Parametric mean payoff games ────────────────────────────────────────────
// Bipartite weighted digraph: Min owns the column nodes (one per variable
// plus a last one for the constants), Max owns the row nodes (one per
// inequality). Arcs row -> column carry weights affine in the perturbation
// (base - eps_count * eps); arcs column -> row carry plain rationals.

struct ParametricWeight {
    Rat base;
    int eps_count = 0;  // 0 or 1

    Rat at(const Rat& eps) const { return eps_count ? base - eps : base; }
};

struct GameGraph {
    int num_rows = 0;
    int num_cols = 0;  // variables + 1; the last column node carries constants

    // row_arcs[i]: (column, weight(eps)); col_arcs[j]: (row, weight)
    std::vector<std::vector<std::pair<int, ParametricWeight>>> row_arcs;
    std::vector<std::vector<std::pair<int, Rat>>> col_arcs;

    int const_col() const { return num_cols - 1; }

    /// Every node has an outgoing arc (the game never stalls).
    bool well_formed() const;
};

/// Positional strategies: Min picks a row per column, Max a column per row.
struct MinStrategy {
    std::vector<int> row_of_col;
};
struct MaxStrategy {
    std::vector<int> col_of_row;
};

/// Result of translating a system into a game. Rows whose right side is
/// identically -oo pin their left-side variables to -oo before the graph is
/// built (cascading); a finite constant facing an empty right side proves
/// emptiness outright. Columns left without outgoing arcs get a trivial
/// self-constraint so the game never stalls.
struct GameBuild {
    bool trivially_empty = false;
    GameGraph graph;               // meaningful when !trivially_empty
    std::vector<int> active_vars;  // column j -> original 1-based variable
    std::vector<int> forced_bottom;  // original variables pinned to -oo
};

/// Requires a normalized system with no +oo right-hand coefficient.
GameBuild build_game(const MixedSystem& sys);

/// Cycle-time vector of the one-player game where Min is fixed to sigma:
/// per column node, the exact maximum mean weight over reachable cycles
/// (cycle length counts column nodes). Karp per strongly connected
/// component, then reachability propagation.
std::vector<Rat> evaluate_min_strategy(const GameGraph& g, const MinStrategy& sigma,
                                       const Rat& eps);

/// Dual: Max fixed to tau, Min plays; exact minimum reachable cycle mean.
std::vector<Rat> evaluate_max_strategy(const GameGraph& g, const MaxStrategy& tau,
                                       const Rat& eps);

/// Exact cycle-time vector of the two-player game at the given eps >= 0.
/// Value iteration on integer-scaled weights up to the pseudo-polynomial
/// horizon, then rounding to the unique nearby rational with denominator
/// bounded by the number of column nodes.
std::vector<Rat> solve_game(const GameGraph& g, const Rat& eps);

// ── Certificates ────────────────────────────────────────────────────────────

struct GameCertificate {
    bool winner_is_max = false;
    bool trivial = false;       // emptiness forced before any game was built:
                                // a finite left side faces a bottom right side
    Rat eps;                    // the game instance the certificate refers to
    std::vector<int> strategy;  // Min: row per column; Max: column per row
    std::vector<int> cycle;     // column nodes of an extremal reachable cycle
    Rat mean;                   // its mean, equal to the value at const_col
};

std::string print_certificate(const GameCertificate& cert);

// ── Decision procedures ─────────────────────────────────────────────────────

/// Emptiness for systems without +oo coefficients: empty iff neither
/// value(eps = 0) > 0 nor value(eps = 1/m^2) >= 0 at the constant column
/// (m = number of column nodes). Optionally produces a winning positional
/// strategy for the decisive player.
bool is_empty_finite(const MixedSystem& sys, GameCertificate* cert = nullptr);

/// General emptiness (+oo right-hand coefficients allowed): grows the row
/// set I over rows whose +oo entries fall outside the current support and
/// tests the +oo-stripped subsystems. The loop runs at most min(n, r) times.
bool is_empty(const MixedSystem& sys);

/// Same, exposing how the row-growing loop ran. `iterations` counts the
/// re-entries after the first mandatory pass; it never exceeds min(n, r).
/// `deciding` is the +oo-stripped subsystem whose game settled the verdict
/// (absent when no row was ever eligible).
struct EmptinessTrace {
    bool empty = false;
    int iterations = 0;
    std::optional<MixedSystem> deciding;
};
EmptinessTrace is_empty_trace(const MixedSystem& sys);

/// Support: 1-based indices of the variables that are finite somewhere in
/// the solution set; empty when the polyhedron is empty.
std::set<int> support(const MixedSystem& sys);

/// Decides whether every solution of sys satisfies the target row, by
/// reducing to emptiness of sys plus the pointwise negation of the target.
bool implies(const MixedSystem& sys, const MixedInequality& target);

}  // namespace tropmix

#endif
