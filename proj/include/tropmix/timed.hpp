#ifndef TROPMIX_TIMED_HPP
#define TROPMIX_TIMED_HPP

#include <tropmix/atoms.hpp>
#include <tropmix/reduce.hpp>
#include <tropmix/system.hpp>

#include <string>
#include <vector>

namespace tropmix {

// ── Timed automata ──────────────────────────────────────────────────────────

struct ClockConstraint {
    std::vector<Atom> atoms;  // conjunction; empty means true
};

struct Location {
    std::string name;
    ClockConstraint invariant;
};

struct TaEdge {
    int src = 0;
    int dst = 0;
    ClockConstraint guard;
    std::vector<std::pair<int, long long>> resets;  // clock (1-based) := natural
};

struct TimedAutomaton {
    int clock_count = 0;  // clocks are named x1..xn
    std::vector<Location> locations;
    int initial = 0;
    int final_loc = 0;
    std::vector<TaEdge> edges;

    int location_index(const std::string& name) const;
};

/// Line-based description:
///   clocks x1 x2 ...
///   location <name> [invariant <atoms>]
///   initial <name>
///   final <name>
///   edge <src> -> <dst> [when <atoms>] [reset x<i>:=<k>(, x<j>:=<k>)*]
/// Comment lines start with '#'. Atoms are comma-separated and compare a
/// clock against an integer or against <int> + x<j>.
TimedAutomaton parse_automaton(const std::string& text);

// ── Symbolic-state operations ───────────────────────────────────────────────

/// Region plus the mixed encoding of each atom: strict comparisons through
/// 0~-scaled coefficients, equalities as two rows.
MixedSystem intersect(const MixedSystem& region, const ClockConstraint& c);

/// Eliminates the clock, then pins it back to k with two rows.
MixedSystem reset(const MixedSystem& region, int clock, long long k);

/// Uniform time advance: { x + t | x in region, t >= 0 }. Constants migrate
/// to a fresh scaling variable which is then eliminated.
MixedSystem delay(const MixedSystem& region);

/// v1 included in v2: the system of v1 implies every row of v2.
bool is_included(const MixedSystem& v1, const MixedSystem& v2);

/// Tropical convex hull of the union, weak-reduced: exact as a hull, an
/// over-approximation of the union itself.
MixedSystem over_approx(const MixedSystem& v1, const MixedSystem& v2);

// ── Forward reachability ────────────────────────────────────────────────────

struct VisitedState {
    std::string location;
    MixedSystem region;
};

struct ReachOptions {
    bool approx_union = false;   // widen same-location states through over_approx
    long long max_steps = -1;    // < 0: unlimited; otherwise cap on popped states
    ReduceMode reduce = ReduceMode::None;  // applied to every stored region
};

struct ReachResult {
    enum Status { Reachable, Unreachable, Inconclusive };
    Status status = Unreachable;
    std::vector<VisitedState> trace;  // states stored in the passed list, in order
    long long popped = 0;
};

/// Breadth-first symbolic exploration from (initial, all clocks zero); stops
/// as soon as the final location is dequeued. May not terminate on automata
/// with unbounded constants unless max_steps is set.
ReachResult forward_reach(const TimedAutomaton& ta, const ReachOptions& opts = {});

}  // namespace tropmix

#endif
