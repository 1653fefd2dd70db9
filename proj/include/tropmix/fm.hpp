#ifndef TROPMIX_FM_HPP
#define TROPMIX_FM_HPP

#include <tropmix/reduce.hpp>
#include <tropmix/system.hpp>

#include <vector>

namespace tropmix {

// ── Fourier-Motzkin elimination ─────────────────────────────────────────────

/// Which input rows produced an output row: a single row (k == -1, the
/// variable-free rule) or a combined pair (i, k). Indices are 0-based row
/// positions of the input system.
struct RowOrigin {
    int i;
    int k;
};

struct EliminationResult {
    MixedSystem system;            // dimension n-1
    std::vector<RowOrigin> origin; // parallel to system.rows
    std::vector<int> remaining;    // output position -> original 1-based variable index
};

/// Eliminates one variable. Output rows come in a fixed canonical order:
/// first one row per input row whose right side does not mention the
/// variable (input order), then one row per (i, k) combination — i with the
/// variable on the right, k with it on the left — in lexicographic order.
/// Rows whose left side collapses to -oo are kept; reducers drop them.
/// Remaining variables are renumbered densely.
EliminationResult eliminate(const MixedSystem& sys, int var);

/// Given p satisfying eliminate(sys, var).system, returns a max-plus value
/// for the eliminated variable such that the extended point satisfies sys.
/// Deterministic: realizes the germ-valued bound by the midpoint rule when
/// it is a perturbed real and by "bound + 1" when it is +oo or when no row
/// bounds the variable from above. Throws std::invalid_argument when p does
/// not satisfy the eliminated system.
MaxPlus lift(const MixedSystem& sys, int var, const Point& p);

struct ProjectionResult {
    MixedSystem system;
    std::vector<int> remaining;  // output position -> original 1-based variable index
};

/// Folds eliminate over the given original variable indices (distinct,
/// 1-based), applying the reducer after every step.
ProjectionResult eliminate_many(const MixedSystem& sys, const std::vector<int>& vars,
                                ReduceMode mode);

/// Tropical convex hull of the union of two polyhedra on the same variables:
/// introduces copies y, y' and scalars lambda, mu with
///   x = y + y',  lambda + mu = 0,
///   A y + lambda c <= B y + lambda d,   A' y' + mu c' <= B' y' + mu d',
///   y_1 + ... + y_n <= (+oo) lambda,    y'_1 + ... + y'_n <= (+oo) mu,
/// then eliminates the 2n+2 auxiliary variables.
MixedSystem hull_union(const MixedSystem& left, const MixedSystem& right,
                       ReduceMode mode = ReduceMode::Weak);

}  // namespace tropmix

#endif
