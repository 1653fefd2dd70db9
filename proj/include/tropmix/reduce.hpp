#ifndef TROPMIX_REDUCE_HPP
#define TROPMIX_REDUCE_HPP

#include <tropmix/system.hpp>

#include <vector>

namespace tropmix {

enum class ReduceMode { None, Weak, Exact };

// ── Row vectors ─────────────────────────────────────────────────────────────
// An inequality (e x + g <= f x + h) seen as the (2n+2)-entry germ row
// (e_1..e_n, g, f_1..f_n, h); the first half is MaxPlus-embedded. A system
// stacks its rows into the matrix R of such vectors.

using RowVector = std::vector<Germ>;

RowVector row_vector(const MixedInequality& row);
std::vector<RowVector> row_matrix(const MixedSystem& sys);

/// Decides whether v is a tropical linear combination w * R of the rows of R,
/// via the greatest solution w*_i = min_j residual(v_j, R_ij) of w R <= v.
/// Sufficient for implication, not necessary. Cost O(n * p).
/// Throws std::invalid_argument when some row of R is identically -oo.
bool weak_redundant(const std::vector<RowVector>& R, const RowVector& v);

/// Optionally exposes the residuated witness w*.
bool weak_redundant(const std::vector<RowVector>& R, const RowVector& v,
                    std::vector<Germ>* witness);

/// Removes redundant rows. Mode None returns the input untouched. Otherwise
/// trivially-true rows (bottom left side, or +oo right constant) are dropped
/// first, then rows are tested in input order against the remaining system —
/// by weak_redundant (Weak) or by the exact game-based implication test
/// (Exact, with weak_redundant as a cheap pre-filter) — and removals commit
/// immediately. The solution set is preserved.
MixedSystem reduce_system(const MixedSystem& sys, ReduceMode mode);

}  // namespace tropmix

#endif
