#include <tropmix/fm.hpp>

#include <algorithm>
#include <stdexcept>

namespace tropmix {

namespace {

/// Left-hand value of a row at p with the slot `skip` (0-based) left out.
MaxPlus lhs_value_without(const MixedInequality& row, const Point& p, int skip) {
    MaxPlus acc = row.lhs_const;
    int pj = 0;
    for (int j = 0; j < row.dim(); ++j) {
        if (j == skip) continue;
        acc = acc + row.lhs[j] * p.coords[pj++];
    }
    return acc;
}

/// Right-hand germ value of a row at p with the slot `skip` left out.
Germ rhs_value_without(const MixedInequality& row, const Point& p, int skip) {
    Germ acc = row.rhs_const;
    int pj = 0;
    for (int j = 0; j < row.dim(); ++j) {
        if (j == skip) continue;
        acc = acc + row.rhs[j] * Germ::of(p.coords[pj++]);
    }
    return acc;
}

Point insert_coord(const Point& p, int at, const MaxPlus& v) {
    Point out = p;
    out.coords.insert(out.coords.begin() + at, v);
    return out;
}

}  // namespace

EliminationResult eliminate(const MixedSystem& sys, int var) {
    if (var < 1 || var > sys.dim) throw std::out_of_range("variable index out of range");
    const int v = var - 1;
    const int p = static_cast<int>(sys.rows.size());

    EliminationResult res;
    res.system = MixedSystem(sys.dim - 1);
    for (int j = 1; j <= sys.dim; ++j)
        if (j != var) res.remaining.push_back(j);

    auto drop_slot = [&](const MixedInequality& row) {
        MixedInequality out = row;
        out.lhs.erase(out.lhs.begin() + v);
        out.rhs.erase(out.rhs.begin() + v);
        return out;
    };

    // Rows without the variable on the right: delete its left term.
    for (int i = 0; i < p; ++i) {
        const MixedInequality& row = sys.rows[i];
        if (!row.rhs[v].is_neg_inf()) continue;
        MixedInequality out = drop_slot(row);
        res.system.add_row(std::move(out));
        res.origin.push_back({i, -1});
    }

    // Combination rows: substitute the upper bound provided by row k into
    // the right side of row i.
    for (int i = 0; i < p; ++i) {
        const MixedInequality& upper_user = sys.rows[i];
        if (upper_user.rhs[v].is_neg_inf()) continue;
        for (int k = 0; k < p; ++k) {
            const MixedInequality& bounding = sys.rows[k];
            if (!bounding.lhs[v].is_finite()) continue;
            Germ factor = germ_mul(upper_user.rhs[v], Germ::plain(-bounding.lhs[v].value()));
            MixedInequality out = drop_slot(upper_user);
            const MixedInequality bk = drop_slot(bounding);
            for (int j = 0; j < out.dim(); ++j)
                out.rhs[j] = out.rhs[j] + factor * bk.rhs[j];
            out.rhs_const = out.rhs_const + factor * bk.rhs_const;
            res.system.add_row(std::move(out));
            res.origin.push_back({i, k});
        }
    }
    return res;
}

MaxPlus lift(const MixedSystem& sys, int var, const Point& p) {
    if (var < 1 || var > sys.dim) throw std::out_of_range("variable index out of range");
    if (p.dim() != sys.dim - 1) throw std::invalid_argument("point dimension mismatch");
    const int v = var - 1;

    bool any_lower = false;
    Germ bound = Germ::pos_inf();  // germ-valued least upper demand on the variable
    for (const auto& row : sys.rows) {
        if (!row.lhs[v].is_finite()) continue;
        any_lower = true;
        Germ inv = Germ::plain(-row.lhs[v].value());
        Germ val = germ_mul(inv, rhs_value_without(row, p, v));
        bound = germ_min(bound, val);
    }

    MaxPlus lambda;
    if (!any_lower) {
        // No row bounds the variable from above; cover every demand
        // |B_iv| lambda >= lhs with one real above the largest gap.
        MaxPlus best = MaxPlus::neg_inf();
        for (const auto& row : sys.rows) {
            const Germ& b = row.rhs[v];
            if (b.is_neg_inf()) continue;
            MaxPlus lhs_val = lhs_value_without(row, p, v);
            if (lhs_val.is_neg_inf()) continue;
            Rat demand = b.is_pos_inf() ? Rat(0) : lhs_val.value() - b.finite_modulus();
            best = best + MaxPlus(demand);
        }
        lambda = best.is_finite() ? MaxPlus(best.value() + 1) : MaxPlus::neg_inf();
    } else if (bound.is_plain()) {
        lambda = MaxPlus(bound.finite_modulus());
    } else if (bound.is_neg_inf()) {
        lambda = MaxPlus::neg_inf();
    } else if (bound.is_pos_inf()) {
        // Any real value above the finite-modulus demands works.
        MaxPlus delta = MaxPlus::neg_inf();
        for (const auto& row : sys.rows) {
            const Germ& b = row.rhs[v];
            if (b.is_neg_inf() || b.is_pos_inf()) continue;
            MaxPlus lhs_val = lhs_value_without(row, p, v);
            if (lhs_val.is_finite())
                delta = delta + MaxPlus(lhs_val.value() - b.finite_modulus());
        }
        if (!delta.is_finite()) delta = MaxPlus::one();
        lambda = MaxPlus(delta.value() + 1);
    } else {
        // Perturbed-real bound: realize it just below its modulus by the
        // midpoint rule over the rows where the bound is active.
        const Rat mu = bound.finite_modulus();
        Rat kappa(-1);
        bool have_kappa = false;
        for (const auto& row : sys.rows) {
            const Germ& b = row.rhs[v];
            if (b.is_neg_inf() || b.is_pos_inf()) continue;
            Germ with_bound = germ_mul(b, bound);
            Germ rest = rhs_value_without(row, p, v);
            if (!germ_lt(rest, with_bound)) continue;  // bound not active on this row
            MaxPlus nu = lhs_value_without(row, p, v);
            if (!nu.is_finite()) continue;
            Rat cand = (nu.value() - with_bound.finite_modulus()) / 2;
            kappa = have_kappa ? std::max(kappa, cand) : cand;
            have_kappa = true;
        }
        lambda = MaxPlus(kappa + mu);
    }

    Point full = insert_coord(p, v, lambda);
    if (!satisfies(sys, full))
        throw std::invalid_argument("lift precondition violated: point outside the projection");
    return lambda;
}

ProjectionResult eliminate_many(const MixedSystem& sys, const std::vector<int>& vars,
                                ReduceMode mode) {
    for (int v : vars) {
        if (v < 1 || v > sys.dim) throw std::out_of_range("variable index out of range");
        if (std::count(vars.begin(), vars.end(), v) != 1)
            throw std::invalid_argument("duplicate variable in elimination list");
    }
    ProjectionResult res;
    res.system = sys;
    for (int j = 1; j <= sys.dim; ++j) res.remaining.push_back(j);
    for (int v : vars) {
        auto it = std::find(res.remaining.begin(), res.remaining.end(), v);
        int cur = static_cast<int>(it - res.remaining.begin()) + 1;
        EliminationResult step = eliminate(res.system, cur);
        res.system = reduce_system(step.system, mode);
        res.remaining.erase(it);
    }
    return res;
}

MixedSystem hull_union(const MixedSystem& left, const MixedSystem& right, ReduceMode mode) {
    if (left.dim != right.dim) throw std::invalid_argument("hull operands differ in dimension");
    const int n = left.dim;
    const int N = 3 * n + 2;  // x | y | y' | lambda | mu
    const int y = n, yp = 2 * n, la = 3 * n, mu = 3 * n + 1;  // 0-based offsets

    MixedSystem big(N);
    auto blank_lhs = [&] { return std::vector<MaxPlus>(N, MaxPlus::neg_inf()); };
    auto blank_rhs = [&] { return std::vector<Germ>(N, Germ::neg_inf()); };

    for (int i = 0; i < n; ++i) {
        // x_i <= y_i + y'_i
        auto l1 = blank_lhs();
        auto r1 = blank_rhs();
        l1[i] = MaxPlus::one();
        r1[y + i] = Germ::one();
        r1[yp + i] = Germ::one();
        big.add_row(MixedInequality(std::move(l1), MaxPlus::neg_inf(), std::move(r1),
                                    Germ::neg_inf()));
        // y_i + y'_i <= x_i
        auto l2 = blank_lhs();
        auto r2 = blank_rhs();
        l2[y + i] = MaxPlus::one();
        l2[yp + i] = MaxPlus::one();
        r2[i] = Germ::one();
        big.add_row(MixedInequality(std::move(l2), MaxPlus::neg_inf(), std::move(r2),
                                    Germ::neg_inf()));
    }

    // lambda + mu = 0
    {
        auto l = blank_lhs();
        l[la] = MaxPlus::one();
        l[mu] = MaxPlus::one();
        big.add_row(MixedInequality(std::move(l), MaxPlus::neg_inf(), blank_rhs(), Germ::one()));
        auto r = blank_rhs();
        r[la] = Germ::one();
        r[mu] = Germ::one();
        big.add_row(MixedInequality(blank_lhs(), MaxPlus::one(), std::move(r), Germ::neg_inf()));
    }

    auto add_scaled_copy = [&](const MixedSystem& sys, int offset, int scalar) {
        for (const auto& row : sys.rows) {
            auto l = blank_lhs();
            auto r = blank_rhs();
            for (int j = 0; j < n; ++j) {
                l[offset + j] = row.lhs[j];
                r[offset + j] = row.rhs[j];
            }
            l[scalar] = row.lhs_const;
            r[scalar] = row.rhs_const;
            big.add_row(MixedInequality(std::move(l), MaxPlus::neg_inf(), std::move(r),
                                        Germ::neg_inf()));
        }
        // support guard: y_1 + ... + y_n <= (+oo) scalar
        auto l = blank_lhs();
        auto r = blank_rhs();
        for (int j = 0; j < n; ++j) l[offset + j] = MaxPlus::one();
        r[scalar] = Germ::pos_inf();
        big.add_row(
            MixedInequality(std::move(l), MaxPlus::neg_inf(), std::move(r), Germ::neg_inf()));
    };
    add_scaled_copy(left, y, la);
    add_scaled_copy(right, yp, mu);

    std::vector<int> to_drop;
    for (int j = n + 1; j <= N; ++j) to_drop.push_back(j);
    ProjectionResult pr = eliminate_many(big, to_drop, mode);
    return pr.system;
}

}  // namespace tropmix
