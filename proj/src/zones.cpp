#include <tropmix/zones.hpp>

#include <tropmix/mpg.hpp>

#include <algorithm>
#include <stdexcept>

namespace tropmix {

namespace {

bool lower_holds(const ZoneBound& b, const MaxPlus& x) {
    return b.strict ? b.bound < x : b.bound <= x;
}
bool upper_holds(const ZoneBound& b, const MaxPlus& x) {
    return b.strict ? x < b.bound : x <= b.bound;
}

/// Tighter of two lower bounds.
ZoneBound join_lower(const ZoneBound& a, const ZoneBound& b) {
    if (a.bound == b.bound) return {a.bound, a.strict || b.strict};
    return a.bound < b.bound ? b : a;
}

/// Tighter of two upper bounds.
ZoneBound join_upper(const ZoneBound& a, const ZoneBound& b) {
    if (a.bound == b.bound) return {a.bound, a.strict || b.strict};
    return a.bound < b.bound ? a : b;
}

}  // namespace

bool Zone::contains(const Point& p) const {
    if (p.dim() != dim) throw std::invalid_argument("point dimension mismatch");
    for (int i = 0; i < dim; ++i) {
        if (!lower_holds(lower[i], p.coords[i])) return false;
        if (upper[i] && !upper_holds(*upper[i], p.coords[i])) return false;
        for (int j = 0; j < dim; ++j) {
            if (i == j || !diff[i][j]) continue;
            MaxPlus rhs = diff[i][j]->bound * p.coords[j];
            if (diff[i][j]->strict ? !(p.coords[i] < rhs) : !(p.coords[i] <= rhs)) return false;
        }
    }
    return true;
}

void Zone::add_lower(int var, ZoneBound b) { lower[var - 1] = join_lower(lower[var - 1], b); }

void Zone::add_upper(int var, ZoneBound b) {
    auto& slot = upper[var - 1];
    slot = slot ? join_upper(*slot, b) : b;
}

void Zone::add_diff(int var, int other, ZoneBound b) {
    auto& slot = diff[var - 1][other - 1];
    slot = slot ? join_upper(*slot, b) : b;
}

Zone zone_intersect(const Zone& a, const Zone& b) {
    if (a.dim != b.dim) throw std::invalid_argument("zone dimension mismatch");
    Zone out = a;
    for (int i = 1; i <= b.dim; ++i) {
        out.add_lower(i, b.lower[i - 1]);
        if (b.upper[i - 1]) out.add_upper(i, *b.upper[i - 1]);
        for (int j = 1; j <= b.dim; ++j)
            if (i != j && b.diff[i - 1][j - 1]) out.add_diff(i, j, *b.diff[i - 1][j - 1]);
    }
    return out;
}

MixedSystem zone_to_mixed(const Zone& z) {
    const int n = z.dim;
    MixedSystem sys(n);
    auto blank_lhs = [&] { return std::vector<MaxPlus>(n, MaxPlus::neg_inf()); };
    auto blank_rhs = [&] { return std::vector<Germ>(n, Germ::neg_inf()); };
    auto false_row = [&] {
        sys.add_row(MixedInequality(blank_lhs(), MaxPlus::one(), blank_rhs(), Germ::neg_inf()));
    };

    for (int i = 0; i < n; ++i) {
        const ZoneBound& lo = z.lower[i];
        if (lo.bound.is_neg_inf() && !lo.strict) {
            // unconstrained below
        } else if (!lo.strict) {
            auto r = blank_rhs();
            r[i] = Germ::one();
            sys.add_row(MixedInequality(blank_lhs(), lo.bound, std::move(r), Germ::neg_inf()));
        } else if (lo.bound.is_finite()) {
            auto r = blank_rhs();
            r[i] = Germ::under(0);
            sys.add_row(MixedInequality(blank_lhs(), lo.bound, std::move(r), Germ::neg_inf()));
        } else {  // -oo < x_i
            auto r = blank_rhs();
            r[i] = Germ::pos_inf();
            sys.add_row(MixedInequality(blank_lhs(), MaxPlus::one(), std::move(r), Germ::neg_inf()));
        }
    }
    for (int i = 0; i < n; ++i) {
        if (!z.upper[i]) continue;
        const ZoneBound& up = *z.upper[i];
        if (up.strict && up.bound.is_neg_inf()) {
            false_row();  // x_i < -oo is unsatisfiable
            continue;
        }
        auto l = blank_lhs();
        l[i] = MaxPlus::one();
        Germ rc = up.strict ? Germ::under(up.bound.value()) : Germ::of(up.bound);
        sys.add_row(MixedInequality(std::move(l), MaxPlus::neg_inf(), blank_rhs(), rc));
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j || !z.diff[i][j]) continue;
            const ZoneBound& d = *z.diff[i][j];
            if (d.strict && d.bound.is_neg_inf()) {
                false_row();
                continue;
            }
            auto l = blank_lhs();
            l[i] = MaxPlus::one();
            auto r = blank_rhs();
            r[j] = d.strict ? Germ::under(d.bound.value()) : Germ::of(d.bound);
            sys.add_row(
                MixedInequality(std::move(l), MaxPlus::neg_inf(), std::move(r), Germ::neg_inf()));
            if (d.strict) {
                auto rg = blank_rhs();
                rg[j] = Germ::pos_inf();
                sys.add_row(MixedInequality(blank_lhs(), MaxPlus::one(), std::move(rg),
                                            Germ::neg_inf()));
            }
        }
    }
    return sys;
}

// ── Expansion into zones ────────────────────────────────────────────────────

namespace {

/// Constraint branches contributed by one row under one choice of the
/// maximizing right-hand term.
std::vector<Zone> choice_branches(const MixedInequality& row, int term, int n) {
    // term: 0 for the constant, else the 1-based variable index
    const Germ& b = term == 0 ? row.rhs_const : row.rhs[term - 1];
    std::vector<Zone> branches{Zone(n)};

    auto for_all = [&](auto&& apply) {
        for (auto& z : branches) apply(z);
    };
    // Splits every current branch in two variants.
    auto split = [&](auto&& first, auto&& second) {
        std::vector<Zone> out;
        out.reserve(branches.size() * 2);
        for (const auto& z : branches) {
            Zone z1 = z;
            first(z1);
            out.push_back(std::move(z1));
            Zone z2 = z;
            second(z2);
            out.push_back(std::move(z2));
        }
        branches = std::move(out);
    };

    if (term == 0) {
        if (row.lhs_const.is_finite() && !germ_leq(Germ::of(row.lhs_const), b)) return {};
        if (b.is_pos_inf()) return branches;  // trivially true choice
        for (int i = 1; i <= n; ++i) {
            if (!row.lhs[i - 1].is_finite()) continue;
            Germ g = germ_mul(b, Germ::plain(-row.lhs[i - 1].value()));
            ZoneBound ub{MaxPlus(g.finite_modulus()), g.is_under()};
            for_all([&](Zone& z) { z.add_upper(i, ub); });
        }
        return branches;
    }

    const int t = term;
    // constant piece: a_0 <= b_t x_t
    if (row.lhs_const.is_finite()) {
        if (b.is_pos_inf()) {
            for_all([&](Zone& z) { z.add_lower(t, {MaxPlus::neg_inf(), true}); });
        } else {
            ZoneBound lb{MaxPlus(row.lhs_const.value() - b.finite_modulus()), b.is_under()};
            for_all([&](Zone& z) { z.add_lower(t, lb); });
        }
    }
    // variable pieces: a_i x_i <= b_t x_t (i != t after normalization)
    for (int i = 1; i <= n; ++i) {
        if (!row.lhs[i - 1].is_finite()) continue;
        if (b.is_pos_inf()) {
            split([&](Zone& z) { z.add_lower(t, {MaxPlus::neg_inf(), true}); },
                  [&](Zone& z) {
                      z.add_upper(i, {MaxPlus::neg_inf(), false});
                      z.add_upper(t, {MaxPlus::neg_inf(), false});
                  });
            continue;
        }
        Germ g = germ_mul(b, Germ::plain(-row.lhs[i - 1].value()));
        ZoneBound db{MaxPlus(g.finite_modulus()), g.is_under()};
        if (!g.is_under()) {
            for_all([&](Zone& z) { z.add_diff(i, t, db); });
        } else {
            split([&](Zone& z) { z.add_diff(i, t, db); },
                  [&](Zone& z) {
                      z.add_upper(i, {MaxPlus::neg_inf(), false});
                      z.add_upper(t, {MaxPlus::neg_inf(), false});
                  });
        }
    }
    return branches;
}

std::vector<Zone> row_branches(const MixedInequality& row, int n) {
    bool rhs_empty = row.rhs_const.is_neg_inf();
    for (const auto& g : row.rhs)
        if (!g.is_neg_inf()) rhs_empty = false;
    if (rhs_empty) {
        if (row.lhs_const.is_finite()) return {};  // LHS <= -oo with a finite constant
        Zone z(n);
        for (int i = 1; i <= n; ++i)
            if (row.lhs[i - 1].is_finite()) z.add_upper(i, {MaxPlus::neg_inf(), false});
        return {z};
    }
    std::vector<Zone> out;
    for (int t = 0; t <= n; ++t) {
        const Germ& b = t == 0 ? row.rhs_const : row.rhs[t - 1];
        if (b.is_neg_inf()) continue;
        auto part = choice_branches(row, t, n);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

}  // namespace

std::vector<Zone> mixed_to_zones(const MixedSystem& sys, size_t max_zones) {
    const int n = sys.dim;
    std::vector<Zone> zones{Zone(n)};
    for (const auto& row : sys.rows) {
        std::vector<Zone> branches = row_branches(row, n);
        std::vector<Zone> next;
        for (const auto& z : zones) {
            for (const auto& br : branches) {
                Zone merged = zone_intersect(z, br);
                if (std::find(next.begin(), next.end(), merged) != next.end()) continue;
                if (is_empty(zone_to_mixed(merged))) continue;
                next.push_back(std::move(merged));
                if (next.size() > max_zones)
                    throw std::length_error("zone decomposition exceeds the configured cap");
            }
        }
        zones = std::move(next);
        if (zones.empty()) break;
    }
    return zones;
}

// ── Text form ───────────────────────────────────────────────────────────────

Zone zone_from_atoms(const std::vector<Atom>& atoms, int dim) {
    Zone z(dim);
    for (const auto& a : atoms) {
        bool le = a.rel == Atom::Le || a.rel == Atom::Eq || a.rel == Atom::Lt;
        bool ge = a.rel == Atom::Ge || a.rel == Atom::Eq || a.rel == Atom::Gt;
        bool strict = a.rel == Atom::Lt || a.rel == Atom::Gt;
        if (a.other == 0) {
            if (le) z.add_upper(a.var, {a.bound, strict});
            if (ge) z.add_lower(a.var, {a.bound, strict});
        } else {
            if (le) z.add_diff(a.var, a.other, {a.bound, strict});
            if (ge) {
                // x_i >= k + x_j  <=>  x_j <= -k + x_i
                MaxPlus neg = a.bound.is_finite() ? MaxPlus(-a.bound.value()) : MaxPlus::neg_inf();
                z.add_diff(a.other, a.var, {neg, strict});
            }
        }
    }
    return z;
}

Zone parse_zone(const std::string& text, int dim) {
    return zone_from_atoms(parse_atoms(text, dim), dim);
}

std::vector<Atom> zone_atoms(const Zone& z) {
    std::vector<Atom> out;
    for (int i = 1; i <= z.dim; ++i) {
        const ZoneBound& lo = z.lower[i - 1];
        if (lo.bound.is_finite() || lo.strict)
            out.push_back({i, lo.strict ? Atom::Gt : Atom::Ge, lo.bound, 0});
    }
    for (int i = 1; i <= z.dim; ++i)
        if (z.upper[i - 1])
            out.push_back({i, z.upper[i - 1]->strict ? Atom::Lt : Atom::Le,
                           z.upper[i - 1]->bound, 0});
    for (int i = 1; i <= z.dim; ++i)
        for (int j = 1; j <= z.dim; ++j)
            if (i != j && z.diff[i - 1][j - 1])
                out.push_back({i, z.diff[i - 1][j - 1]->strict ? Atom::Lt : Atom::Le,
                               z.diff[i - 1][j - 1]->bound, j});
    return out;
}

std::string print_zone(const Zone& z) { return to_string(zone_atoms(z)); }

}  // namespace tropmix
