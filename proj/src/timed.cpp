#include <tropmix/timed.hpp>

#include <tropmix/fm.hpp>
#include <tropmix/mpg.hpp>
#include <tropmix/reduce.hpp>

#include <deque>
#include <sstream>
#include <stdexcept>

namespace tropmix {

int TimedAutomaton::location_index(const std::string& name) const {
    for (size_t i = 0; i < locations.size(); ++i)
        if (locations[i].name == name) return static_cast<int>(i);
    return -1;
}

// ── Symbolic operations ─────────────────────────────────────────────────────

namespace {

void add_atom_rows(MixedSystem& sys, const Atom& a) {
    const int n = sys.dim;
    if (a.var < 1 || a.var > n || a.other < 0 || a.other > n)
        throw std::invalid_argument("unknown clock in constraint");
    auto blank_lhs = [&] { return std::vector<MaxPlus>(n, MaxPlus::neg_inf()); };
    auto blank_rhs = [&] { return std::vector<Germ>(n, Germ::neg_inf()); };
    auto false_row = [&] {
        sys.add_row(MixedInequality(blank_lhs(), MaxPlus::one(), blank_rhs(), Germ::neg_inf()));
    };
    const int i = a.var - 1;
    const bool le = a.rel == Atom::Le || a.rel == Atom::Eq;
    const bool lt = a.rel == Atom::Lt;
    const bool ge = a.rel == Atom::Ge || a.rel == Atom::Eq;
    const bool gt = a.rel == Atom::Gt;

    if (a.other == 0) {
        if (le || lt) {
            if (lt && a.bound.is_neg_inf()) {
                false_row();
            } else {
                auto l = blank_lhs();
                l[i] = MaxPlus::one();
                Germ rc = lt ? Germ::under(a.bound.value()) : Germ::of(a.bound);
                sys.add_row(MixedInequality(std::move(l), MaxPlus::neg_inf(), blank_rhs(), rc));
            }
        }
        if (ge || gt) {
            if (a.bound.is_finite()) {
                auto r = blank_rhs();
                r[i] = gt ? Germ::under(0) : Germ::one();
                sys.add_row(
                    MixedInequality(blank_lhs(), a.bound, std::move(r), Germ::neg_inf()));
            } else if (gt) {  // x_i > -oo
                auto r = blank_rhs();
                r[i] = Germ::pos_inf();
                sys.add_row(
                    MixedInequality(blank_lhs(), MaxPlus::one(), std::move(r), Germ::neg_inf()));
            }
        }
        return;
    }

    const int j = a.other - 1;
    if (le || lt) {  // x_i ◁ k + x_j
        if (lt && a.bound.is_neg_inf()) {
            false_row();
        } else {
            auto l = blank_lhs();
            l[i] = MaxPlus::one();
            auto r = blank_rhs();
            r[j] = lt ? Germ::under(a.bound.value()) : Germ::of(a.bound);
            sys.add_row(
                MixedInequality(std::move(l), MaxPlus::neg_inf(), std::move(r), Germ::neg_inf()));
            if (lt) {
                auto rg = blank_rhs();
                rg[j] = Germ::pos_inf();
                sys.add_row(MixedInequality(blank_lhs(), MaxPlus::one(), std::move(rg),
                                            Germ::neg_inf()));
            }
        }
    }
    if (ge || gt) {  // k + x_j ◁ x_i
        if (a.bound.is_finite()) {
            auto l = blank_lhs();
            l[j] = a.bound;
            auto r = blank_rhs();
            r[i] = gt ? Germ::under(0) : Germ::one();
            sys.add_row(
                MixedInequality(std::move(l), MaxPlus::neg_inf(), std::move(r), Germ::neg_inf()));
        }
        if (gt) {  // the left value may be -oo; then x_i > -oo must hold
            auto rg = blank_rhs();
            rg[i] = Germ::pos_inf();
            sys.add_row(
                MixedInequality(blank_lhs(), MaxPlus::one(), std::move(rg), Germ::neg_inf()));
        }
    }
}

}  // namespace

MixedSystem intersect(const MixedSystem& region, const ClockConstraint& c) {
    MixedSystem out = region;
    for (const auto& a : c.atoms) add_atom_rows(out, a);
    return out;
}

MixedSystem reset(const MixedSystem& region, int clock, long long k) {
    if (clock < 1 || clock > region.dim) throw std::out_of_range("clock index out of range");
    const int n = region.dim;
    EliminationResult erased = eliminate(region, clock);

    MixedSystem out(n);
    for (const auto& row : erased.system.rows) {
        std::vector<MaxPlus> lhs(n, MaxPlus::neg_inf());
        std::vector<Germ> rhs(n, Germ::neg_inf());
        for (int jj = 0; jj < n - 1; ++jj) {
            int orig = erased.remaining[jj] - 1;
            lhs[orig] = row.lhs[jj];
            rhs[orig] = row.rhs[jj];
        }
        out.add_row(MixedInequality(std::move(lhs), row.lhs_const, std::move(rhs), row.rhs_const));
    }
    // pin the clock back: x_i = k
    std::vector<MaxPlus> l(n, MaxPlus::neg_inf());
    l[clock - 1] = MaxPlus::one();
    out.add_row(MixedInequality(std::move(l), MaxPlus::neg_inf(),
                                std::vector<Germ>(n, Germ::neg_inf()), Germ::plain(k)));
    std::vector<Germ> r(n, Germ::neg_inf());
    r[clock - 1] = Germ::one();
    out.add_row(MixedInequality(std::vector<MaxPlus>(n, MaxPlus::neg_inf()), MaxPlus(k),
                                std::move(r), Germ::neg_inf()));
    return out;
}

MixedSystem delay(const MixedSystem& region) {
    const int n = region.dim;
    MixedSystem lifted(n + 1);
    for (const auto& row : region.rows) {
        std::vector<MaxPlus> lhs(n + 1, MaxPlus::neg_inf());
        std::vector<Germ> rhs(n + 1, Germ::neg_inf());
        for (int j = 0; j < n; ++j) {
            lhs[j] = row.lhs[j];
            rhs[j] = row.rhs[j];
        }
        lhs[n] = row.lhs_const;  // constants ride on the scaling variable
        rhs[n] = row.rhs_const;
        lifted.add_row(
            MixedInequality(std::move(lhs), MaxPlus::neg_inf(), std::move(rhs), Germ::neg_inf()));
    }
    // 0 <= lambda
    std::vector<Germ> r(n + 1, Germ::neg_inf());
    r[n] = Germ::one();
    lifted.add_row(MixedInequality(std::vector<MaxPlus>(n + 1, MaxPlus::neg_inf()),
                                   MaxPlus::one(), std::move(r), Germ::neg_inf()));
    EliminationResult res = eliminate(lifted, n + 1);
    return res.system;
}

bool is_included(const MixedSystem& v1, const MixedSystem& v2) {
    if (v1.dim != v2.dim) throw std::invalid_argument("region dimension mismatch");
    for (const auto& row : v2.rows)
        if (!implies(v1, row)) return false;
    return true;
}

MixedSystem over_approx(const MixedSystem& v1, const MixedSystem& v2) {
    return reduce_system(hull_union(v1, v2, ReduceMode::Weak), ReduceMode::Weak);
}

// ── Parsing ─────────────────────────────────────────────────────────────────

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream is(line);
    std::string t;
    while (is >> t) out.push_back(t);
    return out;
}

[[noreturn]] void fail(int line, const std::string& msg) { throw ParseError(line, 1, msg); }

// "when <atoms> [reset ...]" — atoms span tokens until the reset keyword.
std::string slice_until(const std::vector<std::string>& toks, size_t from, const char* stop,
                        size_t& next) {
    std::string out;
    size_t k = from;
    for (; k < toks.size() && toks[k] != stop; ++k) {
        if (!out.empty()) out += " ";
        out += toks[k];
    }
    next = k;
    return out;
}

}  // namespace

TimedAutomaton parse_automaton(const std::string& text) {
    TimedAutomaton ta;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    std::string initial_name, final_name;
    struct PendingEdge {
        int line;
        std::string src, dst, guard, resets;
    };
    std::vector<PendingEdge> pending;

    while (std::getline(is, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto toks = tokens_of(line);
        if (toks.empty() || toks[0][0] == '#') continue;
        const std::string& kw = toks[0];
        if (kw == "clocks") {
            ta.clock_count = static_cast<int>(toks.size()) - 1;
            if (ta.clock_count < 1) fail(lineno, "at least one clock required");
            for (int k = 1; k <= ta.clock_count; ++k)
                if (toks[k] != "x" + std::to_string(k))
                    fail(lineno, "clocks must be named x1..xn in order");
        } else if (kw == "location") {
            if (toks.size() < 2) fail(lineno, "location needs a name");
            Location loc;
            loc.name = toks[1];
            if (ta.location_index(loc.name) != -1) fail(lineno, "duplicate location name");
            if (toks.size() > 2) {
                if (toks[2] != "invariant") fail(lineno, "expected 'invariant'");
                size_t next;
                std::string atoms = slice_until(toks, 3, "", next);
                try {
                    loc.invariant.atoms = parse_atoms(atoms, ta.clock_count);
                } catch (const std::invalid_argument& e) {
                    fail(lineno, e.what());
                }
            }
            ta.locations.push_back(std::move(loc));
        } else if (kw == "initial") {
            if (toks.size() != 2) fail(lineno, "initial needs a location name");
            initial_name = toks[1];
        } else if (kw == "final") {
            if (toks.size() != 2) fail(lineno, "final needs a location name");
            final_name = toks[1];
        } else if (kw == "edge") {
            if (toks.size() < 4 || toks[2] != "->") fail(lineno, "expected 'edge SRC -> DST'");
            PendingEdge pe;
            pe.line = lineno;
            pe.src = toks[1];
            pe.dst = toks[3];
            size_t k = 4;
            if (k < toks.size() && toks[k] == "when") {
                pe.guard = slice_until(toks, k + 1, "reset", k);
            }
            if (k < toks.size() && toks[k] == "reset") {
                size_t next;
                pe.resets = slice_until(toks, k + 1, "", next);
                k = next;
            }
            if (k != toks.size()) fail(lineno, "trailing tokens on edge line");
            pending.push_back(std::move(pe));
        } else {
            fail(lineno, "unknown keyword '" + kw + "'");
        }
    }

    if (ta.clock_count == 0) fail(lineno + 1, "missing 'clocks' line");
    if (ta.locations.empty()) fail(lineno + 1, "no locations declared");
    ta.initial = ta.location_index(initial_name);
    if (ta.initial < 0) fail(lineno + 1, "initial location undeclared");
    ta.final_loc = ta.location_index(final_name);
    if (ta.final_loc < 0) fail(lineno + 1, "final location undeclared");

    for (const auto& pe : pending) {
        TaEdge e;
        e.src = ta.location_index(pe.src);
        e.dst = ta.location_index(pe.dst);
        if (e.src < 0 || e.dst < 0) fail(pe.line, "edge references an undeclared location");
        try {
            e.guard.atoms = parse_atoms(pe.guard, ta.clock_count);
        } catch (const std::invalid_argument& ex) {
            fail(pe.line, ex.what());
        }
        if (!pe.resets.empty()) {
            std::string resets = pe.resets;
            size_t start = 0;
            while (start < resets.size()) {
                size_t comma = resets.find(',', start);
                std::string piece = resets.substr(
                    start, comma == std::string::npos ? std::string::npos : comma - start);
                size_t a = piece.find_first_not_of(" \t");
                size_t b = piece.find_last_not_of(" \t");
                if (a == std::string::npos) fail(pe.line, "empty reset");
                piece = piece.substr(a, b - a + 1);
                size_t assign = piece.find(":=");
                if (assign == std::string::npos || piece[0] != 'x')
                    fail(pe.line, "expected reset of the form x<i>:=<k>");
                int clock = 0;
                long long value = -1;
                try {
                    clock = std::stoi(piece.substr(1, assign - 1));
                    value = std::stoll(piece.substr(assign + 2));
                } catch (const std::exception&) {
                    fail(pe.line, "bad reset '" + piece + "'");
                }
                if (clock < 1 || clock > ta.clock_count) fail(pe.line, "reset clock out of range");
                if (value < 0) fail(pe.line, "reset values are naturals");
                e.resets.push_back({clock, value});
                if (comma == std::string::npos) break;
                start = comma + 1;
            }
        }
        ta.edges.push_back(std::move(e));
    }
    return ta;
}

// ── Forward exploration ─────────────────────────────────────────────────────

ReachResult forward_reach(const TimedAutomaton& ta, const ReachOptions& opts) {
    const int n = ta.clock_count;

    MixedSystem origin(n);
    for (int i = 0; i < n; ++i) {
        std::vector<MaxPlus> l(n, MaxPlus::neg_inf());
        l[i] = MaxPlus::one();
        origin.add_row(MixedInequality(std::move(l), MaxPlus::neg_inf(),
                                       std::vector<Germ>(n, Germ::neg_inf()), Germ::plain(0)));
        std::vector<Germ> r(n, Germ::neg_inf());
        r[i] = Germ::one();
        origin.add_row(MixedInequality(std::vector<MaxPlus>(n, MaxPlus::neg_inf()),
                                       MaxPlus(Rat(0)), std::move(r), Germ::neg_inf()));
    }

    ReachResult res;
    std::deque<std::pair<int, MixedSystem>> waiting;
    waiting.push_back(
        {ta.initial, reduce_system(intersect(delay(origin), ta.locations[ta.initial].invariant),
                                   opts.reduce)});
    std::vector<std::vector<MixedSystem>> passed(ta.locations.size());

    auto explore = [&](int loc, const MixedSystem& region) {
        for (const auto& e : ta.edges) {
            if (e.src != loc) continue;
            MixedSystem next = intersect(region, e.guard);
            for (const auto& [clock, value] : e.resets) next = reset(next, clock, value);
            next = reduce_system(intersect(delay(next), ta.locations[e.dst].invariant),
                                 opts.reduce);
            if (!is_empty(next)) waiting.push_back({e.dst, std::move(next)});
        }
    };

    while (!waiting.empty()) {
        if (opts.max_steps >= 0 && res.popped >= opts.max_steps) {
            res.status = ReachResult::Inconclusive;
            return res;
        }
        auto [loc, region] = std::move(waiting.front());
        waiting.pop_front();
        ++res.popped;

        if (loc == ta.final_loc) {
            res.trace.push_back({ta.locations[loc].name, region});
            res.status = ReachResult::Reachable;
            return res;
        }

        if (opts.approx_union && !passed[loc].empty()) {
            MixedSystem& hull = passed[loc].front();
            if (is_included(region, hull)) continue;
            hull = over_approx(hull, region);
            res.trace.push_back({ta.locations[loc].name, hull});
            explore(loc, hull);
            continue;
        }

        bool covered = false;
        for (const auto& seen : passed[loc])
            if (is_included(region, seen)) {
                covered = true;
                break;
            }
        if (covered) continue;
        passed[loc].push_back(region);
        res.trace.push_back({ta.locations[loc].name, region});
        explore(loc, region);
    }
    res.status = ReachResult::Unreachable;
    return res;
}

}  // namespace tropmix
