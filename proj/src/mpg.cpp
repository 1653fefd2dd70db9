#include <tropmix/mpg.hpp>

#include <algorithm>
#include <cassert>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace tropmix {

namespace {

constexpr long long kNoWalk = std::numeric_limits<long long>::min() / 4;

long long lcm_ll(long long a, long long b) {
    return a / std::gcd(a, b) * b;
}

// ── Integer-scaled snapshot of the game at a concrete eps ──────────────────

struct ConcreteGame {
    int rows = 0;
    int cols = 0;
    long long scale = 1;  // every weight below is the true weight times scale
    std::vector<std::vector<std::pair<int, long long>>> row_arcs;
    std::vector<std::vector<std::pair<int, long long>>> col_arcs;
};

ConcreteGame concretize(const GameGraph& g, const Rat& eps) {
    if (eps < Rat(0)) throw std::invalid_argument("negative perturbation");
    long long L = eps.denominator();
    for (const auto& arcs : g.col_arcs)
        for (const auto& [row, w] : arcs) L = lcm_ll(L, w.denominator());
    for (const auto& arcs : g.row_arcs)
        for (const auto& [col, w] : arcs) L = lcm_ll(L, w.base.denominator());

    ConcreteGame cg;
    cg.rows = g.num_rows;
    cg.cols = g.num_cols;
    cg.scale = L;
    cg.row_arcs.resize(g.num_rows);
    cg.col_arcs.resize(g.num_cols);
    auto scaled = [&](const Rat& w) {
        Rat s = w * Rat(L);
        assert(s.denominator() == 1);
        return s.numerator();
    };
    for (int i = 0; i < g.num_rows; ++i)
        for (const auto& [col, w] : g.row_arcs[i]) cg.row_arcs[i].push_back({col, scaled(w.at(eps))});
    for (int j = 0; j < g.num_cols; ++j)
        for (const auto& [row, w] : g.col_arcs[j]) cg.col_arcs[j].push_back({row, scaled(w)});
    return cg;
}

// ── One-player analysis on a column-node contraction ────────────────────────

struct Contraction {
    int m = 0;
    std::vector<std::vector<std::pair<int, long long>>> adj;
};

// Tarjan, iterative. Components are numbered so that every arc goes from a
// component with a larger id to one with a smaller-or-equal id.
std::vector<int> strongly_connected_components(const Contraction& c, int& count) {
    const int n = c.m;
    std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
    std::vector<char> on_stack(n, 0);
    std::vector<int> stack;
    int next_index = 0;
    count = 0;

    struct Frame {
        int node;
        size_t arc;
    };
    for (int start = 0; start < n; ++start) {
        if (index[start] != -1) continue;
        std::vector<Frame> frames{{start, 0}};
        index[start] = low[start] = next_index++;
        stack.push_back(start);
        on_stack[start] = 1;
        while (!frames.empty()) {
            Frame& f = frames.back();
            if (f.arc < c.adj[f.node].size()) {
                int to = c.adj[f.node][f.arc].first;
                ++f.arc;
                if (index[to] == -1) {
                    index[to] = low[to] = next_index++;
                    stack.push_back(to);
                    on_stack[to] = 1;
                    frames.push_back({to, 0});
                } else if (on_stack[to]) {
                    low[f.node] = std::min(low[f.node], index[to]);
                }
            } else {
                int v = f.node;
                frames.pop_back();
                if (!frames.empty()) low[frames.back().node] = std::min(low[frames.back().node], low[v]);
                if (low[v] == index[v]) {
                    while (true) {
                        int w = stack.back();
                        stack.pop_back();
                        on_stack[w] = 0;
                        comp[w] = count;
                        if (w == v) break;
                    }
                    ++count;
                }
            }
        }
    }
    return comp;
}

/// Karp on one strongly connected component (given as node list + internal
/// arcs): exact maximum cycle mean, in scaled-weight units per arc.
Rat karp_max_mean(const std::vector<int>& nodes, const Contraction& c,
                  const std::vector<int>& comp, int my_comp) {
    const int n = static_cast<int>(nodes.size());
    std::vector<int> local(c.m, -1);
    for (int idx = 0; idx < n; ++idx) local[nodes[idx]] = idx;

    std::vector<std::vector<long long>> d(n + 1, std::vector<long long>(n, kNoWalk));
    d[0][0] = 0;  // source: first node of the component
    for (int k = 0; k < n; ++k) {
        for (int idx = 0; idx < n; ++idx) {
            if (d[k][idx] == kNoWalk) continue;
            int u = nodes[idx];
            for (const auto& [v, w] : c.adj[u]) {
                if (comp[v] != my_comp) continue;
                long long cand = d[k][idx] + w;
                int vl = local[v];
                if (cand > d[k + 1][vl]) d[k + 1][vl] = cand;
            }
        }
    }

    bool found = false;
    Rat best;
    for (int idx = 0; idx < n; ++idx) {
        if (d[n][idx] == kNoWalk) continue;
        bool have = false;
        Rat worst;
        for (int k = 0; k < n; ++k) {
            if (d[k][idx] == kNoWalk) continue;
            Rat ratio(d[n][idx] - d[k][idx], n - k);
            if (!have || ratio < worst) {
                worst = ratio;
                have = true;
            }
        }
        assert(have);
        if (!found || worst > best) {
            best = worst;
            found = true;
        }
    }
    assert(found && "strongly connected component with arcs must contain a cycle");
    return best;
}

/// Per node, the maximum mean (scaled units) over cycles reachable from it.
std::vector<Rat> reachable_max_means(const Contraction& c) {
    int count = 0;
    std::vector<int> comp = strongly_connected_components(c, count);

    std::vector<std::vector<int>> members(count);
    for (int v = 0; v < c.m; ++v) members[comp[v]].push_back(v);

    std::vector<bool> has_cycle(count, false);
    std::vector<Rat> mean(count);
    for (int s = 0; s < count; ++s) {
        bool internal_arc = false;
        for (int v : members[s]) {
            for (const auto& [to, w] : c.adj[v])
                if (comp[to] == s) internal_arc = true;
        }
        if (!internal_arc) continue;
        has_cycle[s] = true;
        mean[s] = karp_max_mean(members[s], c, comp, s);
    }

    // Tarjan numbering: arcs never go to a larger component id, so process
    // components in increasing order to propagate the best reachable mean.
    std::vector<bool> has_best(count, false);
    std::vector<Rat> best(count);
    for (int s = 0; s < count; ++s) {
        if (has_cycle[s]) {
            best[s] = mean[s];
            has_best[s] = true;
        }
        for (int v : members[s]) {
            for (const auto& [to, w] : c.adj[v]) {
                int t = comp[to];
                if (t == s) continue;
                assert(t < s);
                if (has_best[t] && (!has_best[s] || best[t] > best[s])) {
                    best[s] = best[t];
                    has_best[s] = true;
                }
            }
        }
    }

    std::vector<Rat> out(c.m);
    for (int v = 0; v < c.m; ++v) {
        if (!has_best[comp[v]])
            throw std::logic_error("node reaches no cycle; the game graph is malformed");
        out[v] = best[comp[v]];
    }
    return out;
}

long long forced_weight(const ConcreteGame& cg, int col, int row) {
    for (const auto& [r, w] : cg.col_arcs[col])
        if (r == row) return w;
    throw std::invalid_argument("strategy uses a non-existent arc");
}

Contraction contract_min(const ConcreteGame& cg, const MinStrategy& sigma) {
    Contraction c;
    c.m = cg.cols;
    c.adj.resize(cg.cols);
    for (int j = 0; j < cg.cols; ++j) {
        int i = sigma.row_of_col.at(j);
        long long w1 = forced_weight(cg, j, i);
        std::vector<long long> best(cg.cols, kNoWalk);
        for (const auto& [k, w2] : cg.row_arcs[i]) best[k] = std::max(best[k], w1 + w2);
        for (int k = 0; k < cg.cols; ++k)
            if (best[k] != kNoWalk) c.adj[j].push_back({k, best[k]});
    }
    return c;
}

Contraction contract_max(const ConcreteGame& cg, const MaxStrategy& tau) {
    Contraction c;
    c.m = cg.cols;
    c.adj.resize(cg.cols);
    for (int j = 0; j < cg.cols; ++j) {
        std::vector<long long> best(cg.cols, kNoWalk);  // Min keeps the cheapest parallel arc
        for (const auto& [i, w1] : cg.col_arcs[j]) {
            int k = tau.col_of_row.at(i);
            long long w2 = kNoWalk;
            for (const auto& [kk, w] : cg.row_arcs[i])
                if (kk == k) w2 = std::max(w2, w);
            if (w2 == kNoWalk) throw std::invalid_argument("strategy uses a non-existent arc");
            long long total = w1 + w2;
            if (best[k] == kNoWalk || total < best[k]) best[k] = total;
        }
        for (int k = 0; k < cg.cols; ++k)
            if (best[k] != kNoWalk) c.adj[j].push_back({k, best[k]});
    }
    return c;
}

std::vector<Rat> unscale(std::vector<Rat> means, long long scale) {
    for (auto& r : means) r /= Rat(scale);
    return means;
}

}  // namespace

bool GameGraph::well_formed() const {
    if (num_cols < 1 || num_rows < 1) return false;
    if (static_cast<int>(row_arcs.size()) != num_rows) return false;
    if (static_cast<int>(col_arcs.size()) != num_cols) return false;
    for (const auto& arcs : row_arcs) {
        if (arcs.empty()) return false;
        for (const auto& [col, w] : arcs)
            if (col < 0 || col >= num_cols || w.eps_count < 0 || w.eps_count > 1) return false;
    }
    for (const auto& arcs : col_arcs) {
        if (arcs.empty()) return false;
        for (const auto& [row, w] : arcs)
            if (row < 0 || row >= num_rows) return false;
    }
    return true;
}

std::vector<Rat> evaluate_min_strategy(const GameGraph& g, const MinStrategy& sigma,
                                       const Rat& eps) {
    if (static_cast<int>(sigma.row_of_col.size()) != g.num_cols)
        throw std::invalid_argument("strategy size mismatch");
    ConcreteGame cg = concretize(g, eps);
    return unscale(reachable_max_means(contract_min(cg, sigma)), cg.scale);
}

std::vector<Rat> evaluate_max_strategy(const GameGraph& g, const MaxStrategy& tau,
                                       const Rat& eps) {
    if (static_cast<int>(tau.col_of_row.size()) != g.num_rows)
        throw std::invalid_argument("strategy size mismatch");
    ConcreteGame cg = concretize(g, eps);
    Contraction c = contract_max(cg, tau);
    for (auto& arcs : c.adj)
        for (auto& [to, w] : arcs) w = -w;
    std::vector<Rat> means = reachable_max_means(c);
    for (auto& m : means) m = -m;
    return unscale(std::move(means), cg.scale);
}

std::vector<Rat> solve_game(const GameGraph& g, const Rat& eps) {
    if (!g.well_formed()) throw std::invalid_argument("game graph is malformed");
    ConcreteGame cg = concretize(g, eps);
    const int m = cg.cols;
    const int r = cg.rows;

    long long W = 0;
    for (const auto& arcs : cg.row_arcs)
        for (const auto& [k, w] : arcs) W = std::max(W, std::llabs(w));
    for (const auto& arcs : cg.col_arcs)
        for (const auto& [i, w] : arcs) W = std::max(W, std::llabs(w));

    // Finite-horizon values drift from h * chi by at most 2(m+r)W; distinct
    // cycle means with denominators <= m are at least 1/m^2 apart, so this
    // horizon pins the rounded result.
    const long long horizon = 4 * (m + r) * W * m * m + 1;

    std::vector<long long> v(m, 0), nv(m);
    std::vector<long long> row_best(r);
    for (long long step = 0; step < horizon; ++step) {
        for (int i = 0; i < r; ++i) {
            long long best = kNoWalk;
            for (const auto& [k, w] : cg.row_arcs[i]) best = std::max(best, w + v[k]);
            row_best[i] = best;
        }
        for (int j = 0; j < m; ++j) {
            long long best = std::numeric_limits<long long>::max();
            for (const auto& [i, w] : cg.col_arcs[j]) best = std::min(best, w + row_best[i]);
            nv[j] = best;
        }
        v.swap(nv);
    }

    std::vector<Rat> chi(m);
    for (int j = 0; j < m; ++j) {
        Rat x(v[j], horizon);
        Rat best_val;
        Rat best_err;
        bool have = false;
        for (int q = 1; q <= m; ++q) {
            long long p = rat_round(x * Rat(q));
            Rat cand(p, q);
            Rat err = rat_abs(x - cand);
            if (!have || err < best_err) {
                best_val = cand;
                best_err = err;
                have = true;
            }
        }
        chi[j] = best_val / Rat(cg.scale);
    }
    return chi;
}

// ── System-to-game translation ──────────────────────────────────────────────

GameBuild build_game(const MixedSystem& sys) {
    if (sys.has_pos_inf())
        throw std::invalid_argument("+oo coefficient on a right-hand side; use is_empty");

    const int n = sys.dim;
    const int r = static_cast<int>(sys.rows.size());
    GameBuild out;

    // Rows with an identically bottom right side pin their left-side
    // variables to -oo; iterate to a fixpoint since pinning may empty
    // further right sides.
    std::vector<char> forced(n, 0), dropped(r, 0);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < r; ++i) {
            if (dropped[i]) continue;
            const auto& row = sys.rows[i];
            bool rhs_empty = row.rhs_const.is_neg_inf();
            for (int j = 0; j < n && rhs_empty; ++j)
                if (!row.rhs[j].is_neg_inf() && !forced[j]) rhs_empty = false;
            if (!rhs_empty) continue;
            if (row.lhs_const.is_finite()) {
                out.trivially_empty = true;
                return out;
            }
            dropped[i] = 1;
            changed = true;
            for (int j = 0; j < n; ++j) {
                if (row.lhs[j].is_finite() && !forced[j]) forced[j] = 1;
            }
        }
    }

    std::vector<int> col_of_var(n, -1);
    for (int j = 0; j < n; ++j) {
        if (forced[j]) {
            out.forced_bottom.push_back(j + 1);
        } else {
            col_of_var[j] = static_cast<int>(out.active_vars.size());
            out.active_vars.push_back(j + 1);
        }
    }

    GameGraph& g = out.graph;
    g.num_cols = static_cast<int>(out.active_vars.size()) + 1;
    const int cc = g.const_col();
    g.col_arcs.resize(g.num_cols);

    for (int i = 0; i < r; ++i) {
        if (dropped[i]) continue;
        const auto& row = sys.rows[i];
        int node = g.num_rows++;
        g.row_arcs.emplace_back();
        for (int j = 0; j < n; ++j) {
            if (forced[j]) continue;
            const Germ& b = row.rhs[j];
            if (!b.is_neg_inf())
                g.row_arcs[node].push_back(
                    {col_of_var[j], {b.finite_modulus(), b.is_under() ? 1 : 0}});
            if (row.lhs[j].is_finite())
                g.col_arcs[col_of_var[j]].push_back({node, -row.lhs[j].value()});
        }
        if (!row.rhs_const.is_neg_inf())
            g.row_arcs[node].push_back(
                {cc, {row.rhs_const.finite_modulus(), row.rhs_const.is_under() ? 1 : 0}});
        if (row.lhs_const.is_finite()) g.col_arcs[cc].push_back({node, -row.lhs_const.value()});
    }

    // Restore "every node moves": a column nobody bounds from above gets a
    // zero-mean self-constraint (the variable is unconstrained, value 0).
    for (int j = 0; j < g.num_cols; ++j) {
        if (!g.col_arcs[j].empty()) continue;
        int node = g.num_rows++;
        g.row_arcs.push_back({{j, {Rat(0), 0}}});
        g.col_arcs[j].push_back({node, Rat(0)});
    }

    assert(g.well_formed());
    return out;
}

// ── Certificates ────────────────────────────────────────────────────────────

namespace {

/// Fixes one player's choices arc by arc, keeping the full cycle-time vector
/// unchanged; the surviving one-player graph certifies every value at once.
MinStrategy extract_min_strategy(const GameGraph& g, const Rat& eps,
                                 const std::vector<Rat>& chi) {
    GameGraph cur = g;
    MinStrategy sigma;
    sigma.row_of_col.assign(g.num_cols, -1);
    for (int j = 0; j < g.num_cols; ++j) {
        for (const auto& arc : g.col_arcs[j]) {
            GameGraph trial = cur;
            trial.col_arcs[j] = {arc};
            if (solve_game(trial, eps) == chi) {
                cur = std::move(trial);
                sigma.row_of_col[j] = arc.first;
                break;
            }
        }
        assert(sigma.row_of_col[j] >= 0 && "some optimal choice must preserve the value");
    }
    return sigma;
}

MaxStrategy extract_max_strategy(const GameGraph& g, const Rat& eps,
                                 const std::vector<Rat>& chi) {
    GameGraph cur = g;
    MaxStrategy tau;
    tau.col_of_row.assign(g.num_rows, -1);
    for (int i = 0; i < g.num_rows; ++i) {
        for (const auto& arc : g.row_arcs[i]) {
            GameGraph trial = cur;
            trial.row_arcs[i] = {arc};
            if (solve_game(trial, eps) == chi) {
                cur = std::move(trial);
                tau.col_of_row[i] = arc.first;
                break;
            }
        }
        assert(tau.col_of_row[i] >= 0 && "some optimal choice must preserve the value");
    }
    return tau;
}

/// An extremal cycle: mean equal to `value`, reachable from `start` in a
/// one-player contraction. Picks a reachable strongly connected component
/// whose maximum cycle mean equals the value, then finds a cycle of tight
/// arcs for the longest-walk potentials of the shifted weights w - value.
std::vector<int> extremal_cycle(const Contraction& c, long long scale, int start,
                                const Rat& value) {
    std::vector<char> reach(c.m, 0);
    std::vector<int> stack{start};
    reach[start] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (const auto& [to, w] : c.adj[v])
            if (!reach[to]) {
                reach[to] = 1;
                stack.push_back(to);
            }
    }

    const Rat shift = value * Rat(scale);
    int count = 0;
    std::vector<int> comp = strongly_connected_components(c, count);
    std::vector<std::vector<int>> members(count);
    for (int v = 0; v < c.m; ++v)
        if (reach[v]) members[comp[v]].push_back(v);

    for (int s = 0; s < count; ++s) {
        if (members[s].empty()) continue;
        bool internal_arc = false;
        for (int v : members[s])
            for (const auto& [to, w] : c.adj[v])
                if (comp[to] == s) internal_arc = true;
        if (!internal_arc) continue;
        if (karp_max_mean(members[s], c, comp, s) != shift) continue;

        // Longest-walk potentials for w' = w - value inside the component:
        // no positive w'-cycle exists, and every mean-maximizing cycle is
        // made of tight arcs (pot[to] == pot[v] + w'), so a cycle of tight
        // arcs exists and any such cycle has mean exactly `value`.
        const auto& nodes = members[s];
        const int sz = static_cast<int>(nodes.size());
        std::vector<int> local(c.m, -1);
        for (int idx = 0; idx < sz; ++idx) local[nodes[idx]] = idx;
        std::vector<Rat> pot(sz, Rat(0));
        std::vector<char> known(sz, 0);
        known[0] = 1;
        for (int round = 0; round < sz + 1; ++round) {
            for (int idx = 0; idx < sz; ++idx) {
                if (!known[idx]) continue;
                for (const auto& [to, w] : c.adj[nodes[idx]]) {
                    if (comp[to] != s) continue;
                    Rat cand = pot[idx] + Rat(w) - shift;
                    int tl = local[to];
                    if (!known[tl] || cand > pot[tl]) {
                        pot[tl] = cand;
                        known[tl] = 1;
                    }
                }
            }
        }

        // Depth-first search over tight arcs; a gray revisit closes a cycle.
        std::vector<int> color(sz, 0), parent(sz, -1);
        for (int root = 0; root < sz; ++root) {
            if (color[root]) continue;
            std::vector<std::pair<int, size_t>> frames{{root, 0}};
            color[root] = 1;
            while (!frames.empty()) {
                int idx = frames.back().first;
                const auto& adj = c.adj[nodes[idx]];
                if (frames.back().second >= adj.size()) {
                    color[idx] = 2;
                    frames.pop_back();
                    continue;
                }
                auto [to, w] = adj[frames.back().second++];
                if (comp[to] != s) continue;
                int tl = local[to];
                if (pot[tl] != pot[idx] + Rat(w) - shift) continue;  // slack arc
                if (color[tl] == 1) {
                    std::vector<int> cycle{nodes[tl]};
                    for (int u = idx; u != tl; u = parent[u]) cycle.push_back(nodes[u]);
                    std::reverse(cycle.begin() + 1, cycle.end());
                    return cycle;
                }
                if (color[tl] == 0) {
                    color[tl] = 1;
                    parent[tl] = idx;
                    frames.push_back({tl, 0});
                }
            }
        }
    }
    return {};  // no component matches; caller tolerates an absent cycle
}

GameCertificate make_certificate(const GameGraph& g, const Rat& eps, bool winner_is_max) {
    GameCertificate cert;
    cert.winner_is_max = winner_is_max;
    cert.eps = eps;
    ConcreteGame cg = concretize(g, eps);
    std::vector<Rat> chi = solve_game(g, eps);
    cert.mean = chi[g.const_col()];
    if (winner_is_max) {
        // Min plays against the fixed strategy; the extremal cycle is the
        // minimum-mean one, extracted as a maximum on negated weights.
        MaxStrategy tau = extract_max_strategy(g, eps, chi);
        cert.strategy = tau.col_of_row;
        Contraction c = contract_max(cg, tau);
        for (auto& arcs : c.adj)
            for (auto& [to, w] : arcs) w = -w;
        cert.cycle = extremal_cycle(c, cg.scale, g.const_col(), -cert.mean);
    } else {
        MinStrategy sigma = extract_min_strategy(g, eps, chi);
        cert.strategy = sigma.row_of_col;
        Contraction c = contract_min(cg, sigma);
        cert.cycle = extremal_cycle(c, cg.scale, g.const_col(), cert.mean);
    }
    return cert;
}

}  // namespace

std::string print_certificate(const GameCertificate& cert) {
    std::ostringstream os;
    os << "winner: " << (cert.winner_is_max ? "max" : "min") << "\n";
    for (size_t a = 0; a < cert.strategy.size(); ++a) {
        if (cert.winner_is_max)
            os << "r" << a + 1 << " -> c" << cert.strategy[a] + 1 << "\n";
        else
            os << "c" << a + 1 << " -> r" << cert.strategy[a] + 1 << "\n";
    }
    os << "cycle:";
    for (int v : cert.cycle) os << " c" << v + 1;
    os << " mean " << rat_to_string(cert.mean) << "\n";
    return os.str();
}

// ── Decision procedures ─────────────────────────────────────────────────────

bool is_empty_finite(const MixedSystem& sys, GameCertificate* cert) {
    GameBuild b = build_game(sys);
    if (b.trivially_empty) return true;
    const GameGraph& g = b.graph;
    const int m = g.num_cols;

    std::vector<Rat> chi0 = solve_game(g, Rat(0));
    if (chi0[g.const_col()] > Rat(0)) {
        if (cert) *cert = make_certificate(g, Rat(0), true);
        return false;
    }
    const Rat eps_star(1, static_cast<long long>(m) * m);
    std::vector<Rat> chi_star = solve_game(g, eps_star);
    if (chi_star[g.const_col()] >= Rat(0)) {
        if (cert) *cert = make_certificate(g, eps_star, true);
        return false;
    }
    if (cert) *cert = make_certificate(g, eps_star, false);
    return true;
}

namespace {

std::set<int> game_support(const MixedSystem& sys) {
    GameBuild b = build_game(sys);
    if (b.trivially_empty) return {};
    const GameGraph& g = b.graph;
    const int m = g.num_cols;
    std::vector<Rat> chi0 = solve_game(g, Rat(0));
    std::vector<Rat> chi_star = solve_game(g, Rat(1, static_cast<long long>(m) * m));
    auto winning = [&](int j) { return chi0[j] > Rat(0) || chi_star[j] >= Rat(0); };
    if (!winning(g.const_col())) return {};
    std::set<int> out;
    for (int j = 0; j + 1 < m; ++j)
        if (winning(j)) out.insert(b.active_vars[j]);
    return out;
}

MixedInequality strip_pos_inf(const MixedInequality& row) {
    MixedInequality out = row;
    for (auto& b : out.rhs)
        if (b.is_pos_inf()) b = Germ::neg_inf();
    return out;
}

}  // namespace

std::set<int> support(const MixedSystem& sys) { return game_support(sys); }

EmptinessTrace is_empty_trace(const MixedSystem& sys) {
    const int n = sys.dim;

    // Rows whose right constant is +oo hold everywhere; leave them out.
    std::vector<const MixedInequality*> rows;
    for (const auto& row : sys.rows)
        if (!row.rhs_const.is_pos_inf()) rows.push_back(&row);
    const int r = static_cast<int>(rows.size());

    std::set<int> J;
    for (int j = 1; j <= n; ++j) J.insert(j);
    std::vector<char> in_I(r, 0);

    auto eligible = [&](int i) {
        if (in_I[i]) return false;
        for (int j : J)
            if (rows[i]->rhs[j - 1].is_pos_inf()) return false;
        return true;
    };

    std::vector<int> fresh;
    for (int i = 0; i < r; ++i)
        if (eligible(i)) fresh.push_back(i);

    EmptinessTrace trace;
    int bodies = 0;
    while (!fresh.empty()) {
        ++bodies;
        for (int i : fresh) in_I[i] = 1;
        MixedSystem sub(n);
        for (int i = 0; i < r; ++i)
            if (in_I[i]) sub.add_row(strip_pos_inf(*rows[i]));
        trace.deciding = sub;
        if (is_empty_finite(sub)) {
            trace.empty = true;
            break;
        }
        J = game_support(sub);
        fresh.clear();
        for (int i = 0; i < r; ++i)
            if (eligible(i)) fresh.push_back(i);
    }
    // Re-entries beyond the first mandatory pass; bounded by min(n, r).
    trace.iterations = std::max(0, bodies - 1);
    assert(trace.iterations <= std::min(n, r));
    return trace;
}

bool is_empty(const MixedSystem& sys) { return is_empty_trace(sys).empty; }

bool implies(const MixedSystem& sys, const MixedInequality& target) {
    if (target.dim() != sys.dim) throw std::invalid_argument("target dimension mismatch");
    if (target.lhs_bottom() || target.rhs_const.is_pos_inf()) return true;

    const int n = sys.dim;
    MixedSystem q = sys;

    // Right side of the negated rows: the target's left side, scaled by 0~
    // (strict variant) or taken as is.
    auto target_lhs_rhs = [&](bool strict) {
        std::vector<Germ> rhs(n, Germ::neg_inf());
        for (int j = 0; j < n; ++j) {
            if (!target.lhs[j].is_finite()) continue;
            rhs[j] = strict ? Germ::under(target.lhs[j].value()) : Germ::plain(target.lhs[j].value());
        }
        Germ rc = Germ::neg_inf();
        if (target.lhs_const.is_finite())
            rc = strict ? Germ::under(target.lhs_const.value())
                        : Germ::plain(target.lhs_const.value());
        return std::pair(rhs, rc);
    };

    auto add_negation_row = [&](std::vector<MaxPlus> lhs, MaxPlus lhs_const, bool strict) {
        auto [rhs, rc] = target_lhs_rhs(strict);
        q.add_row(MixedInequality(std::move(lhs), std::move(lhs_const), std::move(rhs), rc));
    };

    for (int i = 0; i < n; ++i) {
        const Germ& f = target.rhs[i];
        if (f.is_neg_inf()) continue;  // bottom-left row, trivially true
        std::vector<MaxPlus> lhs(n, MaxPlus::neg_inf());
        if (f.is_pos_inf()) {
            // e x + g > (+oo) x_i forces x_i = -oo
            lhs[i] = MaxPlus::one();
            q.add_row(MixedInequality(std::move(lhs), MaxPlus::neg_inf(),
                                      std::vector<Germ>(n, Germ::neg_inf()), Germ::neg_inf()));
        } else {
            lhs[i] = MaxPlus(f.finite_modulus());
            add_negation_row(std::move(lhs), MaxPlus::neg_inf(), f.is_plain());
        }
    }

    const Germ& h = target.rhs_const;
    if (!h.is_neg_inf())
        add_negation_row(std::vector<MaxPlus>(n, MaxPlus::neg_inf()),
                         MaxPlus(h.finite_modulus()), h.is_plain());

    if (target.lhs_const.is_neg_inf()) {
        // e x must dominate -oo strictly: some finite-coefficient variable
        // must itself be finite.
        std::vector<Germ> rhs(n, Germ::neg_inf());
        for (int j = 0; j < n; ++j)
            if (target.lhs[j].is_finite()) rhs[j] = Germ::pos_inf();
        q.add_row(MixedInequality(std::vector<MaxPlus>(n, MaxPlus::neg_inf()), MaxPlus::one(),
                                  std::move(rhs), Germ::neg_inf()));
    }

    return is_empty(q);
}

}  // namespace tropmix
