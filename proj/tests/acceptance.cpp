// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Thresholds, grids and tolerances are fixed here, in code.

#include <tropmix/cli.hpp>
#include <tropmix/fm.hpp>
#include <tropmix/germ.hpp>
#include <tropmix/mpg.hpp>
#include <tropmix/reduce.hpp>
#include <tropmix/system.hpp>
#include <tropmix/timed.hpp>

#include "support/fixtures.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace tropmix;
using namespace tropmix::testing;

namespace {

struct Checker {
    int failures = 0;
    std::ostringstream log;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            ++failures;
            if (failures <= 8) log << "      failed: " << what << "\n";
        }
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ── 1. golden projection of the running example ────────────────────────────

void criterion_golden(Checker& c) {
    auto t0 = std::chrono::steady_clock::now();
    MixedSystem sys = running_example();
    EliminationResult res = eliminate(sys, 1);
    c.require(res.system == running_example_projected(),
              "projection differs from the nine expected rows");

    MixedSystem reduced = reduce_system(res.system, ReduceMode::Exact);
    MixedSystem expect = parse_system("dim 1\n-2 <= x1\n");
    c.require(reduced == expect, "exact reduction is not the single floor row");
    bool fwd = true, bwd = true;
    for (const auto& row : expect.rows) fwd = fwd && implies(reduced, row);
    for (const auto& row : reduced.rows) bwd = bwd && implies(expect, row);
    c.require(fwd && bwd, "reduced system is not equivalent to -2 <= x2");
    c.require(seconds_since(t0) < 1.0, "golden projection exceeded 1 s");
}

// ── 2. exhaustive germ-semiring laws ────────────────────────────────────────

Extended ext_mul_cmax(const Extended& a, const Extended& b) {
    if (a.kind == Extended::NegInf || b.kind == Extended::NegInf) return Extended::neg_inf();
    if (a.kind == Extended::PosInf || b.kind == Extended::PosInf) return Extended::pos_inf();
    return Extended::finite(a.value + b.value);
}

void criterion_germ_laws(Checker& c) {
    std::vector<Germ> dom{Germ::neg_inf(), Germ::pos_inf()};
    for (long long m = -3; m <= 3; ++m) {
        dom.push_back(Germ::plain(m));
        dom.push_back(Germ::under(m));
    }
    std::vector<MaxPlus> scalars{MaxPlus::neg_inf()};
    for (long long m = -3; m <= 3; ++m) scalars.push_back(MaxPlus(m));

    for (const auto& x : dom) {
        c.require(germ_add(x, x) == x, "idempotency");
        c.require(germ_add(x, Germ::zero()) == x, "additive unit");
        c.require(germ_mul(x, Germ::one()) == x, "multiplicative unit");
        c.require(germ_mul(x, Germ::zero()) == Germ::zero(), "absorption");
    }
    for (const auto& x : dom)
        for (const auto& y : dom) {
            c.require(germ_add(x, y) == germ_add(y, x), "commutativity (+)");
            c.require(germ_mul(x, y) == germ_mul(y, x), "commutativity (*)");
            c.require(germ_add(x, y).modulus() == std::max(x.modulus(), y.modulus()),
                      "modulus morphism (+)");
            c.require(germ_mul(x, y).modulus() == ext_mul_cmax(x.modulus(), y.modulus()),
                      "modulus morphism (*)");
            for (const auto& z : dom) {
                c.require(germ_add(germ_add(x, y), z) == germ_add(x, germ_add(y, z)),
                          "associativity (+)");
                c.require(germ_mul(germ_mul(x, y), z) == germ_mul(x, germ_mul(y, z)),
                          "associativity (*)");
                c.require(germ_mul(x, germ_add(y, z)) ==
                              germ_add(germ_mul(x, y), germ_mul(x, z)),
                          "distributivity");
            }
        }

    for (Rat e : {Rat(1, 2), Rat(1, 4)}) {
        Epsilon eps{e};
        for (const auto& x : dom)
            for (const auto& y : dom) {
                c.require(germ_leq(x, y) == (valuate(x, eps) <= valuate(y, eps)),
                          "order vs valuation (i)");
                c.require(valuate(germ_add(x, y), eps) ==
                              std::max(valuate(x, eps), valuate(y, eps)),
                          "valuation of sums (ii)");
            }
        for (const auto& s : scalars)
            for (const auto& y : dom) {
                Extended lhs = valuate(germ_mul(Germ::of(s), y), eps);
                Extended rhs = ext_mul_cmax(Extended::of(s), valuate(y, eps));
                c.require(lhs == rhs, "scalar valuation (iii)");
            }
    }

    for (const auto& x : dom)
        for (const auto& y : dom) {
            if (germ_leq(x, y))
                for (const auto& z : dom)
                    c.require(germ_leq(germ_mul(x, z), germ_mul(y, z)), "monotonicity (iv)");
            for (long long z = -3; z <= 3; ++z)
                if (germ_leq(germ_mul(x, Germ::plain(z)), germ_mul(y, Germ::plain(z))))
                    c.require(germ_leq(x, y), "cancellation (iv converse)");
        }

    // (v): strict max-plus comparisons through 0~ and +oo coefficients
    for (const auto& xs : scalars)
        for (const auto& ys : scalars) {
            bool strict = xs < ys;
            if (xs.is_finite())
                c.require(strict == germ_leq(Germ::of(xs),
                                             germ_mul(Germ::under(0), Germ::of(ys))),
                          "strict encoding (v), real case");
            else
                c.require(strict ==
                              germ_leq(Germ::one(), germ_mul(Germ::pos_inf(), Germ::of(ys))),
                          "strict encoding (v), -oo case");
        }
}

// ── 3. projection soundness and completeness ────────────────────────────────

void criterion_projection(Checker& c) {
    auto t0 = std::chrono::steady_clock::now();
    std::mt19937 rng(20260810);
    for (int round = 0; round < 200; ++round) {
        SysConfig cfg;
        cfg.dim = 2 + round % 3;  // 2..4
        cfg.rows = 2 + static_cast<int>(rng() % 5);
        MixedSystem sys = random_system(rng, cfg);
        int var = 1 + static_cast<int>(rng() % cfg.dim);
        EliminationResult res = eliminate(sys, var);

        for (const Point& p : grid_sample(sys, 6, 50, rng, 8000)) {
            Point proj;
            for (int j = 0; j < cfg.dim; ++j)
                if (j != var - 1) proj.coords.push_back(p.coords[j]);
            c.require(satisfies(res.system, proj), "projected solution left the projection");
        }

        int visited = 0;
        grid_enumerate(res.system, 6, [&](const Point& q) {
            MaxPlus lambda;
            bool lifted = true;
            try {
                lambda = lift(sys, var, q);
            } catch (const std::invalid_argument&) {
                lifted = false;
            }
            c.require(lifted, "grid solution of the projection failed to lift");
            if (lifted) {
                Point full = q;
                full.coords.insert(full.coords.begin() + (var - 1), lambda);
                c.require(satisfies(sys, full), "lifted point violates the system");
            }
            return ++visited < 20000;  // budget per system; every visited point must lift
        });
    }
    c.require(seconds_since(t0) < 60.0, "projection criterion exceeded 60 s");
}

// ── 4. game solver vs strategy enumeration ──────────────────────────────────

void criterion_games(Checker& c) {
    std::mt19937 rng(40404);
    for (int round = 0; round < 200; ++round) {
        GameGraph g = random_game(rng, 6, 6, -3, 3);
        std::vector<Rat> chi0 = solve_game(g, Rat(0));
        std::vector<Rat> chis = solve_game(g, Rat(1, 49));
        c.require(chi0 == enumerate_game_value(g, Rat(0)), "value mismatch at eps = 0");
        c.require(chis == enumerate_game_value(g, Rat(1, 49)), "value mismatch at eps = 1/49");
        for (int j = 0; j < g.num_cols; ++j)
            c.require(chis[j] <= chi0[j], "cycle times not monotone in eps");
    }
}

// ── 5. emptiness vs candidate grid ──────────────────────────────────────────

void criterion_emptiness(Checker& c) {
    std::mt19937 rng(50505);
    for (int round = 0; round < 200; ++round) {
        SysConfig cfg;
        cfg.dim = 1 + round % 3;  // 1..3
        cfg.rows = 1 + static_cast<int>(rng() % 6);
        cfg.pos_inf_row_frac = 0.2;
        MixedSystem sys = random_system(rng, cfg);

        EmptinessTrace tr = is_empty_trace(sys);
        // Radius covering the worst lower-bound chains of this family:
        // per step a coefficient gap of at most 6, over at most dim steps.
        bool grid_nonempty = grid_find_point(sys, 6 * cfg.dim + 2).has_value();
        c.require(tr.empty == !grid_nonempty, "emptiness disagrees with the grid oracle");
        c.require(tr.iterations <= std::min<int>(cfg.dim, cfg.rows),
                  "row-growing loop iterated too often");
    }
}

// ── 6. weak redundancy is sound and strictly weaker ────────────────────────

void criterion_weak_gap(Checker& c) {
    MixedSystem gap = parse_system("dim 2\n0 <= x1 + x2\nx1 <= -1\n");
    MixedInequality goal = parse_inequality("0 <= x2", 2);
    c.require(implies(gap, goal), "documented instance is not implied");
    c.require(!weak_redundant(row_matrix(gap), row_vector(goal)),
              "documented instance is weakly redundant");

    std::mt19937 rng(60606);
    std::uniform_int_distribution<long long> scale(-2, 2);
    int positives = 0;
    for (int round = 0; round < 400; ++round) {
        SysConfig cfg;
        cfg.dim = 1 + round % 3;
        cfg.rows = 2 + static_cast<int>(rng() % 3);
        MixedSystem sys = random_system(rng, cfg);
        std::uniform_int_distribution<size_t> pick(0, sys.rows.size() - 1);
        RowVector r1 = row_vector(sys.rows[pick(rng)]);
        RowVector r2 = row_vector(sys.rows[pick(rng)]);
        Germ l1 = Germ::plain(scale(rng)), l2 = Germ::plain(scale(rng));
        RowVector v(r1.size());
        for (size_t j = 0; j < v.size(); ++j) v[j] = l1 * r1[j] + l2 * r2[j];
        bool left_ok = true;
        for (int j = 0; j <= cfg.dim; ++j)
            if (v[j].is_under() || v[j].is_pos_inf()) left_ok = false;
        if (!left_ok) continue;
        std::vector<MaxPlus> lhs;
        for (int j = 0; j < cfg.dim; ++j)
            lhs.push_back(v[j].is_neg_inf() ? MaxPlus::neg_inf()
                                            : MaxPlus(v[j].finite_modulus()));
        MaxPlus lc = v[cfg.dim].is_neg_inf() ? MaxPlus::neg_inf()
                                             : MaxPlus(v[cfg.dim].finite_modulus());
        std::vector<Germ> rhs(v.begin() + cfg.dim + 1, v.begin() + 2 * cfg.dim + 1);
        MixedInequality target(lhs, lc, rhs, v[2 * cfg.dim + 1]);
        if (weak_redundant(row_matrix(sys), row_vector(target))) {
            ++positives;
            c.require(implies(sys, target), "weakly redundant row is not implied");
        }
    }
    c.require(positives >= 50, "generator produced too few weakly redundant rows");
}

// ── 7. timed-automata end to end ────────────────────────────────────────────

std::string data_path(const char* name) {
    return std::string(TROPMIX_DATA_DIR) + "/" + name;
}

void criterion_reachability(Checker& c) {
    auto t0 = std::chrono::steady_clock::now();
    std::ostringstream out, err;
    int code = run_cli({"reach", data_path("diamond.ta")}, out, err);
    c.require(code == 0 && out.str() == "UNREACHABLE\n", "strict automaton must be UNREACHABLE");

    std::ostringstream out2, err2;
    code = run_cli({"reach", data_path("diamond_relaxed.ta")}, out2, err2);
    c.require(code == 0 && out2.str() == "REACHABLE\n", "relaxed automaton must be REACHABLE");
    c.require(seconds_since(t0) < 5.0, "reachability runs exceeded 5 s");

    std::ifstream in(data_path("diamond.ta"));
    std::ostringstream ta_text;
    ta_text << in.rdbuf();
    ReachResult res = forward_reach(parse_automaton(ta_text.str()));
    auto region_of = [&](const std::string& name, int nth) {
        int seen = 0;
        for (const auto& s : res.trace)
            if (s.location == name && seen++ == nth) return s.region;
        return MixedSystem(2);
    };
    c.require(satisfies(region_of("l0", 0), pt({0, 0})), "l0 region misses (0,0)");
    c.require(satisfies(region_of("l0", 0), pt({2, 2})), "l0 region misses (2,2)");
    c.require(satisfies(region_of("l1", 0), pt({0, 3})), "l1 region misses (0,3)");
    c.require(satisfies(region_of("l2", 0), pt({3, 0})), "l2 region misses (3,0)");
    MixedSystem hull = over_approx(region_of("l3", 0), region_of("l3", 1));
    c.require(!satisfies(hull, pt({1, 1})), "l3 hull must exclude (1,1)");
}

// ── 8. growth sanity of the weak reduction pipeline ─────────────────────────

void criterion_growth(Checker& c) {
    std::mt19937 rng(80808);
    for (int round = 0; round < 6; ++round) {
        SysConfig cfg;
        cfg.dim = 5;
        cfg.rows = 8;
        cfg.closed = true;
        MixedSystem sys = random_system(rng, cfg);

        MixedSystem none = sys, weak = sys;
        for (int step = 0; step < 3; ++step) {
            none = eliminate(none, 1).system;  // indices shift down each step
            weak = reduce_system(eliminate(weak, 1).system, ReduceMode::Weak);
            c.require(weak.rows.size() <= none.rows.size(),
                      "weak pipeline produced more rows than the unreduced one");
        }
        c.require(weak.rows.size() < 500, "weak-reduced row count reached 500");
    }
}

struct Criterion {
    const char* label;
    std::function<void(Checker&)> run;
};

}  // namespace

int main() {
    std::vector<Criterion> criteria{
        {"1. golden projection of the running example (< 1 s)", criterion_golden},
        {"2. exhaustive germ-semiring law suite", criterion_germ_laws},
        {"3. projection soundness/completeness, 200 systems (< 60 s)", criterion_projection},
        {"4. game solver equals strategy enumeration, 200 games", criterion_games},
        {"5. emptiness vs candidate grid, 200 systems", criterion_emptiness},
        {"6. weak redundancy sound, documented gap preserved", criterion_weak_gap},
        {"7. timed-automata reachability end to end (< 5 s)", criterion_reachability},
        {"8. growth sanity of weak reduction (n=5, p=8)", criterion_growth},
    };

    int failed = 0;
    for (auto& crit : criteria) {
        Checker c;
        auto t0 = std::chrono::steady_clock::now();
        try {
            crit.run(c);
        } catch (const std::exception& e) {
            c.require(false, std::string("exception: ") + e.what());
        }
        double dt = seconds_since(t0);
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.2f", dt);
        if (c.failures == 0) {
            std::cout << "[PASS] " << crit.label << " (" << buf << " s)\n";
        } else {
            ++failed;
            std::cout << "[FAIL] " << crit.label << " (" << buf << " s, " << c.failures
                      << " checks)\n"
                      << c.log.str();
        }
    }
    if (failed == 0) {
        std::cout << "all 8 acceptance criteria passed\n";
        return 0;
    }
    std::cout << failed << " acceptance criteria failed\n";
    return 1;
}
