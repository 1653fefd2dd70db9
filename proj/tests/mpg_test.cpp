#include <doctest.h>

#include <tropmix/mpg.hpp>

#include "support/fixtures.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

#include <random>

using namespace tropmix;
using namespace tropmix::testing;

namespace {

// The four-inequality fragment of the running example used for the game
// construction checks.
MixedSystem game_example() {
    return parse_system(
        "dim 2\n"
        "-3 <= x1\n"
        "0 <= 1*x1 + 0~*x2\n"
        "-2 <= x2\n"
        "-2*x1 <= 0~ + -1*x2\n");
}

bool has_row_arc(const GameGraph& g, int row, int col, Rat base, int eps) {
    for (const auto& [c, w] : g.row_arcs[row])
        if (c == col && w.base == base && w.eps_count == eps) return true;
    return false;
}

bool has_col_arc(const GameGraph& g, int col, int row, Rat w) {
    for (const auto& [r, ww] : g.col_arcs[col])
        if (r == row && ww == w) return true;
    return false;
}

}  // namespace

TEST_CASE("game construction mirrors the system") {
    GameBuild b = build_game(game_example());
    REQUIRE_FALSE(b.trivially_empty);
    const GameGraph& g = b.graph;
    CHECK(g.num_cols == 3);
    CHECK(g.num_rows == 5);  // four rows + the self-constraint for x2
    CHECK(g.well_formed());

    CHECK(has_col_arc(g, 2, 0, Rat(3)));   // constant node pays 3 into row 1
    CHECK(has_col_arc(g, 2, 1, Rat(0)));
    CHECK(has_col_arc(g, 2, 2, Rat(2)));
    CHECK(has_col_arc(g, 0, 3, Rat(2)));   // column x1 -> row 4, weight 2
    CHECK(has_row_arc(g, 1, 0, Rat(1), 0));
    CHECK(has_row_arc(g, 1, 1, Rat(0), 1));  // perturbed arc: weight -eps
    CHECK(has_row_arc(g, 3, 2, Rat(0), 1));
    CHECK(has_row_arc(g, 3, 1, Rat(-1), 0));
    // x2 never appears on a left side; it gets the zero self-cycle
    CHECK(has_col_arc(g, 1, 4, Rat(0)));
    CHECK(has_row_arc(g, 4, 1, Rat(0), 0));

    // a constant row normalizes to the tautology -oo <= 0; the constant
    // column then moves through its zero self-constraint
    MixedSystem constant = parse_system("dim 1\n0 <= 0\n");
    GameBuild cb = build_game(constant);
    CHECK(cb.graph.num_cols == 2);
    bool zero_cycle = false;
    for (const auto& [row, w] : cb.graph.col_arcs[1])
        if (w == Rat(0) && has_row_arc(cb.graph, row, 1, Rat(0), 0)) zero_cycle = true;
    CHECK(zero_cycle);
    CHECK(solve_game(cb.graph, Rat(0)) == std::vector<Rat>{Rat(0), Rat(0)});

    CHECK_THROWS_AS(build_game(parse_system("dim 1\n0 <= +oo*x1\n")), std::invalid_argument);
}

TEST_CASE("one-player evaluation: reachable maximum cycle means") {
    // single column with a zero-weight move out and 3 back: one cycle of
    // column-length 1 and mean 3
    GameGraph g;
    g.num_rows = 1;
    g.num_cols = 1;
    g.col_arcs = {{{0, Rat(0)}}};
    g.row_arcs = {{{0, {Rat(3), 0}}}};
    MinStrategy s{{0}};
    CHECK(evaluate_min_strategy(g, s, Rat(0)) == std::vector<Rat>{Rat(3)});

    // two reachable cycles with means 1 and 3: the larger one wins
    GameGraph h;
    h.num_rows = 2;
    h.num_cols = 2;
    h.col_arcs = {{{0, Rat(0)}}, {{1, Rat(0)}}};
    h.row_arcs = {{{0, {Rat(1), 0}}, {1, {Rat(0), 0}}}, {{1, {Rat(3), 0}}}};
    MinStrategy s2{{0, 1}};
    auto chi = evaluate_min_strategy(h, s2, Rat(0));
    CHECK(chi[0] == Rat(3));
    CHECK(chi[1] == Rat(3));
}

TEST_CASE("one-player evaluation on the example graph") {
    GameBuild b = build_game(game_example());
    const GameGraph& g = b.graph;
    // Min: x1 -> row 4 (forced), x2 -> its self-row, constants -> row 1
    MinStrategy sigma{{3, 4, 0}};
    auto chi0 = evaluate_min_strategy(g, sigma, Rat(0));
    CHECK(chi0[0] == Rat(5, 2));  // cycle col1 -> row4 -> col3 -> row1 -> col1
    CHECK(chi0[1] == Rat(0));
    CHECK(chi0[2] == Rat(5, 2));
    auto chi1 = evaluate_min_strategy(g, sigma, Rat(1));
    CHECK(chi1[0] == Rat(2));

    MinStrategy sigma2{{3, 4, 2}};  // constants -> row 3 instead
    auto chi2 = evaluate_min_strategy(g, sigma2, Rat(0));
    CHECK(chi2[2] == Rat(0));

    CHECK_THROWS_AS(evaluate_min_strategy(g, MinStrategy{{0, 4, 0}}, Rat(0)),
                    std::invalid_argument);
}

TEST_CASE("solve_game equals the strategy-enumeration oracle") {
    std::mt19937 rng(2024);
    for (int round = 0; round < 40; ++round) {
        GameGraph g = random_game(rng, 5, 5, -3, 3);
        for (Rat eps : {Rat(0), Rat(1, 49)}) {
            auto fast = solve_game(g, eps);
            auto slow = enumerate_game_value(g, eps);
            CHECK(fast == slow);
        }
        // eps-monotonicity of the cycle-time vector
        auto chi0 = solve_game(g, Rat(0));
        auto chi_eps = solve_game(g, Rat(1, 49));
        for (int j = 0; j < g.num_cols; ++j) CHECK(chi_eps[j] <= chi0[j]);
    }
}

TEST_CASE("emptiness without +oo coefficients") {
    CHECK(is_empty_finite(parse_system("dim 1\n0 <= 0~\n")));
    CHECK_FALSE(is_empty_finite(running_example()));
    CHECK(is_empty_finite(parse_system("dim 1\nx1 <= 0~\n0 <= x1\n")));

    // agreement with the grid search on the documented instance family; the
    // radius covers the worst chain of lower-bound propagations
    std::mt19937 rng(31);
    for (int round = 0; round < 60; ++round) {
        SysConfig cfg;
        cfg.dim = 1 + round % 3;
        cfg.rows = 1 + static_cast<int>(rng() % 5);
        MixedSystem sys = random_system(rng, cfg);
        CHECK(is_empty_finite(sys) == !grid_find_point(sys, 6 * cfg.dim + 2).has_value());
    }
}

TEST_CASE("emptiness certificates are checkable winning strategies") {
    auto check_cert = [](const MixedSystem& sys) {
        GameCertificate cert;
        bool empty = is_empty_finite(sys, &cert);
        GameBuild b = build_game(sys);
        REQUIRE_FALSE(b.trivially_empty);
        if (cert.winner_is_max) {
            CHECK_FALSE(empty);
            MaxStrategy tau{cert.strategy};
            auto val = evaluate_max_strategy(b.graph, tau, cert.eps);
            if (cert.eps == Rat(0))
                CHECK(val[b.graph.const_col()] > Rat(0));
            else
                CHECK(val[b.graph.const_col()] >= Rat(0));
            CHECK(val[b.graph.const_col()] == cert.mean);
        } else {
            CHECK(empty);
            MinStrategy sigma{cert.strategy};
            auto val = evaluate_min_strategy(b.graph, sigma, cert.eps);
            CHECK(val[b.graph.const_col()] < Rat(0));
            CHECK(val[b.graph.const_col()] == cert.mean);
        }
        CHECK_FALSE(cert.cycle.empty());
        std::string text = print_certificate(cert);
        CHECK(text.find("winner:") == 0);
        CHECK(text.find("cycle:") != std::string::npos);
    };
    check_cert(running_example());
    check_cert(parse_system("dim 1\nx1 <= 0~\n0 <= x1\n"));
    check_cert(parse_system("dim 2\n0 <= x1 + x2\nx1 <= -1\nx2 <= 0~\n"));
}

TEST_CASE("general emptiness with +oo coefficients") {
    EmptinessTrace t1 = is_empty_trace(parse_system("dim 1\n0 <= +oo*x1\nx1 <= -oo\n"));
    CHECK(t1.empty);
    CHECK(t1.iterations == 1);

    EmptinessTrace t2 = is_empty_trace(parse_system("dim 1\n0 <= +oo*x1\n"));
    CHECK_FALSE(t2.empty);
    CHECK(t2.iterations == 0);

    // without +oo entries the general test collapses to the finite one
    std::mt19937 rng(47);
    for (int round = 0; round < 25; ++round) {
        SysConfig cfg;
        cfg.dim = 1 + round % 3;
        cfg.rows = 1 + static_cast<int>(rng() % 4);
        MixedSystem sys = random_system(rng, cfg);
        CHECK(is_empty(sys) == is_empty_finite(sys));
    }
}

TEST_CASE("support of the solution set") {
    CHECK(support(running_example()) == std::set<int>{1, 2});
    CHECK(support(parse_system("dim 1\nx1 <= -oo\n")).empty());
    CHECK_FALSE(is_empty(parse_system("dim 1\nx1 <= -oo\n")));
    CHECK(support(MixedSystem(2)) == std::set<int>{1, 2});
    CHECK(support(parse_system("dim 1\n0 <= 0~\n")).empty());
}

TEST_CASE("implication") {
    MixedSystem sys = parse_system("dim 2\n0 <= x1 + x2\nx1 <= -1\n");
    CHECK(implies(sys, parse_inequality("0 <= x2", 2)));
    CHECK_FALSE(implies(parse_system("dim 1\nx1 <= 0\n"), parse_inequality("x1 <= 0~", 1)));

    // the projection rows are all implied by the original system
    MixedSystem running = running_example();
    MixedSystem nine = parse_system(
        "dim 2\n"
        "-2 <= x2\n"
        "-oo <= 3~*x2\n"
        "-oo <= 0~ + -1*x2\n"
        "-oo <= 0~ + 3~*x2\n"
        "-oo <= 2~ + 1~*x2\n"
        "-3 <= 3~*x2\n"
        "-3 <= 2~ + 1*x2\n"
        "0 <= 4~*x2\n"
        "0 <= 3~ + 2*x2\n");
    for (const auto& row : nine.rows) CHECK(implies(running, row));

    // reflexivity and monotonicity
    for (const auto& row : running.rows) CHECK(implies(running, row));
    MixedSystem more = running;
    more.add_row(parse_inequality("x1 <= 5", 2));
    for (const auto& row : running.rows) CHECK(implies(more, row));

    // trivial cases
    CHECK(implies(sys, parse_inequality("-oo <= 0~", 2)));
    CHECK(implies(sys, parse_inequality("x1 + x2 <= +oo", 2)));
    CHECK_THROWS_AS(implies(sys, parse_inequality("x1 <= 0", 1)), std::invalid_argument);
}

TEST_CASE("implication with +oo and perturbed targets") {
    // a +oo-coefficient target holds exactly when the variable is forced away
    // from -oo on the left
    CHECK(implies(parse_system("dim 1\n0 <= x1\n"), parse_inequality("0 <= +oo*x1", 1)));
    CHECK_FALSE(implies(parse_system("dim 1\nx1 <= -oo\n"), parse_inequality("0 <= +oo*x1", 1)));

    // +oo among the target's right coefficients forces x_i = -oo in the
    // negation system
    CHECK(implies(parse_system("dim 2\nx2 <= +oo*x1\n0 <= x2\n"),
                  parse_inequality("x2 <= +oo*x1", 2)));

    // perturbed right constant: x1 <= 2~ means x1 < 2
    CHECK(implies(parse_system("dim 1\nx1 <= 1\n"), parse_inequality("x1 <= 2~", 1)));
    CHECK_FALSE(implies(parse_system("dim 1\nx1 <= 2\n"), parse_inequality("x1 <= 2~", 1)));

    // -oo target constant triggers the support guard: some left variable
    // must be finite for the negation to make sense
    CHECK(implies(parse_system("dim 2\nx1 <= -oo\n"), parse_inequality("x1 <= -oo", 2)));
    CHECK_FALSE(implies(parse_system("dim 2\nx1 <= 0\n"), parse_inequality("x1 <= -oo", 2)));
}
