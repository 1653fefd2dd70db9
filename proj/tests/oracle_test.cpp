#include <doctest.h>

#include "support/generators.hpp"
#include "support/oracles.hpp"

#include <random>

using namespace tropmix;
using namespace tropmix::testing;

// The interval-accelerated grid search must agree with the naive scan of the
// same grid; this is what lets the other suites trust it as an oracle.
TEST_CASE("grid enumeration agrees with the naive scan") {
    std::mt19937 rng(4242);
    for (int round = 0; round < 120; ++round) {
        SysConfig cfg;
        cfg.dim = 1 + round % 2;
        cfg.rows = 1 + static_cast<int>(rng() % 4);
        if (round % 5 == 0) cfg.pos_inf_row_frac = 0.5;
        MixedSystem sys = random_system(rng, cfg);

        std::vector<Point> fast, slow;
        grid_enumerate(sys, 1, [&](const Point& p) {
            fast.push_back(p);
            return true;
        });
        grid_enumerate_naive(sys, 1, [&](const Point& p) {
            slow.push_back(p);
            return true;
        });
        REQUIRE(fast.size() == slow.size());
        for (size_t i = 0; i < fast.size(); ++i) CHECK(fast[i] == slow[i]);
    }
}

TEST_CASE("sampled points satisfy the system") {
    std::mt19937 rng(99);
    for (int round = 0; round < 30; ++round) {
        SysConfig cfg;
        cfg.dim = 1 + round % 3;
        cfg.rows = 1 + static_cast<int>(rng() % 4);
        MixedSystem sys = random_system(rng, cfg);
        for (const Point& p : grid_sample(sys, 6, 10, rng, 2000)) CHECK(satisfies(sys, p));
    }
}
