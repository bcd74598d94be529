#include <doctest.h>

#include <random>
#include <stdexcept>

#include "trifold/monodromy.hpp"

using namespace trifold;

namespace {
Permutation three_cycle() { return parse_cycles("(0 1 2)", 3); }
Permutation three_cycle_inv() { return parse_cycles("(0 2 1)", 3); }
} // namespace

TEST_CASE("permutation composition applies the right factor first") {
    CHECK(compose(Permutation::identity(3), three_cycle()) == three_cycle());
    CHECK(compose(three_cycle(), Permutation::identity(3)) == three_cycle());
    CHECK(compose(three_cycle(), three_cycle()) == three_cycle_inv());
    CHECK(compose(three_cycle(), three_cycle_inv()) == Permutation::identity(3));
    CHECK_THROWS_AS(compose(Permutation::identity(2), three_cycle()), std::invalid_argument);
}

TEST_CASE("cycle counting") {
    CHECK(Permutation::identity(3).cycle_count() == 3);
    CHECK(three_cycle().cycle_count() == 1);
    CHECK(parse_cycles("(0 1)", 3).cycle_count() == 2);  // (0 1)(2)
    auto cycles = parse_cycles("(1 3)(0 2)", 4).cycles();
    REQUIRE(cycles.size() == 2);
    CHECK(cycles[0] == std::vector<int>{0, 2});  // ordered by least element
    CHECK(cycles[1] == std::vector<int>{1, 3});
}

TEST_CASE("cycle notation parsing and rendering") {
    CHECK(parse_cycles("(0 1 2)", 3).images() == std::vector<int>{1, 2, 0});
    CHECK(to_cycle_string(parse_cycles("(0 1 2)", 3)) == "(0 1 2)");
    CHECK(to_cycle_string(Permutation::identity(4)) == "()");
    CHECK_THROWS_AS(parse_cycles("(0 3)", 3), std::invalid_argument);
    CHECK_THROWS_AS(parse_cycles("(0 1", 3), std::invalid_argument);
    CHECK_THROWS_AS(parse_cycles("(0 1)(1 2)", 3), std::invalid_argument);
    CHECK_THROWS_AS(parse_cycles("", 3), std::invalid_argument);
}

TEST_CASE("connectivity of the cover") {
    CHECK(is_connected_cover(MonodromySpec(3, {three_cycle()})));
    CHECK_FALSE(is_connected_cover(MonodromySpec(3, {})));
    CHECK(is_connected_cover(MonodromySpec(2, {parse_cycles("(0 1)", 2), parse_cycles("(0 1)", 2)})));
    CHECK(is_connected_cover(MonodromySpec(1, {})));
}

TEST_CASE("surface invariants of the reference covers") {
    CHECK(surface_invariants(MonodromySpec(3, {three_cycle(), three_cycle()})) ==
          SurfaceInvariants{-1, 1, 1, true});
    CHECK(surface_invariants(standard_cover(3, 3)) == SurfaceInvariants{-3, 3, 1, true});
    CHECK(surface_invariants(standard_cover(2, 3)) == SurfaceInvariants{-1, 1, 1, true});
    // Wrong pasting order: pair-of-pants, not a torus.
    CHECK(surface_invariants(MonodromySpec(3, {three_cycle(), three_cycle_inv()})) ==
          SurfaceInvariants{-1, 3, 0, true});
    CHECK(surface_invariants(MonodromySpec(1, {})) == SurfaceInvariants{1, 1, 0, true});
}

TEST_CASE("disconnected covers report a sentinel genus") {
    SurfaceInvariants inv = surface_invariants(MonodromySpec(3, {}));
    CHECK(inv.euler_char == 3);
    CHECK(inv.boundary_components == 3);
    CHECK_FALSE(inv.connected);
    CHECK(inv.genus == 0);
}

TEST_CASE("spec validation") {
    CHECK_THROWS_AS(MonodromySpec(3, {parse_cycles("(0 1)", 2)}), std::invalid_argument);
    CHECK_THROWS_AS(MonodromySpec(0, {}), std::invalid_argument);
}

TEST_CASE("three-fold table rows") {
    auto rows = covering_table(3, 7);
    std::vector<TableRow> expected{{1, 1, 0}, {2, 1, 1}, {3, 3, 1}, {4, 1, 3},
                                   {5, 1, 4}, {6, 3, 4}, {7, 1, 6}};
    CHECK(rows == expected);
}

TEST_CASE("two-fold table rows") {
    auto rows = covering_table(2, 7);
    std::vector<TableRow> expected{{1, 1, 0}, {2, 2, 0}, {3, 1, 1}, {4, 2, 1},
                                   {5, 1, 2}, {6, 2, 2}, {7, 1, 3}};
    CHECK(rows == expected);
}

TEST_CASE("closed forms match the computation up to k = 200") {
    for (int k = 1; k <= 200; ++k) {
        SurfaceInvariants three = surface_invariants(standard_cover(3, k));
        if (k % 3 == 0) {
            CHECK(three.boundary_components == 3);
            CHECK(three.genus == k - 2);
        } else {
            CHECK(three.boundary_components == 1);
            CHECK(three.genus == k - 1);
        }
        SurfaceInvariants two = surface_invariants(standard_cover(2, k));
        CHECK(two.boundary_components == 2 - k % 2);
        CHECK(two.genus == (k - 1) / 2);
    }
}

TEST_CASE("boundary monodromy of the all-3-cycle family is trivial iff 3 | k") {
    for (int k = 1; k <= 200; ++k)
        CHECK(boundary_monodromy(standard_cover(3, k)).is_identity() == (k % 3 == 0));
}

TEST_CASE("euler identity and relabeling invariance on random covers") {
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<int> sheets_dist(1, 6);
    std::uniform_int_distribution<int> k_dist(0, 8);
    for (int trial = 0; trial < 500; ++trial) {
        int n = sheets_dist(rng);
        int k = k_dist(rng);
        std::vector<Permutation> perms;
        for (int p = 0; p < k; ++p) {
            std::vector<int> im(static_cast<size_t>(n));
            for (int s = 0; s < n; ++s) im[static_cast<size_t>(s)] = s;
            std::shuffle(im.begin(), im.end(), rng);
            perms.emplace_back(std::move(im));
        }
        MonodromySpec spec(n, perms);
        SurfaceInvariants inv = surface_invariants(spec);
        if (inv.connected)
            CHECK(inv.euler_char == 2 - 2 * inv.genus - inv.boundary_components);
        CHECK(inv.boundary_components >= 1);

        std::vector<int> relabel(static_cast<size_t>(n));
        for (int s = 0; s < n; ++s) relabel[static_cast<size_t>(s)] = s;
        std::shuffle(relabel.begin(), relabel.end(), rng);
        Permutation r{relabel};
        std::vector<Permutation> conj;
        for (const auto& p : perms) conj.push_back(conjugate(p, r));
        CHECK(surface_invariants(MonodromySpec(n, conj)) == inv);
    }
}
