#pragma once

#include <string>
#include <vector>

#include "trifold/catalog.hpp"
#include "trifold/pi1.hpp"

namespace trifold {

struct ArrowMismatch {
    std::string arrow;  // arrow or pi1-generator name
    std::string lhs;
    std::string rhs;
};

// One braid-relation instance, checked at both levels. Failures are report
// content, never exceptions; all failing generators are collected.
struct RelationCheck {
    std::string relation;  // "braid" or "commutation"
    int k = 0;
    int i = 0;
    int j = 0;  // the partner index (i+1 for braid relations)
    bool functor_holds = false;
    bool pi1_holds = false;
    std::vector<ArrowMismatch> failing;

    bool holds() const { return functor_holds && pi1_holds; }
};

// Adjacent relations bt_i bt_{i+1} bt_i = bt_{i+1} bt_i bt_{i+1} for
// 1 <= i <= k-2 and far commutations bt_i bt_j = bt_j bt_i for |i-j| >= 2,
// on the cover groupoid, as functors and on pi1.
std::vector<RelationCheck> check_braid_relations(const PresentationPtr& cover);

// Same relations for the unlifted half twists on the base groupoid
// (functor level only; the base disk has trivial pi1).
std::vector<RelationCheck> check_base_braid_relations(const PresentationPtr& base);

// One display line of the pi1 action tables: the stated image of one basis
// generator under one catalog generator, compared against the derived
// automorphism. Lines the source states ambiguously are demoted to
// "flagged": the derived value is recorded and the line never fails a run.
struct TableLine {
    std::string generator;  // e.g. "beta~_2", "D_y1"
    std::string line;       // the stated line, e.g. "x3 -> x2 y2 x3 x2^-1"
    std::string status;     // "match", "mismatch" or "flagged"
    std::string derived;    // derived image, rendered
    std::string paper;      // stated image, rendered
};

// Compares every line of the beta~ / D_x / D_y / D_z pi1 tables with the
// automorphisms derived from the groupoid functors, for all 1 <= i <= k-1.
// Requires k >= 3 so that the i-1, i, i+1 and i+j cases all occur.
std::vector<TableLine> check_pi1_tables(const PresentationPtr& cover);

inline bool pi1_tables_pass(const std::vector<TableLine>& lines) {
    for (const auto& l : lines)
        if (l.status == "mismatch") return false;
    return true;
}

// The decomposition of the lifted half twist into two inverse Dehn twists,
// checked in both composition orders. "dy_first" is the frozen convention:
// apply D_y^-1, then D_z^-1. Mapping classes of the cover are compared by
// their action on pi1 (which determines them); the raw functor comparison is
// recorded as well, where the two sides differ by the marked-point swap.
struct DecompositionCheck {
    int k = 0;
    int i = 0;
    std::string order;            // "dy_first" or "dz_first"
    bool pi1_equal = false;       // induced automorphisms agree
    bool routes_consistent = false;  // inducing the composed functor agrees
                                     // with composing the induced automorphisms
    bool functor_equal = false;   // raw functor equality, objects included
    bool object_map_equal = false;
    std::vector<ArrowMismatch> pi1_mismatches;
};

// Both orders for every 1 <= i <= k-1. The decomposition holds iff every
// "dy_first" record has pi1_equal and routes_consistent.
std::vector<DecompositionCheck> check_decomposition(const PresentationPtr& cover);

bool decomposition_passes(const std::vector<DecompositionCheck>& checks);

} // namespace trifold
