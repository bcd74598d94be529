#pragma once

#include <vector>

#include "trifold/permutation.hpp"

namespace trifold {

// A branched cover of the disk, given by one sheet permutation per branch
// point p_1, ..., p_k in left-to-right order. A counterclockwise loop
// around p_i carries sheet s to branch_perms[i-1][s].
struct MonodromySpec {
    int sheets;
    std::vector<Permutation> branch_perms;

    // Throws if any permutation does not act on exactly `sheets` elements.
    MonodromySpec(int sheets, std::vector<Permutation> branch_perms);

    int branch_points() const { return static_cast<int>(branch_perms.size()); }
};

struct SurfaceInvariants {
    int euler_char = 0;
    int boundary_components = 0;
    // Genus of the total space. Only meaningful when connected; a
    // disconnected cover reports genus 0 with connected == false.
    int genus = 0;
    bool connected = false;

    bool operator==(const SurfaceInvariants&) const = default;
};

// True iff the group generated by the branch permutations acts transitively
// on the sheets (a single sheet counts as connected).
bool is_connected_cover(const MonodromySpec& m);

// Monodromy of the disk boundary: sigma_1 ... sigma_k applied left to right.
Permutation boundary_monodromy(const MonodromySpec& m);

// Topology of the total space by cut-and-paste counting:
//   euler_char = n - sum_p (n - cycle_count(sigma_p))
//   boundary   = cycle_count(boundary monodromy)
//   genus from euler_char = 2 - 2 genus - boundary when connected.
SurfaceInvariants surface_invariants(const MonodromySpec& m);

// The n-cycle 0 -> 1 -> ... -> n-1 -> 0, the standard branch permutation.
Permutation standard_branch_cycle(int sheets);

// The cover with k branch points, all carrying the standard n-cycle.
MonodromySpec standard_cover(int sheets, int k);

struct TableRow {
    int k = 0;
    int boundary = 0;
    int genus = 0;
    bool operator==(const TableRow&) const = default;
};

// Rows (k, b, g) for k = 1..k_max of the all-standard-cycle family over
// `sheets` sheets; sheets = 3 and sheets = 2 give the two reference tables.
std::vector<TableRow> covering_table(int sheets, int k_max);

} // namespace trifold
