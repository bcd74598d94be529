#include "trifold/monodromy.hpp"

#include <stdexcept>

namespace trifold {

MonodromySpec::MonodromySpec(int sheets_in, std::vector<Permutation> perms)
    : sheets(sheets_in), branch_perms(std::move(perms)) {
    if (sheets < 1) throw std::invalid_argument("sheet count must be positive");
    for (const auto& p : branch_perms)
        if (p.size() != sheets)
            throw std::invalid_argument("branch permutation acts on " + std::to_string(p.size()) +
                                        " sheets, cover has " + std::to_string(sheets));
}

bool is_connected_cover(const MonodromySpec& m) {
    if (m.sheets == 1) return true;
    // Orbit of sheet 0 under the generated group.
    std::vector<bool> reached(static_cast<size_t>(m.sheets), false);
    std::vector<int> stack{0};
    reached[0] = true;
    int count = 1;
    while (!stack.empty()) {
        int s = stack.back();
        stack.pop_back();
        for (const auto& p : m.branch_perms) {
            for (int t : {p[s], p.inverse()[s]}) {
                if (!reached[static_cast<size_t>(t)]) {
                    reached[static_cast<size_t>(t)] = true;
                    ++count;
                    stack.push_back(t);
                }
            }
        }
    }
    return count == m.sheets;
}

Permutation boundary_monodromy(const MonodromySpec& m) {
    Permutation total = Permutation::identity(m.sheets);
    for (const auto& p : m.branch_perms) total = compose(p, total);
    return total;
}

SurfaceInvariants surface_invariants(const MonodromySpec& m) {
    SurfaceInvariants inv;
    int ramification = 0;
    for (const auto& p : m.branch_perms) ramification += m.sheets - p.cycle_count();
    inv.euler_char = m.sheets - ramification;
    inv.boundary_components = boundary_monodromy(m).cycle_count();
    inv.connected = is_connected_cover(m);
    if (inv.connected) {
        int twice_genus = 2 - inv.boundary_components - inv.euler_char;
        if (twice_genus < 0 || twice_genus % 2 != 0)
            throw std::logic_error("inconsistent invariants: chi=" + std::to_string(inv.euler_char) +
                                   " b=" + std::to_string(inv.boundary_components));
        inv.genus = twice_genus / 2;
    } else {
        inv.genus = 0;  // sentinel, see SurfaceInvariants
    }
    return inv;
}

Permutation standard_branch_cycle(int sheets) {
    std::vector<int> im(static_cast<size_t>(sheets));
    for (int i = 0; i < sheets; ++i) im[static_cast<size_t>(i)] = (i + 1) % sheets;
    return Permutation(std::move(im));
}

MonodromySpec standard_cover(int sheets, int k) {
    if (k < 0) throw std::invalid_argument("branch point count must be nonnegative");
    return MonodromySpec(sheets, std::vector<Permutation>(static_cast<size_t>(k),
                                                          standard_branch_cycle(sheets)));
}

std::vector<TableRow> covering_table(int sheets, int k_max) {
    if (k_max < 1) throw std::invalid_argument("k_max must be positive");
    std::vector<TableRow> rows;
    rows.reserve(static_cast<size_t>(k_max));
    for (int k = 1; k <= k_max; ++k) {
        SurfaceInvariants inv = surface_invariants(standard_cover(sheets, k));
        rows.push_back({k, inv.boundary_components, inv.genus});
    }
    return rows;
}

} // namespace trifold
