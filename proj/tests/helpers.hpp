#pragma once

#include <queue>
#include <random>
#include <vector>

#include "trifold/catalog.hpp"
#include "trifold/groupoid.hpp"

namespace testing_helpers {

// Random composable word of the given length starting at `start`
// (random object when start < 0).
inline trifold::GroupoidWord random_word(const trifold::PresentationPtr& g, std::mt19937& rng,
                                         int length, int start = -1) {
    if (start < 0) {
        std::uniform_int_distribution<int> pick(0, g->object_count() - 1);
        start = pick(rng);
    }
    std::vector<trifold::GLetter> letters;
    int at = start;
    for (int step = 0; step < length; ++step) {
        const auto& options = g->incident(at);
        std::uniform_int_distribution<size_t> pick(0, options.size() - 1);
        auto [arrow, sign] = options[pick(rng)];
        letters.push_back({arrow, sign});
        const trifold::Arrow& a = g->arrow(arrow);
        at = sign > 0 ? a.dst : a.src;
    }
    if (letters.empty()) return trifold::GroupoidWord(g, start);
    return trifold::GroupoidWord(g, std::move(letters));
}

// BFS paths back to `base`, used to close random walks into loops.
inline std::vector<std::vector<trifold::GLetter>> paths_to(const trifold::PresentationPtr& g,
                                                           int base) {
    std::vector<std::vector<trifold::GLetter>> path(static_cast<size_t>(g->object_count()));
    std::vector<bool> seen(static_cast<size_t>(g->object_count()), false);
    std::queue<int> queue;
    queue.push(base);
    seen[static_cast<size_t>(base)] = true;
    while (!queue.empty()) {
        int at = queue.front();
        queue.pop();
        for (auto [arrow, sign] : g->incident(at)) {
            const trifold::Arrow& a = g->arrow(arrow);
            int next = sign > 0 ? a.dst : a.src;
            if (seen[static_cast<size_t>(next)]) continue;
            seen[static_cast<size_t>(next)] = true;
            // Path from next to base: reverse of this step, then at's path.
            path[static_cast<size_t>(next)].push_back({arrow, -sign});
            auto& rest = path[static_cast<size_t>(at)];
            path[static_cast<size_t>(next)].insert(path[static_cast<size_t>(next)].end(),
                                                   rest.begin(), rest.end());
            queue.push(next);
        }
    }
    return path;
}

// Random loop at `base`: a random walk closed up along a fixed return path.
inline trifold::GroupoidWord random_loop(const trifold::PresentationPtr& g,
                                         const std::vector<std::vector<trifold::GLetter>>& returns,
                                         std::mt19937& rng, int length, int base) {
    trifold::GroupoidWord walk = random_word(g, rng, length, base);
    std::vector<trifold::GLetter> letters = walk.letters();
    const auto& back = returns[static_cast<size_t>(walk.target())];
    letters.insert(letters.end(), back.begin(), back.end());
    if (letters.empty()) return trifold::GroupoidWord(g, base);
    return trifold::GroupoidWord(g, std::move(letters));
}

// A random generator or inverse generator from the lifted catalog.
inline trifold::MappingClass random_catalog(const trifold::PresentationPtr& cover,
                                            std::mt19937& rng) {
    std::uniform_int_distribution<int> pick_i(1, cover->k() - 1);
    std::uniform_int_distribution<int> pick_kind(0, 7);
    int i = pick_i(rng);
    switch (pick_kind(rng)) {
        case 0: return trifold::beta_tilde(cover, i);
        case 1: return trifold::beta_tilde_inverse(cover, i);
        case 2: return trifold::dehn_x(cover, i);
        case 3: return trifold::dehn_x_inverse(cover, i);
        case 4: return trifold::dehn_y(cover, i);
        case 5: return trifold::dehn_y_inverse(cover, i);
        case 6: return trifold::dehn_z(cover, i);
        default: return trifold::dehn_z_inverse(cover, i);
    }
}

} // namespace testing_helpers
