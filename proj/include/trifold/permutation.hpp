#pragma once

#include <string>
#include <vector>

namespace trifold {

// A bijection of the sheet indices {0, ..., n-1}.
class Permutation {
public:
    // images[s] is the sheet that s is sent to. Throws if not a bijection.
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int n);

    int size() const { return static_cast<int>(images_.size()); }
    int operator[](int s) const { return images_[static_cast<size_t>(s)]; }
    const std::vector<int>& images() const { return images_; }

    bool is_identity() const;
    Permutation inverse() const;

    // Cycle decomposition, cycles ordered by their least element,
    // fixed points included as singletons.
    std::vector<std::vector<int>> cycles() const;
    int cycle_count() const;

    bool operator==(const Permutation&) const = default;

private:
    std::vector<int> images_;
};

// Apply q first, then p. Throws on mismatched sizes.
Permutation compose(const Permutation& p, const Permutation& q);

// Conjugate p by r: r p r^-1 (relabels sheets by r).
Permutation conjugate(const Permutation& p, const Permutation& r);

// Parses cycle notation such as "(0 1 2)" or "(0 1)(2 3)"; indices not
// mentioned are fixed. Throws on malformed input or out-of-range indices.
Permutation parse_cycles(const std::string& text, int sheets);

// Renders the nontrivial cycles, "()" for the identity.
std::string to_cycle_string(const Permutation& p);

} // namespace trifold
