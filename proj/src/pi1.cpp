#include "trifold/pi1.hpp"

#include <stdexcept>

namespace trifold {

SpanningTree::SpanningTree(PresentationPtr cover) : cover_(std::move(cover)) {
    if (cover_->kind() != GroupoidPresentation::Kind::cover3)
        throw std::invalid_argument("spanning tree is defined on the cover groupoid");
    const int k = cover_->k();
    in_tree_.assign(static_cast<size_t>(cover_->arrow_count()), false);
    auto mark = [&](char f, int i) { in_tree_[static_cast<size_t>(family_arrow_id(*cover_, f, i))] = true; };
    mark('a', 0);
    mark('b', 0);
    mark('c', 0);
    for (int i = 1; i < k; ++i) mark('c', i);
    mark('a', k);
    mark('b', k);
    mark('c', k);
    base_ = cover_->arrow(family_arrow_id(*cover_, 'c', 0)).src;
}

// (c_0 .. c_{i-1}) first_i second_i^-1 (c_0 .. c_{i-1})^-1
GroupoidWord SpanningTree::chain_conjugate(int i, char first, char second) const {
    const int k = cover_->k();
    if (i < 1 || i > k - 1)
        throw std::invalid_argument("loop index " + std::to_string(i) + " out of range");
    std::vector<GLetter> letters;
    for (int j = 0; j < i; ++j) letters.push_back({family_arrow_id(*cover_, 'c', j), +1});
    letters.push_back({family_arrow_id(*cover_, first, i), +1});
    letters.push_back({family_arrow_id(*cover_, second, i), -1});
    for (int j = i - 1; j >= 0; --j) letters.push_back({family_arrow_id(*cover_, 'c', j), -1});
    return GroupoidWord(cover_, std::move(letters));
}

GroupoidWord SpanningTree::loop_x(int i) const { return chain_conjugate(i, 'b', 'a'); }
GroupoidWord SpanningTree::loop_y(int i) const { return chain_conjugate(i, 'a', 'c'); }
GroupoidWord SpanningTree::loop_z(int i) const { return chain_conjugate(i, 'c', 'b'); }

FreeWord loop_to_basis(const GroupoidWord& w, const SpanningTree& tree) {
    if (w.presentation().get() != tree.cover().get())
        throw std::invalid_argument("word does not live on the tree's groupoid");
    if (w.source() != tree.base_object() || w.target() != tree.base_object())
        throw std::domain_error("word is not a loop at the base point " +
                                w.presentation()->object_name(tree.base_object()));
    std::vector<FLetter> letters;
    for (const GLetter& l : w.letters()) {
        if (tree.in_tree(l.arrow)) continue;
        auto [fam, idx] = arrow_family(w.presentation()->arrow(l.arrow).name);
        if (fam == 'a') {
            letters.push_back({gen_y(idx), l.sign});
        } else {
            // b_i rewrites to x_i y_i
            if (l.sign > 0) {
                letters.push_back({gen_x(idx), +1});
                letters.push_back({gen_y(idx), +1});
            } else {
                letters.push_back({gen_y(idx), -1});
                letters.push_back({gen_x(idx), -1});
            }
        }
    }
    return FreeWord(std::move(letters));
}

Pi1Automorphism induced_automorphism(const MappingClass& f, const SpanningTree& tree) {
    if (f.presentation().get() != tree.cover().get())
        throw std::invalid_argument("mapping class does not live on the tree's groupoid");
    const int k = tree.k();
    std::vector<FreeWord> images;
    images.reserve(static_cast<size_t>(2 * (k - 1)));
    for (int i = 1; i <= k - 1; ++i) {
        images.push_back(loop_to_basis(f.apply(tree.loop_x(i)), tree));
        images.push_back(loop_to_basis(f.apply(tree.loop_y(i)), tree));
    }
    return Pi1Automorphism(k, std::move(images));
}

} // namespace trifold
