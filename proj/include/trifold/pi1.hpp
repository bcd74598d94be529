#pragma once

#include "trifold/free_group.hpp"
#include "trifold/groupoid.hpp"
#include "trifold/mapping_class.hpp"

namespace trifold {

// The fixed spanning tree of the cover groupoid: the c-chain c_1..c_{k-1}
// plus the six boundary-adjacent arrows a_0, b_0, c_0 and a_k, b_k, c_k.
// The base point is the source of c_0. The non-tree arrows are exactly
// a_i, b_i for 1 <= i <= k-1, and with this tree the standard graph-pi1
// rewriting sends a_i to y_i and b_i to x_i y_i, so the basis loops
//   x_i = (c_0..c_{i-1}) b_i a_i^-1 (c_0..c_{i-1})^-1
//   y_i = (c_0..c_{i-1}) a_i c_i^-1 (c_0..c_{i-1})^-1
// come out of the algorithm on the nose.
class SpanningTree {
public:
    explicit SpanningTree(PresentationPtr cover);

    const PresentationPtr& cover() const { return cover_; }
    int k() const { return cover_->k(); }
    int base_object() const { return base_; }
    bool in_tree(int arrow) const { return in_tree_[static_cast<size_t>(arrow)]; }

    // Defining loops at the base point, 1 <= i <= k-1.
    GroupoidWord loop_x(int i) const;
    GroupoidWord loop_y(int i) const;
    GroupoidWord loop_z(int i) const;  // (c_0..c_{i-1}) c_i b_i^-1 (...)^-1

private:
    PresentationPtr cover_;
    int base_ = -1;
    std::vector<bool> in_tree_;

    GroupoidWord chain_conjugate(int i, char first, char second) const;
};

// Rewrites a loop at the tree's base point into the free basis {x_i, y_i}:
// tree letters are erased, a_i^e contributes y_i^e, b_i^e contributes
// (x_i y_i)^e. Throws unless w is a loop at the base.
FreeWord loop_to_basis(const GroupoidWord& w, const SpanningTree& tree);

// The automorphism of pi1 induced by a functor on the cover groupoid:
// image of each basis loop under f, rewritten into the basis.
Pi1Automorphism induced_automorphism(const MappingClass& f, const SpanningTree& tree);

} // namespace trifold
