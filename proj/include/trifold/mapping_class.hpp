#pragma once

#include <vector>

#include "trifold/groupoid.hpp"

namespace trifold {

// A self-functor of a free groupoid presentation: a bijection on objects
// (fixing every boundary object) together with an image word for each arrow.
// Functors on a free groupoid are determined by these data, so composition
// and equality are purely syntactic after free reduction.
class MappingClass {
public:
    // Throws unless object_map is a bijection fixing boundary objects and
    // every arrow image runs object_map(src) -> object_map(dst).
    MappingClass(PresentationPtr g, std::vector<int> object_map,
                 std::vector<GroupoidWord> arrow_images);

    static MappingClass identity(const PresentationPtr& g);

    const PresentationPtr& presentation() const { return groupoid_; }
    int map_object(int id) const { return object_map_[static_cast<size_t>(id)]; }
    const std::vector<int>& object_map() const { return object_map_; }
    const GroupoidWord& image(int arrow) const { return images_[static_cast<size_t>(arrow)]; }

    // Letterwise image of a word, freely reduced.
    GroupoidWord apply(const GroupoidWord& w) const;

    bool is_identity() const;

private:
    PresentationPtr groupoid_;
    std::vector<int> object_map_;
    std::vector<GroupoidWord> images_;
};

// Apply g first, then f. Throws unless both live on the same presentation.
MappingClass compose_mc(const MappingClass& f, const MappingClass& g);

// Object maps coincide and all arrow images have equal reduced forms.
bool mc_equal(const MappingClass& f, const MappingClass& g);

} // namespace trifold
