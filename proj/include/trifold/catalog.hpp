#pragma once

#include <string>
#include <utility>
#include <vector>

#include "trifold/mapping_class.hpp"

namespace trifold {

// The generator catalog. All functors are supported on the index window
// {i-1, i, i+1}: arrows outside it map to themselves, and the object map is
// the transposition p_i <-> p_{i+1}. Valid for 1 <= i <= k-1.

// Half twist swapping p_i and p_{i+1} on the k-marked disk groupoid.
MappingClass beta(const PresentationPtr& base, int i);
MappingClass beta_inverse(const PresentationPtr& base, int i);

// Lift of the half twist to the 3-fold cover groupoid.
MappingClass beta_tilde(const PresentationPtr& cover, int i);
MappingClass beta_tilde_inverse(const PresentationPtr& cover, int i);

// Dehn twists along the loops x_i, y_i, z_i of the cover.
MappingClass dehn_x(const PresentationPtr& cover, int i);
MappingClass dehn_x_inverse(const PresentationPtr& cover, int i);
MappingClass dehn_y(const PresentationPtr& cover, int i);
MappingClass dehn_y_inverse(const PresentationPtr& cover, int i);
MappingClass dehn_z(const PresentationPtr& cover, int i);
MappingClass dehn_z_inverse(const PresentationPtr& cover, int i);

// Word-level covering projection: a_i, b_i, c_i all map to the base arrow
// a_i; branch objects map to themselves, start objects to p0, end objects
// to p{k+1}.
class Projection {
public:
    Projection(PresentationPtr cover, PresentationPtr base);  // same k required

    const PresentationPtr& cover() const { return cover_; }
    const PresentationPtr& base() const { return base_; }

    int object(int cover_object) const;
    GroupoidWord word(const GroupoidWord& w) const;  // letterwise, reduced

private:
    PresentationPtr cover_;
    PresentationPtr base_;
    std::vector<int> object_map_;
    std::vector<int> arrow_map_;
};

// One letter of a braid word: generator index and sign ("s2^-1" -> {2, -1}).
using BraidLetter = std::pair<int, int>;

// "s1 s2^-1 s1"; "S1" is shorthand for "s1^-1". Throws on a malformed token,
// naming it. Indices are validated against k by compose_braid.
std::vector<BraidLetter> parse_braid_word(const std::string& text);

// The lifted action of a braid word, letters applied left to right.
MappingClass compose_braid(const PresentationPtr& cover, const std::vector<BraidLetter>& word);

} // namespace trifold
