#pragma once

#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace trifold {

struct Arrow {
    std::string name;
    int src = -1;
    int dst = -1;
};

// Free groupoid presentation on a finite graph: named objects, named arrows.
// What a presentation was built as (and its k) travels with it so that the
// generator catalog and the spanning tree can sanity-check their input.
class GroupoidPresentation {
public:
    enum class Kind { generic, base_disk, cover3 };

    // boundary_objects lists ids of objects that every mapping class must
    // fix (the cover's six boundary base points, the base disk's p0/p{k+1}).
    GroupoidPresentation(std::vector<std::string> objects, std::vector<Arrow> arrows,
                         Kind kind = Kind::generic, int k = 0,
                         std::vector<int> boundary_objects = {});

    int object_count() const { return static_cast<int>(objects_.size()); }
    int arrow_count() const { return static_cast<int>(arrows_.size()); }

    const std::string& object_name(int id) const { return objects_[static_cast<size_t>(id)]; }
    const Arrow& arrow(int id) const { return arrows_[static_cast<size_t>(id)]; }

    int object_id(const std::string& name) const;  // throws if unknown
    int arrow_id(const std::string& name) const;   // throws if unknown
    bool has_arrow(const std::string& name) const;

    bool is_boundary_object(int id) const { return boundary_[static_cast<size_t>(id)]; }

    // Arrows usable from `object`: (arrow id, +1) if it starts there,
    // (arrow id, -1) if it ends there.
    const std::vector<std::pair<int, int>>& incident(int object) const;

    bool connected() const;
    // arrows - objects + 1; the free rank of the loop groupoid at any object
    // when the graph is connected.
    int rank() const { return arrow_count() - object_count() + 1; }

    Kind kind() const { return kind_; }
    int k() const { return k_; }

private:
    std::vector<std::string> objects_;
    std::vector<Arrow> arrows_;
    std::vector<bool> boundary_;
    std::unordered_map<std::string, int> object_index_;
    std::unordered_map<std::string, int> arrow_index_;
    std::vector<std::vector<std::pair<int, int>>> incident_;
    Kind kind_ = Kind::generic;
    int k_ = 0;
};

using PresentationPtr = std::shared_ptr<const GroupoidPresentation>;

// Disk with k marked points: objects p0..p{k+1}, arrows a_i: p_i -> p_{i+1}
// for 0 <= i <= k. Throws for k < 1.
PresentationPtr build_base_groupoid(int k);

// 3-fold cover with k branch points: objects a0.start, b0.start, c0.start,
// p1..pk, a{k}.end, b{k}.end, c{k}.end; arrows a_i, b_i, c_i for 0 <= i <= k,
// running start -> p1, p_i -> p_{i+1}, p_k -> end. Throws for k < 1.
PresentationPtr build_cover_groupoid(int k);

// One signed letter of a word.
struct GLetter {
    int arrow = -1;
    int sign = +1;
    bool operator==(const GLetter&) const = default;
};

// A composable signed sequence of arrows. The empty word carries an explicit
// base object. Words are stored as written; reduced() cancels adjacent
// inverse pairs.
class GroupoidWord {
public:
    // Empty word (identity) at base_object.
    GroupoidWord(PresentationPtr g, int base_object);
    // Throws if consecutive letters are not composable.
    GroupoidWord(PresentationPtr g, std::vector<GLetter> letters);

    const PresentationPtr& presentation() const { return groupoid_; }
    const std::vector<GLetter>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }
    int size() const { return static_cast<int>(letters_.size()); }

    int source() const { return source_; }
    int target() const { return target_; }

    GroupoidWord reduced() const;
    bool is_reduced() const;
    GroupoidWord inverse() const;

private:
    PresentationPtr groupoid_;
    std::vector<GLetter> letters_;
    int source_ = -1;
    int target_ = -1;
};

// Reduced concatenation; throws unless target(u) == source(v).
GroupoidWord concat(const GroupoidWord& u, const GroupoidWord& v);

// Same endpoints and identical reduced letter sequences.
bool words_equal(const GroupoidWord& u, const GroupoidWord& v);

// "c0 b1 a1^-1 c0^-1"; "A3" is shorthand for "a3^-1". "1" alone is the empty
// word and is only accepted by the overload with a base object.
GroupoidWord parse_word(const PresentationPtr& g, const std::string& text);
GroupoidWord parse_word(const PresentationPtr& g, const std::string& text,
                        const std::string& base_object);

std::string to_string(const GroupoidWord& w);

// Helpers for the generator families of the two disk groupoids, where every
// arrow name is a family letter plus an index ("a0", "b3", "c7").
std::pair<char, int> arrow_family(const std::string& name);
int family_arrow_id(const GroupoidPresentation& g, char family, int index);

} // namespace trifold
