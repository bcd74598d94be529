#include "trifold/mapping_class.hpp"

#include <stdexcept>

namespace trifold {

MappingClass::MappingClass(PresentationPtr g, std::vector<int> object_map,
                           std::vector<GroupoidWord> arrow_images)
    : groupoid_(std::move(g)), object_map_(std::move(object_map)), images_(std::move(arrow_images)) {
    const int objects = groupoid_->object_count();
    if (static_cast<int>(object_map_.size()) != objects)
        throw std::invalid_argument("object map size mismatch");
    std::vector<bool> hit(static_cast<size_t>(objects), false);
    for (int o = 0; o < objects; ++o) {
        int im = object_map_[static_cast<size_t>(o)];
        if (im < 0 || im >= objects || hit[static_cast<size_t>(im)])
            throw std::invalid_argument("object map is not a bijection");
        hit[static_cast<size_t>(im)] = true;
        if (groupoid_->is_boundary_object(o) && im != o)
            throw std::invalid_argument("mapping class moves boundary object " +
                                        groupoid_->object_name(o));
    }
    if (static_cast<int>(images_.size()) != groupoid_->arrow_count())
        throw std::invalid_argument("arrow image count mismatch");
    for (int a = 0; a < groupoid_->arrow_count(); ++a) {
        const Arrow& arrow = groupoid_->arrow(a);
        const GroupoidWord& im = images_[static_cast<size_t>(a)];
        if (im.presentation().get() != groupoid_.get())
            throw std::invalid_argument("arrow image lives on a different presentation");
        if (im.source() != map_object(arrow.src) || im.target() != map_object(arrow.dst))
            throw std::invalid_argument("image of arrow " + arrow.name + " has wrong endpoints");
    }
}

MappingClass MappingClass::identity(const PresentationPtr& g) {
    std::vector<int> object_map(static_cast<size_t>(g->object_count()));
    for (int o = 0; o < g->object_count(); ++o) object_map[static_cast<size_t>(o)] = o;
    std::vector<GroupoidWord> images;
    images.reserve(static_cast<size_t>(g->arrow_count()));
    for (int a = 0; a < g->arrow_count(); ++a)
        images.emplace_back(g, std::vector<GLetter>{{a, +1}});
    return MappingClass(g, std::move(object_map), std::move(images));
}

GroupoidWord MappingClass::apply(const GroupoidWord& w) const {
    if (w.presentation().get() != groupoid_.get())
        throw std::invalid_argument("word lives on a different presentation");
    if (w.empty()) return GroupoidWord(groupoid_, map_object(w.source()));
    std::vector<GLetter> out;
    for (const GLetter& l : w.letters()) {
        const GroupoidWord& im = images_[static_cast<size_t>(l.arrow)];
        if (l.sign > 0) {
            out.insert(out.end(), im.letters().begin(), im.letters().end());
        } else {
            for (auto it = im.letters().rbegin(); it != im.letters().rend(); ++it)
                out.push_back({it->arrow, -it->sign});
        }
    }
    if (out.empty()) return GroupoidWord(groupoid_, map_object(w.source()));
    return GroupoidWord(groupoid_, std::move(out)).reduced();
}

bool MappingClass::is_identity() const {
    for (int o = 0; o < groupoid_->object_count(); ++o)
        if (map_object(o) != o) return false;
    for (int a = 0; a < groupoid_->arrow_count(); ++a) {
        GroupoidWord expected(groupoid_, std::vector<GLetter>{{a, +1}});
        if (!words_equal(image(a), expected)) return false;
    }
    return true;
}

MappingClass compose_mc(const MappingClass& f, const MappingClass& g) {
    if (f.presentation().get() != g.presentation().get())
        throw std::invalid_argument("composing mapping classes on different presentations");
    const PresentationPtr& pres = f.presentation();
    std::vector<int> object_map(static_cast<size_t>(pres->object_count()));
    for (int o = 0; o < pres->object_count(); ++o)
        object_map[static_cast<size_t>(o)] = f.map_object(g.map_object(o));
    std::vector<GroupoidWord> images;
    images.reserve(static_cast<size_t>(pres->arrow_count()));
    for (int a = 0; a < pres->arrow_count(); ++a) images.push_back(f.apply(g.image(a)));
    return MappingClass(pres, std::move(object_map), std::move(images));
}

bool mc_equal(const MappingClass& f, const MappingClass& g) {
    if (f.presentation().get() != g.presentation().get()) return false;
    if (f.object_map() != g.object_map()) return false;
    for (int a = 0; a < f.presentation()->arrow_count(); ++a)
        if (!words_equal(f.image(a), g.image(a))) return false;
    return true;
}

} // namespace trifold
