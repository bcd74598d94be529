#include "trifold/catalog.hpp"

#include <array>
#include <sstream>
#include <stdexcept>

namespace trifold {

namespace {

int family_slot(char f) { return f - 'a'; }

void require_cover(const PresentationPtr& g) {
    if (g->kind() != GroupoidPresentation::Kind::cover3)
        throw std::invalid_argument("expected a cover groupoid");
}

void require_index(const PresentationPtr& g, int i) {
    if (i < 1 || i > g->k() - 1)
        throw std::invalid_argument("generator index " + std::to_string(i) +
                                    " out of range (valid: 1.." + std::to_string(g->k() - 1) + ")");
}

// A catalog generator supported on the window {i-1, i, i+1}:
//   arrow f_{i-1}  maps to  f_{i-1} * suffix(f)_i
//   arrow f_i      maps to  the listed word in the index-i letters
//   arrow f_{i+1}  maps to  prefix(f)_i * f_{i+1}
// and every other arrow maps to itself; objects swap p_i and p_{i+1}.
struct WindowRules {
    std::array<char, 3> left_suffix;                          // for a, b, c
    std::array<std::vector<std::pair<char, int>>, 3> middle;  // (family, sign) at index i
    std::array<char, 3> right_prefix;
};

MappingClass window_functor(const PresentationPtr& g, int i, const WindowRules& rules) {
    require_index(g, i);
    std::vector<int> object_map(static_cast<size_t>(g->object_count()));
    for (int o = 0; o < g->object_count(); ++o) object_map[static_cast<size_t>(o)] = o;
    int pi = g->object_id("p" + std::to_string(i));
    int pj = g->object_id("p" + std::to_string(i + 1));
    std::swap(object_map[static_cast<size_t>(pi)], object_map[static_cast<size_t>(pj)]);

    std::vector<GroupoidWord> images;
    images.reserve(static_cast<size_t>(g->arrow_count()));
    for (int a = 0; a < g->arrow_count(); ++a) {
        auto [fam, idx] = arrow_family(g->arrow(a).name);
        std::vector<GLetter> letters;
        if (idx == i - 1) {
            letters.push_back({a, +1});
            letters.push_back({family_arrow_id(*g, rules.left_suffix[static_cast<size_t>(family_slot(fam))], i), +1});
        } else if (idx == i) {
            for (auto [f, sign] : rules.middle[static_cast<size_t>(family_slot(fam))])
                letters.push_back({family_arrow_id(*g, f, i), sign});
        } else if (idx == i + 1) {
            letters.push_back({family_arrow_id(*g, rules.right_prefix[static_cast<size_t>(family_slot(fam))], i), +1});
            letters.push_back({a, +1});
        } else {
            letters.push_back({a, +1});
        }
        images.emplace_back(g, std::move(letters));
    }
    return MappingClass(g, std::move(object_map), std::move(images));
}

const WindowRules kBetaTilde{
    {'c', 'a', 'b'},
    {{{{'b', -1}}, {{'c', -1}}, {{'a', -1}}}},
    {'c', 'a', 'b'},
};
const WindowRules kBetaTildeInv{
    {'b', 'c', 'a'},
    {{{{'c', -1}}, {{'a', -1}}, {{'b', -1}}}},
    {'b', 'c', 'a'},
};
const WindowRules kDehnX{
    {'a', 'a', 'b'},
    {{{{'b', -1}}, {{'a', -1}}, {{'a', -1}, {'c', +1}, {'a', -1}}}},
    {'a', 'a', 'b'},
};
const WindowRules kDehnXInv{
    {'b', 'b', 'a'},
    {{{{'b', -1}}, {{'a', -1}}, {{'b', -1}, {'c', +1}, {'b', -1}}}},
    {'b', 'b', 'a'},
};
const WindowRules kDehnY{
    {'a', 'c', 'a'},
    {{{{'c', -1}}, {{'a', -1}, {'b', +1}, {'a', -1}}, {{'a', -1}}}},
    {'a', 'c', 'a'},
};
const WindowRules kDehnYInv{
    {'c', 'a', 'c'},
    {{{{'c', -1}}, {{'c', -1}, {'b', +1}, {'c', -1}}, {{'a', -1}}}},
    {'c', 'a', 'c'},
};
const WindowRules kDehnZ{
    {'b', 'c', 'c'},
    {{{{'c', -1}, {'a', +1}, {'c', -1}}, {{'c', -1}}, {{'b', -1}}}},
    {'b', 'c', 'c'},
};
const WindowRules kDehnZInv{
    {'c', 'b', 'b'},
    {{{{'b', -1}, {'a', +1}, {'b', -1}}, {{'c', -1}}, {{'b', -1}}}},
    {'c', 'b', 'b'},
};

} // namespace

MappingClass beta(const PresentationPtr& base, int i) {
    if (base->kind() != GroupoidPresentation::Kind::base_disk)
        throw std::invalid_argument("expected a base disk groupoid");
    require_index(base, i);
    std::vector<int> object_map(static_cast<size_t>(base->object_count()));
    for (int o = 0; o < base->object_count(); ++o) object_map[static_cast<size_t>(o)] = o;
    std::swap(object_map[static_cast<size_t>(base->object_id("p" + std::to_string(i)))],
              object_map[static_cast<size_t>(base->object_id("p" + std::to_string(i + 1)))]);
    std::vector<GroupoidWord> images;
    int mid = family_arrow_id(*base, 'a', i);
    for (int a = 0; a < base->arrow_count(); ++a) {
        auto [fam, idx] = arrow_family(base->arrow(a).name);
        (void)fam;
        std::vector<GLetter> letters;
        if (idx == i - 1) {
            letters = {{a, +1}, {mid, +1}};
        } else if (idx == i) {
            letters = {{mid, -1}};
        } else if (idx == i + 1) {
            letters = {{mid, +1}, {a, +1}};
        } else {
            letters = {{a, +1}};
        }
        images.emplace_back(base, std::move(letters));
    }
    return MappingClass(base, std::move(object_map), std::move(images));
}

MappingClass beta_inverse(const PresentationPtr& base, int i) {
    // The half-twist functor is an involution on the free base groupoid, so
    // it is its own inverse there (verified constructively in the tests).
    return beta(base, i);
}

MappingClass beta_tilde(const PresentationPtr& cover, int i) {
    require_cover(cover);
    return window_functor(cover, i, kBetaTilde);
}
MappingClass beta_tilde_inverse(const PresentationPtr& cover, int i) {
    require_cover(cover);
    return window_functor(cover, i, kBetaTildeInv);
}
MappingClass dehn_x(const PresentationPtr& cover, int i) {
    require_cover(cover);
    return window_functor(cover, i, kDehnX);
}
MappingClass dehn_x_inverse(const PresentationPtr& cover, int i) {
    require_cover(cover);
    return window_functor(cover, i, kDehnXInv);
}
MappingClass dehn_y(const PresentationPtr& cover, int i) {
    require_cover(cover);
    return window_functor(cover, i, kDehnY);
}
MappingClass dehn_y_inverse(const PresentationPtr& cover, int i) {
    require_cover(cover);
    return window_functor(cover, i, kDehnYInv);
}
MappingClass dehn_z(const PresentationPtr& cover, int i) {
    require_cover(cover);
    return window_functor(cover, i, kDehnZ);
}
MappingClass dehn_z_inverse(const PresentationPtr& cover, int i) {
    require_cover(cover);
    return window_functor(cover, i, kDehnZInv);
}

Projection::Projection(PresentationPtr cover, PresentationPtr base)
    : cover_(std::move(cover)), base_(std::move(base)) {
    if (cover_->kind() != GroupoidPresentation::Kind::cover3 ||
        base_->kind() != GroupoidPresentation::Kind::base_disk)
        throw std::invalid_argument("projection needs a cover and a base groupoid");
    if (cover_->k() != base_->k())
        throw std::invalid_argument("projection requires matching k");
    const int k = cover_->k();
    object_map_.resize(static_cast<size_t>(cover_->object_count()));
    for (int o = 0; o < cover_->object_count(); ++o) {
        const std::string& name = cover_->object_name(o);
        if (name.ends_with(".start"))
            object_map_[static_cast<size_t>(o)] = base_->object_id("p0");
        else if (name.ends_with(".end"))
            object_map_[static_cast<size_t>(o)] = base_->object_id("p" + std::to_string(k + 1));
        else
            object_map_[static_cast<size_t>(o)] = base_->object_id(name);
    }
    arrow_map_.resize(static_cast<size_t>(cover_->arrow_count()));
    for (int a = 0; a < cover_->arrow_count(); ++a) {
        auto [fam, idx] = arrow_family(cover_->arrow(a).name);
        (void)fam;
        arrow_map_[static_cast<size_t>(a)] = family_arrow_id(*base_, 'a', idx);
    }
}

int Projection::object(int cover_object) const {
    return object_map_[static_cast<size_t>(cover_object)];
}

GroupoidWord Projection::word(const GroupoidWord& w) const {
    if (w.presentation().get() != cover_.get())
        throw std::invalid_argument("word does not live on this projection's cover");
    if (w.empty()) return GroupoidWord(base_, object(w.source()));
    std::vector<GLetter> letters;
    letters.reserve(w.letters().size());
    for (const GLetter& l : w.letters())
        letters.push_back({arrow_map_[static_cast<size_t>(l.arrow)], l.sign});
    return GroupoidWord(base_, std::move(letters)).reduced();
}

std::vector<BraidLetter> parse_braid_word(const std::string& text) {
    std::istringstream in(text);
    std::vector<BraidLetter> letters;
    std::string token;
    while (in >> token) {
        std::string body = token;
        int sign = +1;
        if (auto caret = body.find('^'); caret != std::string::npos) {
            std::string exp = body.substr(caret + 1);
            if (exp == "-1")
                sign = -1;
            else if (exp != "1")
                throw std::invalid_argument("bad exponent in braid token \"" + token + "\"");
            body = body.substr(0, caret);
        }
        if (body.size() < 2 || (body[0] != 's' && body[0] != 'S'))
            throw std::invalid_argument("bad braid token \"" + token + "\"");
        if (body[0] == 'S') sign = -sign;
        int index = 0;
        for (size_t p = 1; p < body.size(); ++p) {
            if (!std::isdigit(static_cast<unsigned char>(body[p])))
                throw std::invalid_argument("bad braid token \"" + token + "\"");
            index = index * 10 + (body[p] - '0');
        }
        if (index < 1) throw std::invalid_argument("bad braid token \"" + token + "\"");
        letters.push_back({index, sign});
    }
    return letters;
}

MappingClass compose_braid(const PresentationPtr& cover, const std::vector<BraidLetter>& word) {
    require_cover(cover);
    MappingClass acc = MappingClass::identity(cover);
    for (auto [index, sign] : word) {
        if (index < 1 || index > cover->k() - 1)
            throw std::invalid_argument("braid generator s" + std::to_string(index) +
                                        " out of range for k=" + std::to_string(cover->k()));
        MappingClass gen = sign > 0 ? beta_tilde(cover, index) : beta_tilde_inverse(cover, index);
        acc = compose_mc(gen, acc);  // letters act left to right
    }
    return acc;
}

} // namespace trifold
