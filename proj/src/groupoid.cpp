#include "trifold/groupoid.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace trifold {

GroupoidPresentation::GroupoidPresentation(std::vector<std::string> objects,
                                           std::vector<Arrow> arrows, Kind kind, int k,
                                           std::vector<int> boundary_objects)
    : objects_(std::move(objects)), arrows_(std::move(arrows)), kind_(kind), k_(k) {
    boundary_.assign(objects_.size(), false);
    incident_.assign(objects_.size(), {});
    for (int id = 0; id < object_count(); ++id) {
        auto [it, fresh] = object_index_.emplace(objects_[static_cast<size_t>(id)], id);
        (void)it;
        if (!fresh) throw std::invalid_argument("duplicate object name " + objects_[static_cast<size_t>(id)]);
    }
    for (int id = 0; id < arrow_count(); ++id) {
        const Arrow& a = arrows_[static_cast<size_t>(id)];
        auto [it, fresh] = arrow_index_.emplace(a.name, id);
        (void)it;
        if (!fresh) throw std::invalid_argument("duplicate arrow name " + a.name);
        if (a.src < 0 || a.src >= object_count() || a.dst < 0 || a.dst >= object_count())
            throw std::invalid_argument("arrow " + a.name + " has undeclared endpoint");
        incident_[static_cast<size_t>(a.src)].push_back({id, +1});
        incident_[static_cast<size_t>(a.dst)].push_back({id, -1});
    }
    for (int id : boundary_objects) boundary_[static_cast<size_t>(id)] = true;
}

int GroupoidPresentation::object_id(const std::string& name) const {
    auto it = object_index_.find(name);
    if (it == object_index_.end()) throw std::invalid_argument("unknown object " + name);
    return it->second;
}

int GroupoidPresentation::arrow_id(const std::string& name) const {
    auto it = arrow_index_.find(name);
    if (it == arrow_index_.end()) throw std::invalid_argument("unknown arrow " + name);
    return it->second;
}

bool GroupoidPresentation::has_arrow(const std::string& name) const {
    return arrow_index_.count(name) > 0;
}

const std::vector<std::pair<int, int>>& GroupoidPresentation::incident(int object) const {
    return incident_[static_cast<size_t>(object)];
}

bool GroupoidPresentation::connected() const {
    if (object_count() == 0) return true;
    std::vector<bool> seen(objects_.size(), false);
    std::vector<int> stack{0};
    seen[0] = true;
    int count = 1;
    while (!stack.empty()) {
        int o = stack.back();
        stack.pop_back();
        for (auto [arrow, sign] : incident_[static_cast<size_t>(o)]) {
            const Arrow& a = arrows_[static_cast<size_t>(arrow)];
            int other = sign > 0 ? a.dst : a.src;
            if (!seen[static_cast<size_t>(other)]) {
                seen[static_cast<size_t>(other)] = true;
                ++count;
                stack.push_back(other);
            }
        }
    }
    return count == object_count();
}

PresentationPtr build_base_groupoid(int k) {
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    std::vector<std::string> objects;
    for (int i = 0; i <= k + 1; ++i) objects.push_back("p" + std::to_string(i));
    std::vector<Arrow> arrows;
    for (int i = 0; i <= k; ++i)
        arrows.push_back({"a" + std::to_string(i), i, i + 1});
    std::vector<int> boundary{0, k + 1};
    return std::make_shared<GroupoidPresentation>(std::move(objects), std::move(arrows),
                                                  GroupoidPresentation::Kind::base_disk, k,
                                                  std::move(boundary));
}

PresentationPtr build_cover_groupoid(int k) {
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    const std::string ks = std::to_string(k);
    std::vector<std::string> objects;
    for (char f : {'a', 'b', 'c'}) objects.push_back(std::string(1, f) + "0.start");
    for (int i = 1; i <= k; ++i) objects.push_back("p" + std::to_string(i));
    for (char f : {'a', 'b', 'c'}) objects.push_back(std::string(1, f) + ks + ".end");

    auto branch = [&](int i) { return 3 + (i - 1); };  // object id of p_i
    std::vector<Arrow> arrows;
    for (int i = 0; i <= k; ++i) {
        int fi = 0;
        for (char f : {'a', 'b', 'c'}) {
            std::string name = std::string(1, f) + std::to_string(i);
            int src = i == 0 ? fi : branch(i);
            int dst = i == k ? 3 + k + fi : branch(i + 1);
            arrows.push_back({std::move(name), src, dst});
            ++fi;
        }
    }
    std::vector<int> boundary{0, 1, 2, 3 + k, 4 + k, 5 + k};
    return std::make_shared<GroupoidPresentation>(std::move(objects), std::move(arrows),
                                                  GroupoidPresentation::Kind::cover3, k,
                                                  std::move(boundary));
}

GroupoidWord::GroupoidWord(PresentationPtr g, int base_object)
    : groupoid_(std::move(g)), source_(base_object), target_(base_object) {
    if (base_object < 0 || base_object >= groupoid_->object_count())
        throw std::invalid_argument("base object id out of range");
}

GroupoidWord::GroupoidWord(PresentationPtr g, std::vector<GLetter> letters)
    : groupoid_(std::move(g)), letters_(std::move(letters)) {
    if (letters_.empty())
        throw std::invalid_argument("empty words need an explicit base object");
    int at = -1;
    for (size_t idx = 0; idx < letters_.size(); ++idx) {
        const GLetter& l = letters_[idx];
        if (l.arrow < 0 || l.arrow >= groupoid_->arrow_count())
            throw std::invalid_argument("arrow id out of range in word");
        if (l.sign != 1 && l.sign != -1)
            throw std::invalid_argument("letter sign must be +1 or -1");
        const Arrow& a = groupoid_->arrow(l.arrow);
        int from = l.sign > 0 ? a.src : a.dst;
        int to = l.sign > 0 ? a.dst : a.src;
        if (idx == 0) {
            source_ = from;
        } else if (at != from) {
            throw std::domain_error("word is not composable at letter " + std::to_string(idx) +
                                    " (" + a.name + (l.sign < 0 ? "^-1" : "") + ")");
        }
        at = to;
    }
    target_ = at;
}

GroupoidWord GroupoidWord::reduced() const {
    std::vector<GLetter> out;
    out.reserve(letters_.size());
    for (const GLetter& l : letters_) {
        if (!out.empty() && out.back().arrow == l.arrow && out.back().sign == -l.sign)
            out.pop_back();
        else
            out.push_back(l);
    }
    if (out.empty()) return GroupoidWord(groupoid_, source_);
    return GroupoidWord(groupoid_, std::move(out));
}

bool GroupoidWord::is_reduced() const {
    for (size_t i = 1; i < letters_.size(); ++i)
        if (letters_[i].arrow == letters_[i - 1].arrow && letters_[i].sign == -letters_[i - 1].sign)
            return false;
    return true;
}

GroupoidWord GroupoidWord::inverse() const {
    if (letters_.empty()) return *this;
    std::vector<GLetter> out(letters_.rbegin(), letters_.rend());
    for (GLetter& l : out) l.sign = -l.sign;
    return GroupoidWord(groupoid_, std::move(out));
}

GroupoidWord concat(const GroupoidWord& u, const GroupoidWord& v) {
    if (u.target() != v.source())
        throw std::domain_error("cannot concatenate: word ends at " +
                                u.presentation()->object_name(u.target()) + ", next starts at " +
                                v.presentation()->object_name(v.source()));
    if (u.empty()) return v.reduced();
    if (v.empty()) return u.reduced();
    std::vector<GLetter> letters = u.letters();
    letters.insert(letters.end(), v.letters().begin(), v.letters().end());
    return GroupoidWord(u.presentation(), std::move(letters)).reduced();
}

bool words_equal(const GroupoidWord& u, const GroupoidWord& v) {
    GroupoidWord ur = u.reduced();
    GroupoidWord vr = v.reduced();
    if (ur.presentation().get() != vr.presentation().get()) {
        // Words on distinct presentation instances compare by names.
        if (ur.size() != vr.size()) return false;
        if (ur.presentation()->object_name(ur.source()) != vr.presentation()->object_name(vr.source()) ||
            ur.presentation()->object_name(ur.target()) != vr.presentation()->object_name(vr.target()))
            return false;
        for (int i = 0; i < ur.size(); ++i) {
            const GLetter& a = ur.letters()[static_cast<size_t>(i)];
            const GLetter& b = vr.letters()[static_cast<size_t>(i)];
            if (a.sign != b.sign ||
                ur.presentation()->arrow(a.arrow).name != vr.presentation()->arrow(b.arrow).name)
                return false;
        }
        return true;
    }
    return ur.source() == vr.source() && ur.target() == vr.target() && ur.letters() == vr.letters();
}

namespace {

GLetter parse_letter(const GroupoidPresentation& g, const std::string& token) {
    std::string name = token;
    int sign = +1;
    if (auto caret = name.find('^'); caret != std::string::npos) {
        std::string exp = name.substr(caret + 1);
        if (exp != "-1" && exp != "1")
            throw std::invalid_argument("bad exponent in token \"" + token + "\"");
        if (exp == "-1") sign = -1;
        name = name.substr(0, caret);
    }
    if (!name.empty() && std::isupper(static_cast<unsigned char>(name[0]))) {
        name[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(name[0])));
        sign = -sign;
    }
    if (!g.has_arrow(name))
        throw std::invalid_argument("unknown arrow in token \"" + token + "\"");
    return {g.arrow_id(name), sign};
}

} // namespace

GroupoidWord parse_word(const PresentationPtr& g, const std::string& text) {
    std::istringstream in(text);
    std::vector<GLetter> letters;
    std::string token;
    while (in >> token) {
        if (token == "1")
            throw std::invalid_argument("empty word \"1\" needs a base object");
        letters.push_back(parse_letter(*g, token));
    }
    if (letters.empty()) throw std::invalid_argument("empty word needs a base object");
    return GroupoidWord(g, std::move(letters));
}

GroupoidWord parse_word(const PresentationPtr& g, const std::string& text,
                        const std::string& base_object) {
    std::istringstream in(text);
    std::vector<GLetter> letters;
    std::string token;
    while (in >> token) {
        if (token == "1") continue;
        letters.push_back(parse_letter(*g, token));
    }
    if (letters.empty()) return GroupoidWord(g, g->object_id(base_object));
    return GroupoidWord(g, std::move(letters));
}

std::string to_string(const GroupoidWord& w) {
    if (w.empty()) return "1";
    std::ostringstream out;
    for (int i = 0; i < w.size(); ++i) {
        const GLetter& l = w.letters()[static_cast<size_t>(i)];
        if (i) out << ' ';
        out << w.presentation()->arrow(l.arrow).name;
        if (l.sign < 0) out << "^-1";
    }
    return out.str();
}

std::pair<char, int> arrow_family(const std::string& name) {
    if (name.empty() || name[0] < 'a' || name[0] > 'c')
        throw std::invalid_argument("arrow " + name + " has no family letter");
    int index = 0;
    for (size_t i = 1; i < name.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(name[i])))
            throw std::invalid_argument("arrow " + name + " has no numeric index");
        index = index * 10 + (name[i] - '0');
    }
    if (name.size() < 2) throw std::invalid_argument("arrow " + name + " has no numeric index");
    return {name[0], index};
}

int family_arrow_id(const GroupoidPresentation& g, char family, int index) {
    return g.arrow_id(std::string(1, family) + std::to_string(index));
}

} // namespace trifold
