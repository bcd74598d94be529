#include "trifold/free_group.hpp"

#include <sstream>
#include <stdexcept>

namespace trifold {

std::string gen_name(int gen) {
    int index = gen / 2 + 1;
    return (gen % 2 == 0 ? "x" : "y") + std::to_string(index);
}

namespace {

void push_reduced(std::vector<FLetter>& out, const FLetter& l) {
    if (!out.empty() && out.back().gen == l.gen && out.back().sign == -l.sign)
        out.pop_back();
    else
        out.push_back(l);
}

} // namespace

FreeWord::FreeWord(std::vector<FLetter> letters) {
    letters_.reserve(letters.size());
    for (const FLetter& l : letters) {
        if (l.gen < 0) throw std::invalid_argument("negative generator id");
        if (l.sign != 1 && l.sign != -1) throw std::invalid_argument("letter sign must be +1 or -1");
        push_reduced(letters_, l);
    }
}

FreeWord FreeWord::x(int i, int sign) { return FreeWord({{gen_x(i), sign}}); }
FreeWord FreeWord::y(int i, int sign) { return FreeWord({{gen_y(i), sign}}); }

FreeWord FreeWord::inverse() const {
    FreeWord out;
    out.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
        out.letters_.push_back({it->gen, -it->sign});
    return out;
}

FreeWord FreeWord::operator*(const FreeWord& rhs) const {
    FreeWord out = *this;
    out *= rhs;
    return out;
}

FreeWord& FreeWord::operator*=(const FreeWord& rhs) {
    for (const FLetter& l : rhs.letters_) push_reduced(letters_, l);
    return *this;
}

FreeWord parse_free_word(const std::string& text) {
    std::istringstream in(text);
    std::vector<FLetter> letters;
    std::string token;
    while (in >> token) {
        if (token == "1") continue;
        std::string body = token;
        int sign = +1;
        if (auto caret = body.find('^'); caret != std::string::npos) {
            std::string exp = body.substr(caret + 1);
            if (exp == "-1")
                sign = -1;
            else if (exp != "1")
                throw std::invalid_argument("bad exponent in token \"" + token + "\"");
            body = body.substr(0, caret);
        }
        if (body.empty()) throw std::invalid_argument("bad token \"" + token + "\"");
        char kind = body[0];
        if (kind == 'X' || kind == 'Y') {
            sign = -sign;
            kind = static_cast<char>(std::tolower(static_cast<unsigned char>(kind)));
        }
        if (kind != 'x' && kind != 'y')
            throw std::invalid_argument("bad generator in token \"" + token + "\"");
        int index = 0;
        if (body.size() < 2) throw std::invalid_argument("bad token \"" + token + "\"");
        for (size_t p = 1; p < body.size(); ++p) {
            if (!std::isdigit(static_cast<unsigned char>(body[p])))
                throw std::invalid_argument("bad token \"" + token + "\"");
            index = index * 10 + (body[p] - '0');
        }
        if (index < 1) throw std::invalid_argument("bad token \"" + token + "\"");
        letters.push_back({kind == 'x' ? gen_x(index) : gen_y(index), sign});
    }
    return FreeWord(std::move(letters));
}

std::string to_string(const FreeWord& w) {
    if (w.empty()) return "1";
    std::ostringstream out;
    for (int i = 0; i < w.size(); ++i) {
        const FLetter& l = w.letters()[static_cast<size_t>(i)];
        if (i) out << ' ';
        out << gen_name(l.gen);
        if (l.sign < 0) out << "^-1";
    }
    return out.str();
}

Pi1Automorphism::Pi1Automorphism(int k, std::vector<FreeWord> images)
    : k_(k), images_(std::move(images)) {
    if (k_ < 1) throw std::invalid_argument("k must be at least 1");
    if (static_cast<int>(images_.size()) != rank())
        throw std::invalid_argument("automorphism needs " + std::to_string(rank()) + " images");
    for (const FreeWord& im : images_)
        for (const FLetter& l : im.letters())
            if (l.gen >= rank())
                throw std::invalid_argument("image uses generator outside rank");
}

Pi1Automorphism Pi1Automorphism::identity(int k) {
    std::vector<FreeWord> images;
    images.reserve(static_cast<size_t>(2 * (k - 1)));
    for (int g = 0; g < 2 * (k - 1); ++g) images.push_back(FreeWord({{g, +1}}));
    return Pi1Automorphism(k, std::move(images));
}

FreeWord Pi1Automorphism::apply(const FreeWord& w) const {
    FreeWord out;
    for (const FLetter& l : w.letters()) {
        const FreeWord& im = images_[static_cast<size_t>(l.gen)];
        out *= (l.sign > 0 ? im : im.inverse());
    }
    return out;
}

Pi1Automorphism compose_autos(const Pi1Automorphism& f, const Pi1Automorphism& g) {
    if (f.k() != g.k()) throw std::invalid_argument("composing automorphisms of different rank");
    std::vector<FreeWord> images;
    images.reserve(static_cast<size_t>(f.rank()));
    for (int gen = 0; gen < f.rank(); ++gen) images.push_back(f.apply(g.image(gen)));
    return Pi1Automorphism(f.k(), std::move(images));
}

} // namespace trifold
