#include "trifold/permutation.hpp"

#include <sstream>
#include <stdexcept>

namespace trifold {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    const int n = size();
    std::vector<bool> seen(static_cast<size_t>(n), false);
    for (int v : images_) {
        if (v < 0 || v >= n)
            throw std::invalid_argument("permutation image out of range: " + std::to_string(v));
        if (seen[static_cast<size_t>(v)])
            throw std::invalid_argument("permutation repeats image " + std::to_string(v));
        seen[static_cast<size_t>(v)] = true;
    }
}

Permutation Permutation::identity(int n) {
    if (n < 0) throw std::invalid_argument("negative permutation size");
    std::vector<int> im(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) im[static_cast<size_t>(i)] = i;
    return Permutation(std::move(im));
}

bool Permutation::is_identity() const {
    for (int i = 0; i < size(); ++i)
        if (images_[static_cast<size_t>(i)] != i) return false;
    return true;
}

Permutation Permutation::inverse() const {
    std::vector<int> im(images_.size());
    for (int i = 0; i < size(); ++i) im[static_cast<size_t>(images_[static_cast<size_t>(i)])] = i;
    return Permutation(std::move(im));
}

std::vector<std::vector<int>> Permutation::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(images_.size(), false);
    for (int start = 0; start < size(); ++start) {
        if (seen[static_cast<size_t>(start)]) continue;
        std::vector<int> cycle;
        int cur = start;
        do {
            seen[static_cast<size_t>(cur)] = true;
            cycle.push_back(cur);
            cur = images_[static_cast<size_t>(cur)];
        } while (cur != start);
        out.push_back(std::move(cycle));
    }
    return out;
}

int Permutation::cycle_count() const {
    return static_cast<int>(cycles().size());
}

Permutation compose(const Permutation& p, const Permutation& q) {
    if (p.size() != q.size())
        throw std::invalid_argument("composing permutations of sizes " +
                                    std::to_string(p.size()) + " and " + std::to_string(q.size()));
    std::vector<int> im(static_cast<size_t>(p.size()));
    for (int i = 0; i < p.size(); ++i) im[static_cast<size_t>(i)] = p[q[i]];
    return Permutation(std::move(im));
}

Permutation conjugate(const Permutation& p, const Permutation& r) {
    return compose(r, compose(p, r.inverse()));
}

Permutation parse_cycles(const std::string& text, int sheets) {
    if (sheets < 1) throw std::invalid_argument("sheet count must be positive");
    std::vector<int> im(static_cast<size_t>(sheets));
    for (int i = 0; i < sheets; ++i) im[static_cast<size_t>(i)] = i;

    size_t pos = 0;
    auto skip_ws = [&] { while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos; };
    skip_ws();
    bool any = false;
    while (pos < text.size()) {
        if (text[pos] != '(')
            throw std::invalid_argument("expected '(' in cycle notation at \"" + text.substr(pos) + "\"");
        ++pos;
        std::vector<int> cycle;
        skip_ws();
        while (pos < text.size() && text[pos] != ')') {
            if (!std::isdigit(static_cast<unsigned char>(text[pos])))
                throw std::invalid_argument("bad character in cycle notation: '" + std::string(1, text[pos]) + "'");
            int v = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                v = v * 10 + (text[pos++] - '0');
            if (v >= sheets)
                throw std::invalid_argument("sheet index " + std::to_string(v) + " out of range for " +
                                            std::to_string(sheets) + " sheets");
            cycle.push_back(v);
            skip_ws();
        }
        if (pos >= text.size()) throw std::invalid_argument("unterminated cycle in \"" + text + "\"");
        ++pos;  // ')'
        skip_ws();
        any = true;
        for (size_t idx = 0; idx < cycle.size(); ++idx) {
            int from = cycle[idx];
            int to = cycle[(idx + 1) % cycle.size()];
            if (im[static_cast<size_t>(from)] != from)
                throw std::invalid_argument("sheet " + std::to_string(from) + " appears in two cycles");
            im[static_cast<size_t>(from)] = to;
        }
    }
    if (!any) throw std::invalid_argument("empty cycle notation: \"" + text + "\"");
    return Permutation(std::move(im));
}

std::string to_cycle_string(const Permutation& p) {
    std::ostringstream out;
    bool printed = false;
    for (const auto& cycle : p.cycles()) {
        if (cycle.size() < 2) continue;
        out << '(';
        for (size_t i = 0; i < cycle.size(); ++i) {
            if (i) out << ' ';
            out << cycle[i];
        }
        out << ')';
        printed = true;
    }
    if (!printed) return "()";
    return out.str();
}

} // namespace trifold
