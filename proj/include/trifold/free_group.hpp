#pragma once

#include <string>
#include <vector>

namespace trifold {

// One signed letter of a free-group word over the basis
// {x_1, y_1, x_2, y_2, ...}. gen encodes x_i as 2(i-1), y_i as 2(i-1)+1.
struct FLetter {
    int gen = 0;
    int sign = +1;
    bool operator==(const FLetter&) const = default;
};

inline int gen_x(int i) { return 2 * (i - 1); }
inline int gen_y(int i) { return 2 * (i - 1) + 1; }
std::string gen_name(int gen);

// Always kept freely reduced; the default-constructed word is the identity.
class FreeWord {
public:
    FreeWord() = default;
    explicit FreeWord(std::vector<FLetter> letters);  // reduces

    static FreeWord x(int i, int sign = +1);
    static FreeWord y(int i, int sign = +1);

    const std::vector<FLetter>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }
    int size() const { return static_cast<int>(letters_.size()); }

    FreeWord inverse() const;
    FreeWord operator*(const FreeWord& rhs) const;
    FreeWord& operator*=(const FreeWord& rhs);

    bool operator==(const FreeWord&) const = default;

private:
    std::vector<FLetter> letters_;
};

// "x1 y1 x1^-1"; "X1" is shorthand for "x1^-1"; "1" is the identity.
FreeWord parse_free_word(const std::string& text);
std::string to_string(const FreeWord& w);

// An endomorphism of the free group on {x_i, y_i | 1 <= i <= k-1} given by
// generator images; the catalog only ever produces invertible ones, which is
// checked by composing with the derived inverse generator in the tests.
class Pi1Automorphism {
public:
    // images[g] is the image of generator g (encoded as above), 2(k-1) total.
    Pi1Automorphism(int k, std::vector<FreeWord> images);

    static Pi1Automorphism identity(int k);

    int k() const { return k_; }
    int rank() const { return 2 * (k_ - 1); }
    const FreeWord& image(int gen) const { return images_[static_cast<size_t>(gen)]; }

    FreeWord apply(const FreeWord& w) const;

    bool operator==(const Pi1Automorphism&) const = default;

private:
    int k_ = 0;
    std::vector<FreeWord> images_;
};

// Apply g first, then f. Throws on mismatched k.
Pi1Automorphism compose_autos(const Pi1Automorphism& f, const Pi1Automorphism& g);

} // namespace trifold
