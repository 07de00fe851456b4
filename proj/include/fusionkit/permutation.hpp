#pragma once

#include <string>
#include <vector>

namespace fusionkit {

// Permutation of {1..n} in one-line notation: img[i-1] = sigma(i).
// Composition is (g*h)(x) = g(h(x)).
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images); // validates a bijection on 1..n
    static Permutation identity(int n);
    static Permutation transposition(int n, int p, int q);

    int degree() const { return static_cast<int>(img_.size()); }
    int apply(int x) const { return img_[x - 1]; }
    const std::vector<int>& images() const { return img_; }

    bool is_identity() const;
    Permutation inverse() const;
    friend Permutation operator*(const Permutation& g, const Permutation& h);

    // in-place right factor update: this <- this * (p q); cheap, used heavily
    void swap_preimages(int p, int q) { std::swap(img_[p - 1], img_[q - 1]); }

    // relabel under a bijection m of positions: result sends m(i) -> m(sigma(i));
    // m is given as a vector with m[i-1] in 1..new_degree, injective
    Permutation relabel(const std::vector<int>& m, int new_degree) const;

    friend bool operator==(const Permutation& a, const Permutation& b) { return a.img_ == b.img_; }
    friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }
    friend bool operator<(const Permutation& a, const Permutation& b) { return a.img_ < b.img_; }

    std::string str() const; // "[2,1,3]"

private:
    std::vector<int> img_;
};

Permutation permutation_compose(const Permutation& g, const Permutation& h);

// all n! permutations of {1..n} in lexicographic one-line order
std::vector<Permutation> symmetric_group(int n);

} // namespace fusionkit
