#include "fusionkit/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace fusionkit {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
    std::vector<char> seen(img_.size(), 0);
    for (int v : img_) {
        if (v < 1 || v > degree() || seen[v - 1])
            throw std::invalid_argument("not a permutation of 1..n");
        seen[v - 1] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    Permutation p;
    p.img_ = std::move(img);
    return p;
}

Permutation Permutation::transposition(int n, int p, int q) {
    if (p < 1 || q < 1 || p > n || q > n || p == q)
        throw std::invalid_argument("bad transposition indices");
    Permutation t = identity(n);
    std::swap(t.img_[p - 1], t.img_[q - 1]);
    return t;
}

bool Permutation::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if (img_[i] != i + 1) return false;
    return true;
}

Permutation Permutation::inverse() const {
    Permutation r;
    r.img_.resize(degree());
    for (int i = 0; i < degree(); ++i) r.img_[img_[i] - 1] = i + 1;
    return r;
}

Permutation operator*(const Permutation& g, const Permutation& h) {
    if (g.degree() != h.degree())
        throw std::invalid_argument("composing permutations of different degrees");
    Permutation r;
    r.img_.resize(g.degree());
    for (int i = 0; i < g.degree(); ++i) r.img_[i] = g.img_[h.img_[i] - 1];
    return r;
}

Permutation Permutation::relabel(const std::vector<int>& m, int new_degree) const {
    if (static_cast<int>(m.size()) != degree())
        throw std::invalid_argument("relabel map has wrong size");
    Permutation r = identity(new_degree);
    for (int i = 1; i <= degree(); ++i) r.img_[m[i - 1] - 1] = m[apply(i) - 1];
    return r;
}

std::string Permutation::str() const {
    std::string out = "[";
    for (int i = 0; i < degree(); ++i) {
        if (i) out += ',';
        out += std::to_string(img_[i]);
    }
    return out + "]";
}

Permutation permutation_compose(const Permutation& g, const Permutation& h) { return g * h; }

std::vector<Permutation> symmetric_group(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation(img));
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

} // namespace fusionkit
