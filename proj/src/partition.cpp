#include "fusionkit/partition.hpp"

#include <sstream>
#include <stdexcept>

namespace fusionkit {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

Partition Partition::parse(const std::string& s) {
    std::vector<int> parts;
    if (!s.empty()) {
        std::stringstream ss(s);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (tok.empty()) throw std::invalid_argument("bad partition literal '" + s + "'");
            size_t pos = 0;
            int v;
            try {
                v = std::stoi(tok, &pos);
            } catch (const std::exception&) {
                throw std::invalid_argument("bad partition literal '" + s + "'");
            }
            if (pos != tok.size()) throw std::invalid_argument("bad partition literal '" + s + "'");
            parts.push_back(v);
        }
    }
    return Partition(std::move(parts));
}

int Partition::part(int i) const {
    if (i < 1) throw std::out_of_range("partition rows are 1-based");
    if (i > length()) return 0;
    return parts_[i - 1];
}

long Partition::sum() const {
    long s = 0;
    for (int p : parts_) s += p;
    return s;
}

bool Partition::contains(const Partition& inner) const {
    if (inner.length() > length()) return false;
    for (int i = 0; i < inner.length(); ++i)
        if (inner.parts_[i] > parts_[i]) return false;
    return true;
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return Partition();
    std::vector<int> c(parts_[0]);
    for (int col = 1; col <= parts_[0]; ++col) {
        int cnt = 0;
        for (int p : parts_)
            if (p >= col) ++cnt;
        c[col - 1] = cnt;
    }
    return Partition(std::move(c));
}

std::string Partition::str() const {
    std::string out;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

} // namespace fusionkit
