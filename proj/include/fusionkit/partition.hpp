#pragma once

#include <string>
#include <vector>

namespace fusionkit {

// Integer partition: weakly decreasing positive parts.  Trailing zeros are
// accepted on input and dropped.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    static Partition parse(const std::string& s); // "9,9,7,3"; "" = empty

    int length() const { return static_cast<int>(parts_.size()); }
    // part(i) is 1-based and 0 beyond the last row, matching the usual lambda_i
    int part(int i) const;
    const std::vector<int>& parts() const { return parts_; }
    long sum() const;
    bool empty() const { return parts_.empty(); }

    bool contains(const Partition& inner) const;
    Partition conjugate() const;

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
    friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ < b.parts_; }

    std::string str() const; // comma-separated, "" for empty

private:
    std::vector<int> parts_;
};

} // namespace fusionkit
