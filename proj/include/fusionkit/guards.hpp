#pragma once

#include <stdexcept>
#include <string>

namespace fusionkit {

// Desk-scale size guards.  Everything here is exact arithmetic, so the cost
// cliffs are steep; these bounds keep a stray CLI call from running for hours.
// Override via the FUSIONKIT_GUARDS env var (a json object, e.g.
// {"fusion_max_boxes":8,"ambient_max":6561}) or by passing an explicit value.
struct Guards {
    int fusion_max_boxes = 7;    // group ring of S_n, n <= this
    int pair_max_boxes = 6;      // symbolic pair products / divisibility, n+n' <= this
    long ambient_max = 1024;     // tensor space dimension N^k
    int burnside_max_dim = 12;   // dim W for the algebra closure oracle

    static Guards defaults() { return Guards{}; }
    // defaults overlaid with FUSIONKIT_GUARDS, if set (bad json -> throws)
    static Guards from_env();
};

class GuardError : public std::runtime_error {
public:
    explicit GuardError(const std::string& what) : std::runtime_error(what) {}
};

// A proved property of the computation failed to hold; this is a bug trap,
// not an input error.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

void guard_fusion_boxes(const Guards& g, int n);
void guard_pair_boxes(const Guards& g, int n_total);
void guard_ambient(const Guards& g, int N, int tensor_factors);
void guard_burnside(const Guards& g, long dim_w);

} // namespace fusionkit
