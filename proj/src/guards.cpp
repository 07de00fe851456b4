#include "fusionkit/guards.hpp"

#include <cmath>
#include <cstdlib>

#include <json.hpp>

namespace fusionkit {

Guards Guards::from_env() {
    Guards g;
    const char* raw = std::getenv("FUSIONKIT_GUARDS");
    if (!raw || !*raw) return g;
    nlohmann::json j = nlohmann::json::parse(raw); // malformed json throws, caller reports
    if (!j.is_object()) throw std::invalid_argument("FUSIONKIT_GUARDS must be a json object");
    for (auto& [key, val] : j.items()) {
        if (key == "fusion_max_boxes") g.fusion_max_boxes = val.get<int>();
        else if (key == "pair_max_boxes") g.pair_max_boxes = val.get<int>();
        else if (key == "ambient_max") g.ambient_max = val.get<long>();
        else if (key == "burnside_max_dim") g.burnside_max_dim = val.get<int>();
        else throw std::invalid_argument("FUSIONKIT_GUARDS: unknown key '" + key + "'");
    }
    return g;
}

void guard_fusion_boxes(const Guards& g, int n) {
    if (n > g.fusion_max_boxes)
        throw GuardError("fusion element on " + std::to_string(n) +
                         " boxes exceeds guard fusion_max_boxes=" + std::to_string(g.fusion_max_boxes));
}

void guard_pair_boxes(const Guards& g, int n_total) {
    if (n_total > g.pair_max_boxes)
        throw GuardError("symbolic product on " + std::to_string(n_total) +
                         " boxes exceeds guard pair_max_boxes=" + std::to_string(g.pair_max_boxes));
}

void guard_ambient(const Guards& g, int N, int tensor_factors) {
    if (N < 1) throw std::invalid_argument("N must be >= 1");
    long dim = 1;
    for (int i = 0; i < tensor_factors; ++i) {
        dim *= N;
        if (dim > g.ambient_max)
            throw GuardError("ambient dimension " + std::to_string(N) + "^" +
                             std::to_string(tensor_factors) + " exceeds guard ambient_max=" +
                             std::to_string(g.ambient_max));
    }
}

void guard_burnside(const Guards& g, long dim_w) {
    if (dim_w > g.burnside_max_dim)
        throw GuardError("module dimension " + std::to_string(dim_w) +
                         " exceeds guard burnside_max_dim=" + std::to_string(g.burnside_max_dim));
}

} // namespace fusionkit
