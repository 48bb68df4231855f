#pragma once

#include "kirwan/grouprep.hpp"
#include "kirwan/weightlat.hpp"

#include <string>
#include <vector>

namespace kirwan::testing {

// The 16 bidegree-(3,3) monomial weights (3-2i, 3-2j), 0 <= i,j <= 3.
inline WeightSystem curve33_weight_system() {
    WeightSystem ws;
    for (int i = 0; i <= 3; ++i)
        for (int j = 0; j <= 3; ++j)
            ws.weights.push_back({"(" + std::to_string(i) + "," +
                                      std::to_string(j) + ")",
                                  Weight(3 - 2 * i, 3 - 2 * j), 1});
    return ws;
}

// Chamber x >= -y >= 0.
inline ChamberDesc curve33_chamber() {
    ChamberDesc c;
    c.halfspaces.push_back({Rat(0), Rat(-1)}); // -y >= 0
    c.halfspaces.push_back({Rat(1), Rat(1)});  // x + y >= 0
    return c;
}

// Integer weights embedded on the x-axis, multiplicities folded in.
inline WeightSystem line_system(const std::vector<int>& values) {
    WeightSystem ws;
    for (int v : values)
        ws.weights.push_back({std::to_string(v), Weight(v, 0), 1});
    return ws;
}

} // namespace kirwan::testing
