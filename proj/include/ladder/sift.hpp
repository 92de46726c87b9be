// SPDX-License-Identifier: Apache-2.0

#ifndef LADDER_SIFT_HPP
#define LADDER_SIFT_HPP

#include "ladder/model.hpp"
#include "ladder/value_order.hpp"

namespace ladder {

// Primary sifting: drop every alternative that fails at least one basic
// threshold. An alternative's fate depends only on its own values, so a
// single pass reaches the fixed point. Every failing threshold is recorded.
inline SiftResult psp(const DecisionTask& task) {
    SiftResult result;
    for (const auto& alt : task.alternatives) {
        bool passed = true;
        for (const auto& t : task.thresholds) {
            const auto& v = alt.values.at(t.attribute);
            if (!satisfies_threshold(v, t)) {
                passed = false;
                result.eliminations.push_back({alt.id, t.attribute, t, v});
            }
        }
        if (passed) result.feasible.push_back(alt.id);
    }
    return result;
}

}  // namespace ladder

#endif  // LADDER_SIFT_HPP
