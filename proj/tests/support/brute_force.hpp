#pragma once

// Test-side ground truth for dominance machinery. Deliberately naive and
// independent of the library's fast sort: fronts are peeled off by scanning
// all pairs each round.

#include <cstddef>
#include <vector>

#include "splitplan/problem.hpp"

namespace splitplan::test {

inline bool dominates_bf(const ObjectiveVector& a, const ObjectiveVector& b) {
    const bool no_worse = a.f1 <= b.f1 && a.f2 <= b.f2 && a.f3 <= b.f3;
    const bool better = a.f1 < b.f1 || a.f2 < b.f2 || a.f3 < b.f3;
    return no_worse && better;
}

inline std::vector<std::vector<std::size_t>> brute_force_fronts(
    const std::vector<ObjectiveVector>& points) {
    std::vector<std::vector<std::size_t>> fronts;
    std::vector<bool> assigned(points.size(), false);
    std::size_t remaining = points.size();

    while (remaining > 0) {
        std::vector<std::size_t> front;
        for (std::size_t i = 0; i < points.size(); ++i) {
            if (assigned[i]) continue;
            bool dominated = false;
            for (std::size_t j = 0; j < points.size(); ++j) {
                if (j == i || assigned[j]) continue;
                if (dominates_bf(points[j], points[i])) {
                    dominated = true;
                    break;
                }
            }
            if (!dominated) front.push_back(i);
        }
        for (std::size_t i : front) assigned[i] = true;
        remaining -= front.size();
        fronts.push_back(std::move(front));
    }
    return fronts;
}

} // namespace splitplan::test
