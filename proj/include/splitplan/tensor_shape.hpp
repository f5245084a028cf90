#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace splitplan {

/// Activation tensor shape: [channels, height, width] for spatial tensors,
/// [features] for flat ones.
struct TensorShape {
    std::vector<std::int64_t> dims;

    [[nodiscard]] std::int64_t element_count() const {
        std::int64_t n = 1;
        for (auto d : dims) n *= d;
        return dims.empty() ? 0 : n;
    }

    [[nodiscard]] bool is_spatial() const { return dims.size() == 3; }
    [[nodiscard]] bool is_flat() const { return dims.size() == 1; }

    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const TensorShape&, const TensorShape&) = default;
};

} // namespace splitplan
