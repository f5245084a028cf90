#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "splitplan/errors.hpp"
#include "splitplan/tensor_shape.hpp"

namespace splitplan {

enum class LayerKind {
    conv2d,
    maxpool2d,
    avgpool2d,
    adaptiveavgpool2d,
    relu,
    dropout,
    linear,
    flatten,
    block,
};

std::string_view to_string(LayerKind kind);
LayerKind layer_kind_from_string(std::string_view name);

/// One entry of a sequential architecture description. Field usage is
/// kind-specific:
///   conv2d            kernel/stride/padding, in_channels, out_channels
///   maxpool2d         kernel/stride/padding
///   avgpool2d         kernel/stride/padding
///   adaptiveavgpool2d kernel = target output edge size
///   linear            in_features, out_features
///   block             block_param_count, block_out_shape (opaque composite,
///                     e.g. an inverted-residual block profiled as a unit)
///   relu/dropout/flatten take no fields.
struct LayerSpec {
    LayerKind kind = LayerKind::relu;
    int kernel = 0;
    int stride = 1;
    int padding = 0;
    int in_channels = 0;
    int out_channels = 0;
    int in_features = 0;
    int out_features = 0;
    std::int64_t block_param_count = 0;
    TensorShape block_out_shape;

    /// Throws ValidationError when a kind-required field is missing,
    /// non-positive, or stride/padding are out of range.
    void validate() const;
};

/// Static per-layer accounting: parameters (weights + biases) and the
/// elements of the output activation, plus both expressed in bytes.
struct LayerCost {
    std::int64_t param_count = 0;
    std::int64_t activation_elements = 0;
    std::int64_t param_bytes = 0;
    std::int64_t activation_bytes = 0;

    [[nodiscard]] std::int64_t total_bytes() const { return param_bytes + activation_bytes; }
};

/// Output shape of `layer` applied to `in_shape`.
///
/// conv/pool spatial dims follow out = floor((in + 2*padding - kernel)/stride) + 1.
/// relu/dropout preserve the shape, flatten collapses to [product], linear
/// maps to [out_features] and also accepts a spatial input whose element
/// count equals in_features (the implicit flatten every sequential
/// classifier head performs). Throws ShapeMismatch otherwise.
TensorShape infer_shape(const LayerSpec& layer, const TensorShape& in_shape);

/// Parameter and activation accounting for one layer.
/// conv: (kernel^2 * in_channels + 1) * out_channels, linear:
/// (in_features + 1) * out_features, block: the pre-counted value,
/// everything else is parameter-free.
LayerCost layer_cost(const LayerSpec& layer, const TensorShape& in_shape, int bytes_per_element);

/// A fully shape-inferred CNN architecture with per-layer costs precomputed.
/// Immutable after construction; safe to share across threads.
class ModelProfile {
public:
    ModelProfile(std::string name, TensorShape input_shape, std::vector<LayerSpec> layers,
                 int bytes_per_element = 4);

    [[nodiscard]] const std::string& name() const { return name_; }
    [[nodiscard]] int total_layers() const { return static_cast<int>(layers_.size()); }
    [[nodiscard]] int bytes_per_element() const { return bytes_per_element_; }
    [[nodiscard]] const TensorShape& input_shape() const { return input_shape_; }
    [[nodiscard]] const std::vector<LayerSpec>& layers() const { return layers_; }

    /// Cost/output shape of layer `index` (0-based).
    [[nodiscard]] const LayerCost& cost(int index) const { return costs_.at(index); }
    [[nodiscard]] const TensorShape& output_shape(int index) const { return out_shapes_.at(index); }

    /// Total bytes (parameters + activations) of the first l1 layers,
    /// l1 in [0, L]. Throws IndexOutOfRange outside that range.
    [[nodiscard]] std::int64_t client_memory_bytes(int l1) const;

    /// Total bytes of the last l2 layers, l2 in [0, L].
    [[nodiscard]] std::int64_t server_memory_bytes(int l2) const;

    [[nodiscard]] std::int64_t total_memory_bytes() const { return prefix_bytes_.back(); }

    /// Size in bits of the activation produced by layer l1 (the tensor a
    /// split at l1 uploads), l1 in [1, L-1].
    [[nodiscard]] std::int64_t intermediate_size_bits(int l1) const;

    /// Size in bits of the model input tensor.
    [[nodiscard]] std::int64_t input_size_bits() const;

private:
    std::string name_;
    TensorShape input_shape_;
    std::vector<LayerSpec> layers_;
    int bytes_per_element_;
    std::vector<LayerCost> costs_;
    std::vector<TensorShape> out_shapes_;
    std::vector<std::int64_t> prefix_bytes_; // prefix_bytes_[i] = bytes of first i layers
};

} // namespace splitplan
