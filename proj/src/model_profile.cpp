#include "splitplan/model_profile.hpp"

#include <numeric>
#include <sstream>
#include <utility>

namespace splitplan {

std::string TensorShape::to_string() const {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < dims.size(); ++i) {
        if (i > 0) out << ", ";
        out << dims[i];
    }
    out << ']';
    return out.str();
}

std::string_view to_string(LayerKind kind) {
    switch (kind) {
        case LayerKind::conv2d: return "conv2d";
        case LayerKind::maxpool2d: return "maxpool2d";
        case LayerKind::avgpool2d: return "avgpool2d";
        case LayerKind::adaptiveavgpool2d: return "adaptiveavgpool2d";
        case LayerKind::relu: return "relu";
        case LayerKind::dropout: return "dropout";
        case LayerKind::linear: return "linear";
        case LayerKind::flatten: return "flatten";
        case LayerKind::block: return "block";
    }
    return "unknown";
}

LayerKind layer_kind_from_string(std::string_view name) {
    if (name == "conv2d") return LayerKind::conv2d;
    if (name == "maxpool2d") return LayerKind::maxpool2d;
    if (name == "avgpool2d") return LayerKind::avgpool2d;
    if (name == "adaptiveavgpool2d") return LayerKind::adaptiveavgpool2d;
    if (name == "relu") return LayerKind::relu;
    if (name == "dropout") return LayerKind::dropout;
    if (name == "linear") return LayerKind::linear;
    if (name == "flatten") return LayerKind::flatten;
    if (name == "block") return LayerKind::block;
    throw ParseError("unknown layer kind: " + std::string(name));
}

namespace {

void require(bool ok, const std::string& message) {
    if (!ok) throw ValidationError(message);
}

std::int64_t pooled_extent(std::int64_t in, int kernel, int stride, int padding) {
    return (in + 2 * padding - kernel) / stride + 1;
}

} // namespace

void LayerSpec::validate() const {
    const std::string where = std::string(to_string(kind)) + " layer";
    switch (kind) {
        case LayerKind::conv2d:
            require(kernel >= 1, where + ": kernel must be >= 1");
            require(stride >= 1, where + ": stride must be >= 1");
            require(padding >= 0, where + ": padding must be >= 0");
            require(in_channels >= 1, where + ": in_channels must be >= 1");
            require(out_channels >= 1, where + ": out_channels must be >= 1");
            break;
        case LayerKind::maxpool2d:
        case LayerKind::avgpool2d:
            require(kernel >= 1, where + ": kernel must be >= 1");
            require(stride >= 1, where + ": stride must be >= 1");
            require(padding >= 0, where + ": padding must be >= 0");
            break;
        case LayerKind::adaptiveavgpool2d:
            require(kernel >= 1, where + ": target output size must be >= 1");
            break;
        case LayerKind::linear:
            require(in_features >= 1, where + ": in_features must be >= 1");
            require(out_features >= 1, where + ": out_features must be >= 1");
            break;
        case LayerKind::block:
            require(block_param_count >= 0, where + ": block_param_count must be >= 0");
            require(!block_out_shape.dims.empty(), where + ": block_out_shape required");
            for (auto d : block_out_shape.dims)
                require(d >= 1, where + ": block_out_shape dims must be >= 1");
            break;
        case LayerKind::relu:
        case LayerKind::dropout:
        case LayerKind::flatten:
            break;
    }
}

TensorShape infer_shape(const LayerSpec& layer, const TensorShape& in_shape) {
    const auto mismatch = [&](const std::string& what) -> ShapeMismatch {
        return ShapeMismatch(std::string(to_string(layer.kind)) + " on " + in_shape.to_string() +
                             ": " + what);
    };

    switch (layer.kind) {
        case LayerKind::conv2d: {
            if (!in_shape.is_spatial()) throw mismatch("expected a [c, h, w] input");
            if (in_shape.dims[0] != layer.in_channels)
                throw mismatch("input has " + std::to_string(in_shape.dims[0]) +
                               " channels, layer expects " + std::to_string(layer.in_channels));
            const auto h = pooled_extent(in_shape.dims[1], layer.kernel, layer.stride, layer.padding);
            const auto w = pooled_extent(in_shape.dims[2], layer.kernel, layer.stride, layer.padding);
            if (h <= 0 || w <= 0) throw mismatch("kernel larger than padded input");
            return {{layer.out_channels, h, w}};
        }
        case LayerKind::maxpool2d:
        case LayerKind::avgpool2d: {
            if (!in_shape.is_spatial()) throw mismatch("expected a [c, h, w] input");
            const auto h = pooled_extent(in_shape.dims[1], layer.kernel, layer.stride, layer.padding);
            const auto w = pooled_extent(in_shape.dims[2], layer.kernel, layer.stride, layer.padding);
            if (h <= 0 || w <= 0) throw mismatch("kernel larger than padded input");
            return {{in_shape.dims[0], h, w}};
        }
        case LayerKind::adaptiveavgpool2d:
            if (!in_shape.is_spatial()) throw mismatch("expected a [c, h, w] input");
            return {{in_shape.dims[0], layer.kernel, layer.kernel}};
        case LayerKind::relu:
        case LayerKind::dropout:
            if (in_shape.dims.empty()) throw mismatch("empty input shape");
            return in_shape;
        case LayerKind::flatten:
            if (in_shape.dims.empty()) throw mismatch("empty input shape");
            return {{in_shape.element_count()}};
        case LayerKind::linear:
            // Flat [in_features] input, or any shape whose element count equals
            // in_features (the flatten a sequential classifier head implies).
            if (in_shape.dims.empty() || in_shape.element_count() != layer.in_features)
                throw mismatch("element count " + std::to_string(in_shape.element_count()) +
                               " does not match in_features " + std::to_string(layer.in_features));
            return {{layer.out_features}};
        case LayerKind::block:
            if (in_shape.dims.empty()) throw mismatch("empty input shape");
            return layer.block_out_shape;
    }
    throw mismatch("unhandled layer kind");
}

LayerCost layer_cost(const LayerSpec& layer, const TensorShape& in_shape, int bytes_per_element) {
    const TensorShape out = infer_shape(layer, in_shape);

    std::int64_t params = 0;
    switch (layer.kind) {
        case LayerKind::conv2d:
            params = (static_cast<std::int64_t>(layer.kernel) * layer.kernel * layer.in_channels + 1) *
                     layer.out_channels;
            break;
        case LayerKind::linear:
            params = (static_cast<std::int64_t>(layer.in_features) + 1) * layer.out_features;
            break;
        case LayerKind::block:
            params = layer.block_param_count;
            break;
        default:
            break;
    }

    LayerCost cost;
    cost.param_count = params;
    cost.activation_elements = out.element_count();
    cost.param_bytes = params * bytes_per_element;
    cost.activation_bytes = cost.activation_elements * bytes_per_element;
    return cost;
}

ModelProfile::ModelProfile(std::string name, TensorShape input_shape, std::vector<LayerSpec> layers,
                           int bytes_per_element)
    : name_(std::move(name)),
      input_shape_(std::move(input_shape)),
      layers_(std::move(layers)),
      bytes_per_element_(bytes_per_element) {
    if (bytes_per_element_ < 1)
        throw ValidationError("bytes_per_element must be >= 1");
    if (input_shape_.dims.empty() || input_shape_.element_count() <= 0)
        throw ValidationError("input_shape must have positive element count");
    for (auto d : input_shape_.dims)
        if (d < 1) throw ValidationError("input_shape dims must be >= 1");
    if (layers_.size() < 2)
        throw ValidationError("a model profile needs at least 2 layers, got " +
                              std::to_string(layers_.size()));

    costs_.reserve(layers_.size());
    out_shapes_.reserve(layers_.size());
    prefix_bytes_.assign(1, 0);

    TensorShape shape = input_shape_;
    for (const LayerSpec& layer : layers_) {
        layer.validate();
        costs_.push_back(layer_cost(layer, shape, bytes_per_element_));
        shape = infer_shape(layer, shape);
        out_shapes_.push_back(shape);
        prefix_bytes_.push_back(prefix_bytes_.back() + costs_.back().total_bytes());
    }
}

std::int64_t ModelProfile::client_memory_bytes(int l1) const {
    if (l1 < 0 || l1 > total_layers())
        throw IndexOutOfRange("client memory is defined for l1 in [0, " +
                              std::to_string(total_layers()) + "], got " + std::to_string(l1));
    return prefix_bytes_[static_cast<std::size_t>(l1)];
}

std::int64_t ModelProfile::server_memory_bytes(int l2) const {
    if (l2 < 0 || l2 > total_layers())
        throw IndexOutOfRange("server memory is defined for l2 in [0, " +
                              std::to_string(total_layers()) + "], got " + std::to_string(l2));
    return prefix_bytes_.back() - prefix_bytes_[static_cast<std::size_t>(total_layers() - l2)];
}

std::int64_t ModelProfile::intermediate_size_bits(int l1) const {
    if (l1 < 1 || l1 > total_layers() - 1)
        throw IndexOutOfRange("intermediate size is defined for l1 in [1, " +
                              std::to_string(total_layers() - 1) + "], got " + std::to_string(l1));
    return costs_[static_cast<std::size_t>(l1 - 1)].activation_bytes * 8;
}

std::int64_t ModelProfile::input_size_bits() const {
    return input_shape_.element_count() * bytes_per_element_ * 8;
}

} // namespace splitplan
