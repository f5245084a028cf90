#pragma once

#include <string>
#include <vector>

#include "splitplan/problem.hpp"
#include "splitplan/profile_io.hpp"
#include "splitplan/rng.hpp"

namespace splitplan::test {

inline std::string data_path(const std::string& file) {
    return std::string(SPLITPLAN_DATA_DIR) + "/" + file;
}

inline ModelProfile bundled(const std::string& name) {
    return load_model_profile(data_path(name + ".json"));
}

inline const std::vector<std::string>& bundled_names() {
    static const std::vector<std::string> names = {"alexnet", "vgg11", "vgg13", "vgg16",
                                                   "mobilenet_v2"};
    return names;
}

/// Two-layer toy model: one conv and one relu on a small input.
inline ModelProfile toy_two_layer() {
    LayerSpec conv;
    conv.kind = LayerKind::conv2d;
    conv.kernel = 3;
    conv.stride = 1;
    conv.padding = 1;
    conv.in_channels = 3;
    conv.out_channels = 8;
    LayerSpec relu;
    relu.kind = LayerKind::relu;
    return ModelProfile("toy2", {{3, 8, 8}}, {conv, relu});
}

/// Opaque-block chain with the given parameter counts and flat output widths.
inline ModelProfile toy_blocks(const std::string& name,
                               const std::vector<std::pair<std::int64_t, std::int64_t>>& specs) {
    std::vector<LayerSpec> layers;
    for (const auto& [params, width] : specs) {
        LayerSpec block;
        block.kind = LayerKind::block;
        block.block_param_count = params;
        block.block_out_shape = {{width}};
        layers.push_back(block);
    }
    return ModelProfile(name, {{4}}, layers);
}

/// Random but always-valid architecture chain, for property tests.
inline ModelProfile random_profile(Rng& rng) {
    const int layer_count = static_cast<int>(rng.next_int(2, 12));
    std::vector<LayerSpec> layers;
    TensorShape shape{{rng.next_int(1, 8), rng.next_int(16, 64), rng.next_int(16, 64)}};
    const TensorShape input = shape;

    for (int i = 0; i < layer_count; ++i) {
        const bool spatial = shape.is_spatial();
        const int pick = static_cast<int>(rng.next_int(0, spatial ? 4 : 1));
        LayerSpec layer;
        if (!spatial || pick == 0) {
            layer.kind = LayerKind::linear;
            layer.in_features = static_cast<int>(shape.element_count());
            layer.out_features = static_cast<int>(rng.next_int(1, 64));
        } else if (pick == 1) {
            layer.kind = LayerKind::relu;
        } else if (pick == 2) {
            layer.kind = LayerKind::conv2d;
            layer.kernel = static_cast<int>(rng.next_int(1, 3));
            layer.stride = 1;
            layer.padding = static_cast<int>(rng.next_int(0, 1));
            layer.in_channels = static_cast<int>(shape.dims[0]);
            layer.out_channels = static_cast<int>(rng.next_int(1, 8));
        } else if (pick == 3) {
            layer.kind = LayerKind::maxpool2d;
            layer.kernel = 2;
            layer.stride = 2;
            layer.padding = 0;
            if (shape.dims[1] < 2 || shape.dims[2] < 2) layer.kind = LayerKind::relu;
        } else {
            layer.kind = LayerKind::flatten;
        }
        layers.push_back(layer);
        shape = infer_shape(layer, shape);
    }
    return ModelProfile("random", input, layers);
}

/// Device/network parameters drawn uniformly from their valid ranges.
inline ProblemInstance random_instance(ModelProfile model, Rng& rng) {
    DeviceProfile client;
    client.name = "random-client";
    client.cores = static_cast<int>(rng.next_int(1, 16));
    client.clock_hz = 0.5e9 + rng.next_unit() * 2.5e9;
    client.freq_ghz = 0.5 + rng.next_unit() * 2.5;
    client.k = 0.5 + rng.next_unit() * 1.5;

    DeviceProfile server;
    server.name = "random-server";
    server.cores = static_cast<int>(rng.next_int(1, 64));
    server.clock_hz = 0.5e9 + rng.next_unit() * 3.5e9;

    NetworkProfile net;
    net.bandwidth_mbps = 1.0 + rng.next_unit() * 999.0;
    net.tau_u_mbps = net.bandwidth_mbps * (0.1 + 0.9 * rng.next_unit());
    net.tau_d_mbps = net.bandwidth_mbps * (0.1 + 0.9 * rng.next_unit());
    net.alpha_u = 10.0 + rng.next_unit() * 490.0;
    net.alpha_d = 10.0 + rng.next_unit() * 490.0;
    net.beta_u = rng.next_unit() * 500.0;
    net.beta_d = rng.next_unit() * 500.0;
    net.download_bits = rng.next_unit() * 1e6;

    return ProblemInstance(std::move(model), client, server, net);
}

} // namespace splitplan::test
