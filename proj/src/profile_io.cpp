#include "splitplan/profile_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace splitplan {

namespace {

using nlohmann::json;

json parse_document(const std::string& text) {
    json doc = json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (doc.is_discarded()) throw ParseError("invalid JSON document");
    return doc;
}

const json& member(const json& obj, const std::string& key, const std::string& where) {
    const auto it = obj.find(key);
    if (it == obj.end()) throw ParseError(where + ": missing required key '" + key + "'");
    return *it;
}

std::int64_t int_member(const json& obj, const std::string& key, const std::string& where) {
    const json& value = member(obj, key, where);
    if (!value.is_number_integer()) throw ParseError(where + ": '" + key + "' must be an integer");
    return value.get<std::int64_t>();
}

double number_member(const json& obj, const std::string& key, const std::string& where) {
    const json& value = member(obj, key, where);
    if (!value.is_number()) throw ParseError(where + ": '" + key + "' must be a number");
    return value.get<double>();
}

std::string string_member(const json& obj, const std::string& key, const std::string& where) {
    const json& value = member(obj, key, where);
    if (!value.is_string()) throw ParseError(where + ": '" + key + "' must be a string");
    return value.get<std::string>();
}

void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed,
                         const std::string& where) {
    if (!obj.is_object()) throw ParseError(where + ": expected an object");
    for (const auto& item : obj.items()) {
        if (!allowed.contains(item.key()))
            throw ParseError(where + ": unexpected key '" + item.key() + "'");
    }
}

TensorShape shape_member(const json& obj, const std::string& key, const std::string& where) {
    const json& value = member(obj, key, where);
    if (!value.is_array() || value.empty())
        throw ParseError(where + ": '" + key + "' must be a non-empty array");
    TensorShape shape;
    for (const json& dim : value) {
        if (!dim.is_number_integer())
            throw ParseError(where + ": '" + key + "' entries must be integers");
        shape.dims.push_back(dim.get<std::int64_t>());
    }
    return shape;
}

LayerSpec parse_layer(const json& obj, std::size_t index) {
    const std::string where = "layers[" + std::to_string(index) + "]";
    if (!obj.is_object()) throw ParseError(where + ": expected an object");

    LayerSpec layer;
    layer.kind = layer_kind_from_string(string_member(obj, "kind", where));

    switch (layer.kind) {
        case LayerKind::conv2d:
            reject_unknown_keys(
                obj, {"kind", "kernel", "stride", "padding", "in_channels", "out_channels"}, where);
            layer.kernel = static_cast<int>(int_member(obj, "kernel", where));
            layer.stride = static_cast<int>(obj.value("stride", 1));
            layer.padding = static_cast<int>(obj.value("padding", 0));
            layer.in_channels = static_cast<int>(int_member(obj, "in_channels", where));
            layer.out_channels = static_cast<int>(int_member(obj, "out_channels", where));
            break;
        case LayerKind::maxpool2d:
        case LayerKind::avgpool2d:
            reject_unknown_keys(obj, {"kind", "kernel", "stride", "padding"}, where);
            layer.kernel = static_cast<int>(int_member(obj, "kernel", where));
            layer.stride = static_cast<int>(obj.value("stride", layer.kernel));
            layer.padding = static_cast<int>(obj.value("padding", 0));
            break;
        case LayerKind::adaptiveavgpool2d:
            reject_unknown_keys(obj, {"kind", "kernel"}, where);
            layer.kernel = static_cast<int>(int_member(obj, "kernel", where));
            break;
        case LayerKind::linear:
            reject_unknown_keys(obj, {"kind", "in_features", "out_features"}, where);
            layer.in_features = static_cast<int>(int_member(obj, "in_features", where));
            layer.out_features = static_cast<int>(int_member(obj, "out_features", where));
            break;
        case LayerKind::block:
            reject_unknown_keys(obj, {"kind", "block_param_count", "block_out_shape"}, where);
            layer.block_param_count = int_member(obj, "block_param_count", where);
            layer.block_out_shape = shape_member(obj, "block_out_shape", where);
            break;
        case LayerKind::relu:
        case LayerKind::dropout:
        case LayerKind::flatten:
            reject_unknown_keys(obj, {"kind"}, where);
            break;
    }
    return layer;
}

} // namespace

ModelProfile parse_model_profile(const std::string& json_text) {
    const json doc = parse_document(json_text);
    reject_unknown_keys(doc, {"name", "bytes_per_element", "input_shape", "layers"}, "profile");

    const std::string name = string_member(doc, "name", "profile");
    const int bytes_per_element = static_cast<int>(doc.value("bytes_per_element", 4));
    const TensorShape input_shape = shape_member(doc, "input_shape", "profile");

    const json& layers_doc = member(doc, "layers", "profile");
    if (!layers_doc.is_array()) throw ParseError("profile: 'layers' must be an array");

    std::vector<LayerSpec> layers;
    layers.reserve(layers_doc.size());
    for (std::size_t i = 0; i < layers_doc.size(); ++i)
        layers.push_back(parse_layer(layers_doc[i], i));

    return ModelProfile(name, input_shape, std::move(layers), bytes_per_element);
}

ModelProfile load_model_profile(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open model profile: " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_model_profile(buffer.str());
}

InstanceConfig parse_instance_config(const std::string& json_text) {
    const json doc = parse_document(json_text);
    reject_unknown_keys(doc, {"client", "server", "network"}, "config");

    InstanceConfig config;
    const NetworkProfile reference = default_network();

    const json& client = member(doc, "client", "config");
    reject_unknown_keys(client, {"name", "cores", "clock_hz", "freq_ghz", "k"}, "client");
    config.client.name = client.value("name", "client");
    config.client.cores = static_cast<int>(int_member(client, "cores", "client"));
    config.client.clock_hz = number_member(client, "clock_hz", "client");
    config.client.freq_ghz = number_member(client, "freq_ghz", "client");
    config.client.k = number_member(client, "k", "client");

    const json& server = member(doc, "server", "config");
    reject_unknown_keys(server, {"name", "cores", "clock_hz"}, "server");
    config.server.name = server.value("name", "server");
    config.server.cores = static_cast<int>(int_member(server, "cores", "server"));
    config.server.clock_hz = number_member(server, "clock_hz", "server");

    const json& network = member(doc, "network", "config");
    reject_unknown_keys(network,
                        {"bandwidth_mbps", "tau_u_mbps", "tau_d_mbps", "alpha_u", "beta_u",
                         "alpha_d", "beta_d", "download_bits"},
                        "network");
    config.network.bandwidth_mbps = number_member(network, "bandwidth_mbps", "network");
    config.network.tau_u_mbps = network.value("tau_u_mbps", config.network.bandwidth_mbps);
    config.network.tau_d_mbps = network.value("tau_d_mbps", config.network.bandwidth_mbps);
    config.network.alpha_u = network.value("alpha_u", reference.alpha_u);
    config.network.beta_u = network.value("beta_u", reference.beta_u);
    config.network.alpha_d = network.value("alpha_d", reference.alpha_d);
    config.network.beta_d = network.value("beta_d", reference.beta_d);
    config.network.download_bits = network.value("download_bits", reference.download_bits);
    return config;
}

InstanceConfig load_instance_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open device config: " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_instance_config(buffer.str());
}

InstanceConfig default_instance_config() {
    return {default_client(), default_server(), default_network()};
}

} // namespace splitplan
