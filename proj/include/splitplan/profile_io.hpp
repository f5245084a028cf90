#pragma once

#include <filesystem>
#include <string>

#include "splitplan/device.hpp"
#include "splitplan/model_profile.hpp"

namespace splitplan {

/// Parse a model profile document:
///   { name, bytes_per_element?, input_shape: [c, h, w],
///     layers: [ {kind, ...kind-specific fields} ] }
/// Unknown or kind-inapplicable keys are rejected. Throws ParseError for
/// malformed documents, ValidationError/ShapeMismatch for invalid profiles.
ModelProfile parse_model_profile(const std::string& json_text);
ModelProfile load_model_profile(const std::filesystem::path& path);

struct InstanceConfig {
    DeviceProfile client;
    DeviceProfile server;
    NetworkProfile network;
};

/// Parse a device/network document:
///   { client: {name?, cores, clock_hz, freq_ghz, k},
///     server: {name?, cores, clock_hz},
///     network: {bandwidth_mbps, tau_u_mbps?, tau_d_mbps?, alpha_u?, beta_u?,
///               alpha_d?, beta_d?, download_bits?} }
/// Omitted throughputs default to the bandwidth (saturating link); omitted
/// transfer-power coefficients and download size fall back to the reference
/// values.
InstanceConfig parse_instance_config(const std::string& json_text);
InstanceConfig load_instance_config(const std::filesystem::path& path);

/// The built-in reference configuration (same values as the bundled defaults
/// document).
InstanceConfig default_instance_config();

} // namespace splitplan
