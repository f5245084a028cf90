#pragma once

#include <string>

namespace splitplan {

/// Compute profile of one side of the split. freq_ghz and k feed the client
/// power model only; a server profile leaves them at 0.
struct DeviceProfile {
    std::string name;
    int cores = 0;
    double clock_hz = 0.0;
    double freq_ghz = 0.0;
    double k = 0.0;
};

/// Link parameters. Throughputs and bandwidth in Mbps, the power model
/// coefficients in mW/Mbps (alpha) and mW (beta), download size in bits.
struct NetworkProfile {
    double bandwidth_mbps = 0.0;
    double tau_u_mbps = 0.0;
    double tau_d_mbps = 0.0;
    double alpha_u = 0.0;
    double beta_u = 0.0;
    double alpha_d = 0.0;
    double beta_d = 0.0;
    double download_bits = 0.0;
};

/// Reference client: octa-core 1.6 GHz handset, power constant k = 1.172.
DeviceProfile default_client();

/// Reference server: quad-core 1.6 GHz machine.
DeviceProfile default_server();

/// Reference link: saturating 10 Mbps Wi-Fi, transfer power coefficients
/// alpha_u = 283.17, alpha_d = 137.01 mW/Mbps, beta_u = beta_d = 132.86 mW,
/// 32 kbit result download (1000 class scores at 32 bits).
NetworkProfile default_network();

} // namespace splitplan
