#include "splitplan/cost_model.hpp"

#include <cmath>
#include <string>

namespace splitplan {

double client_power_mw(const DeviceProfile& client) {
    return client.k * client.cores * client.freq_ghz * client.freq_ghz * client.freq_ghz;
}

double upload_power_mw(const NetworkProfile& network) {
    return network.alpha_u * network.tau_u_mbps + network.beta_u;
}

double download_power_mw(const NetworkProfile& network) {
    return network.alpha_d * network.tau_d_mbps + network.beta_d;
}

double client_latency_s(const ProblemInstance& instance, int l1) {
    const double work = static_cast<double>(instance.model().client_memory_bytes(l1));
    return work / (instance.client().cores * instance.client().clock_hz);
}

double server_latency_s(const ProblemInstance& instance, int l2) {
    const double work = static_cast<double>(instance.model().server_memory_bytes(l2));
    return work / (instance.server().cores * instance.server().clock_hz);
}

double transfer_latency_s(const ProblemInstance& instance, double payload_bits) {
    return (payload_bits / 1e6) / instance.network().bandwidth_mbps;
}

double download_latency_s(const ProblemInstance& instance) {
    return transfer_latency_s(instance, instance.network().download_bits);
}

LatencyBreakdown latency_breakdown(const ProblemInstance& instance, int l1) {
    const int total = instance.total_layers();
    if (l1 < 1 || l1 > total - 1)
        throw IndexOutOfRange("latency breakdown is defined for l1 in [1, " +
                              std::to_string(total - 1) + "], got " + std::to_string(l1));
    LatencyBreakdown out;
    out.t_client_s = client_latency_s(instance, l1);
    out.t_upload_s =
        transfer_latency_s(instance, static_cast<double>(instance.model().intermediate_size_bits(l1)));
    out.t_server_s = server_latency_s(instance, total - l1);
    out.t_download_s = download_latency_s(instance);
    return out;
}

EnergyBreakdown energy_breakdown(const ProblemInstance& instance, int l1) {
    const LatencyBreakdown lat = latency_breakdown(instance, l1);
    EnergyBreakdown out;
    out.e_client_mj = client_power_mw(instance.client()) * lat.t_client_s;
    out.e_upload_mj = upload_power_mw(instance.network()) * lat.t_upload_s;
    out.e_download_mj = download_power_mw(instance.network()) * lat.t_download_s;
    return out;
}

CostBreakdown cost_breakdown(const ProblemInstance& instance, int l1) {
    const LatencyBreakdown lat = latency_breakdown(instance, l1);
    CostBreakdown out;
    out.t_client_s = lat.t_client_s;
    out.t_upload_s = lat.t_upload_s;
    out.t_server_s = lat.t_server_s;
    out.t_download_s = lat.t_download_s;
    out.t_total_s = lat.t_client_s + lat.t_upload_s + lat.t_server_s;
    out.e_client_mj = client_power_mw(instance.client()) * lat.t_client_s;
    out.e_upload_mj = upload_power_mw(instance.network()) * lat.t_upload_s;
    out.e_download_mj = download_power_mw(instance.network()) * lat.t_download_s;
    out.e_total_mj = out.e_client_mj + out.e_upload_mj + out.e_download_mj;
    return out;
}

} // namespace splitplan
