#include "splitplan/problem.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "splitplan/cost_model.hpp"

namespace splitplan {

DeviceProfile default_client() {
    return {"octa-1.6ghz-client", 8, 1.6e9, 1.6, 1.172};
}

DeviceProfile default_server() {
    return {"quad-1.6ghz-server", 4, 1.6e9, 0.0, 0.0};
}

NetworkProfile default_network() {
    NetworkProfile net;
    net.bandwidth_mbps = 10.0;
    net.tau_u_mbps = 10.0;
    net.tau_d_mbps = 10.0;
    net.alpha_u = 283.17;
    net.beta_u = 132.86;
    net.alpha_d = 137.01;
    net.beta_d = 132.86;
    net.download_bits = 32000.0; // 1000 class scores at 32 bits
    return net;
}

namespace {

void require_instance(bool ok, const std::string& message) {
    if (!ok) throw InvalidInstance(message);
}

} // namespace

ProblemInstance::ProblemInstance(ModelProfile model, DeviceProfile client, DeviceProfile server,
                                 NetworkProfile network, std::int64_t memory_cap_bytes)
    : model_(std::move(model)),
      client_(std::move(client)),
      server_(std::move(server)),
      network_(std::move(network)),
      memory_cap_bytes_(memory_cap_bytes) {
    require_instance(memory_cap_bytes_ > 0, "memory cap must be positive");
    require_instance(client_.cores >= 1, "client cores must be >= 1");
    require_instance(client_.clock_hz > 0, "client clock must be positive");
    require_instance(client_.freq_ghz > 0, "client frequency must be positive");
    require_instance(client_.k > 0, "client power constant k must be positive");
    require_instance(server_.cores >= 1, "server cores must be >= 1");
    require_instance(server_.clock_hz > 0, "server clock must be positive");
    require_instance(network_.bandwidth_mbps > 0, "bandwidth must be positive");
    require_instance(network_.tau_u_mbps > 0, "upload throughput must be positive");
    require_instance(network_.tau_d_mbps > 0, "download throughput must be positive");
    require_instance(network_.tau_u_mbps <= network_.bandwidth_mbps,
                     "upload throughput exceeds bandwidth");
    require_instance(network_.tau_d_mbps <= network_.bandwidth_mbps,
                     "download throughput exceeds bandwidth");
    require_instance(network_.alpha_u >= 0 && network_.alpha_d >= 0, "alpha must be >= 0");
    require_instance(network_.beta_u >= 0 && network_.beta_d >= 0, "beta must be >= 0");
    require_instance(network_.download_bits >= 0, "download size must be >= 0");
}

ProblemInstance default_instance(ModelProfile model) {
    return ProblemInstance(std::move(model), default_client(), default_server(), default_network());
}

ObjectiveVector evaluate(const ProblemInstance& instance, const SplitCandidate& candidate) {
    const LatencyBreakdown lat = latency_breakdown(instance, candidate.l1);
    const EnergyBreakdown energy = energy_breakdown(instance, candidate.l1);
    ObjectiveVector v;
    v.f1 = lat.t_client_s + lat.t_upload_s + lat.t_server_s;
    v.f2 = energy.e_client_mj + energy.e_upload_mj + energy.e_download_mj;
    v.f3 = static_cast<double>(instance.model().client_memory_bytes(candidate.l1));
    return v;
}

FeasibilityReport check_feasible(const ProblemInstance& instance, const SplitCandidate& candidate) {
    const int total = instance.total_layers();
    FeasibilityReport report;

    const int clamped = std::clamp(candidate.l1, 0, total);
    if (instance.model().client_memory_bytes(clamped) > instance.memory_cap_bytes())
        report.violations.push_back(1);
    if (candidate.l1 + candidate.l2 != total) report.violations.push_back(2);
    if (candidate.l1 < 1 || candidate.l1 > total) report.violations.push_back(3);
    if (candidate.l2 < 1 || candidate.l2 > total) report.violations.push_back(4);
    if (instance.network().tau_u_mbps > instance.network().bandwidth_mbps)
        report.violations.push_back(5);
    if (instance.network().tau_d_mbps > instance.network().bandwidth_mbps)
        report.violations.push_back(6);

    report.ok = report.violations.empty();
    return report;
}

} // namespace splitplan
