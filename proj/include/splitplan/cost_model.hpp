#pragma once

#include "splitplan/problem.hpp"

namespace splitplan {

/// All latency/energy components of one split. Download latency is computed
/// for the energy term but excluded from t_total_s, which covers the
/// client -> upload -> server path the end-to-end latency objective uses.
struct CostBreakdown {
    double t_client_s = 0.0;
    double t_upload_s = 0.0;
    double t_server_s = 0.0;
    double t_download_s = 0.0;
    double t_total_s = 0.0;
    double e_client_mj = 0.0;
    double e_upload_mj = 0.0;
    double e_download_mj = 0.0;
    double e_total_mj = 0.0;
};

/// Dynamic client power k * cores * freq_ghz^3, in mW.
double client_power_mw(const DeviceProfile& client);

/// Upload radio power alpha_u * tau_u + beta_u, in mW.
double upload_power_mw(const NetworkProfile& network);

/// Download radio power alpha_d * tau_d + beta_d, in mW.
double download_power_mw(const NetworkProfile& network);

// Per-term building blocks. The latency quotient treats one byte of assigned
// memory as one core-cycle of work: bytes / (cores * clock_hz). Valid for any
// prefix/suffix length in [0, L]; transfer terms take a payload in bits
// against the link bandwidth in Mbps.
double client_latency_s(const ProblemInstance& instance, int l1);
double server_latency_s(const ProblemInstance& instance, int l2);
double transfer_latency_s(const ProblemInstance& instance, double payload_bits);
double download_latency_s(const ProblemInstance& instance);

struct LatencyBreakdown {
    double t_client_s = 0.0;
    double t_upload_s = 0.0;
    double t_server_s = 0.0;
    double t_download_s = 0.0;
};

struct EnergyBreakdown {
    double e_client_mj = 0.0;
    double e_upload_mj = 0.0;
    double e_download_mj = 0.0;
};

/// Latency components of a proper split, l1 in [1, L-1].
LatencyBreakdown latency_breakdown(const ProblemInstance& instance, int l1);

/// Energy components of a proper split, l1 in [1, L-1]. Energies are
/// mW * s = mJ products of the matching power and latency terms.
EnergyBreakdown energy_breakdown(const ProblemInstance& instance, int l1);

/// Both breakdowns plus the totals.
CostBreakdown cost_breakdown(const ProblemInstance& instance, int l1);

} // namespace splitplan
