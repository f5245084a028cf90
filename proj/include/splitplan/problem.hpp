#pragma once

#include <cstdint>
#include <vector>

#include "splitplan/device.hpp"
#include "splitplan/model_profile.hpp"

namespace splitplan {

/// A split point: the first l1 layers run on the client, the remaining l2 on
/// the server. Plain data; validity is judged by check_feasible.
struct SplitCandidate {
    int l1 = 0;
    int l2 = 0;

    friend bool operator==(const SplitCandidate&, const SplitCandidate&) = default;
};

/// Candidate with l2 derived from the model size.
inline SplitCandidate make_split(int l1, int total_layers) {
    return {l1, total_layers - l1};
}

/// Objective values of one candidate: end-to-end latency in seconds, client
/// energy in mJ, client memory in bytes.
struct ObjectiveVector {
    double f1 = 0.0;
    double f2 = 0.0;
    double f3 = 0.0;

    friend bool operator==(const ObjectiveVector&, const ObjectiveVector&) = default;
};

inline double objective(const ObjectiveVector& v, int index) {
    return index == 0 ? v.f1 : index == 1 ? v.f2 : v.f3;
}

inline constexpr int kObjectiveCount = 3;

/// Model + devices + network + client memory cap: the evaluable three-objective
/// minimization. Immutable; evaluate/check_feasible are pure.
class ProblemInstance {
public:
    static constexpr std::int64_t kDefaultMemoryCapBytes = std::int64_t{1} << 30; // 1 GiB

    ProblemInstance(ModelProfile model, DeviceProfile client, DeviceProfile server,
                    NetworkProfile network,
                    std::int64_t memory_cap_bytes = kDefaultMemoryCapBytes);

    [[nodiscard]] const ModelProfile& model() const { return model_; }
    [[nodiscard]] const DeviceProfile& client() const { return client_; }
    [[nodiscard]] const DeviceProfile& server() const { return server_; }
    [[nodiscard]] const NetworkProfile& network() const { return network_; }
    [[nodiscard]] std::int64_t memory_cap_bytes() const { return memory_cap_bytes_; }
    [[nodiscard]] int total_layers() const { return model_.total_layers(); }

private:
    ModelProfile model_;
    DeviceProfile client_;
    DeviceProfile server_;
    NetworkProfile network_;
    std::int64_t memory_cap_bytes_;
};

/// Instance over the reference devices/network with the default 1 GiB cap.
ProblemInstance default_instance(ModelProfile model);

/// (f1, f2, f3) of a candidate: latency sum of client + upload + server terms,
/// energy sum of client + upload + download terms, client memory bytes.
ObjectiveVector evaluate(const ProblemInstance& instance, const SplitCandidate& candidate);

struct FeasibilityReport {
    bool ok = false;
    std::vector<int> violations; // 1-based constraint indices

    explicit operator bool() const { return ok; }
};

/// Checks all six constraints and reports the violated indices:
///   1  client memory within the cap
///   2  l1 + l2 equals the layer count
///   3  1 <= l1 <= L
///   4  1 <= l2 <= L
///   5  upload throughput within bandwidth
///   6  download throughput within bandwidth
/// Constraint 1 assesses the prefix clamped to [0, L] so any integers are
/// accepted; 5 and 6 are also enforced at instance construction and are
/// re-reported here for completeness.
FeasibilityReport check_feasible(const ProblemInstance& instance, const SplitCandidate& candidate);

} // namespace splitplan
