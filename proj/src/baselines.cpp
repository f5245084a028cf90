#include "splitplan/baselines.hpp"

#include "splitplan/rng.hpp"

namespace splitplan {

std::string_view to_string(BaselineKind kind) {
    switch (kind) {
        case BaselineKind::lbo: return "lbo";
        case BaselineKind::ebo: return "ebo";
        case BaselineKind::cos: return "cos";
        case BaselineKind::coc: return "coc";
        case BaselineKind::rs: return "rs";
    }
    return "unknown";
}

namespace {

BaselineResult from_split(BaselineKind kind, const ProblemInstance& instance, int l1) {
    BaselineResult result;
    result.kind = kind;
    result.l1 = l1;
    result.objectives = evaluate(instance, make_split(l1, instance.total_layers()));
    result.breakdown = cost_breakdown(instance, l1);
    return result;
}

BaselineResult argmin_over_splits(BaselineKind kind, const ProblemInstance& instance,
                                  double ObjectiveVector::* field) {
    BaselineResult best;
    for (int l1 = 1; l1 <= instance.total_layers() - 1; ++l1) {
        BaselineResult candidate = from_split(kind, instance, l1);
        if (l1 == 1 || candidate.objectives.*field < best.objectives.*field) best = candidate;
    }
    return best;
}

BaselineResult all_on_client(const ProblemInstance& instance) {
    const int total = instance.total_layers();
    BaselineResult result;
    result.kind = BaselineKind::cos;
    result.l1 = total;
    result.within_split_set = false;

    CostBreakdown& b = result.breakdown;
    b.t_client_s = client_latency_s(instance, total);
    b.t_total_s = b.t_client_s;
    b.e_client_mj = client_power_mw(instance.client()) * b.t_client_s;
    b.e_total_mj = b.e_client_mj;

    result.objectives.f1 = b.t_total_s;
    result.objectives.f2 = b.e_total_mj;
    result.objectives.f3 = static_cast<double>(instance.model().client_memory_bytes(total));
    return result;
}

BaselineResult all_on_server(const ProblemInstance& instance) {
    const int total = instance.total_layers();
    BaselineResult result;
    result.kind = BaselineKind::coc;
    result.l1 = 0;
    result.within_split_set = false;

    // The raw input tensor goes up in place of an intermediate activation.
    CostBreakdown& b = result.breakdown;
    b.t_upload_s =
        transfer_latency_s(instance, static_cast<double>(instance.model().input_size_bits()));
    b.t_server_s = server_latency_s(instance, total);
    b.t_download_s = download_latency_s(instance);
    b.t_total_s = b.t_upload_s + b.t_server_s;
    b.e_upload_mj = upload_power_mw(instance.network()) * b.t_upload_s;
    b.e_download_mj = download_power_mw(instance.network()) * b.t_download_s;
    b.e_total_mj = b.e_upload_mj + b.e_download_mj;

    result.objectives.f1 = b.t_total_s;
    result.objectives.f2 = b.e_total_mj;
    result.objectives.f3 = 0.0;
    return result;
}

} // namespace

BaselineResult run_baseline(BaselineKind kind, const ProblemInstance& instance, std::uint64_t seed) {
    switch (kind) {
        case BaselineKind::lbo:
            return argmin_over_splits(kind, instance, &ObjectiveVector::f1);
        case BaselineKind::ebo:
            return argmin_over_splits(kind, instance, &ObjectiveVector::f2);
        case BaselineKind::cos:
            return all_on_client(instance);
        case BaselineKind::coc:
            return all_on_server(instance);
        case BaselineKind::rs: {
            Rng rng(seed);
            const int l1 = static_cast<int>(rng.next_int(1, instance.total_layers() - 1));
            return from_split(kind, instance, l1);
        }
    }
    throw ValidationError("unhandled baseline kind");
}

} // namespace splitplan
