#include "splitplan/report.hpp"

#include <charconv>
#include <iomanip>
#include <sstream>

namespace splitplan {

std::string format_double(double value) {
    char buffer[64];
    const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
    return std::string(buffer, result.ptr);
}

namespace {

std::int64_t bytes_of(double f3) { return static_cast<std::int64_t>(f3); }

const char* bool_str(bool v) { return v ? "true" : "false"; }

nlohmann::json objectives_json(const ObjectiveVector& v) {
    return {{"f1_s", v.f1}, {"f2_mJ", v.f2}, {"f3_bytes", bytes_of(v.f3)}};
}

nlohmann::json breakdown_json(const CostBreakdown& b) {
    return {
        {"t_client_s", b.t_client_s},     {"t_upload_s", b.t_upload_s},
        {"t_server_s", b.t_server_s},     {"t_download_s", b.t_download_s},
        {"t_total_s", b.t_total_s},       {"e_client_mJ", b.e_client_mj},
        {"e_upload_mJ", b.e_upload_mj},   {"e_download_mJ", b.e_download_mj},
        {"e_total_mJ", b.e_total_mj},
    };
}

} // namespace

std::string sweep_csv(const std::vector<SweepEntry>& entries, const TrueSelection& selection) {
    std::vector<bool> pareto_mask(entries.size(), false);
    for (const SweepEntry& member : selection.pareto)
        for (std::size_t i = 0; i < entries.size(); ++i)
            if (entries[i].candidate.l1 == member.candidate.l1) pareto_mask[i] = true;

    std::ostringstream out;
    out << "l1,l2,f1_s,f2_mJ,f3_bytes,feasible,pareto,chosen\n";
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const SweepEntry& e = entries[i];
        out << e.candidate.l1 << ',' << e.candidate.l2 << ',' << format_double(e.objectives.f1)
            << ',' << format_double(e.objectives.f2) << ',' << bytes_of(e.objectives.f3) << ','
            << bool_str(e.feasible) << ',' << bool_str(pareto_mask[i]) << ','
            << bool_str(e.candidate.l1 == selection.choice.l1) << '\n';
    }
    return out.str();
}

nlohmann::json sweep_json(const std::vector<SweepEntry>& entries, const TrueSelection& selection) {
    nlohmann::json rows = nlohmann::json::array();
    for (const SweepEntry& e : entries) {
        bool on_front = false;
        for (const SweepEntry& member : selection.pareto)
            if (member.candidate.l1 == e.candidate.l1) on_front = true;
        nlohmann::json row = objectives_json(e.objectives);
        row["l1"] = e.candidate.l1;
        row["l2"] = e.candidate.l2;
        row["feasible"] = e.feasible;
        row["pareto"] = on_front;
        row["chosen"] = e.candidate.l1 == selection.choice.l1;
        rows.push_back(std::move(row));
    }
    return {{"sweep", std::move(rows)}, {"chosen_l1", selection.choice.l1}};
}

nlohmann::json plan_json(const ProblemInstance& instance, const ParetoSet& pareto,
                         const DecisionAnalysis& analysis, const Individual& chosen,
                         const GaConfig& config, Normalization normalization) {
    nlohmann::json pareto_rows = nlohmann::json::array();
    for (std::size_t i = 0; i < pareto.members.size(); ++i) {
        const Individual& member = pareto.members[i];
        nlohmann::json row = objectives_json(member.objectives);
        row["l1"] = member.candidate.l1;
        row["l2"] = member.candidate.l2;
        row["feasible"] = static_cast<bool>(analysis.feasible[i]);
        if (analysis.feasible[i]) row["distance"] = analysis.distance[i];
        pareto_rows.push_back(std::move(row));
    }

    return {
        {"model", instance.model().name()},
        {"total_layers", instance.total_layers()},
        {"chosen_l1", chosen.candidate.l1},
        {"chosen_l2", chosen.candidate.l2},
        {"objectives", objectives_json(chosen.objectives)},
        {"breakdown", breakdown_json(cost_breakdown(instance, chosen.candidate.l1))},
        {"pareto_set", std::move(pareto_rows)},
        {"ga",
         {{"population", config.population_size},
          {"generations", config.generations},
          {"crossover_rate", config.crossover_rate},
          {"mutation_rate", config.mutation_rate},
          {"seed", config.seed}}},
        {"normalization", normalization == Normalization::vector ? "vector" : "minmax"},
        {"memory_cap_bytes", instance.memory_cap_bytes()},
    };
}

std::string plan_table(const nlohmann::json& plan) {
    std::ostringstream out;
    out << "model          " << plan["model"].get<std::string>() << " ("
        << plan["total_layers"].get<int>() << " layers)\n";
    out << "chosen split   l1=" << plan["chosen_l1"].get<int>() << "  l2="
        << plan["chosen_l2"].get<int>() << "\n";
    const auto& obj = plan["objectives"];
    out << std::setprecision(6);
    out << "latency        " << obj["f1_s"].get<double>() << " s\n";
    out << "energy         " << obj["f2_mJ"].get<double>() << " mJ\n";
    out << "client memory  " << obj["f3_bytes"].get<std::int64_t>() << " bytes\n";
    const auto& b = plan["breakdown"];
    out << "breakdown      t_client=" << b["t_client_s"].get<double>()
        << "s t_upload=" << b["t_upload_s"].get<double>()
        << "s t_server=" << b["t_server_s"].get<double>()
        << "s t_download=" << b["t_download_s"].get<double>() << "s\n";
    out << "               e_client=" << b["e_client_mJ"].get<double>()
        << "mJ e_upload=" << b["e_upload_mJ"].get<double>()
        << "mJ e_download=" << b["e_download_mJ"].get<double>() << "mJ\n";
    out << "pareto set     {";
    const auto& rows = plan["pareto_set"];
    for (std::size_t i = 0; i < rows.size(); ++i)
        out << (i ? ", " : "") << rows[i]["l1"].get<int>();
    out << "}\n";
    return out.str();
}

nlohmann::json compare_json(const std::vector<ComparisonRow>& rows) {
    nlohmann::json out = nlohmann::json::array();
    for (const ComparisonRow& row : rows) {
        nlohmann::json entry = objectives_json(row.objectives);
        entry["algorithm"] = row.algorithm;
        entry["l1"] = row.l1;
        entry["within_split_set"] = row.within_split_set;
        out.push_back(std::move(entry));
    }
    return {{"comparison", std::move(out)}};
}

std::string compare_table(const std::vector<ComparisonRow>& rows) {
    std::ostringstream out;
    out << std::left << std::setw(12) << "algorithm" << std::right << std::setw(5) << "l1"
        << std::setw(14) << "f1_s" << std::setw(14) << "f2_mJ" << std::setw(14) << "f3_bytes"
        << "  note\n";
    for (const ComparisonRow& row : rows) {
        out << std::left << std::setw(12) << row.algorithm << std::right << std::setw(5) << row.l1
            << std::setw(14) << std::setprecision(6) << row.objectives.f1 << std::setw(14)
            << row.objectives.f2 << std::setw(14) << bytes_of(row.objectives.f3)
            << (row.within_split_set ? "" : "  outside feasible split set") << '\n';
    }
    return out.str();
}

std::string compare_csv(const std::vector<ComparisonRow>& rows) {
    std::ostringstream out;
    out << "algorithm,l1,f1_s,f2_mJ,f3_bytes,within_split_set\n";
    for (const ComparisonRow& row : rows) {
        out << row.algorithm << ',' << row.l1 << ',' << format_double(row.objectives.f1) << ','
            << format_double(row.objectives.f2) << ',' << bytes_of(row.objectives.f3) << ','
            << bool_str(row.within_split_set) << '\n';
    }
    return out.str();
}

nlohmann::json profile_json(const ModelProfile& model) {
    nlohmann::json layers = nlohmann::json::array();
    for (int i = 0; i < model.total_layers(); ++i) {
        const LayerCost& cost = model.cost(i);
        layers.push_back({
            {"index", i + 1},
            {"kind", std::string(to_string(model.layers()[static_cast<std::size_t>(i)].kind))},
            {"output_shape", model.output_shape(i).dims},
            {"param_count", cost.param_count},
            {"activation_elements", cost.activation_elements},
            {"cumulative_bytes", model.client_memory_bytes(i + 1)},
        });
    }
    return {
        {"name", model.name()},
        {"total_layers", model.total_layers()},
        {"bytes_per_element", model.bytes_per_element()},
        {"input_shape", model.input_shape().dims},
        {"total_bytes", model.total_memory_bytes()},
        {"layers", std::move(layers)},
    };
}

std::string profile_table(const ModelProfile& model) {
    std::ostringstream out;
    out << model.name() << ": " << model.total_layers() << " layers, input "
        << model.input_shape().to_string() << ", " << model.total_memory_bytes()
        << " bytes total\n";
    out << std::right << std::setw(4) << "#" << "  " << std::left << std::setw(18) << "kind"
        << std::setw(18) << "output" << std::right << std::setw(12) << "params" << std::setw(12)
        << "acts" << std::setw(14) << "cum_bytes" << '\n';
    for (int i = 0; i < model.total_layers(); ++i) {
        const LayerCost& cost = model.cost(i);
        out << std::right << std::setw(4) << i + 1 << "  " << std::left << std::setw(18)
            << to_string(model.layers()[static_cast<std::size_t>(i)].kind) << std::setw(18)
            << model.output_shape(i).to_string() << std::right << std::setw(12) << cost.param_count
            << std::setw(12) << cost.activation_elements << std::setw(14)
            << model.client_memory_bytes(i + 1) << '\n';
    }
    return out.str();
}

} // namespace splitplan
