#pragma once

#include <iomanip>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "pcode/codes.hpp"
#include "pcode/ffield.hpp"
#include "pcode/graphs.hpp"

namespace pcode {

inline constexpr const char* kReportSchema = "pcode-report/1";

/// One executed decision route inside a report.
struct CheckResult {
    std::string name;
    Verdict verdict;
    std::int64_t elapsed_ms = 0;
};

/// Machine-readable run report. JSON output is byte-stable for fixed inputs:
/// field order is fixed and wall-clock timings are only emitted when
/// explicitly requested.
struct RunReport {
    std::string command;
    nlohmann::ordered_json instance;
    std::vector<CheckResult> checks;
    std::vector<std::string> notes;
    bool disagreement = false;

    void add_check(std::string name, Verdict verdict, std::int64_t elapsed_ms = 0) {
        checks.push_back({std::move(name), std::move(verdict), elapsed_ms});
    }

    /// Cross-check matrix: every pair of executed routes must agree on
    /// positivity unless one of them is Unknown.
    void compute_disagreement() {
        disagreement = false;
        for (const auto& a : checks)
            for (const auto& b : checks) {
                if (a.verdict.status == Status::Unknown || b.verdict.status == Status::Unknown)
                    continue;
                if (a.verdict.positive() != b.verdict.positive()) disagreement = true;
            }
    }
};

inline nlohmann::ordered_json witness_json(const std::vector<Permutation>& witness) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& p : witness) arr.push_back(p.to_cycle_string());
    return arr;
}

inline nlohmann::ordered_json verdict_json(const Verdict& v, bool include_timing,
                                           std::int64_t elapsed_ms) {
    nlohmann::ordered_json j;
    j["status"] = status_name(v.status);
    j["theorem_path"] = v.reason;
    j["witness"] = witness_json(v.witness);
    if (v.violating)
        j["violating_element"] = v.violating->to_cycle_string();
    else
        j["violating_element"] = nullptr;
    j["certificates"] = v.certificates;
    j["search_nodes"] = v.search_nodes;
    if (include_timing) j["elapsed_ms"] = elapsed_ms;
    return j;
}

inline nlohmann::ordered_json group_fingerprint(const PermGroup& g, std::size_t max_generators = 8) {
    nlohmann::ordered_json j;
    j["degree"] = g.degree();
    j["order"] = g.order();
    nlohmann::ordered_json gens = nlohmann::ordered_json::array();
    std::vector<Permutation> list = g.generators().empty() && g.order() <= 4096
                                        ? g.small_generating_set()
                                        : g.generators();
    for (std::size_t i = 0; i < list.size() && i < max_generators; ++i)
        gens.push_back(list[i].to_cycle_string());
    j["generators"] = gens;
    return j;
}

inline nlohmann::ordered_json instance_fingerprint(const PairInstance& inst) {
    nlohmann::ordered_json j;
    j["G"] = group_fingerprint(inst.G);
    j["A"] = group_fingerprint(inst.A);
    j["H"] = group_fingerprint(inst.H);
    j["index_G_A"] = inst.cosets_A_in_G.coset_count();
    j["index_G_H"] = inst.cosets_H_in_G.coset_count();
    return j;
}

inline nlohmann::ordered_json field_fingerprint(const FieldSpec& f) {
    nlohmann::ordered_json j;
    j["p"] = f.p();
    j["f"] = f.f();
    j["q"] = f.q();
    j["modulus_low_to_high"] = f.modulus();
    j["omega"] = f.omega().to_string();
    return j;
}

inline nlohmann::ordered_json report_json(const RunReport& report, bool include_timings) {
    nlohmann::ordered_json j;
    j["schema"] = kReportSchema;
    j["command"] = report.command;
    j["instance"] = report.instance;
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto& c : report.checks) {
        nlohmann::ordered_json entry;
        entry["name"] = c.name;
        entry["verdict"] = verdict_json(c.verdict, include_timings, c.elapsed_ms);
        checks.push_back(std::move(entry));
    }
    j["checks"] = checks;
    j["cross_check_disagreement"] = report.disagreement;
    j["notes"] = report.notes;
    return j;
}

inline void print_report_table(std::ostream& out, const RunReport& report) {
    out << "command: " << report.command << "\n";
    if (!report.instance.is_null()) {
        for (const char* key : {"G", "A", "H"}) {
            if (report.instance.contains(key))
                out << "  " << key << ": order " << report.instance[key]["order"] << "\n";
        }
    }
    out << std::left << std::setw(44) << "check" << std::setw(16) << "status"
        << std::setw(12) << "nodes" << "ms\n";
    for (const auto& c : report.checks) {
        out << std::left << std::setw(44) << c.name << std::setw(16)
            << status_name(c.verdict.status) << std::setw(12) << c.verdict.search_nodes
            << c.elapsed_ms << "\n";
        if (!c.verdict.witness.empty() && c.verdict.witness.size() <= 24) {
            out << "    witness:";
            for (const auto& w : c.verdict.witness) out << ' ' << w.to_cycle_string();
            out << "\n";
        }
        if (c.verdict.violating)
            out << "    violating: " << c.verdict.violating->to_cycle_string() << "\n";
        for (const auto& cert : c.verdict.certificates) out << "    - " << cert << "\n";
    }
    for (const auto& note : report.notes) out << "note: " << note << "\n";
    if (report.disagreement) out << "CROSS-CHECK DISAGREEMENT\n";
}

} // namespace pcode
