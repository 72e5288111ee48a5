#include "banach/serialize.hpp"

#include "banach/rational.hpp"

namespace banach {

ordered_json to_json(const MatchboxDistribution& dist) {
    ordered_json probs = ordered_json::array();
    for (const Rational& p : dist.probs) probs.push_back(p.to_string());
    return ordered_json{{"n", dist.n}, {"probs", std::move(probs)}};
}

ordered_json to_json(const IdentityCheck& check) {
    return ordered_json{{"n", check.n},
                        {"lhs", check.lhs.to_string()},
                        {"rhs", check.rhs.to_string()},
                        {"holds", check.holds}};
}

ordered_json to_json(const CongruenceReport& report) {
    return ordered_json{{"p", report.p},
                        {"k", report.k},
                        {"terms", report.term_count},
                        {"residue", report.residue},
                        {"method", report.method},
                        {"passed", report.passed}};
}

ordered_json to_json(const SweepReport& report) {
    return ordered_json{{"p_min", report.p_min},
                        {"p_max", report.p_max},
                        {"primes_checked", report.primes_checked},
                        {"pairs_checked", report.pairs_checked},
                        {"failures", report.failures.size()},
                        {"worker_count", report.worker_count}};
}

ordered_json to_json(const ChainReport& report) {
    return ordered_json{{"p", report.p},
                        {"k", report.k},
                        {"direct", report.lhs_direct},
                        {"leibniz", report.lhs_leibniz},
                        {"I1", report.identities.i1},
                        {"I2", report.identities.i2},
                        {"I3", report.identities.i3},
                        {"I4", report.identities.i4}};
}

ordered_json to_json(const SimulationResult& result) {
    return ordered_json{{"n", result.n},
                        {"trials", result.trials},
                        {"seed", result.seed},
                        {"counts", result.counts},
                        {"tv", result.tv_distance},
                        {"chi2", result.chi_square}};
}

MatchboxDistribution distribution_from_json(const ordered_json& j) {
    MatchboxDistribution dist;
    dist.n = j.at("n").get<uint32_t>();
    for (const auto& entry : j.at("probs")) {
        dist.probs.push_back(Rational::from_string(entry.get<std::string>()));
    }
    return dist;
}

IdentityCheck identity_check_from_json(const ordered_json& j) {
    IdentityCheck check;
    check.n = j.at("n").get<uint32_t>();
    check.lhs = Rational::from_string(j.at("lhs").get<std::string>());
    check.rhs = Rational::from_string(j.at("rhs").get<std::string>());
    check.holds = j.at("holds").get<bool>();
    return check;
}

CongruenceReport congruence_report_from_json(const ordered_json& j) {
    CongruenceReport report;
    report.p = j.at("p").get<uint32_t>();
    report.k = j.at("k").get<uint32_t>();
    report.term_count = j.at("terms").get<uint32_t>();
    report.residue = j.at("residue").get<uint32_t>();
    report.method = j.at("method").get<std::string>();
    report.passed = j.at("passed").get<bool>();
    return report;
}

ChainReport chain_report_from_json(const ordered_json& j) {
    ChainReport report;
    report.p = j.at("p").get<uint32_t>();
    report.k = j.at("k").get<uint32_t>();
    report.lhs_direct = j.at("direct").get<uint32_t>();
    report.lhs_leibniz = j.at("leibniz").get<uint32_t>();
    report.identities.i1 = j.at("I1").get<bool>();
    report.identities.i2 = j.at("I2").get<bool>();
    report.identities.i3 = j.at("I3").get<bool>();
    report.identities.i4 = j.at("I4").get<bool>();
    return report;
}

SimulationResult simulation_result_from_json(const ordered_json& j) {
    SimulationResult result;
    result.n = j.at("n").get<uint32_t>();
    result.trials = j.at("trials").get<uint64_t>();
    result.seed = j.at("seed").get<uint64_t>();
    result.counts = j.at("counts").get<std::vector<uint64_t>>();
    result.tv_distance = j.at("tv").get<double>();
    result.chi_square = j.at("chi2").get<double>();
    return result;
}

std::vector<std::string> csv_rows(const MatchboxDistribution& dist) {
    std::vector<std::string> rows;
    rows.reserve(dist.probs.size());
    for (size_t r = 0; r < dist.probs.size(); ++r) {
        rows.push_back(std::to_string(r) + "," + dist.probs[r].num().to_string() +
                       "," + dist.probs[r].den().to_string());
    }
    return rows;
}

std::string csv_row(const CongruenceReport& report) {
    return std::to_string(report.p) + "," + std::to_string(report.k) + "," +
           std::to_string(report.term_count) + "," + std::to_string(report.residue) +
           "," + report.method + "," + (report.passed ? "true" : "false");
}

std::string csv_summary_row(const SweepReport& report) {
    return std::to_string(report.p_min) + "," + std::to_string(report.p_max) + "," +
           std::to_string(report.primes_checked) + "," +
           std::to_string(report.pairs_checked) + "," +
           std::to_string(report.failures.size()) + "," +
           std::to_string(report.worker_count);
}

}  // namespace banach
