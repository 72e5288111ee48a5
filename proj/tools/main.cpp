#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "banach/congruence.hpp"
#include "banach/matchbox.hpp"
#include "banach/modarith.hpp"
#include "banach/proofreplay.hpp"
#include "banach/serialize.hpp"
#include "banach/simulate.hpp"

namespace {

using banach::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

void emit(std::ostream& out, const ordered_json& j) { out << j.dump() << "\n"; }

// Exit kExitUsage unless p is prime, naming the smallest factor.
void require_prime(uint32_t p) {
    if (p < 3 || p % 2 == 0) {
        throw std::invalid_argument("p must be an odd prime >= 3, got " +
                                    std::to_string(p));
    }
    const uint32_t f = banach::smallest_factor(p);
    if (f != p) {
        throw std::invalid_argument(std::to_string(p) + " = " + std::to_string(f) +
                                    " * " + std::to_string(p / f) + " is not prime");
    }
}

bool cmd_dist(std::ostream& out, uint32_t n, const std::string& format) {
    const banach::MatchboxDistribution dist = banach::distribution(n);
    if (format == "csv") {
        for (const std::string& row : banach::csv_rows(dist)) out << row << "\n";
    } else {
        emit(out, banach::to_json(dist));
    }
    return true;
}

bool cmd_identity(std::ostream& out, uint32_t max_n) {
    bool ok = true;
    for (uint32_t n = 0; n <= max_n; ++n) {
        const banach::IdentityCheck check = banach::check_identity(n);
        ok = ok && check.holds;
        emit(out, banach::to_json(check));
    }
    return ok;
}

bool cmd_congruence(std::ostream& out, uint32_t p, std::optional<uint32_t> k,
                    const std::string& format) {
    require_prime(p);
    std::vector<banach::CongruenceReport> reports;
    if (k) {
        const banach::ModContext ctx = banach::make_context(p);
        banach::CongruenceReport r;
        r.p = p;
        r.k = *k;
        r.residue = banach::sum_kernel_incremental(ctx, *k);
        r.term_count = p - 2 * *k - 1;
        r.method = "incremental-kernel";
        r.passed = (r.residue == 0);
        reports.push_back(std::move(r));
    } else {
        reports = banach::verify_prime(p);
    }
    bool ok = true;
    for (const banach::CongruenceReport& r : reports) {
        ok = ok && r.passed;
        if (format == "csv") {
            out << banach::csv_row(r) << "\n";
        } else {
            emit(out, banach::to_json(r));
        }
    }
    return ok;
}

bool cmd_sweep(std::ostream& out, uint32_t p_min, uint32_t p_max, uint32_t workers,
               const std::string& format) {
    const banach::SweepReport report = banach::sweep(p_min, p_max, workers);
    for (const banach::CongruenceReport& r : report.failures) {
        if (format == "csv") {
            out << banach::csv_row(r) << "\n";
        } else {
            emit(out, banach::to_json(r));
        }
    }
    if (format == "csv") {
        out << banach::csv_summary_row(report) << "\n";
    } else {
        emit(out, banach::to_json(report));
    }
    return report.failures.empty();
}

bool cmd_composites(std::ostream& out, uint32_t n_max, const std::string& format) {
    // Informational scan: residues are reported, nothing is asserted.
    for (const banach::CongruenceReport& r : banach::composite_scan(n_max)) {
        if (format == "csv") {
            out << banach::csv_row(r) << "\n";
        } else {
            emit(out, banach::to_json(r));
        }
    }
    return true;
}

bool cmd_replay(std::ostream& out, uint32_t p, std::optional<uint32_t> k) {
    require_prime(p);
    const uint32_t k_lo = k ? *k : 1;
    const uint32_t k_hi = k ? *k : (p - 1) / 2;
    bool ok = true;
    for (uint32_t kk = k_lo; kk <= k_hi; ++kk) {
        const banach::ChainReport report = banach::chain_check(p, kk);
        ok = ok && report.identities.all() &&
             report.lhs_direct == report.lhs_leibniz;
        emit(out, banach::to_json(report));
    }
    return ok;
}

bool cmd_simulate(std::ostream& out, uint32_t n, uint64_t trials, uint64_t seed) {
    emit(out, banach::to_json(banach::run(n, trials, seed)));
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact, modular, and simulated checks for the matchbox distribution "
                 "and its prime congruence"};
    app.require_subcommand(1);

    std::string format = "json";
    std::string out_path;
    const auto add_io = [&](CLI::App* cmd, bool csv_allowed) {
        if (csv_allowed) {
            cmd->add_option("--format", format, "output format")
                ->check(CLI::IsMember({"json", "csv"}))
                ->capture_default_str();
        } else {
            cmd->add_option("--format", format, "output format")
                ->check(CLI::IsMember({"json"}))
                ->capture_default_str();
        }
        cmd->add_option("--out", out_path, "write data records to this file");
    };

    uint32_t dist_n = 0;
    CLI::App* dist = app.add_subcommand("dist", "exact matchbox distribution for n");
    dist->add_option("--n", dist_n, "matches per box")->required();
    add_io(dist, true);

    uint32_t identity_max = 0;
    CLI::App* identity =
        app.add_subcommand("identity", "check the binomial identity for n = 0..N");
    identity->add_option("--max-n", identity_max, "largest n to check")->required();
    add_io(identity, false);

    uint32_t cong_p = 0;
    uint32_t cong_k = 0;
    CLI::App* congruence =
        app.add_subcommand("congruence", "verify the congruence sum vanishes mod a prime");
    congruence->add_option("--p", cong_p, "odd prime modulus")->required();
    CLI::Option* cong_k_opt =
        congruence->add_option("--k", cong_k, "single k instead of all of 1..(p-1)/2");
    add_io(congruence, true);

    uint32_t sweep_min = 0;
    uint32_t sweep_max = 0;
    uint32_t sweep_workers = 1;
    CLI::App* sweep = app.add_subcommand("sweep", "verify every prime in a range");
    sweep->add_option("--min", sweep_min, "lower bound, at least 3")->required();
    sweep->add_option("--max", sweep_max, "upper bound")->required();
    sweep->add_option("--workers", sweep_workers, "worker threads")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    add_io(sweep, true);

    uint32_t comp_max = 0;
    CLI::App* composites = app.add_subcommand(
        "composites", "report congruence residues for odd composites up to a bound");
    composites->add_option("--max", comp_max, "odd scan bound, at least 9")->required();
    add_io(composites, true);

    uint32_t replay_p = 0;
    uint32_t replay_k = 0;
    CLI::App* replay = app.add_subcommand(
        "replay", "evaluate the derivative sum by both routes and check the identity chain");
    replay->add_option("--p", replay_p, "odd prime modulus")->required();
    CLI::Option* replay_k_opt =
        replay->add_option("--k", replay_k, "single k instead of all of 1..(p-1)/2");
    add_io(replay, false);

    uint32_t sim_n = 0;
    uint64_t sim_trials = 0;
    uint64_t sim_seed = 0;
    CLI::App* simulate =
        app.add_subcommand("simulate", "seeded random trials against the exact distribution");
    simulate->add_option("--n", sim_n, "matches per box")->required();
    simulate->add_option("--trials", sim_trials, "number of trials")->required();
    simulate->add_option("--seed", sim_seed, "generator seed")->required();
    add_io(simulate, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!out_path.empty()) {
        file.open(out_path, std::ios::out | std::ios::trunc);
        if (!file) {
            std::cerr << "error: cannot open " << out_path << " for writing\n";
            return kExitUsage;
        }
        out = &file;
    }

    const auto started = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        if (app.got_subcommand(dist)) {
            ok = cmd_dist(*out, dist_n, format);
        } else if (app.got_subcommand(identity)) {
            ok = cmd_identity(*out, identity_max);
        } else if (app.got_subcommand(congruence)) {
            std::optional<uint32_t> k;
            if (cong_k_opt->count() > 0) k = cong_k;
            ok = cmd_congruence(*out, cong_p, k, format);
        } else if (app.got_subcommand(sweep)) {
            ok = cmd_sweep(*out, sweep_min, sweep_max, sweep_workers, format);
        } else if (app.got_subcommand(composites)) {
            ok = cmd_composites(*out, comp_max, format);
        } else if (app.got_subcommand(replay)) {
            std::optional<uint32_t> k;
            if (replay_k_opt->count() > 0) k = replay_k;
            ok = cmd_replay(*out, replay_p, k);
        } else if (app.got_subcommand(simulate)) {
            ok = cmd_simulate(*out, sim_n, sim_trials, sim_seed);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::logic_error& e) {
        // A violated internal cross-check is a failed verification, not a
        // usage problem; surface it as a data record.
        emit(*out, ordered_json{{"error", e.what()}});
        return kExitCheckFailed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }

    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    std::cerr << "elapsed: " << elapsed << " s\n";
    return ok ? kExitPass : kExitCheckFailed;
}
