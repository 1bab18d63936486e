// Command-line front end: build realizations, decide joint perfect
// distinguishability, compute exact error probabilities, and run the
// batch verification drivers. All decisions are exact; decimal output is
// display-only.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "gptd/construction.hpp"
#include "gptd/distinguishability.hpp"
#include "gptd/json_io.hpp"
#include "gptd/verifier.hpp"

namespace {

using nlohmann::json;

// CLI positions are 1-based generator indices; the library is 0-based.
std::vector<int> to_zero_based(const std::vector<int>& positions) {
    std::vector<int> out;
    out.reserve(positions.size());
    for (int p : positions) out.push_back(p - 1);
    return out;
}

std::vector<int> default_states(const gptd::StateSpace& space) {
    std::vector<int> out;
    for (int i = 0; i < space.generator_count(); ++i) out.push_back(i);
    return out;
}

int thread_count(bool parallel) {
    if (!parallel) return 1;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 2 : static_cast<int>(hw);
}

void print_verify_line(std::size_t index, const gptd::RealizationReport& report) {
    std::cout << "system " << index << ": " << (report.match ? "match" : "MISMATCH")
              << "  (members " << report.input_system.member_count() << ", build "
              << report.build_ms << " ms, family " << report.family_ms << " ms)\n";
}

int summarize(const std::vector<gptd::RealizationReport>& reports, const std::string& report_path,
              json extra) {
    std::size_t matches = 0;
    for (const auto& r : reports) matches += r.match ? 1 : 0;
    const bool all = matches == reports.size();
    std::cout << matches << "/" << reports.size() << " systems match\n";

    if (!report_path.empty()) {
        json systems = json::array();
        for (const auto& r : reports) systems.push_back(gptd::report_to_json(r));
        json out{{"total", reports.size()}, {"matches", matches}, {"all_match", all},
                 {"systems", systems}};
        out.update(extra);
        gptd::save_json(report_path, out);
    }
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"state-space realization and perfect-distinguishability toolkit"};
    app.require_subcommand(1);

    std::string system_path, space_path, out_path, report_path;
    std::vector<int> subset, states;
    bool show_witness = false, parallel = false;
    int n = 3, count = 100;
    std::uint64_t seed = 42;

    auto* cmd_build = app.add_subcommand("build", "realize an independence system as a state space");
    cmd_build->add_option("--system", system_path, "system JSON")->required();
    cmd_build->add_option("--out", out_path, "output space JSON")->required();

    auto* cmd_jpd = app.add_subcommand(
        "check-jpd", "decide joint perfect distinguishability of listed generators");
    cmd_jpd->add_option("--space", space_path, "space JSON")->required();
    cmd_jpd->add_option("--subset", subset, "1-based generator positions")
        ->required()
        ->delimiter(',');
    cmd_jpd->add_flag("--witness", show_witness, "print a witness measurement when jpd");

    auto* cmd_pe = app.add_subcommand("pe", "minimum symmetric error probability");
    cmd_pe->add_option("--space", space_path, "space JSON")->required();
    cmd_pe->add_option("--subset", subset, "1-based generator positions")
        ->required()
        ->delimiter(',');
    cmd_pe->add_flag("--witness", show_witness, "print an optimal measurement");

    auto* cmd_family = app.add_subcommand("family", "distinguishability family of listed states");
    cmd_family->add_option("--space", space_path, "space JSON")->required();
    cmd_family->add_option("--states", states, "1-based generator positions")
        ->required()
        ->delimiter(',');

    auto* cmd_verify = app.add_subcommand("verify", "realize one system and re-derive it");
    cmd_verify->add_option("--system", system_path, "system JSON")->required();
    cmd_verify->add_option("--report", report_path, "write JSON report");

    auto* cmd_all = app.add_subcommand("verify-all", "verify every system on [n]");
    cmd_all->add_option("--n", n, "ground-set size (<= 4)")->required();
    cmd_all->add_flag("--parallel", parallel, "verify systems across threads");
    cmd_all->add_option("--report", report_path, "write JSON report");

    auto* cmd_random = app.add_subcommand("verify-random", "verify random systems on [n]");
    cmd_random->add_option("--n", n, "ground-set size")->required();
    cmd_random->add_option("--count", count, "number of systems")->capture_default_str();
    cmd_random->add_option("--seed", seed, "RNG seed")->capture_default_str();
    cmd_random->add_flag("--parallel", parallel, "verify systems across threads");
    cmd_random->add_option("--report", report_path, "write JSON report");

    auto* cmd_profile = app.add_subcommand("pe-profile", "error probabilities of all subsets");
    cmd_profile->add_option("--space", space_path, "space JSON")->required();
    cmd_profile->add_option("--states", states, "1-based generator positions (default: all)")
        ->delimiter(',');
    cmd_profile->add_option("--report", report_path, "write JSON report");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cmd_build) {
            const auto system = gptd::load_system(system_path);
            const auto built = gptd::build(system);
            gptd::save_json(out_path, gptd::space_to_json(built.space, &built.epsilon));
            std::cout << "wrote " << out_path << " (" << built.space.generator_count()
                      << " generators, epsilon " << built.epsilon << ")\n";
            return 0;
        }

        if (*cmd_jpd) {
            const auto space = gptd::load_space(space_path);
            const auto result = gptd::is_jpd(space, to_zero_based(subset));
            std::cout << (result.jpd ? "jpd" : "not jpd") << "\n";
            if (result.jpd && show_witness) {
                std::cout << gptd::measurement_to_json(*result.witness).dump(2) << "\n";
            }
            return result.jpd ? 0 : 1;
        }

        if (*cmd_pe) {
            const auto space = gptd::load_space(space_path);
            const auto report = gptd::symmetric_error(space, to_zero_based(subset));
            std::cout << report.value << " (~" << report.value.to_double() << ", average "
                      << report.average() << ")\n";
            if (show_witness) {
                std::cout << gptd::measurement_to_json(report.optimal_measurement).dump(2)
                          << "\n";
            }
            return 0;
        }

        if (*cmd_family) {
            const auto space = gptd::load_space(space_path);
            const auto family = gptd::jpd_family(space, to_zero_based(states));
            std::cout << gptd::system_to_json(family).dump(2) << "\n";
            return 0;
        }

        if (*cmd_verify) {
            const auto system = gptd::load_system(system_path);
            const auto report = gptd::verify_realization(system);
            print_verify_line(0, report);
            if (!report_path.empty()) {
                gptd::save_json(report_path, gptd::report_to_json(report));
            }
            return report.match ? 0 : 1;
        }

        if (*cmd_all) {
            const auto systems = gptd::enumerate_systems(n);
            std::cout << "verifying all " << systems.size() << " systems on [" << n << "]\n";
            const auto reports = gptd::verify_many(systems, thread_count(parallel));
            for (std::size_t i = 0; i < reports.size(); ++i) {
                if (!reports[i].match) print_verify_line(i, reports[i]);
            }
            return summarize(reports, report_path, json{{"n", n}, {"mode", "exhaustive"}});
        }

        if (*cmd_random) {
            std::mt19937_64 rng(seed);
            std::vector<gptd::IndependenceSystem> systems;
            systems.reserve(static_cast<std::size_t>(count));
            for (int i = 0; i < count; ++i) systems.push_back(gptd::random_system(n, rng));
            std::cout << "verifying " << count << " random systems on [" << n << "], seed "
                      << seed << "\n";
            const auto reports = gptd::verify_many(systems, thread_count(parallel));
            for (std::size_t i = 0; i < reports.size(); ++i) {
                if (!reports[i].match) print_verify_line(i, reports[i]);
            }
            return summarize(reports, report_path,
                             json{{"n", n}, {"mode", "random"}, {"seed", seed}});
        }

        if (*cmd_profile) {
            const auto space = gptd::load_space(space_path);
            const auto positions = states.empty() ? default_states(space) : to_zero_based(states);
            const auto profile = gptd::pe_profile(space, positions);
            for (const auto& row : profile.rows) {
                std::cout << row.subset.str() << "  F = " << row.value << " (~"
                          << row.value.to_double() << ")\n";
            }
            std::cout << "monotone: " << (profile.monotone_ok ? "ok" : "VIOLATED")
                      << ", lipschitz: " << (profile.lipschitz_ok ? "ok" : "VIOLATED") << "\n";
            if (!report_path.empty()) {
                gptd::save_json(report_path, gptd::profile_to_json(profile));
            }
            return (profile.monotone_ok && profile.lipschitz_ok) ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
