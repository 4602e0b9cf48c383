#include <cmath>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "eub/errors.hpp"
#include "eub/majorization.hpp"
#include "eub/omega.hpp"
#include "eub/scenarios.hpp"
#include "eub/sweep.hpp"
#include "eub/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitConfigError = 2;
constexpr int kExitBudget = 3;

eub::ScenarioConfig load_config(const std::string& path, const std::string& log_base,
                                std::uint64_t budget, std::uint64_t seed, bool seed_set) {
    eub::ScenarioConfig cfg = eub::ScenarioConfig::from_json_file(path);
    if (!log_base.empty()) {
        if (log_base == "e")
            cfg.log_base = std::exp(1.0);
        else if (log_base == "2")
            cfg.log_base = 2.0;
        else
            throw eub::ConfigError("--log-base must be 2 or e");
    }
    if (budget != 0) cfg.budget = budget;
    if (seed_set) {
        cfg.seed = seed;
        cfg.state_seed = seed;
    }
    return cfg;
}

void write_table(const eub::Table& table, const std::string& output) {
    if (output.empty() || output == "-") {
        eub::emit_csv(table, std::cout);
        return;
    }
    eub::emit_csv_file(table, output);
    if (output.size() > 4 && output.substr(output.size() - 4) == ".csv") {
        const std::string svg = output.substr(0, output.size() - 4) + ".svg";
        eub::emit_svg_file(table, svg, "bound value");
    }
}

void print_vector(const char* name, const std::vector<double>& v, double base) {
    std::cout << name << " = (";
    for (std::size_t i = 0; i < v.size(); ++i) std::cout << (i ? ", " : "") << v[i];
    std::cout << ")\n" << name << " Shannon entropy = " << eub::shannon_entropy(v, base) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Entropic uncertainty bound calculator for multiple projective measurements"};
    app.require_subcommand(1);

    std::string config_path, output, log_base;
    std::uint64_t budget = 0, seed = 0;
    bool seed_set = false;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "JSON scenario config")->required();
        sub->add_option("--output", output, "output path (csv; - for stdout)");
        sub->add_option("--log-base", log_base, "2 or e (overrides config)");
        sub->add_option("--budget", budget, "enumeration budget (overrides config)");
        sub->add_option("--seed", seed, "seed override")->each([&](const std::string&) {
            seed_set = true;
        });
    };

    CLI::App* compare = app.add_subcommand("compare", "compute bound columns over a scenario");
    add_common(compare);

    CLI::App* omega_cmd = app.add_subcommand("omega", "print omega, omega_hat, omega_0");
    add_common(omega_cmd);

    CLI::App* verify = app.add_subcommand("verify", "run the cross-module property suite");
    std::uint64_t verify_seed = 42;
    verify->add_option("--seed", verify_seed, "suite seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (compare->parsed()) {
            const auto cfg = load_config(config_path, log_base, budget, seed, seed_set);
            const auto table = eub::run_compare(cfg);
            write_table(table, output.empty() ? cfg.output : output);
            return kExitOk;
        }
        if (omega_cmd->parsed()) {
            const auto cfg = load_config(config_path, log_base, budget, seed, seed_set);
            std::vector<std::pair<std::string, std::vector<eub::MeasurementBasis>>> basis_sets;
            if (cfg.source == eub::ScenarioSource::explicit_bases) {
                basis_sets.emplace_back("explicit bases", cfg.bases);
            } else if (cfg.source == eub::ScenarioSource::paper_family) {
                for (double a : cfg.a_grid)
                    basis_sets.emplace_back("a = " + std::to_string(a),
                                            eub::paper_three_measurements(a, cfg.phi));
            } else {
                std::vector<eub::MeasurementBasis> bs;
                for (std::size_t m = 0; m < cfg.n_meas; ++m)
                    bs.push_back(eub::random_basis(cfg.dim, cfg.seed + m));
                basis_sets.emplace_back("random bases, seed " + std::to_string(cfg.seed),
                                        std::move(bs));
            }
            for (const auto& [label, bases] : basis_sets) {
                std::cout << "== " << label << " ==\n";
                const auto om = eub::compute_omega(bases, cfg.budget);
                const auto omh = eub::compute_omega_hat(bases, cfg.budget);
                const auto om0 = eub::omega_simple(bases, cfg.budget);
                print_vector("omega", om.omega.values(), cfg.log_base);
                print_vector("omega_hat", omh.omega.values(), cfg.log_base);
                print_vector("omega_0", om0.values(), cfg.log_base);
            }
            return kExitOk;
        }
        if (verify->parsed()) {
            const auto result = eub::run_verify(verify_seed);
            for (const auto& item : result.items) {
                std::cout << (item.pass ? "[PASS] " : (item.advisory ? "[INFO] " : "[FAIL] "))
                          << item.name;
                if (!item.detail.empty()) std::cout << " - " << item.detail;
                std::cout << "\n";
            }
            return result.all_pass() ? kExitOk : kExitVerifyFail;
        }
    } catch (const eub::BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const eub::WorkBudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const eub::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfigError;
    }
    return kExitOk;
}
