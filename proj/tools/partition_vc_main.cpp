// partition-vc: command-line front end for partition VC analysis, range
// mechanisms, lemma-verification suites and experiment sweeps.
//
// Exit codes: 0 pass, 1 assertion failure, 2 input/config error, 3 budget.

#include <cstdint>
#include <fstream>
#include <memory>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pvc/alpha.hpp"
#include "pvc/auction.hpp"
#include "pvc/budget.hpp"
#include "pvc/enumerate.hpp"
#include "pvc/json_io.hpp"
#include "pvc/shatter.hpp"
#include "pvc/suites.hpp"
#include "pvc/sweeps.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitAssertFailed = 1;
constexpr int kExitInputError = 2;
constexpr int kExitBudget = 3;

// Run configuration as one JSON document: top-level keys are subcommand
// names, nested keys are long option names, e.g.
//   {"sweep": {"kind": "ratio", "m-min": 2, "m-max": 6}}
// Explicit command-line flags override config values.
class JsonConfig : public CLI::Config {
  public:
    std::string to_config(const CLI::App* app, bool, bool, std::string) const override {
        (void)app;
        return "{}\n";
    }

    std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
        nlohmann::json doc;
        try {
            input >> doc;
        } catch (const nlohmann::json::exception& e) {
            throw CLI::FileError(std::string("config is not valid JSON: ") + e.what());
        }
        if (!doc.is_object()) throw CLI::FileError("config must be a JSON object");
        std::vector<CLI::ConfigItem> out;
        walk(doc, {}, out);
        return out;
    }

  private:
    static void walk(const nlohmann::json& node, std::vector<std::string> parents,
                     std::vector<CLI::ConfigItem>& out) {
        for (const auto& [key, value] : node.items()) {
            if (value.is_object()) {
                auto deeper = parents;
                deeper.push_back(key);
                walk(value, deeper, out);
                continue;
            }
            CLI::ConfigItem item;
            item.parents = parents;
            item.name = key;
            if (value.is_array()) {
                for (const auto& v : value) item.inputs.push_back(scalar(v));
            } else {
                item.inputs.push_back(scalar(value));
            }
            out.push_back(std::move(item));
        }
    }

    static std::string scalar(const nlohmann::json& v) {
        return v.is_string() ? v.get<std::string>() : v.dump();
    }
};

pvc::Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return pvc::Rational(std::stoll(text));
        }
        const std::int64_t num = std::stoll(text.substr(0, slash));
        const std::int64_t den = std::stoll(text.substr(slash + 1));
        if (den == 0) throw pvc::ParseError("zero denominator in \"" + text + "\"");
        return pvc::Rational(num, den);
    } catch (const std::logic_error&) {
        throw pvc::ParseError("expected a rational like 1/5, got \"" + text + "\"");
    }
}

std::vector<int> m_grid(int m_min, int m_max) {
    if (m_min < 1 || m_max < m_min) {
        throw pvc::ParseError("need 1 <= m-min <= m-max");
    }
    std::vector<int> out;
    for (int m = m_min; m <= m_max; ++m) out.push_back(m);
    return out;
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw pvc::ParseError("cannot write " + path);
    out << text;
}

struct BudgetFlags {
    int pow3 = 0;
    int pow2 = 0;
    int subset = 0;

    pvc::Budget resolve() const {
        pvc::Budget b = pvc::Budget::from_env();
        if (pow3 > 0) b.max_pow3_m = pow3;
        if (pow2 > 0) b.max_pow2_m = pow2;
        if (subset > 0) b.max_subset_size = subset;
        return b;
    }

    void attach(CLI::App* cmd) {
        cmd->add_option("--max-pow3-m", pow3, "Budget: largest m for 3^m enumerations");
        cmd->add_option("--max-pow2-m", pow2, "Budget: largest m for 2^m enumerations");
        cmd->add_option("--max-subset-size", subset,
                        "Budget: largest set size for shattering checks");
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"partition VC analysis and range-mechanism toolkit"};
    app.require_subcommand(1);
    app.config_formatter(std::make_shared<JsonConfig>());
    app.set_config("--config", "", "JSON run-configuration file");
    app.allow_config_extras(CLI::config_extras_mode::error);
    app.fallthrough();

    // vc
    auto* vc_cmd = app.add_subcommand("vc", "VC dimension of a partition family")->configurable();
    std::string vc_family;
    BudgetFlags vc_budget;
    vc_cmd->add_option("--family", vc_family, "Partition family JSON file")->required();
    vc_budget.attach(vc_cmd);

    // alpha
    auto* alpha_cmd = app.add_subcommand("alpha", "Approximation level of a family")->configurable();
    std::string alpha_family;
    std::string alpha_mode = "exact";
    std::uint64_t alpha_samples = 1000;
    std::uint64_t alpha_seed = 0;
    bool alpha_seed_set = false;
    BudgetFlags alpha_budget;
    alpha_cmd->add_option("--family", alpha_family, "Partition family JSON file")
        ->required();
    alpha_cmd->add_option("--mode", alpha_mode, "exact | sampled")
        ->check(CLI::IsMember({"exact", "sampled"}));
    alpha_cmd->add_option("--samples", alpha_samples, "Sample count (sampled mode)");
    alpha_cmd->add_option("--seed", alpha_seed, "Seed (required in sampled mode)")
        ->each([&](const std::string&) { alpha_seed_set = true; });
    alpha_budget.attach(alpha_cmd);

    // mechanism
    auto* mech_cmd = app.add_subcommand("mechanism", "Run a range mechanism")->configurable();
    std::string mech_instance;
    std::string mech_range;
    bool mech_bundle = false;
    bool mech_full = false;
    bool mech_allocate_all = false;
    BudgetFlags mech_budget;
    mech_cmd->add_option("--instance", mech_instance, "Auction instance JSON file")
        ->required();
    mech_cmd->add_option("--range", mech_range, "Range JSON file (partition family)");
    mech_cmd->add_flag("--bundle", mech_bundle, "Use the two-entry bundle range");
    mech_cmd->add_flag("--full-covering", mech_full, "Use all covering partitions");
    mech_cmd->add_flag("--allocate-all", mech_allocate_all,
                       "Require every range entry to cover the universe");
    mech_budget.attach(mech_cmd);

    // verify-lemmas
    auto* verify_cmd = app.add_subcommand("verify-lemmas", "Run a verification suite")->configurable();
    std::string suite;
    std::uint64_t verify_seed = 1;
    std::string witness_path = "failure_witness.json";
    BudgetFlags verify_budget;
    verify_cmd->add_option("--suite", suite, "Suite name or \"all\"")->required();
    verify_cmd->add_option("--seed", verify_seed, "Master seed");
    verify_cmd->add_option("--witness-out", witness_path,
                           "Where to write a replay witness on failure");
    verify_budget.attach(verify_cmd);

    // sweep
    auto* sweep_cmd = app.add_subcommand("sweep", "Grid experiment emitting CSV")->configurable();
    std::string kind;
    int sweep_m_min = 4, sweep_m_max = 4;
    std::string sweep_delta = "1/5";
    std::string sweep_epsilon = "1/8";
    std::size_t sweep_trials = 3;
    std::size_t sweep_families = 20;
    std::uint64_t sweep_samples = 1000;
    std::uint64_t sweep_attempts = 100000;
    std::uint64_t sweep_seed = 1;
    std::vector<std::uint64_t> sweep_seeds;
    std::string sweep_out = "-";
    BudgetFlags sweep_budget;
    sweep_cmd
        ->add_option("--kind", kind, "ratio | code-growth | alpha-vs-vc | covering-size")
        ->required()
        ->check(CLI::IsMember({"ratio", "code-growth", "alpha-vs-vc", "covering-size"}));
    sweep_cmd->add_option("--m-min", sweep_m_min, "Smallest universe size");
    sweep_cmd->add_option("--m-max", sweep_m_max, "Largest universe size");
    sweep_cmd->add_option("--delta", sweep_delta, "Distance parameter (code-growth)");
    sweep_cmd->add_option("--epsilon", sweep_epsilon,
                          "Approximation margin (covering-size)");
    sweep_cmd->add_option("--trials", sweep_trials, "Trials per grid point");
    sweep_cmd->add_option("--families", sweep_families, "Families per m (alpha-vs-vc)");
    sweep_cmd->add_option("--samples", sweep_samples, "Alpha samples for large m");
    sweep_cmd->add_option("--attempts", sweep_attempts, "Sampling attempts (code-growth)");
    sweep_cmd->add_option("--seed", sweep_seed, "Master seed");
    sweep_cmd->add_option("--seeds", sweep_seeds, "Explicit seed list (code-growth)");
    sweep_cmd->add_option("--out", sweep_out, "Output CSV path (default stdout)");
    sweep_budget.attach(sweep_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitPass : kExitInputError;
    }

    try {
        if (vc_cmd->parsed()) {
            const pvc::PartitionFamily family =
                pvc::family_from_json(pvc::load_json_file(vc_family));
            const pvc::VcReport rep = pvc::vc_dimension(family, vc_budget.resolve());
            std::cout << pvc::to_json(rep).dump(2) << "\n";
            return kExitPass;
        }

        if (alpha_cmd->parsed()) {
            const pvc::PartitionFamily family =
                pvc::family_from_json(pvc::load_json_file(alpha_family));
            const bool sampled = alpha_mode == "sampled";
            if (sampled && !alpha_seed_set) {
                throw pvc::ParseError("sampled mode requires --seed");
            }
            const pvc::AlphaReport rep = pvc::alpha_of(
                family, sampled ? pvc::AlphaMode::Sampled : pvc::AlphaMode::Exact,
                alpha_samples, alpha_seed, alpha_budget.resolve());
            std::cout << pvc::to_json(rep).dump(2) << "\n";
            return kExitPass;
        }

        if (mech_cmd->parsed()) {
            const int sources = (mech_range.empty() ? 0 : 1) + (mech_bundle ? 1 : 0) +
                                (mech_full ? 1 : 0);
            if (sources != 1) {
                throw pvc::ParseError(
                    "pick exactly one of --range, --bundle, --full-covering");
            }
            const pvc::AuctionInstance inst =
                pvc::instance_from_json(pvc::load_json_file(mech_instance));
            const pvc::Budget budget = mech_budget.resolve();
            pvc::PartitionFamily range(inst.universe);
            if (mech_bundle) {
                range = pvc::bundle_range(inst.universe);
            } else if (mech_full) {
                range = pvc::full_covering_family(inst.universe, budget);
            } else {
                range = pvc::family_from_json(pvc::load_json_file(mech_range));
            }
            const pvc::MirMechanism mech(range, mech_allocate_all || mech_bundle || mech_full);
            const pvc::Outcome outcome = pvc::mir_allocate(mech, inst);
            std::cout << pvc::to_json(outcome).dump(2) << "\n";
            return kExitPass;
        }

        if (verify_cmd->parsed()) {
            const pvc::SuiteOutcome outcome =
                pvc::run_suite(suite, verify_seed, verify_budget.resolve());
            for (const pvc::ResultRecord& r : outcome.records) {
                std::cout << pvc::to_json(r).dump() << "\n";
            }
            if (!outcome.all_pass) {
                write_text(witness_path, outcome.failure_witness.dump(2) + "\n");
                std::cerr << "suite failed; witness written to " << witness_path << "\n";
                return kExitAssertFailed;
            }
            return kExitPass;
        }

        if (sweep_cmd->parsed()) {
            const pvc::Budget budget = sweep_budget.resolve();
            const std::vector<int> ms = m_grid(sweep_m_min, sweep_m_max);
            std::string csv;
            if (kind == "ratio") {
                csv = pvc::sweep_ratio(ms, budget);
            } else if (kind == "code-growth") {
                if (sweep_seeds.empty()) {
                    for (std::size_t i = 0; i < sweep_trials; ++i) {
                        sweep_seeds.push_back(sweep_seed + i);
                    }
                }
                csv = pvc::sweep_code_growth(ms, parse_rational(sweep_delta), sweep_seeds,
                                             sweep_attempts, budget);
            } else if (kind == "alpha-vs-vc") {
                csv = pvc::sweep_alpha_vs_vc(ms, sweep_families, sweep_samples, sweep_seed,
                                             budget);
            } else {
                csv = pvc::sweep_covering_size(ms, parse_rational(sweep_epsilon),
                                               sweep_trials, sweep_seed, budget);
            }
            write_text(sweep_out, csv);
            return kExitPass;
        }
    } catch (const pvc::BudgetExceededError& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const pvc::AssertionFailedError& e) {
        std::cerr << "assertion failed: " << e.what() << "\n";
        return kExitAssertFailed;
    } catch (const pvc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
