#include "reldyn/cli.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

namespace reldyn::cli {
namespace {

using nlohmann::json;

const char* name_of(SpectralClass c) noexcept {
    return c == SpectralClass::MarginallyStable ? "marginally_stable" : "unstable";
}

const char* name_of(BehavioralClass c) noexcept {
    switch (c) {
        case BehavioralClass::Convergent:
            return "convergent";
        case BehavioralClass::PeriodTwoOscillation:
            return "period_two";
        case BehavioralClass::LinearlyDivergent:
            return "linearly_divergent";
        case BehavioralClass::GeometricallyDivergent:
            return "geometrically_divergent";
        case BehavioralClass::GeometricallyAlternating:
            return "geometrically_alternating";
    }
    return "unknown";
}

const char* name_of(Stance s) noexcept {
    switch (s) {
        case Stance::Dominant:
            return "dominant";
        case Stance::Submissive:
            return "submissive";
        case Stance::Neutral:
            return "neutral";
    }
    return "unknown";
}

const char* name_of(ArchetypeCase c) noexcept {
    switch (c) {
        case ArchetypeCase::BothDominant:
            return "both_dominant";
        case ArchetypeCase::BothSubmissive:
            return "both_submissive";
        case ArchetypeCase::ADominantBSubmissive:
            return "a_dominant_b_submissive";
        case ArchetypeCase::BDominantASubmissive:
            return "b_dominant_a_submissive";
        case ArchetypeCase::MixedWithNeutral:
            return "mixed_with_neutral";
    }
    return "unknown";
}

json to_json(const PlayerLimit& limit) {
    switch (limit.kind) {
        case LimitKind::Finite:
            return json(limit.value);
        case LimitKind::PlusInfinity:
            return json("+inf");
        case LimitKind::MinusInfinity:
            return json("-inf");
        case LimitKind::Alternating:
            return json("alt");
    }
    return json();
}

json to_json(const State& s) { return json::array({s.a, s.b}); }

json to_json(const Fate& fate) {
    json j;
    j["a_limit"] = to_json(fate.a_limit);
    j["b_limit"] = to_json(fate.b_limit);
    j["period"] = fate.period;
    j["orbit"] = fate.orbit_points ? json::array({to_json(fate.orbit_points->first),
                                                  to_json(fate.orbit_points->second)})
                                   : json();
    return j;
}

int write_payload(const std::optional<std::string>& path, const std::string& payload) {
    if (!path) {
        std::cout << payload;
        return kExitOk;
    }
    std::ofstream file(*path, std::ios::binary | std::ios::trunc);
    if (!file) {
        std::cerr << "error: cannot open " << *path << " for writing\n";
        return kExitIoError;
    }
    file << payload;
    file.flush();
    if (!file) {
        std::cerr << "error: failed while writing " << *path << '\n';
        return kExitIoError;
    }
    return kExitOk;
}

}  // namespace

std::string format_double(double value) {
    char buffer[32];
    const auto result = std::to_chars(buffer, buffer + sizeof buffer, value);
    return std::string(buffer, result.ptr);
}

std::string report_json(const ClassificationReport& report) {
    json j;
    j["params"] = json{{"alpha", report.params.alpha},
                       {"beta", report.params.beta},
                       {"gamma", report.params.gamma}};
    j["lambda2"] = report.lambda2;
    j["spectral_class"] = name_of(report.spectral);
    j["behavioral_class"] = name_of(report.behavioral);
    j["archetype"] = json{{"stance_a", name_of(report.archetype.stance_a)},
                          {"stance_b", name_of(report.archetype.stance_b)},
                          {"case", name_of(report.archetype.case_label)}};
    j["fate"] = report.fate ? to_json(*report.fate) : json();
    j["equilibrium"] = report.equilibrium ? to_json(*report.equilibrium) : json();
    return j.dump();
}

std::string predicted_state_json(std::uint64_t t, const State& s) {
    return json{{"t", t}, {"a", s.a}, {"b", s.b}}.dump();
}

std::string comparison_json(const PowerComparison& comparison) {
    return json{{"at_t", comparison.at_t}, {"max_abs_entry_diff", comparison.max_abs_entry_diff}}
        .dump();
}

std::string trajectory_csv(const Trajectory& trajectory) {
    std::string out = "t,a,b,power\n";
    for (std::size_t t = 0; t < trajectory.states.size(); ++t) {
        const State& s = trajectory.states[t];
        out += std::to_string(t);
        out += ',';
        out += format_double(s.a);
        out += ',';
        out += format_double(s.b);
        out += ',';
        out += format_double(power(trajectory.params, s));
        out += '\n';
    }
    if (trajectory.truncated_at) {
        out += "# truncated_at=";
        out += std::to_string(*trajectory.truncated_at);
        out += '\n';
    }
    return out;
}

std::string sweep_csv(const SweepSpec& spec) {
    const auto grid_value = [](double lo, double hi, std::size_t steps, std::size_t i) {
        if (i + 1 == steps) {
            return hi;  // pin the endpoint; the formula can miss it by an ulp
        }
        return lo + static_cast<double>(i) * (hi - lo) / static_cast<double>(steps - 1);
    };
    std::string out = "alpha,beta,lambda2,behavioral_class,archetype\n";
    for (std::size_t i = 0; i < spec.alpha_steps; ++i) {
        const double alpha = grid_value(spec.alpha_min, spec.alpha_max, spec.alpha_steps, i);
        for (std::size_t j = 0; j < spec.beta_steps; ++j) {
            const double beta = grid_value(spec.beta_min, spec.beta_max, spec.beta_steps, j);
            const ModelParams params{alpha, beta, spec.gamma};
            const char* behavioral = "degenerate";
            const char* archetype = "degenerate";
            if (alpha != 0.0 || beta != 0.0) {
                behavioral = name_of(classify_stability(params, spec.epsilon).second);
                archetype = name_of(classify_archetype(params, spec.epsilon).case_label);
            }
            out += format_double(alpha);
            out += ',';
            out += format_double(beta);
            out += ',';
            out += format_double(lambda2(params));
            out += ',';
            out += behavioral;
            out += ',';
            out += archetype;
            out += '\n';
        }
    }
    return out;
}

int cmd_classify(const RunConfig& config) {
    const ClassificationReport report = classify(config.params, config.initial);
    std::cout << report_json(report) << '\n';
    return kExitOk;
}

int cmd_simulate(const RunConfig& config) {
    const Trajectory trajectory =
        simulate(config.params, *config.initial, config.steps, config.divergence_threshold);
    return write_payload(config.output_path, trajectory_csv(trajectory));
}

int cmd_predict(const RunConfig& config) {
    const State s = state_at(config.params, *config.initial, config.t);
    std::cout << predicted_state_json(config.t, s) << '\n';
    return kExitOk;
}

int cmd_compare(const RunConfig& config) {
    const PowerComparison comparison =
        compare_matrix_powers(config.params, static_cast<std::uint64_t>(config.steps));
    std::cout << comparison_json(comparison) << '\n';
    return comparison.max_abs_entry_diff > config.compare_tolerance ? kExitCompareFailed
                                                                    : kExitOk;
}

int cmd_sweep(const SweepSpec& spec, const std::optional<std::string>& output_path) {
    return write_payload(output_path, sweep_csv(spec));
}

int run(int argc, const char* const* argv) {
    CLI::App app{"analyzer for a two-player affinity/power feedback model"};
    app.require_subcommand(1);

    auto* classify_cmd =
        app.add_subcommand("classify", "report stability class, archetype, and asymptotic fate");
    double c_alpha = 0.0;
    double c_beta = 0.0;
    double c_gamma = 0.0;
    double c_a0 = 0.0;
    double c_b0 = 0.0;
    classify_cmd->add_option("--alpha", c_alpha, "player A's power sensitivity")->required();
    classify_cmd->add_option("--beta", c_beta, "player B's power sensitivity")->required();
    classify_cmd->add_option("--gamma", c_gamma, "power gain (> 0)")->required();
    auto* c_a0_opt = classify_cmd->add_option("--a0", c_a0, "initial affinity of player A");
    auto* c_b0_opt = classify_cmd->add_option("--b0", c_b0, "initial affinity of player B");
    c_a0_opt->needs(c_b0_opt);
    c_b0_opt->needs(c_a0_opt);

    auto* simulate_cmd =
        app.add_subcommand("simulate", "iterate the update rule and emit a CSV trajectory");
    double s_alpha = 0.0;
    double s_beta = 0.0;
    double s_gamma = 0.0;
    double s_a0 = 0.0;
    double s_b0 = 0.0;
    std::size_t s_steps = 0;
    double s_threshold = kDefaultDivergenceThreshold;
    std::string s_output;
    simulate_cmd->add_option("--alpha", s_alpha, "player A's power sensitivity")->required();
    simulate_cmd->add_option("--beta", s_beta, "player B's power sensitivity")->required();
    simulate_cmd->add_option("--gamma", s_gamma, "power gain (> 0)")->required();
    simulate_cmd->add_option("--a0", s_a0, "initial affinity of player A")->required();
    simulate_cmd->add_option("--b0", s_b0, "initial affinity of player B")->required();
    simulate_cmd->add_option("--steps", s_steps, "number of steps to simulate")->required();
    simulate_cmd
        ->add_option("--threshold", s_threshold, "stop once max(|a|,|b|) exceeds this value")
        ->check(CLI::PositiveNumber);
    auto* s_output_opt =
        simulate_cmd->add_option("--output", s_output, "write the CSV here instead of stdout");

    auto* predict_cmd =
        app.add_subcommand("predict", "closed-form state after t steps, no iteration");
    double p_alpha = 0.0;
    double p_beta = 0.0;
    double p_gamma = 0.0;
    double p_a0 = 0.0;
    double p_b0 = 0.0;
    std::uint64_t p_t = 0;
    predict_cmd->add_option("--alpha", p_alpha, "player A's power sensitivity")->required();
    predict_cmd->add_option("--beta", p_beta, "player B's power sensitivity")->required();
    predict_cmd->add_option("--gamma", p_gamma, "power gain (> 0)")->required();
    predict_cmd->add_option("--a0", p_a0, "initial affinity of player A")->required();
    predict_cmd->add_option("--b0", p_b0, "initial affinity of player B")->required();
    predict_cmd->add_option("--t", p_t, "target step")->required();

    auto* compare_cmd = app.add_subcommand(
        "compare", "check the closed-form matrix power against plain iteration");
    double k_alpha = 0.0;
    double k_beta = 0.0;
    double k_gamma = 0.0;
    std::size_t k_steps = 0;
    double k_tol = 1e-9;
    compare_cmd->add_option("--alpha", k_alpha, "player A's power sensitivity")->required();
    compare_cmd->add_option("--beta", k_beta, "player B's power sensitivity")->required();
    compare_cmd->add_option("--gamma", k_gamma, "power gain (> 0)")->required();
    compare_cmd->add_option("--steps", k_steps, "compare M^t for every t = 0..steps")->required();
    compare_cmd->add_option("--tol", k_tol, "largest acceptable entrywise difference")
        ->check(CLI::PositiveNumber);

    auto* sweep_cmd =
        app.add_subcommand("sweep", "classify every cell of an (alpha, beta) grid into CSV");
    SweepSpec sweep;
    std::string w_output;
    sweep_cmd->add_option("--gamma", sweep.gamma, "power gain (> 0)")->required();
    sweep_cmd->add_option("--alpha-min", sweep.alpha_min, "lowest alpha")->required();
    sweep_cmd->add_option("--alpha-max", sweep.alpha_max, "highest alpha")->required();
    sweep_cmd->add_option("--alpha-steps", sweep.alpha_steps, "grid points along alpha (>= 2)")
        ->required()
        ->check(CLI::Range(std::size_t{2}, std::numeric_limits<std::size_t>::max()));
    sweep_cmd->add_option("--beta-min", sweep.beta_min, "lowest beta")->required();
    sweep_cmd->add_option("--beta-max", sweep.beta_max, "highest beta")->required();
    sweep_cmd->add_option("--beta-steps", sweep.beta_steps, "grid points along beta (>= 2)")
        ->required()
        ->check(CLI::Range(std::size_t{2}, std::numeric_limits<std::size_t>::max()));
    sweep_cmd->add_option("--epsilon", sweep.epsilon, "classification tolerance")
        ->check(CLI::PositiveNumber);
    auto* w_output_opt =
        sweep_cmd->add_option("--output", w_output, "write the CSV here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);  // --help and friends
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitBadInput;
    }

    try {
        if (*classify_cmd) {
            RunConfig config;
            config.params = validate_params(c_alpha, c_beta, c_gamma);
            if (c_a0_opt->count() > 0) {
                config.initial = State{c_a0, c_b0};
            }
            return cmd_classify(config);
        }
        if (*simulate_cmd) {
            RunConfig config;
            config.params = validate_params(s_alpha, s_beta, s_gamma);
            config.initial = State{s_a0, s_b0};
            config.steps = s_steps;
            config.divergence_threshold = s_threshold;
            if (s_output_opt->count() > 0) {
                config.output_path = s_output;
            }
            return cmd_simulate(config);
        }
        if (*predict_cmd) {
            RunConfig config;
            config.params = validate_params(p_alpha, p_beta, p_gamma);
            config.initial = State{p_a0, p_b0};
            config.t = p_t;
            return cmd_predict(config);
        }
        if (*compare_cmd) {
            RunConfig config;
            config.params = validate_params(k_alpha, k_beta, k_gamma);
            config.steps = k_steps;
            config.compare_tolerance = k_tol;
            return cmd_compare(config);
        }
        if (*sweep_cmd) {
            if (!std::isfinite(sweep.gamma) || !(sweep.gamma > 0.0)) {
                std::cerr << "error: gamma must be strictly positive\n";
                return kExitBadInput;
            }
            if (!std::isfinite(sweep.alpha_min) || !std::isfinite(sweep.alpha_max) ||
                !std::isfinite(sweep.beta_min) || !std::isfinite(sweep.beta_max)) {
                std::cerr << "error: sweep bounds must be finite\n";
                return kExitBadInput;
            }
            if (!(sweep.alpha_min < sweep.alpha_max) || !(sweep.beta_min < sweep.beta_max)) {
                std::cerr << "error: sweep bounds must satisfy min < max\n";
                return kExitBadInput;
            }
            std::optional<std::string> out;
            if (w_output_opt->count() > 0) {
                out = w_output;
            }
            return cmd_sweep(sweep, out);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadInput;
    }
    return kExitBadInput;  // unreachable: a subcommand is required
}

}  // namespace reldyn::cli
