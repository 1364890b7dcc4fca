#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "conelim/errors.hpp"
#include "conelim/report.hpp"
#include "conelim/testkit.hpp"

namespace {

using namespace conelim;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw conelim::ParseError("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

HitchinPair load(const std::string& path) {
    return io::parse_instance_text(read_file(path));
}

void print_json(const io::json& doc) { std::cout << doc.dump(2) << "\n"; }

int run_validate(const std::string& path, bool as_json) {
    HitchinPair pair = load(path);
    validate(pair);
    if (as_json)
        print_json({{"valid", true}, {"rank", pair.rank()}, {"degree", pair.degree()}});
    else
        std::cout << "valid (rank " << pair.rank() << ", degree " << pair.degree() << ")\n";
    return 0;
}

int run_analyze(const std::string& path, bool as_json) {
    io::Analysis a = io::analyze(load(path));
    if (as_json)
        print_json(io::report_to_json(a));
    else
        std::cout << io::render_text_report(a);
    return 0;
}

int run_stability(const std::string& path, bool as_json) {
    HitchinPair pair = load(path);
    nilpotency_order(pair);  // NotNilpotent -> contract error
    StabilityVerdict v = is_stable(pair);
    if (as_json) {
        io::json doc;
        doc["stable"] = v.stable;
        doc["semistable"] = v.semistable;
        doc["checks"] = io::verdict_to_json(v);
        print_json(doc);
    } else {
        std::cout << (v.stable ? "stable" : "unstable") << "\n";
        for (const auto& c : v.checks)
            std::cout << "  " << c.description << ": slope " << to_string(c.subbundle_slope)
                      << (c.ok ? " < " : " !< ") << to_string(c.bound) << "\n";
    }
    return 0;
}

int run_flow(const std::string& path, bool as_json, bool force) {
    HitchinPair pair = load(path);
    bool nilpotent = true;
    try {
        nilpotency_order(pair);
    } catch (const NotNilpotent&) {
        nilpotent = false;
    }
    if (!nilpotent && !force)
        throw NotNilpotent("the flow limit needs a nilpotent field (use --force to run anyway)");
    if (!nilpotent) {
        flow::AdaptedFrame frame = flow::forced_frame(pair);
        flow::flow_limit_report(flow::conjugate_flow(pair, frame));  // throws Divergent
        return 0;
    }
    io::Analysis a = io::analyze(pair);
    if (a.classification && a.classification->kind == LimitCase::Unsupported)
        throw Unsupported(a.classification->reason);
    if (as_json)
        print_json(io::flow_to_json(*a.flow_report, *a.block_sizes));
    else {
        std::cout << "blocks: ";
        for (std::size_t i = 0; i < a.block_sizes->size(); ++i)
            std::cout << (i ? "," : "(") << (*a.block_sizes)[i];
        std::cout << ")\nexponents:\n";
        for (const auto& row : a.flow_report->exponent_table) {
            std::cout << "  [";
            for (std::size_t j = 0; j < row.size(); ++j)
                std::cout << (j ? " " : "") << (row[j] ? std::to_string(*row[j]) : ".");
            std::cout << "]\n";
        }
        std::cout << "matches_prediction: "
                  << (a.flow_report->matches_prediction ? "yes" : "no") << "\n";
    }
    return 0;
}

int run_oracle(const std::string& path) {
    HitchinPair pair = load(path);
    bool claimed_nilpotent = true;
    try {
        nilpotency_order(pair);
    } catch (const NotNilpotent&) {
        claimed_nilpotent = false;
    }
    int samples = pair.rank() * pair.l_degree() + 1;
    bool pointwise = testkit::pointwise_nilpotency_oracle(pair, samples);
    bool nilpotency_agrees = pointwise == claimed_nilpotent;
    bool splitting_agrees = true;
    if (claimed_nilpotent) {
        Filtration filt = kernel_filtration(pair);
        for (const auto& step : filt.steps) {
            auto direct = splitting_type(step);
            auto recovered = testkit::splitting_from_h0(step);
            if (direct != recovered) splitting_agrees = false;
        }
    }
    std::cout << "pointwise_nilpotency_agrees: " << (nilpotency_agrees ? "yes" : "no") << "\n";
    std::cout << "splitting_oracle_agrees: " << (splitting_agrees ? "yes" : "no") << "\n";
    if (!nilpotency_agrees || !splitting_agrees)
        throw std::logic_error("oracle disagreement: implementation defect");
    return 0;
}

int run_random(std::uint64_t seed, int rank, const std::string& shape, bool stable,
               int twist_min, int twist_max, int l_min, int l_max, int attempts) {
    if (const char* env = std::getenv("CONELIM_SEED")) seed = std::strtoull(env, nullptr, 10);
    testkit::GenParams params;
    params.seed = seed;
    params.rank = rank;
    params.twist_min = twist_min;
    params.twist_max = twist_max;
    params.l_min = l_min;
    params.l_max = l_max;
    params.require_stable = stable;
    params.max_attempts = attempts;
    if (shape == "zero") params.shape = testkit::Shape::Zero;
    else if (shape == "regular") params.shape = testkit::Shape::Regular;
    else if (shape == "intermediate") params.shape = testkit::Shape::Rank3Intermediate;
    else if (shape == "any") params.shape = testkit::Shape::Any;
    else throw conelim::ParseError("unknown shape '" + shape + "'");
    print_json(io::emit_instance(testkit::random_pair(params)));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact nilpotent-cone limits for twisted pairs on the split model curve"};
    app.require_subcommand(1);

    std::string path;
    bool as_json = false, force = false, stable = false;
    std::uint64_t seed = 0;
    int rank = 3, twist_min = -3, twist_max = 3, l_fixed = 0, l_min = 1, l_max = 3;
    int attempts = 500;
    std::string shape = "any";

    auto* validate_cmd = app.add_subcommand("validate", "check the degree law of an instance");
    validate_cmd->add_option("file", path)->required();
    validate_cmd->add_flag("--json", as_json);

    auto* analyze_cmd = app.add_subcommand("analyze", "full report for an instance");
    analyze_cmd->add_option("file", path)->required();
    analyze_cmd->add_flag("--json", as_json);

    auto* stability_cmd = app.add_subcommand("stability", "stability verdict");
    stability_cmd->add_option("file", path)->required();
    stability_cmd->add_flag("--json", as_json);

    auto* flow_cmd = app.add_subcommand("flow", "gauge-flow limit and prediction check");
    flow_cmd->add_option("file", path)->required();
    flow_cmd->add_flag("--json", as_json);
    flow_cmd->add_flag("--force", force, "run the flow even outside the nilpotent cone");

    auto* oracle_cmd = app.add_subcommand("oracle", "independent cross-checks");
    oracle_cmd->add_option("file", path)->required();

    auto* random_cmd = app.add_subcommand("random", "emit a deterministic random instance");
    random_cmd->add_option("--seed", seed);
    random_cmd->add_option("--rank", rank);
    random_cmd->add_option("--shape", shape, "zero|regular|intermediate|any");
    random_cmd->add_flag("--stable", stable);
    random_cmd->add_option("--twist-min", twist_min);
    random_cmd->add_option("--twist-max", twist_max);
    random_cmd->add_option("--l", l_fixed, "fix the twisting-line degree");
    random_cmd->add_option("--l-min", l_min);
    random_cmd->add_option("--l-max", l_max);
    random_cmd->add_option("--max-attempts", attempts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (validate_cmd->parsed()) return run_validate(path, as_json);
        if (analyze_cmd->parsed()) return run_analyze(path, as_json);
        if (stability_cmd->parsed()) return run_stability(path, as_json);
        if (flow_cmd->parsed()) return run_flow(path, as_json, force);
        if (oracle_cmd->parsed()) return run_oracle(path);
        if (random_cmd->parsed()) {
            if (l_fixed > 0) l_min = l_max = l_fixed;
            return run_random(seed, rank, shape, stable, twist_min, twist_max, l_min, l_max,
                              attempts);
        }
    } catch (const conelim::ParseError& e) {
        std::cerr << "error: ParseError: " << e.what() << "\n";
        return 1;
    } catch (const conelim::ContractError& e) {
        std::cerr << "error: " << e.code() << ": " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
