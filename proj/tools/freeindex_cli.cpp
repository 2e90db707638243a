// freeindex command line: computes the numerical index of the 2-dimensional
// Lipschitz-free space of a 3-point metric space, certifies it against a
// derivative-free search, designs triangles with a prescribed index, sweeps
// random families, and renders the unit ball. Thin client of the C API.

#include <freeindex/freeindex.h>

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInputError = 2;

struct MetricArgs {
    std::vector<std::string> distances;  // positional: d_xy d_xz d_yz
    std::string input_path;              // --in JSON document
    bool exact = false;
};

void add_metric_options(CLI::App* cmd, MetricArgs& args) {
    cmd->add_option("distances", args.distances,
                    "three distances d_xy d_xz d_yz (decimal or p/q)")
        ->expected(0, 3);
    cmd->add_option("--in", args.input_path, "JSON metric document");
    cmd->add_flag("--exact", args.exact, "force exact rational arithmetic");
}

[[noreturn]] void fail(fi_status status) {
    std::cerr << fi_status_name(status) << ": " << fi_last_error() << "\n";
    std::exit(kExitInputError);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "IoError: cannot read '" << path << "'\n";
        std::exit(kExitInputError);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& out_path, const char* content) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out || !(out << content) || !out.flush()) {
        std::cerr << "IoError: cannot write '" << out_path << "'\n";
        std::exit(kExitInputError);
    }
}

using MetricHandle = std::unique_ptr<fi_metric, decltype(&fi_metric_destroy)>;

MetricHandle parse_metric(const MetricArgs& args) {
    fi_metric* metric = nullptr;
    fi_status status;
    if (!args.input_path.empty()) {
        if (!args.distances.empty()) {
            std::cerr << "InvalidArgument: give distances either positionally or via --in\n";
            std::exit(kExitInputError);
        }
        status = fi_metric_parse_json(read_file(args.input_path).c_str(),
                                      args.exact ? 1 : 0, &metric);
    } else if (args.distances.size() == 3) {
        status = fi_metric_parse(args.distances[0].c_str(), args.distances[1].c_str(),
                                 args.distances[2].c_str(), args.exact ? 1 : 0, &metric);
    } else {
        std::cerr << "InvalidArgument: expected three distances or --in <file>\n";
        std::exit(kExitInputError);
    }
    if (status != FI_OK) fail(status);
    return MetricHandle(metric, &fi_metric_destroy);
}

struct OracleArgs {
    fi_oracle_options opts{};
    void add(CLI::App* cmd, bool with_tolerance) {
        fi_oracle_options_init(&opts);
        cmd->add_option("--seed", opts.rng_seed, "search RNG seed");
        cmd->add_option("--restarts", opts.restarts, "search restarts")->check(CLI::PositiveNumber);
        cmd->add_flag("--witness-seed", opts.seed_with_witness,
                      "seed the search with the constructed witness operator");
        if (with_tolerance) {
            cmd->add_option("--tolerance", opts.tolerance, "max allowed oracle-formula gap")
                ->check(CLI::PositiveNumber);
        }
    }
};

struct OwnedString {
    char* s = nullptr;
    ~OwnedString() { fi_string_destroy(s); }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical index of 2-dimensional Lipschitz-free spaces"};
    app.require_subcommand(1);

    MetricArgs index_metric, verify_metric, ball_metric;
    OracleArgs verify_oracle, sweep_oracle;
    std::string index_out, verify_out, design_out, sweep_out, ball_out;
    std::string design_alpha, sweep_modes, ball_operator_path;
    std::uint32_t sweep_n = 0;

    auto* cmd_index = app.add_subcommand("index", "closed-form index with witness operator");
    add_metric_options(cmd_index, index_metric);
    cmd_index->add_option("--out", index_out, "write the JSON report here");

    auto* cmd_verify = app.add_subcommand("verify", "compare the formula against the search oracle");
    add_metric_options(cmd_verify, verify_metric);
    verify_oracle.add(cmd_verify, true);
    cmd_verify->add_option("--out", verify_out, "write the JSON result here");

    auto* cmd_design = app.add_subcommand("design", "build a triangle with a prescribed index");
    cmd_design->add_option("alpha", design_alpha, "target index in [1/2, 1]")->required();
    cmd_design->add_option("--out", design_out, "write the JSON result here");

    auto* cmd_sweep = app.add_subcommand("sweep", "random triangles: formula vs oracle, as CSV");
    cmd_sweep->add_option("-n,--count", sweep_n, "number of triangles")
        ->required()
        ->check(CLI::PositiveNumber);
    cmd_sweep->add_option("--modes", sweep_modes,
                          "comma-separated subset of uniform_scalene,isosceles,near_aligned,"
                          "near_equilateral (default: all)");
    sweep_oracle.add(cmd_sweep, false);
    cmd_sweep->add_option("--out", sweep_out, "write the CSV here");

    auto* cmd_ball = app.add_subcommand("ball", "SVG drawing of the unit ball");
    add_metric_options(cmd_ball, ball_metric);
    cmd_ball->add_option("--operator", ball_operator_path,
                         "JSON file with an operator matrix (or an index report)");
    cmd_ball->add_option("--out", ball_out, "write the SVG here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInputError;
    }

    if (cmd_index->parsed()) {
        auto metric = parse_metric(index_metric);
        OwnedString json;
        fi_status status = fi_index_report(metric.get(), &json.s);
        if (status != FI_OK) fail(status);
        write_output(index_out, json.s);
        return kExitOk;
    }

    if (cmd_verify->parsed()) {
        auto metric = parse_metric(verify_metric);
        OwnedString json;
        int pass = 0;
        fi_status status = fi_verify(metric.get(), &verify_oracle.opts, &json.s, &pass);
        if (status != FI_OK) fail(status);
        write_output(verify_out, json.s);
        return pass ? kExitOk : kExitVerifyFailed;
    }

    if (cmd_design->parsed()) {
        OwnedString json;
        fi_status status = fi_design(design_alpha.c_str(), &json.s);
        if (status != FI_OK) fail(status);
        write_output(design_out, json.s);
        return kExitOk;
    }

    if (cmd_sweep->parsed()) {
        OwnedString csv;
        fi_status status = fi_sweep(sweep_n, sweep_modes.empty() ? nullptr : sweep_modes.c_str(),
                                    &sweep_oracle.opts, &csv.s);
        if (status != FI_OK) fail(status);
        write_output(sweep_out, csv.s);
        return kExitOk;
    }

    if (cmd_ball->parsed()) {
        auto metric = parse_metric(ball_metric);
        std::optional<std::string> operator_json;
        if (!ball_operator_path.empty()) operator_json = read_file(ball_operator_path);
        OwnedString svg;
        fi_status status = fi_ball_svg(metric.get(),
                                       operator_json ? operator_json->c_str() : nullptr, &svg.s);
        if (status != FI_OK) fail(status);
        write_output(ball_out, svg.s);
        return kExitOk;
    }

    return kExitInputError;
}
