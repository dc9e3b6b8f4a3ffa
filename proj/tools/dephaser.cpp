// dephaser.cpp — command-line front end.
//
// dephaser <params|sweep|opt|protocol> --config <path> [--out <path>]
//          [--figure fe|se|ic] [--precision N] [--allow-invalid-kraus]
//
// Exit codes: 0 success, 1 usage/config error, 2 numerical failure.

#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "dephaser/commands.hpp"
#include "dephaser/config.hpp"
#include "dephaser/quadrature.hpp"

int main(int argc, char** argv) {
    CLI::App app{"exact simulator of a correlated (memory) dephasing channel"};
    app.require_subcommand(1);

    std::string config_path;
    dephaser::cli::CommandOverrides ov;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--config", config_path, "run configuration (INI)")
            ->required();
        cmd->add_option("--out", ov.out_path, "output CSV path (default: config / stdout)");
        cmd->add_option("--precision", ov.precision,
                        "significant digits (default: config, 12)")
            ->check(CLI::Range(1, 17));
        cmd->add_flag("--allow-invalid-kraus", ov.allow_invalid_kraus,
                      "apply Kraus sets flagged invalid (diagnostics)");
        return cmd;
    };

    auto* c_params = add_common(app.add_subcommand(
        "params", "dephasing parameters {g, gamma, h+, h-} from a bath model"));
    auto* c_sweep = add_common(app.add_subcommand(
        "sweep", "two-use metrics over a (g, gamma, p) grid"));
    c_sweep->add_option("--figure", ov.figure,
                        "metric family the sweep targets: fe | se | ic");
    auto* c_opt = add_common(app.add_subcommand(
        "opt", "coherent-information-optimal p as a function of g"));
    auto* c_protocol = add_common(app.add_subcommand(
        "protocol", "coded vs uncoded transmission fidelity"));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);  // prints help or the usage message
        return rc == 0 ? 0 : 1;
    }

    try {
        const dephaser::cli::RunConfig cfg =
            dephaser::cli::parse_config_file(config_path);
        if (c_params->parsed()) dephaser::cli::cmd_params(cfg, ov);
        if (c_sweep->parsed()) dephaser::cli::cmd_sweep(cfg, ov);
        if (c_opt->parsed()) dephaser::cli::cmd_opt(cfg, ov);
        if (c_protocol->parsed()) dephaser::cli::cmd_protocol(cfg, ov);
        return 0;
    } catch (const dephaser::cli::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return 2;
    }
}
