#include <CLI11.hpp>
#include <iostream>

#include "siet/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Finite-blocklength code construction and bound evaluation for simultaneous "
                 "information and energy transmission over AWGN"};
    app.require_subcommand(1);

    siet::RunSpec spec;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--input", spec.input_path, "JSON spec file")->required();
        cmd->add_option("--output", spec.output_path, "output file path");
        cmd->add_option("--set", spec.overrides, "override top-level spec keys (key=value)");
    };

    auto* bounds = app.add_subcommand("bounds", "evaluate every bound for one configuration");
    add_common(bounds);

    auto* simulate = app.add_subcommand("simulate", "Monte-Carlo DEP estimate for a codebook");
    add_common(simulate);
    simulate->add_option("--seed", spec.seed, "RNG seed");
    simulate->add_option("--trials", spec.trials, "number of channel trials (>= 100)");
    simulate->add_option("--decoder", spec.decoder, "min-distance | regions")
        ->check(CLI::IsMember({"min-distance", "regions"}));

    auto* sweep = app.add_subcommand("sweep", "information-energy region sweep to CSV");
    add_common(sweep);
    sweep->add_option("--packing", spec.packing, "paper | strict")
        ->check(CLI::IsMember({"paper", "strict"}));
    sweep->add_option("--grid-step", spec.grid_step, "stride for auto p grids");

    auto* design = app.add_subcommand("design", "construct a code meeting target (R, B, eps, delta)");
    add_common(design);
    design->add_option("--seed", spec.seed, "seed for sampled codebooks");
    design->add_option("--grid-step", spec.grid_step, "stride for the p search grid");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : siet::kExitInput;
    }

    spec.command = app.get_subcommands().front()->get_name();
    return siet::run_command(spec, std::cout, std::cerr);
}
