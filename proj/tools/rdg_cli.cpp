#include <iostream>

#include "CLI11.hpp"
#include "rdg/cli.hpp"

int main(int argc, char **argv)
{
    CLI::App app{"Rectangular dualization of plane triangulated graphs"};
    app.require_subcommand(1);
    rdg::RunConfig config;
    std::string mode = "effective";

    auto graph_command = [&](const std::string &name, const std::string &about) {
        CLI::App *sub = app.add_subcommand(name, about);
        sub->add_option("graph", config.input, "graph document")->required();
        sub->add_option("--out", config.output, "write the result here instead of standard output");
        return sub;
    };
    graph_command("validate", "check the embedding and report faces");
    graph_command("analyze", "blocks, shortcuts and separating triangles");
    CLI::App *decide = graph_command("decide", "decide rectangular dualizability");
    CLI::App *dualize = graph_command("dualize", "construct a rectangular floorplan");
    for (CLI::App *sub : {decide, dualize}) {
        sub->add_option("--mode", mode, "literal or effective")->check(CLI::IsMember({"literal", "effective"}));
        sub->add_flag("--legacy", config.legacy, "also evaluate the older characterizations");
    }
    dualize->add_option("--svg", config.svg, "render the plan to this file");
    CLI::App *oracle = graph_command("oracle", "brute-force check over small grids");
    oracle->add_option("--grid", config.grid, "largest grid side (default: number of vertices)")
        ->check(CLI::NonNegativeNumber);
    CLI::App *census = app.add_subcommand("census", "compare theory and oracle on all small graphs");
    census->add_option("--n", config.census_n, "largest vertex count")->required();
    census->add_option("--out", config.output, "write the table here instead of standard output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        std::cerr << "rdg: " << e.what() << "\n";
        return 2;
    }
    config.command = app.get_subcommands().front()->get_name();
    config.mode = rdg::parse_mode(mode);
    return rdg::run(config, std::cout, std::cerr);
}
