#include "fglh/error.hpp"
#include "fglh/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw fglh::InputError("cannot read workspace '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact formal group laws over Hopf algebras"};
    app.require_subcommand(1);

    std::string workspace;
    std::optional<int> degree;
    bool json = false, integrality = false, timing = false;
    app.add_option("-w,--workspace", workspace, "workspace file")->required();
    app.add_option("--degree", degree, "truncation degree T (default: the workspace setting, else 6)");
    app.add_flag("--json", json, "emit the canonical JSON report");
    app.add_flag("--integrality", integrality, "also decide integral coboundary witnesses");
    app.add_flag("--timing", timing, "include wall-clock timings");
    app.fallthrough();

    std::string target;
    int n = 2;
    bool all = false;
    std::vector<std::pair<std::string, CLI::App*>> commands;
    auto* hopf_cmd = app.add_subcommand("check-hopf", "validate a Hopf algebra");
    hopf_cmd->add_option("name", target, "hopf section")->required();
    commands.emplace_back("check-hopf", hopf_cmd);
    for (const auto& name : fglh::fgl_commands()) {
        auto* sub = app.add_subcommand(name, "run " + name + " on an fgl section");
        sub->add_option("name", target, "fgl section")->required();
        if (name == "power")
            sub->add_option("--n", n, "exponent n of the convolution power")->required();
        commands.emplace_back(name, sub);
    }
    auto* report = app.add_subcommand("report", "run every command on every section");
    report->add_flag("--all", all, "all sections")->required();
    commands.emplace_back("report", report);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    std::string command;
    for (const auto& [name, sub] : commands)
        if (sub->parsed())
            command = name;

    try {
        const fglh::Workspace ws = fglh::parse_workspace(read_file(workspace));
        fglh::RunOptions opts;
        opts.degree = degree;
        opts.integrality = integrality;
        opts.n = n;
        opts.timing = timing;
        const fglh::Report r = fglh::run(command, target, ws, opts);
        std::cout << (json ? fglh::to_json(r, timing) : fglh::to_text(r, timing));
        return r.exit_code();
    } catch (const fglh::ParseError& e) {
        std::cerr << workspace << ":" << e.what() << "\n";
        return 2;
    } catch (const fglh::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const fglh::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
