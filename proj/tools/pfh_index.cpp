#include <iostream>

#include <CLI11.hpp>

#include "pfh/commands.hpp"

namespace {

struct FileTarget {
    std::string file;
    std::string name;
};

CLI::App* file_command(CLI::App& app, const char* cmd, const char* help, const char* what, FileTarget& t)
{
    CLI::App* sub = app.add_subcommand(cmd, help);
    sub->add_option("file", t.file, "session file")->required();
    sub->add_option("name", t.name, what)->required();
    return sub;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Index arithmetic for embedded curves in mapping tori"};
    app.require_subcommand(1);
    bool machine = false;
    app.add_flag("--machine", machine, "key=value output")->configurable(false);

    FileTarget index_t, check_t, euler_t, mcc_t;
    auto* index_cmd = file_command(app, "index", "relative index of a class", "class name", index_t);
    auto* check_cmd = file_command(app, "check", "index inequality report for a curve", "curve name", check_t);
    auto* euler_cmd = file_command(app, "euler", "Euler characteristic bound for a curve", "curve name", euler_t);
    auto* mcc_cmd = file_command(app, "mcc", "multiply covered bound", "mcc declaration name", mcc_t);

    std::string theta;
    pfh::Int m = 0;
    auto* part_cmd = app.add_subcommand("partitions", "incoming and outgoing partitions");
    part_cmd->add_option("--theta", theta, "angle a/b+ or a/b-")->required();
    part_cmd->add_option("--m", m, "multiplicity")->required();

    pfh::Int max_m = 8;
    auto* table_cmd = app.add_subcommand("table", "incoming partition table");
    table_cmd->add_option("--max-m", max_m, "largest multiplicity")->check(CLI::Range(2, 12));

    pfh::SweepSpec spec;
    auto* verify_cmd = app.add_subcommand("verify", "sweep the lemmas against the oracles");
    verify_cmd->add_option("--order", spec.farey_order, "Farey order")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--max-n", spec.max_n, "largest multiplicity")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--lemma", spec.lemmas, "restrict to these lemmas")
        ->check(CLI::IsMember(pfh::sweep_lemmas()));

    // --machine is accepted after the subcommand as well.
    for (auto* sub : {index_cmd, check_cmd, euler_cmd, mcc_cmd, part_cmd, table_cmd, verify_cmd})
        sub->add_flag("--machine", machine, "key=value output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : pfh::kExitInputError;
    }

    try {
        auto& out = std::cout;
        if (*index_cmd)
            return pfh::run_index(pfh::load_session(index_t.file), index_t.name, machine, out);
        if (*check_cmd)
            return pfh::run_check(pfh::load_session(check_t.file), check_t.name, machine, out);
        if (*euler_cmd)
            return pfh::run_euler(pfh::load_session(euler_t.file), euler_t.name, machine, out);
        if (*mcc_cmd)
            return pfh::run_mcc(pfh::load_session(mcc_t.file), mcc_t.name, machine, out);
        if (*part_cmd)
            return pfh::run_partitions(theta, m, machine, out);
        if (*table_cmd)
            return pfh::run_table(max_m, machine, out);
        return pfh::run_verify(spec, machine, out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return pfh::kExitInputError;
    }
}
