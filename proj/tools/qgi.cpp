#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qgi/errors.hpp"
#include "qgi/report.hpp"

namespace {

struct CommandOptions {
    std::string group;
    std::string group_file;
    std::string format = "text";
    std::string level;
    std::string chartable;
    int max_order = qgi::kDefaultOrderCap;
    bool timings = false;
};

void add_common(CLI::App* cmd, CommandOptions& o, const std::string& default_level) {
    o.level = default_level;
    cmd->add_option("--group", o.group, "named group, e.g. S4, D6, Q8, C2xC4");
    cmd->add_option("--group-file", o.group_file, "path to a group spec JSON file");
    cmd->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--level", o.level, "verification level")
        ->check(CLI::IsMember({"fast", "full"}));
    cmd->add_option("--chartable", o.chartable,
                    "path to a precomputed character table JSON file");
    cmd->add_option("--max-order", o.max_order, "group order cap")
        ->check(CLI::PositiveNumber);
    cmd->add_flag("--timings", o.timings, "include stage timings in the report");
}

nlohmann::json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw qgi::InputError("cannot open file: " + path);
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw qgi::InputError("bad JSON in " + path + ": " + e.what());
    }
}

int run_command(const CommandOptions& o, bool verify) {
    if (o.group.empty() == o.group_file.empty())
        throw qgi::InputError("exactly one of --group and --group-file is required");
    qgi::GroupSpec spec = o.group.empty()
                              ? qgi::GroupSpec::from_json(load_json(o.group_file))
                              : qgi::GroupSpec::parse_name(o.group);

    qgi::PipelineOptions popt;
    popt.max_order = o.max_order;
    popt.level = o.level == "full" ? qgi::VerifyLevel::kFull : qgi::VerifyLevel::kFast;
    popt.timings = o.timings;
    if (!o.chartable.empty()) popt.chartable = load_json(o.chartable);

    qgi::PipelineResult r = qgi::run_pipeline(spec, popt);
    if (verify) qgi::verify_character_table(r.g, r.cc, r.table);

    if (o.format == "json")
        std::cout << qgi::report_json_text(r, popt);
    else
        std::cout << qgi::report_text(r, popt);

    if (!r.dec.ok()) {
        std::cerr << "verification failed: " << r.dec.failure << "\n";
        return 1;
    }
    return 0;
}

void print_catalog() {
    std::cout << "named group families (default order cap "
              << qgi::kDefaultOrderCap << "):\n"
              << "  C n (n ≤ 512)    cyclic\n"
              << "  D n (n ≤ 128)    dihedral of order 2n\n"
              << "  Dic n (n ≤ 128)  dicyclic of order 4n\n"
              << "  Q 8, Q 16, ... Q 128   quaternion, power of two\n"
              << "  S n (n ≤ 6)      symmetric (S6 needs --max-order 720)\n"
              << "  A n (n ≤ 6)      alternating\n"
              << "  SL2_p (p ≤ 7)    special linear over F_p\n"
              << "  E27              extraspecial of order 27, exponent 3\n"
              << "products join with x, e.g. C2xC4, C3xS3\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact primitive central idempotents of rational group algebras"};
    app.require_subcommand(1);

    CommandOptions copt, vopt;
    CLI::App* compute = app.add_subcommand("compute", "compute the decomposition of QG");
    add_common(compute, copt, "fast");
    CLI::App* verify =
        app.add_subcommand("verify", "compute and run the full verification suite");
    add_common(verify, vopt, "full");
    CLI::App* list = app.add_subcommand("list-groups", "print the named-group catalog");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (list->parsed()) {
            print_catalog();
            return 0;
        }
        return run_command(compute->parsed() ? copt : vopt, verify->parsed());
    } catch (const qgi::CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const qgi::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const qgi::DefectError& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
