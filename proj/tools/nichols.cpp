#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "nichols/cli.hpp"

int main(int argc, char** argv)
{
    CLI::App app{"Nichols algebras of diagonal type and their unrolled bosonizations"};
    app.require_subcommand(1);
    nichols::CommandOptions opts;
    std::string path;
    std::optional<int> cap;
    std::optional<std::string> out;
    std::string suite;

    for (const char* name : {"dims", "verify", "unroll", "gk", "pair"}) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("spec", path, "algebra spec file")->required()->check(CLI::ExistingFile);
        sub->add_option("--cap", cap, "truncation degree")->check(CLI::NonNegativeNumber);
        sub->add_option("--format", opts.format, "json or table")->check(CLI::IsMember({"json", "table"}));
        if (std::string(name) == "verify")
            sub->add_option("--suite", suite, "hopf, biderivation, comodule, pairing or pointed (comma separated)");
        if (std::string(name) == "unroll")
            sub->add_option("--out", out, "write the serialized algebra here");
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }
    opts.command = app.get_subcommands().front()->get_name();
    opts.cap = cap;
    opts.out = out;
    std::stringstream suites(suite);
    for (std::string s; std::getline(suites, s, ',');)
        if (!s.empty())
            opts.suites.push_back(s);

    std::ifstream f(path);
    std::stringstream text;
    text << f.rdbuf();
    nichols::SpecDocument doc;
    try {
        doc = nichols::parse_spec(text.str());
    } catch (const std::exception& e) {
        std::cerr << "error: " << path << ": " << e.what() << "\n";
        return 2;
    }
    return nichols::run_command(opts, doc, std::cout, std::cerr);
}
