#include <CLI11.hpp>

#include <cstring>
#include <exception>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "mpspec/cli.hpp"
#include "mpspec/common.hpp"

namespace {

std::vector<double> parse_double_list(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stod(tok));
    return out;
}

std::vector<int> parse_int_list(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"mpspec: verification suites for weighted polynomial approximation"};
    app.require_subcommand(1);

    mpspec::RunConfig cfg;
    std::string lambda_csv, n_csv, config_path;

    // a config file provides defaults; explicit flags override them
    for (int i = 1; i + 1 < argc; ++i)
        if (std::strcmp(argv[i], "--config") == 0) config_path = argv[i + 1];
    if (!config_path.empty()) {
        try {
            cfg.apply_json(config_path);
        } catch (const std::exception& e) {
            std::cerr << "config error: " << e.what() << "\n";
            return 2;
        }
    }

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--weight", cfg.weight, "weight selection");
        sub->add_option("--N", cfg.N, "coefficient count");
        sub->add_option("--rule", cfg.rule_size, "quadrature rule size (0 -> 2N)");
        sub->add_option("--lambda", lambda_csv, "comma-separated lambda grid");
        sub->add_option("--n", n_csv, "comma-separated n grid");
        sub->add_option("--f", cfg.test_function, "named test function");
        sub->add_option("--out", cfg.out_path, "report output path");
        sub->add_option("--format", cfg.format, "csv or json");
        sub->add_option("--seed", cfg.seed, "seed for randomized suites");
        sub->add_option("--config", config_path, "JSON config file (defaults)");
    };
    for (const char* name :
         {"verify", "rates", "tightness", "tensor", "poincare"})
        add_common(app.add_subcommand(name));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2; // usage errors get a distinct exit code, no report file
    }

    cfg.command = app.get_subcommands().front()->get_name();
    try {
        if (!lambda_csv.empty()) cfg.lambda_grid = parse_double_list(lambda_csv);
        if (!n_csv.empty()) cfg.n_grid = parse_int_list(n_csv);
        cfg.validate();
    } catch (const std::exception& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        return mpspec::run(cfg);
    } catch (const std::exception& e) {
        std::cerr << "run failed: " << e.what() << "\n";
        return 1;
    }
}
