#ifndef MPSPEC_CLI_HPP
#define MPSPEC_CLI_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "mpspec/report.hpp"

namespace mpspec {

// Batch-run configuration; flags win over the optional JSON config file.
struct RunConfig {
    std::string command;           // verify | rates | tightness | tensor | poincare
    std::string weight = "sech";
    int N = 256;
    int rule_size = 0;             // 0 -> 2N
    std::vector<double> lambda_grid{1.0, 1.5, 2.0, 2.5, 3.0};
    std::vector<int> n_grid{8, 16, 32, 64, 128, 256, 512};
    std::string test_function = "abs_clip";
    double tol_identity = 1e-8;
    double tol_fourier = 1e-8;
    double tol_gram = 1e-9;
    std::string out_path;          // default <command>_report.<format>
    std::string format = "csv";    // csv | json
    std::uint64_t seed = 1;

    void validate() const; // throws std::invalid_argument on bad settings
    void apply_json(const std::string& config_path); // file defaults
};

// Runs the subcommand, writes the report file, prints one line per suite.
// Returns 0 when every asserted check passes, 1 otherwise.
int run(const RunConfig& config);

} // namespace mpspec

#endif
