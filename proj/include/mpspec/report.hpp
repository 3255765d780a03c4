#ifndef MPSPEC_REPORT_HPP
#define MPSPEC_REPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "mpspec/orthopoly.hpp"
#include "mpspec/spectral.hpp"

namespace mpspec {

struct Check {
    std::string name;
    double value = 0.0;
    double bound = 0.0;
    bool pass = false;
};

struct Suite {
    std::string name;
    std::vector<Check> checks;

    bool all_pass() const;
    const Check* first_failure() const;
};

struct Report {
    nlohmann::json config;
    std::vector<Suite> suites;

    bool all_pass() const;
    std::string first_failure_name() const;
    nlohmann::json to_json() const;
};

// 17 significant digits, reproducible across runs
std::string fmt_g17(double v);

// comma-separated, header row, LF line endings
void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows);

void write_report_json(const std::string& path, const Report& report);

// report rendered as CSV rows (suite, check, value, bound, pass)
void write_report_csv(const std::string& path, const Report& report);

// recurrence table dump: k, a_k, b_k, norm_sq
void write_recurrence_csv(const std::string& path, const OrthoBasis& basis);

// Gauss rule dump: k, node, weight
void write_rule_csv(const std::string& path, const GaussRule& rule);

// expansion dump: k, f_k, running tail
void write_expansion_csv(const std::string& path, const SpectralExpansion& e);

// kernel transform dump: v, khat numeric, khat closed form
void write_khat_csv(const std::string& path, double v_max = 6.0, int points = 121);

} // namespace mpspec

#endif
