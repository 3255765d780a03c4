#include "mpspec/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "mpspec/quadrature.hpp"
#include "mpspec/strip.hpp"

namespace mpspec {

bool Suite::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

const Check* Suite::first_failure() const {
    for (const auto& c : checks)
        if (!c.pass) return &c;
    return nullptr;
}

bool Report::all_pass() const {
    for (const auto& s : suites)
        if (!s.all_pass()) return false;
    return true;
}

std::string Report::first_failure_name() const {
    for (const auto& s : suites)
        if (const Check* c = s.first_failure()) return s.name + "/" + c->name;
    return {};
}

nlohmann::json Report::to_json() const {
    nlohmann::json suites_json = nlohmann::json::array();
    for (const auto& s : suites) {
        nlohmann::json checks = nlohmann::json::array();
        for (const auto& c : s.checks)
            checks.push_back({{"name", c.name},
                              {"value", c.value},
                              {"bound", c.bound},
                              {"pass", c.pass}});
        suites_json.push_back({{"name", s.name}, {"checks", checks}});
    }
    return {{"config", config}, {"suites", suites_json}};
}

std::string fmt_g17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
    std::ofstream out(path, std::ios::binary); // binary keeps LF endings
    if (!out) throw std::runtime_error("cannot open " + path);
    for (std::size_t i = 0; i < header.size(); ++i)
        out << (i ? "," : "") << header[i];
    out << "\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            out << (i ? "," : "") << row[i];
        out << "\n";
    }
}

void write_report_json(const std::string& path, const Report& report) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path);
    out << report.to_json().dump(2) << "\n";
}

void write_report_csv(const std::string& path, const Report& report) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& s : report.suites)
        for (const auto& c : s.checks)
            rows.push_back({s.name, c.name, fmt_g17(c.value), fmt_g17(c.bound),
                            c.pass ? "1" : "0"});
    write_csv(path, {"suite", "check", "value", "bound", "pass"}, rows);
}

void write_recurrence_csv(const std::string& path, const OrthoBasis& basis) {
    std::vector<std::vector<std::string>> rows;
    for (int k = 0; k <= basis.degree_cap(); ++k)
        rows.push_back({std::to_string(k), fmt_g17(basis.a(k)),
                        fmt_g17(k > 0 ? basis.b(k) : 0.0),
                        fmt_g17(basis.norm_sq(k))});
    write_csv(path, {"k", "a_k", "b_k", "norm_sq"}, rows);
}

void write_rule_csv(const std::string& path, const GaussRule& rule) {
    std::vector<std::vector<std::string>> rows;
    for (int k = 0; k < rule.size(); ++k)
        rows.push_back({std::to_string(k), fmt_g17(rule.nodes[k]),
                        fmt_g17(rule.weights[k])});
    write_csv(path, {"k", "node", "weight"}, rows);
}

void write_expansion_csv(const std::string& path, const SpectralExpansion& e) {
    std::vector<std::vector<std::string>> rows;
    for (int k = 0; k <= e.max_degree(); ++k)
        rows.push_back({std::to_string(k), fmt_g17(e.coeffs()[k]),
                        fmt_g17(k < e.max_degree() ? e.tail_error(k)
                                                   : 0.0)});
    write_csv(path, {"k", "f_k", "running_tail"}, rows);
}

void write_khat_csv(const std::string& path, double v_max, int points) {
    std::vector<std::vector<std::string>> rows;
    for (int i = 0; i < points; ++i) {
        double v = -v_max + 2.0 * v_max * i / (points - 1);
        auto z = fourier_panels([](double x) { return kernel_K(x); }, -90.0, 90.0, v);
        rows.push_back({fmt_g17(v), fmt_g17(z.real()), fmt_g17(khat_closed(v))});
    }
    write_csv(path, {"v", "khat_numeric", "khat_closed"}, rows);
}

} // namespace mpspec
