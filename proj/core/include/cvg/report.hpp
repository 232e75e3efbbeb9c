#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace cvg {

// One verified inequality: lhs vs rhs with the convention
// pass <=> margin = rhs - lhs >= -tolerance.
struct Report {
    std::string claim;   // "Lemma2.2i", "Thm2.1", ...
    std::string body;    // corpus label
    int dim = 0;
    std::map<std::string, double> params;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::uint64_t seed = 0;
    std::string details;

    static Report make(std::string claim, std::string body, int dim, double lhs, double rhs,
                       double tolerance, std::uint64_t seed);
    void refresh();  // recompute margin/pass from lhs/rhs/tolerance
};

std::string format_double(double x);

std::string report_csv_header();
std::string report_csv_row(const Report& r);
std::string reports_to_csv(const std::vector<Report>& rs);
std::string reports_to_json(const std::vector<Report>& rs);
std::string reports_to_markdown(const std::vector<Report>& rs);

}  // namespace cvg
