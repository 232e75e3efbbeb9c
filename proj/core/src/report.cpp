#include "cvg/report.hpp"

#include <cstdio>
#include <sstream>

#include <nlohmann/json.hpp>

namespace cvg {

Report Report::make(std::string claim, std::string body, int dim, double lhs, double rhs,
                    double tolerance, std::uint64_t seed) {
    Report r;
    r.claim = std::move(claim);
    r.body = std::move(body);
    r.dim = dim;
    r.lhs = lhs;
    r.rhs = rhs;
    r.tolerance = tolerance;
    r.seed = seed;
    r.refresh();
    return r;
}

void Report::refresh() {
    margin = rhs - lhs;
    pass = margin >= -tolerance;
}

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

namespace {

std::string escape_csv(const std::string& s) {
    bool needs_quote = s.find_first_of(",\"\n") != std::string::npos;
    if (!needs_quote) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

std::string params_string(const std::map<std::string, double>& params) {
    std::string out;
    for (const auto& [k, v] : params) {
        if (!out.empty()) out += ";";
        out += k + "=" + format_double(v);
    }
    return out;
}

}  // namespace

std::string report_csv_header() {
    return "claim,body,dim,lhs,rhs,margin,tolerance,pass,seed,params,details";
}

std::string report_csv_row(const Report& r) {
    std::ostringstream os;
    os << escape_csv(r.claim) << ',' << escape_csv(r.body) << ',' << r.dim << ','
       << format_double(r.lhs) << ',' << format_double(r.rhs) << ',' << format_double(r.margin)
       << ',' << format_double(r.tolerance) << ',' << (r.pass ? 1 : 0) << ',' << r.seed << ','
       << escape_csv(params_string(r.params)) << ',' << escape_csv(r.details);
    return os.str();
}

std::string reports_to_csv(const std::vector<Report>& rs) {
    std::string out = report_csv_header() + "\n";
    for (const Report& r : rs) out += report_csv_row(r) + "\n";
    return out;
}

std::string reports_to_json(const std::vector<Report>& rs) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Report& r : rs) {
        nlohmann::json j;
        j["claim"] = r.claim;
        j["body"] = r.body;
        j["dim"] = r.dim;
        j["params"] = r.params;
        j["lhs"] = r.lhs;
        j["rhs"] = r.rhs;
        j["margin"] = r.margin;
        j["tolerance"] = r.tolerance;
        j["pass"] = r.pass;
        j["seed"] = r.seed;
        j["details"] = r.details;
        arr.push_back(std::move(j));
    }
    return arr.dump(2) + "\n";
}

std::string reports_to_markdown(const std::vector<Report>& rs) {
    std::ostringstream os;
    os << "| claim | body | dim | lhs | rhs | margin | pass |\n";
    os << "|---|---|---|---|---|---|---|\n";
    int failures = 0;
    for (const Report& r : rs) {
        if (!r.pass) ++failures;
        os << "| " << r.claim << " | " << r.body << " | " << r.dim << " | " << format_double(r.lhs)
           << " | " << format_double(r.rhs) << " | " << format_double(r.margin) << " | "
           << (r.pass ? "pass" : "FAIL") << " |\n";
    }
    os << "\n" << rs.size() << " checks, " << failures << " failures\n";
    return os.str();
}

}  // namespace cvg
