// Command-line front end: constructions, claim verification, figures.
//
// Exit codes: 0 pass, 1 claim failure / replay mismatch, 2 configuration
// error, 3 numeric or solver failure.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "cvg/approx.hpp"
#include "cvg/bodyio.hpp"
#include "cvg/corpus.hpp"
#include "cvg/directions.hpp"
#include "cvg/errors.hpp"
#include "cvg/floating.hpp"
#include "cvg/illumination.hpp"
#include "cvg/measure.hpp"
#include "cvg/report.hpp"
#include "cvg/svg.hpp"
#include "cvg/verify.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw cvg::ConfigError("cannot read " + p.string());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const fs::path& p, const std::string& content) {
    if (p.has_parent_path()) fs::create_directories(p.parent_path());
    std::ofstream out(p, std::ios::binary);
    if (!out) throw cvg::ConfigError("cannot write " + p.string());
    out << content;
}

cvg::BodyPtr body_from_cfg(const json& cfg) {
    if (!cfg.contains("body") || cfg["body"].is_null())
        throw cvg::ConfigError("this command needs --body");
    return cvg::body_from_json(cfg["body"]);
}

std::string csv_points(const std::vector<cvg::ScalingPoint>& pts) {
    std::ostringstream os;
    os << "n,ds\n";
    for (const auto& p : pts) os << p.n << "," << cvg::format_double(p.ds) << "\n";
    return os.str();
}

/* Run one resolved configuration into out_dir, appending artifact file
   names.  Replay calls this with the stored manifest configuration. */
int execute_run(const json& cfg, const fs::path& out_dir, std::vector<std::string>& artifacts) {
    const std::string command = cfg.at("command").get<std::string>();
    const auto seed = cfg.value("seed", std::uint64_t{0});
    const auto samples = cfg.value("samples", static_cast<long long>(200'000));

    if (command == "approx-inscribe") {
        cvg::BodyPtr body = body_from_cfg(cfg);
        const double t = cfg.at("t").get<double>();
        cvg::GreedyResult res = cvg::greedy_inscribed(*body, t, seed);
        write_file(out_dir / "inscribed_vertices.csv", cvg::vertices_to_csv(res.polytope));
        artifacts.push_back("inscribed_vertices.csv");
        if (body->dim() == 3) {
            write_file(out_dir / "inscribed.off", cvg::to_off(res.polytope));
            artifacts.push_back("inscribed.off");
        }
        write_file(out_dir / "greedy_run.json", cvg::greedy_run_to_json(res.run).dump(2) + "\n");
        artifacts.push_back("greedy_run.json");
        return 0;
    }

    if (command == "approx-circumscribe") {
        cvg::BodyPtr body = body_from_cfg(cfg);
        const int n = cfg.at("n").get<int>();
        auto dirs = cvg::well_spread_directions(body->dim(), n, seed);
        cvg::HPolytope h = cvg::circumscribed_facets(*body, dirs);
        auto hull_body = std::make_shared<cvg::HPolytope>(h);
        write_file(out_dir / "circumscribed_body.json", cvg::body_to_json(hull_body).dump(2) + "\n");
        artifacts.push_back("circumscribed_body.json");
        write_file(out_dir / "circumscribed_vertices.csv", cvg::vertices_to_csv(h.vform()));
        artifacts.push_back("circumscribed_vertices.csv");
        if (body->dim() == 3) {
            write_file(out_dir / "circumscribed.off", cvg::to_off(h.vform()));
            artifacts.push_back("circumscribed.off");
        }
        return 0;
    }

    if (command == "verify") {
        const std::string claim = cfg.at("claim").get<std::string>();
        std::vector<cvg::Report> reports;
        if (cfg.contains("body") && !cfg["body"].is_null()) {
            cvg::BodyPtr body = body_from_cfg(cfg);
            const std::string label = cfg.value("label", std::string("body"));
            const double t = cfg.at("t").get<double>();
            if (claim == "Thm2.1") {
                cvg::Theorem21Options opt;
                opt.seed = seed;
                opt.samples = samples;
                reports.push_back(cvg::verify_theorem21(body, label, t, opt).report);
            } else if (claim == "Thm3.1") {
                cvg::Theorem31Options opt;
                opt.seed = seed;
                opt.samples = samples;
                reports.push_back(cvg::verify_theorem31_regime_aware(body, label, t, opt));
            } else {
                throw cvg::ConfigError("--body applies only to Thm2.1 / Thm3.1, not " + claim);
            }
        } else {
            if (claim != "all" && !cvg::claim_known(claim))
                throw cvg::ConfigError("unknown claim: " + claim);
            reports = cvg::run_claim(claim, seed);
        }
        write_file(out_dir / "reports.csv", cvg::reports_to_csv(reports));
        write_file(out_dir / "reports.json", cvg::reports_to_json(reports));
        write_file(out_dir / "summary.md", cvg::reports_to_markdown(reports));
        artifacts.insert(artifacts.end(), {"reports.csv", "reports.json", "summary.md"});
        for (const cvg::Report& r : reports)
            if (!r.pass) return 1;
        return 0;
    }

    if (command == "plot-overlay") {
        cvg::BodyPtr body = body_from_cfg(cfg);
        if (body->dim() != 2)
            throw cvg::ConfigError("plot overlay supports d = 2 bodies only");
        const double t = cfg.at("t").get<double>();
        const int m = cfg.value("n", 64);
        cvg::MeasureOptions mo;
        mo.samples = samples;
        mo.seed = seed;

        std::vector<cvg::OverlayLayer> layers;
        layers.push_back({cvg::body_outline(*body), "black", "K"});

        cvg::FloatingQuery q;
        q.body = body;
        q.t = t;
        q.seed = seed;
        cvg::HPolytope outer = cvg::floating_outer_polytope(q, m, seed);
        layers.push_back({cvg::polygon_outline(outer.vform()), "crimson",
                          "K_t outer, t=" + cvg::format_double(t)});

        cvg::VPolytope inner =
            cvg::illumination_inner_polytope(*body, t, m, cvg::Vec(), seed, mo);
        layers.push_back({cvg::polygon_outline(inner), "seagreen", "K^t inner"});

        bool pn_included = true;
        try {
            cvg::GreedyResult res = cvg::greedy_inscribed(*body, t, seed);
            layers.push_back({cvg::polygon_outline(res.polytope), "steelblue", "P_n greedy"});
        } catch (const cvg::TargetTooLarge&) {
            pn_included = false;  // t above the greedy threshold; plot the rest
        }
        write_file(out_dir / "overlay.svg", cvg::svg_overlay(layers));
        artifacts.push_back("overlay.svg");
        if (!pn_included)
            std::cerr << "note: t above the inscribed-greedy threshold; P_n layer skipped\n";
        return 0;
    }

    if (command == "plot-scaling") {
        const int d = cfg.at("dim").get<int>();
        std::vector<int> grid;
        for (const auto& v : cfg.at("n_grid")) grid.push_back(v.get<int>());
        cvg::ScalingResult sr = cvg::scaling_study(d, grid, seed);
        write_file(out_dir / "scaling.csv", csv_points(sr.points));
        write_file(out_dir / "scaling.svg", cvg::svg_scaling_plot(sr));
        write_file(out_dir / "scaling_report.csv",
                   cvg::reports_to_csv({sr.report}));
        artifacts.insert(artifacts.end(), {"scaling.csv", "scaling.svg", "scaling_report.csv"});
        return sr.report.pass ? 0 : 1;
    }

    throw cvg::ConfigError("unknown command in configuration: " + command);
}

void write_manifest(const json& cfg, const fs::path& out_dir,
                    const std::vector<std::string>& artifacts) {
    json manifest = cfg;
    manifest["artifacts"] = artifacts;
    write_file(out_dir / "manifest.json", manifest.dump(2) + "\n");
}

int run_and_record(const json& cfg, const fs::path& out_dir) {
    std::vector<std::string> artifacts;
    const int rc = execute_run(cfg, out_dir, artifacts);
    write_manifest(cfg, out_dir, artifacts);
    return rc;
}

int replay_manifest(const fs::path& manifest_path) {
    json manifest;
    try {
        manifest = json::parse(read_file(manifest_path));
    } catch (const json::exception& e) {
        throw cvg::ConfigError("bad manifest: " + std::string(e.what()));
    }
    const fs::path dir = manifest_path.has_parent_path() ? manifest_path.parent_path() : ".";
    const fs::path tmp = dir / ".replay";
    std::vector<std::string> artifacts;
    const int rc = execute_run(manifest, tmp, artifacts);

    int mismatches = 0;
    for (const auto& name : manifest.value("artifacts", std::vector<std::string>{})) {
        const fs::path original = dir / name, fresh = tmp / name;
        if (!fs::exists(fresh) || read_file(original) != read_file(fresh)) {
            std::cerr << "replay mismatch: " << name << "\n";
            ++mismatches;
        }
    }
    if (mismatches == 0) {
        std::cout << "replay ok: " << manifest.value("artifacts", std::vector<std::string>{}).size()
                  << " artifacts reproduced byte-for-byte\n";
        return rc;
    }
    return 1;
}

struct CliState {
    std::string body_path;
    double t = -1.0;
    double t_frac = -1.0;
    int n = 0;
    int dim = 3;
    std::vector<int> n_grid;
    long long samples = 200'000;
    std::uint64_t seed = 0;
    std::string out_dir;
    std::string claim;
    std::string manifest;
};

fs::path resolve_out_dir(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("CVG_OUT_DIR"); env && *env) return env;
    return ".";
}

/* Resolve --t / --t-frac against the body volume; the manifest stores both
   forms so either can seed a replay. */
void resolve_level(json& cfg, const CliState& st, const cvg::BodyPtr& body) {
    if (st.t >= 0.0 && st.t_frac >= 0.0)
        throw cvg::ConfigError("give either --t or --t-frac, not both");
    if (st.t < 0.0 && st.t_frac < 0.0)
        throw cvg::ConfigError("this command needs --t or --t-frac");
    cvg::MeasureOptions mo;
    mo.samples = st.samples;
    mo.seed = st.seed;
    const double vol = cvg::volume(*body, mo).value;
    const double t = st.t >= 0.0 ? st.t : st.t_frac * vol;
    cfg["t"] = t;
    cfg["t_frac"] = t / vol;
}

json base_cfg(const CliState& st, const std::string& command, bool with_body) {
    json cfg;
    cfg["command"] = command;
    cfg["seed"] = st.seed;
    cfg["samples"] = st.samples;
    if (with_body) {
        if (st.body_path.empty()) throw cvg::ConfigError("this command needs --body");
        cvg::BodyPtr body = cvg::load_body_file(st.body_path);
        cfg["body"] = cvg::body_to_json(body);
        cfg["body_path"] = st.body_path;
        cfg["label"] = fs::path(st.body_path).stem().string();
    }
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"floating bodies, illumination bodies, and polytopal approximation"};
    app.require_subcommand(1);
    CliState st;

    auto add_common = [&](CLI::App* cmd, bool with_out = true) {
        cmd->add_option("--seed", st.seed, "root random seed");
        cmd->add_option("--samples", st.samples, "Monte Carlo sample budget");
        if (with_out) cmd->add_option("--out", st.out_dir, "output directory (or $CVG_OUT_DIR)");
    };

    CLI::App* approx = app.add_subcommand("approx", "polytope constructions");
    approx->require_subcommand(1);
    CLI::App* inscribe = approx->add_subcommand("inscribe", "greedy inscribed polytope");
    inscribe->add_option("--body", st.body_path, "body spec JSON file")->required();
    inscribe->add_option("--t", st.t, "cap volume level");
    inscribe->add_option("--t-frac", st.t_frac, "cap volume as a fraction of vol(K)");
    add_common(inscribe);
    CLI::App* circumscribe = approx->add_subcommand("circumscribe", "tangent-facet polytope");
    circumscribe->add_option("--body", st.body_path, "body spec JSON file")->required();
    circumscribe->add_option("--n", st.n, "facet count")->required();
    add_common(circumscribe);

    CLI::App* verify = app.add_subcommand("verify", "run claim checks");
    verify->add_option("--claim", st.claim, "claim id or 'all'")->required();
    verify->add_option("--body", st.body_path, "target body (Thm2.1 / Thm3.1 only)");
    verify->add_option("--t", st.t, "cap / level parameter");
    verify->add_option("--t-frac", st.t_frac, "level as a fraction of vol(K)");
    add_common(verify);

    CLI::App* plot = app.add_subcommand("plot", "SVG figures");
    plot->require_subcommand(1);
    CLI::App* overlay = plot->add_subcommand("overlay", "K with its approximants (d = 2)");
    overlay->add_option("--body", st.body_path, "body spec JSON file")->required();
    overlay->add_option("--t", st.t, "level");
    overlay->add_option("--t-frac", st.t_frac, "level as a fraction of vol(K)");
    overlay->add_option("--n", st.n, "direction budget for the polytope layers");
    add_common(overlay);
    CLI::App* scaling = plot->add_subcommand("scaling", "log-log approximation order");
    scaling->add_option("--d", st.dim, "dimension (2 or 3)")->required();
    scaling->add_option("--n-grid", st.n_grid, "vertex counts")->delimiter(',');
    add_common(scaling);

    CLI::App* replay = app.add_subcommand("replay", "re-run a manifest and compare artifacts");
    replay->add_option("--manifest", st.manifest, "manifest.json path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        const fs::path out = resolve_out_dir(st.out_dir);
        if (inscribe->parsed()) {
            json cfg = base_cfg(st, "approx-inscribe", true);
            resolve_level(cfg, st, cvg::body_from_json(cfg["body"]));
            return run_and_record(cfg, out);
        }
        if (circumscribe->parsed()) {
            json cfg = base_cfg(st, "approx-circumscribe", true);
            cfg["n"] = st.n;
            return run_and_record(cfg, out);
        }
        if (verify->parsed()) {
            json cfg = base_cfg(st, "verify", !st.body_path.empty());
            cfg["claim"] = st.claim;
            if (!st.body_path.empty())
                resolve_level(cfg, st, cvg::body_from_json(cfg["body"]));
            return run_and_record(cfg, out);
        }
        if (overlay->parsed()) {
            json cfg = base_cfg(st, "plot-overlay", true);
            if (st.n > 0) cfg["n"] = st.n;
            resolve_level(cfg, st, cvg::body_from_json(cfg["body"]));
            return run_and_record(cfg, out);
        }
        if (scaling->parsed()) {
            json cfg = base_cfg(st, "plot-scaling", false);
            cfg["dim"] = st.dim;
            if (st.n_grid.empty())
                st.n_grid = st.dim == 2 ? std::vector<int>{8, 16, 32, 64, 128}
                                        : std::vector<int>{32, 64, 128, 256, 512};
            cfg["n_grid"] = st.n_grid;
            return run_and_record(cfg, out);
        }
        if (replay->parsed()) return replay_manifest(st.manifest);
        throw cvg::ConfigError("no command selected");
    } catch (const cvg::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const cvg::GeometryError& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
