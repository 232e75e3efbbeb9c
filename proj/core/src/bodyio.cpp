#include "cvg/bodyio.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <set>
#include <sstream>

#include "cvg/report.hpp"

namespace cvg {

using nlohmann::json;

namespace {

json vec_to_json(const Vec& v) {
    json a = json::array();
    for (int i = 0; i < v.size(); ++i) a.push_back(v[i]);
    return a;
}

json mat_to_json(const Mat& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(row);
    }
    return rows;
}

Vec vec_from_json(const json& a, const char* what) {
    if (!a.is_array() || a.empty())
        throw ConfigError(std::string("body spec: ") + what + " must be a nonempty array");
    Vec v(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i].is_number())
            throw ConfigError(std::string("body spec: ") + what + " must hold numbers");
        v[static_cast<int>(i)] = a[i].get<double>();
    }
    return v;
}

Mat mat_from_json(const json& rows, const char* what) {
    if (!rows.is_array() || rows.empty())
        throw ConfigError(std::string("body spec: ") + what + " must be a matrix");
    const std::size_t cols = rows[0].is_array() ? rows[0].size() : 0;
    if (cols == 0) throw ConfigError(std::string("body spec: ") + what + " must be a matrix");
    Mat m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (!rows[i].is_array() || rows[i].size() != cols)
            throw ConfigError(std::string("body spec: ragged matrix in ") + what);
        for (std::size_t j = 0; j < cols; ++j)
            m(static_cast<int>(i), static_cast<int>(j)) = rows[i][j].get<double>();
    }
    return m;
}

void require_fields(const json& spec, const std::set<std::string>& allowed) {
    for (const auto& item : spec.items()) {
        if (!allowed.count(item.key()))
            throw ConfigError("body spec: unknown field '" + item.key() + "' for type " +
                              spec.value("type", "?"));
    }
    for (const std::string& key : allowed) {
        if (!spec.contains(key))
            throw ConfigError("body spec: missing field '" + key + "' for type " +
                              spec.value("type", "?"));
    }
}

std::vector<Vec> point_list_from_json(const json& a, const char* what) {
    if (!a.is_array() || a.empty())
        throw ConfigError(std::string("body spec: ") + what + " must be a nonempty array");
    std::vector<Vec> pts;
    pts.reserve(a.size());
    for (const auto& row : a) pts.push_back(vec_from_json(row, what));
    return pts;
}

}  // namespace

json body_to_json(const BodyPtr& body) {
    if (auto ball = std::dynamic_pointer_cast<const Ball>(body))
        return json{{"type", "ball"}, {"center", vec_to_json(ball->center())},
                    {"radius", ball->radius()}};
    if (auto ell = std::dynamic_pointer_cast<const Ellipsoid>(body))
        return json{{"type", "ellipsoid"}, {"center", vec_to_json(ell->center())},
                    {"map", mat_to_json(ell->map())}};
    if (auto vp = std::dynamic_pointer_cast<const VPolytope>(body)) {
        json verts = json::array();
        for (const Vec& v : vp->vertices()) verts.push_back(vec_to_json(v));
        return json{{"type", "vpoly"}, {"vertices", verts}};
    }
    if (auto hp = std::dynamic_pointer_cast<const HPolytope>(body)) {
        json normals = json::array(), offsets = json::array();
        for (const Halfspace& h : hp->constraints()) {
            normals.push_back(vec_to_json(h.normal));
            offsets.push_back(h.offset);
        }
        return json{{"type", "hpoly"}, {"normals", normals}, {"offsets", offsets}};
    }
    if (auto aff = std::dynamic_pointer_cast<const AffineImage>(body))
        return json{{"type", "affine"},
                    {"base", body_to_json(aff->base())},
                    {"map", mat_to_json(aff->map())},
                    {"shift", vec_to_json(aff->shift())}};
    throw ConfigError("body_to_json: unsupported body type");
}

BodyPtr body_from_json(const json& spec) {
    if (!spec.is_object() || !spec.contains("type") || !spec["type"].is_string())
        throw ConfigError("body spec: expected an object with a 'type' string");
    const std::string type = spec["type"].get<std::string>();
    if (type == "ball") {
        require_fields(spec, {"type", "center", "radius"});
        if (!spec["radius"].is_number())
            throw ConfigError("body spec: ball radius must be a number");
        return std::make_shared<Ball>(vec_from_json(spec["center"], "center"),
                                      spec["radius"].get<double>());
    }
    if (type == "ellipsoid") {
        require_fields(spec, {"type", "center", "map"});
        return std::make_shared<Ellipsoid>(vec_from_json(spec["center"], "center"),
                                           mat_from_json(spec["map"], "map"));
    }
    if (type == "vpoly") {
        require_fields(spec, {"type", "vertices"});
        return std::make_shared<VPolytope>(point_list_from_json(spec["vertices"], "vertices"));
    }
    if (type == "hpoly") {
        require_fields(spec, {"type", "normals", "offsets"});
        std::vector<Vec> normals = point_list_from_json(spec["normals"], "normals");
        if (!spec["offsets"].is_array() || spec["offsets"].size() != normals.size())
            throw ConfigError("body spec: offsets must match normals");
        std::vector<double> offsets;
        for (const auto& o : spec["offsets"]) offsets.push_back(o.get<double>());
        return std::make_shared<HPolytope>(normals, offsets);
    }
    if (type == "affine") {
        require_fields(spec, {"type", "base", "map", "shift"});
        return std::make_shared<AffineImage>(body_from_json(spec["base"]),
                                             mat_from_json(spec["map"], "map"),
                                             vec_from_json(spec["shift"], "shift"));
    }
    throw ConfigError("body spec: unknown type '" + type + "'");
}

BodyPtr load_body_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open body file: " + path);
    json spec;
    try {
        in >> spec;
    } catch (const json::exception& e) {
        throw ConfigError("bad JSON in " + path + ": " + e.what());
    }
    return body_from_json(spec);
}

void save_body_file(const BodyPtr& body, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write body file: " + path);
    out << body_to_json(body).dump(2) << "\n";
}

json cap_to_json(const Cap& cap) {
    return json{{"anchor", vec_to_json(cap.anchor)},   {"normal", vec_to_json(cap.normal)},
                {"depth", cap.depth},                  {"target", cap.target},
                {"cut_offset", cap.cut_offset()},      {"achieved", volume_estimate_to_json(cap.achieved)}};
}

json volume_estimate_to_json(const VolumeEstimate& est) {
    return json{{"value", est.value},
                {"std_error", est.std_error},
                {"samples", est.samples},
                {"method", to_string(est.method)},
                {"seed", est.seed}};
}

json overshoot_to_json(const OvershootResult& res) {
    json active = json::array();
    for (const auto& [facet, excess] : res.active_facets)
        active.push_back(json{{"facet", facet}, {"excess", excess}});
    return json{{"value", volume_estimate_to_json(res.value)}, {"active_facets", active}};
}

json greedy_run_to_json(const GreedyRun& run) {
    json vertices = json::array(), caps = json::array();
    for (const Vec& v : run.vertices) vertices.push_back(vec_to_json(v));
    for (const Cap& c : run.caps) caps.push_back(cap_to_json(c));
    return json{{"t", run.t},
                {"seed", run.seed},
                {"rejection_streak_limit", run.rejection_streak_limit},
                {"terminated_by",
                 run.terminated_by == GreedyStop::Saturation ? "saturation" : "iteration_cap"},
                {"candidates_tried", run.candidates_tried},
                {"refine_accepts", run.refine_accepts},
                {"vertices", vertices},
                {"caps", caps}};
}

std::string volume_estimate_csv_header() { return "value,std_error,samples,method,seed"; }

std::string volume_estimate_csv_row(const VolumeEstimate& est) {
    std::ostringstream os;
    os << format_double(est.value) << "," << format_double(est.std_error) << "," << est.samples
       << "," << to_string(est.method) << "," << est.seed;
    return os.str();
}

std::string to_off(const VPolytope& p) {
    if (p.dim() != 3) throw ConfigError("to_off: OFF export is 3-d only");
    std::ostringstream os;
    os << "OFF\n";
    const auto& verts = p.vertices();
    const auto& facets = p.facets();
    std::size_t edges = 0;
    for (const auto& f : facets) edges += f.vertices.size();
    os << verts.size() << " " << facets.size() << " " << edges / 2 << "\n";
    for (const Vec& v : verts)
        os << format_double(v[0]) << " " << format_double(v[1]) << " " << format_double(v[2])
           << "\n";
    for (std::size_t i = 0; i < facets.size(); ++i) {
        std::vector<int> cycle = p.facet_cycle(static_cast<int>(i));
        os << cycle.size();
        for (int idx : cycle) os << " " << idx;
        os << "\n";
    }
    return os.str();
}

VPolytope off_to_polytope(const std::string& text) {
    std::istringstream in(text);
    std::string tok;
    if (!(in >> tok)) throw ConfigError("off: empty input");
    long long nv = 0, nf = 0, ne = 0;
    if (tok == "OFF") {
        if (!(in >> nv >> nf >> ne)) throw ConfigError("off: bad counts line");
    } else {
        // headerless variant: the first token is already the vertex count
        try {
            nv = std::stoll(tok);
        } catch (...) {
            throw ConfigError("off: expected OFF header or counts");
        }
        if (!(in >> nf >> ne)) throw ConfigError("off: bad counts line");
    }
    if (nv < 4) throw ConfigError("off: need at least 4 vertices");
    std::vector<Vec> pts;
    pts.reserve(static_cast<std::size_t>(nv));
    for (long long i = 0; i < nv; ++i) {
        Vec v(3);
        if (!(in >> v[0] >> v[1] >> v[2])) throw ConfigError("off: truncated vertex block");
        pts.push_back(v);
    }
    return VPolytope(pts);
}

std::string vertices_to_csv(const VPolytope& p) {
    std::ostringstream os;
    for (const Vec& v : p.vertices()) {
        for (int i = 0; i < v.size(); ++i) os << (i ? "," : "") << format_double(v[i]);
        os << "\n";
    }
    return os.str();
}

std::vector<Vec> csv_to_points(const std::string& text) {
    std::vector<Vec> pts;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<double> vals;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) {
            try {
                vals.push_back(std::stod(cell));
            } catch (...) {
                throw ConfigError("csv: non-numeric cell '" + cell + "'");
            }
        }
        if (vals.empty()) continue;
        if (!pts.empty() && static_cast<int>(vals.size()) != pts.front().size())
            throw ConfigError("csv: inconsistent column count");
        Vec v(vals.size());
        for (std::size_t i = 0; i < vals.size(); ++i) v[static_cast<int>(i)] = vals[i];
        pts.push_back(v);
    }
    if (pts.empty()) throw ConfigError("csv: no points");
    return pts;
}

}  // namespace cvg
