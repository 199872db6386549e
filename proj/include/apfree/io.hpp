#pragma once

// JSON (de)serialization for the value types and a small CSV writer.
// Rationals travel as exact "p/q" strings; integers as JSON integers.
// Objects carry "schema": 1; readers accept a missing schema field.

#include "core.hpp"
#include "detect.hpp"
#include "rksolver.hpp"
#include "bounds.hpp"
#include "estimate.hpp"

#include <json.hpp>

#include <fstream>
#include <ostream>
#include <string>

namespace apfree {

using Json = nlohmann::json;

inline Json rat_to_json(const Rat& r) { return format_rational(r); }

inline Rat rat_from_json(const Json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rat(j.get<long long>());
    if (j.is_number_float()) return Rat(j.get<double>());
    throw ParameterError("expected rational (string or number), got: " + j.dump());
}

inline Json to_json(const PointSet& q) {
    Json pts = Json::array();
    for (const auto& p : q.points()) {
        Json row = Json::array();
        for (const auto& c : p) row.push_back(rat_to_json(c));
        pts.push_back(std::move(row));
    }
    return Json{{"schema", 1}, {"kind", "point_set"}, {"dim", q.dim()}, {"points", std::move(pts)}};
}

inline PointSet point_set_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("points"))
        throw ParameterError("point set JSON needs 'dim' and 'points'");
    int d = j.at("dim").get<int>();
    std::vector<RatVec> pts;
    for (const auto& row : j.at("points")) {
        RatVec p;
        for (const auto& c : row) p.push_back(rat_from_json(c));
        pts.push_back(std::move(p));
    }
    return PointSet::from_points(d, std::move(pts));
}

inline Json to_json(const GridSet& g) {
    Json pts = Json::array();
    for (const auto& p : g.points()) pts.push_back(p);
    return Json{{"schema", 1},
                {"kind", "grid_set"},
                {"dim", g.dim()},
                {"side", g.side()},
                {"points", std::move(pts)}};
}

inline GridSet grid_set_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("side") || !j.contains("points"))
        throw ParameterError("grid set JSON needs 'dim', 'side' and 'points'");
    int m = j.at("dim").get<int>();
    long long N = j.at("side").get<long long>();
    std::vector<std::vector<long long>> pts;
    for (const auto& row : j.at("points")) pts.push_back(row.get<std::vector<long long>>());
    return GridSet::from_points(m, N, std::move(pts));
}

inline Json to_json(const Orientation& o) {
    Json cols = Json::array();
    for (const auto& v : o.columns()) {
        Json col = Json::array();
        for (const auto& c : v) col.push_back(rat_to_json(c));
        cols.push_back(std::move(col));
    }
    return Json{{"dim", o.ambient_dim()}, {"columns", std::move(cols)}};
}

inline Orientation orientation_from_json(const Json& j) {
    int d = j.at("dim").get<int>();
    std::vector<RatVec> cols;
    for (const auto& col : j.at("columns")) {
        RatVec v;
        for (const auto& c : col) v.push_back(rat_from_json(c));
        cols.push_back(std::move(v));
    }
    return Orientation::from_columns(d, std::move(cols));
}

inline Json to_json(const Patch& p) {
    Json t = Json::array();
    for (const auto& c : p.t) t.push_back(rat_to_json(c));
    return Json{{"t", std::move(t)},
                {"delta", rat_to_json(p.delta)},
                {"k", p.k},
                {"orientation", to_json(p.orientation)}};
}

inline Patch patch_from_json(const Json& j) {
    RatVec t;
    for (const auto& c : j.at("t")) t.push_back(rat_from_json(c));
    return Patch::make(std::move(t), rat_from_json(j.at("delta")),
                       orientation_from_json(j.at("orientation")), j.at("k").get<int>());
}

inline Json to_json(const DetectionResult& r) {
    Json j{{"schema", 1},
           {"contains", r.contains},
           {"assignments_checked", r.assignments_checked},
           {"pruned", r.pruned},
           {"complete", r.complete},
           {"exact", r.exact},
           {"boundary_uncertain", r.boundary_uncertain},
           {"norm", r.norm == Norm::max ? "max" : "euclidean"}};
    j["witness"] = r.witness ? to_json(*r.witness) : Json(nullptr);
    return j;
}

inline const char* status_name(RkRecord::Status s) {
    switch (s) {
        case RkRecord::Status::exact: return "exact";
        case RkRecord::Status::bounded: return "bounded";
        default: return "timeout";
    }
}

inline RkRecord::Status status_from_name(const std::string& s) {
    if (s == "exact") return RkRecord::Status::exact;
    if (s == "bounded") return RkRecord::Status::bounded;
    if (s == "timeout") return RkRecord::Status::timeout;
    throw ParameterError("unknown record status: " + s);
}

inline Json to_json(const RkRecord& r) {
    Json j{{"schema", 1}, {"k", r.k}, {"m", r.m}, {"N", r.N},
           {"status", status_name(r.status)}, {"lower", r.lower}, {"upper", r.upper}};
    if (r.d != r.m) j["d"] = r.d;
    if (r.status == RkRecord::Status::exact) j["value"] = r.value;
    if (!r.witness.empty()) {
        Json pts = Json::array();
        for (const auto& p : r.witness) pts.push_back(p);
        j["witness"] = Json{{"dim", r.d}, {"side", r.N}, {"points", std::move(pts)}};
    }
    return j;
}

inline RkRecord record_from_json(const Json& j) {
    RkRecord r;
    r.k = j.at("k").get<int>();
    r.m = j.at("m").get<int>();
    r.N = j.at("N").get<long long>();
    r.d = j.contains("d") ? j.at("d").get<int>() : r.m;
    r.status = status_from_name(j.at("status").get<std::string>());
    if (j.contains("value")) r.value = j.at("value").get<long long>();
    if (j.contains("lower")) r.lower = j.at("lower").get<long long>();
    if (j.contains("upper")) r.upper = j.at("upper").get<long long>();
    if (r.status == RkRecord::Status::exact) {
        if (!j.contains("value")) throw ParameterError("exact record without value");
        r.lower = r.upper = r.value;
    }
    if (j.contains("witness") && !j.at("witness").is_null())
        for (const auto& row : j.at("witness").at("points"))
            r.witness.push_back(row.get<std::vector<long long>>());
    return r;
}

inline Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParameterError("cannot open file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const Json::parse_error& e) {
        throw ParameterError("malformed JSON in " + path + ": " + e.what());
    }
    return j;
}

inline Json to_json(const MinEpsilonResult& r) {
    Json j{{"infinite", r.infinite},
           {"exact", r.exact},
           {"assignments_checked", r.assignments_checked}};
    if (!r.infinite) {
        j["value"] = format_rational(r.value);
        j["approx"] = r.approx;
    }
    return j;
}

inline Json to_json(const BoundReport& r) {
    Json inputs = Json::object();
    for (const auto& [key, val] : r.inputs) inputs[key] = val;
    Json j{{"name", r.name}, {"inputs", std::move(inputs)}, {"valid", r.valid}, {"notes", r.notes}};
    if (std::isnan(r.value))
        j["value"] = nullptr;
    else
        j["value"] = r.value;
    if (r.log_value) j["log_value"] = *r.log_value;
    if (r.correction)
        j["correction"] = Json{{"pow2_exponent", r.correction->pow2_exponent.str()},
                               {"coefficient", r.correction->coefficient}};
    return j;
}

inline Json to_json(const ChainReport& r) {
    Json bounds = Json::array();
    for (const auto& b : r.bounds) bounds.push_back(to_json(b));
    Json ineqs = Json::array();
    for (const auto& iq : r.inequalities)
        ineqs.push_back(Json{{"name", iq.name}, {"lhs", iq.lhs}, {"rhs", iq.rhs}, {"pass", iq.pass}});
    return Json{{"bounds", std::move(bounds)},
                {"inequalities", std::move(ineqs)},
                {"trend", r.trend},
                {"all_pass", r.all_pass}};
}

inline Json to_json(const BoxDimFit& f) {
    Json samples = Json::array();
    for (const auto& [side, count] : f.samples)
        samples.push_back(Json{{"side", side}, {"count", count}});
    return Json{{"dimension", f.dimension},
                {"residual", f.residual},
                {"reliable", f.reliable},
                {"samples", std::move(samples)}};
}

inline Json to_json(const CoveringProfile& p) {
    Json samples = Json::array();
    for (const auto& s : p.samples)
        samples.push_back(Json{{"restricted", s.restricted},
                               {"covering", s.covering},
                               {"exact", s.exact},
                               {"local_dim", s.local_dim}});
    return Json{{"samples", std::move(samples)},
                {"max_local_dim", p.max_local_dim},
                {"exact", p.exact}};
}

inline void save_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw ParameterError("cannot write file: " + path);
    out << j.dump(2) << '\n';
}

// CSV with a single leading comment line echoing the run parameters.
inline void write_csv(std::ostream& out, const std::string& params_comment,
                      const std::vector<std::string>& columns,
                      const std::vector<std::vector<std::string>>& rows) {
    out << "# " << params_comment << '\n';
    for (std::size_t i = 0; i < columns.size(); ++i)
        out << columns[i] << (i + 1 < columns.size() ? "," : "\n");
    for (const auto& row : rows)
        for (std::size_t i = 0; i < row.size(); ++i)
            out << row[i] << (i + 1 < row.size() ? "," : "\n");
}

}  // namespace apfree
