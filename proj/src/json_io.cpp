#include "qsd/json_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>

namespace qsd {

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw JsonError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw JsonError("parse error in " + path + ": " + e.what());
    }
}

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw JsonError("cannot write " + path);
    out << j.dump(2) << "\n";
}

namespace {

Complex complex_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw JsonError("complex values must be [re, im] pairs");
    return {j[0].get<double>(), j[1].get<double>()};
}

Json complex_to_json(const Complex& c) { return Json::array({c.real(), c.imag()}); }

std::pair<int, int> dims_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2)
        throw JsonError("dims must be [dA, dB]");
    return {j[0].get<int>(), j[1].get<int>()};
}

}  // namespace

PureState pure_state_from_json(const Json& j) {
    if (!j.contains("amplitudes")) throw JsonError("pure state needs \"amplitudes\"");
    const Json& amps = j["amplitudes"];
    if (!amps.is_array() || amps.empty()) throw JsonError("amplitudes must be a non-empty array");
    Vector v(static_cast<Eigen::Index>(amps.size()));
    for (std::size_t i = 0; i < amps.size(); ++i) v(static_cast<Eigen::Index>(i)) = complex_from_json(amps[i]);
    int da = static_cast<int>(v.size()), db = 1;
    if (j.contains("dims")) std::tie(da, db) = dims_from_json(j["dims"]);
    try {
        return PureState(std::move(v), da, db);
    } catch (const Error& e) {
        throw JsonError(std::string("invalid pure state: ") + e.what());
    }
}

Matrix matrix_from_json(const Json& j) {
    const Json& rows = j.contains("matrix") ? j["matrix"] : j;
    if (!rows.is_array() || rows.empty()) throw JsonError("matrix must be a non-empty array of rows");
    const std::size_t r = rows.size(), c = rows[0].size();
    Matrix m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
    for (std::size_t i = 0; i < r; ++i) {
        if (!rows[i].is_array() || rows[i].size() != c) throw JsonError("ragged matrix rows");
        for (std::size_t k = 0; k < c; ++k)
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) =
                complex_from_json(rows[i][k]);
    }
    if (!m.allFinite()) throw JsonError("matrix has non-finite entries");
    return m;
}

DensityOperator density_from_json(const Json& j) {
    if (!j.contains("matrix")) throw JsonError("density operator needs \"matrix\"");
    Matrix m = matrix_from_json(j);
    std::optional<std::pair<int, int>> dims;
    if (j.contains("dims")) dims = dims_from_json(j["dims"]);
    try {
        return validate_density(m, dims);
    } catch (const Error& e) {
        throw JsonError(std::string("invalid density operator: ") + e.what());
    }
}

State state_from_json(const Json& j) {
    if (j.contains("amplitudes")) return pure_state_from_json(j);
    if (j.contains("matrix")) return density_from_json(j);
    throw JsonError("state needs \"amplitudes\" or \"matrix\"");
}

Ensemble ensemble_from_json(const Json& j) {
    if (!j.contains("items") || !j["items"].is_array() || j["items"].empty())
        throw JsonError("ensemble needs a non-empty \"items\" array");
    Ensemble e;
    for (const Json& item : j["items"]) {
        if (!item.contains("prob") || !item.contains("state"))
            throw JsonError("ensemble items need \"prob\" and \"state\"");
        e.items.emplace_back(item["prob"].get<double>(), state_from_json(item["state"]));
    }
    try {
        e.validate();
    } catch (const Error& err) {
        throw JsonError(std::string("invalid ensemble: ") + err.what());
    }
    return e;
}

ProbVector probvector_from_json(const Json& j) {
    if (!j.contains("components") || !j["components"].is_array() || j["components"].empty())
        throw JsonError("probability vector needs a non-empty \"components\" array");
    RealVector v(static_cast<Eigen::Index>(j["components"].size()));
    for (std::size_t i = 0; i < j["components"].size(); ++i)
        v(static_cast<Eigen::Index>(i)) = j["components"][i].get<double>();
    try {
        return ProbVector(std::move(v));
    } catch (const Error& e) {
        throw JsonError(std::string("invalid probability vector: ") + e.what());
    }
}

Json to_json(const PureState& s) {
    Json amps = Json::array();
    for (Eigen::Index i = 0; i < s.amplitudes().size(); ++i)
        amps.push_back(complex_to_json(s.amplitudes()(i)));
    Json out;
    out["dims"] = Json::array({s.dim_a(), s.dim_b()});
    out["amplitudes"] = std::move(amps);
    return out;
}

Json to_json(const Matrix& m) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(complex_to_json(m(i, k)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json to_json(const DensityOperator& rho) {
    Json out;
    out["matrix"] = to_json(rho.matrix());
    if (rho.dims()) out["dims"] = Json::array({rho.dims()->first, rho.dims()->second});
    return out;
}

Json to_json(const Ensemble& e) {
    Json items = Json::array();
    for (const auto& [p, s] : e.items) {
        Json item;
        item["prob"] = p;
        item["state"] = std::holds_alternative<PureState>(s)
                            ? to_json(std::get<PureState>(s))
                            : to_json(std::get<DensityOperator>(s));
        items.push_back(std::move(item));
    }
    Json out;
    out["items"] = std::move(items);
    return out;
}

Json to_json(const RealVector& v) {
    Json out = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
    return out;
}

double report_round(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return std::strtod(buf, nullptr);
}

double report_tolerance(double fallback) {
    if (const char* env = std::getenv("QSD_TOLERANCE")) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end != env && v > 0.0) return v;
    }
    return fallback;
}

}  // namespace qsd
