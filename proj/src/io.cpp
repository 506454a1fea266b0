#include "anticode/io.hpp"

#include <fstream>

namespace anticode {

namespace {

const Json& require(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key)) throw InputError(where + ": missing \"" + key + "\"");
    return j.at(key);
}

std::uint64_t require_uint(const Json& j, const char* key, const std::string& where) {
    const Json& v = require(j, key, where);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
        throw InputError(where + ": \"" + key + "\" must be a non-negative integer");
    }
    return v.get<std::uint64_t>();
}

std::string kind_name(DualDistance::Kind k) {
    switch (k) {
        case DualDistance::Kind::Exact: return "exact";
        case DualDistance::Kind::AtLeast: return "at_least";
        case DualDistance::Kind::ZeroDual: return "zero_dual";
    }
    return "exact";
}

DualDistance::Kind kind_from(const std::string& s) {
    if (s == "exact") return DualDistance::Kind::Exact;
    if (s == "at_least") return DualDistance::Kind::AtLeast;
    if (s == "zero_dual") return DualDistance::Kind::ZeroDual;
    throw InputError("unknown dual distance kind '" + s + "'");
}

}  // namespace

LinearCode from_spec(const Json& doc) {
    if (!doc.is_object()) throw InputError("code spec: document must be a JSON object");
    const Json& field_j = require(doc, "field", "code spec");
    const auto p = require_uint(field_j, "p", "code spec field");
    const auto m = require_uint(field_j, "m", "code spec field");
    if (p > UINT32_MAX || m > 64) throw InputError("code spec field: p or m out of range");
    std::optional<std::vector<std::uint32_t>> modulus;
    if (field_j.contains("modulus")) {
        const Json& mj = field_j.at("modulus");
        if (!mj.is_array()) throw InputError("code spec field: \"modulus\" must be an array");
        modulus.emplace();
        for (const auto& c : mj) {
            if (!c.is_number_integer() || c.get<std::int64_t>() < 0) {
                throw InputError("code spec field: modulus coefficients must be non-negative integers");
            }
            modulus->push_back(c.get<std::uint32_t>());
        }
    }
    Field field = gf::make_field(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(m), modulus);

    const Json& gen = require(doc, "generator", "code spec");
    if (!gen.is_array() || gen.empty()) throw InputError("code spec: \"generator\" must be a nonempty array of rows");
    std::vector<std::vector<Elem>> rows;
    for (std::size_t r = 0; r < gen.size(); ++r) {
        const Json& row = gen[r];
        if (!row.is_array() || row.empty()) throw InputError("code spec: generator row " + std::to_string(r) + " must be a nonempty array");
        std::vector<Elem> vals;
        for (const auto& e : row) {
            if (!e.is_number_integer() || e.get<std::int64_t>() < 0 ||
                !field.contains(e.get<std::uint64_t>())) {
                throw InputError("code spec: generator row " + std::to_string(r) + " has an entry outside [0, q)");
            }
            vals.push_back(e.get<Elem>());
        }
        if (!rows.empty() && vals.size() != rows.front().size()) {
            throw InputError("code spec: generator is not rectangular (row " + std::to_string(r) + ")");
        }
        rows.push_back(std::move(vals));
    }
    LinearCode code(Matrix::from_rows(field, rows));
    if (doc.contains("name") && doc.at("name").is_string()) code.name = doc.at("name").get<std::string>();
    return code;
}

Json to_spec(const LinearCode& code) {
    Json doc;
    if (!code.name.empty()) doc["name"] = code.name;
    doc["field"] = {{"p", code.field().characteristic()},
                    {"m", code.field().degree()},
                    {"modulus", code.field().modulus()}};
    Json rows = Json::array();
    for (std::size_t r = 0; r < code.dimension(); ++r) {
        auto row = code.generator().row(r);
        rows.push_back(std::vector<Elem>(row.begin(), row.end()));
    }
    doc["generator"] = std::move(rows);
    return doc;
}

LinearCode load_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open code spec '" + path + "'");
    Json doc;
    try {
        in >> doc;
    } catch (const Json::parse_error& e) {
        throw InputError("code spec '" + path + "' is not valid JSON: " + e.what());
    }
    return from_spec(doc);
}

void save_spec_file(const LinearCode& code, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write '" + path + "'");
    out << to_spec(code).dump(2) << "\n";
}

Json to_json(const BoundReport& r) {
    return {{"bound", r.bound_name},   {"statement", r.statement},           {"lhs", to_string(r.lhs)},
            {"rhs", to_string(r.rhs)}, {"holds", r.holds},                   {"tight", r.tight},
            {"hypotheses_met", r.hypotheses_met}, {"reasons", r.reasons}};
}

BoundReport bound_report_from_json(const Json& j) {
    BoundReport r;
    r.bound_name = require(j, "bound", "bound report").get<std::string>();
    r.statement = j.value("statement", std::string{});
    r.lhs = parse_rational(require(j, "lhs", "bound report").get<std::string>());
    r.rhs = parse_rational(require(j, "rhs", "bound report").get<std::string>());
    r.holds = require(j, "holds", "bound report").get<bool>();
    r.tight = require(j, "tight", "bound report").get<bool>();
    r.hypotheses_met = require(j, "hypotheses_met", "bound report").get<bool>();
    r.reasons = j.value("reasons", std::vector<std::string>{});
    return r;
}

Json to_json(const std::vector<BoundReport>& reports) {
    Json arr = Json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    return arr;
}

std::vector<BoundReport> bound_reports_from_json(const Json& j) {
    if (!j.is_array()) throw InputError("bound reports: expected an array");
    std::vector<BoundReport> out;
    for (const auto& e : j) out.push_back(bound_report_from_json(e));
    return out;
}

Json to_json(const CodeMetrics& m) {
    Json j = {{"q", m.q},
              {"n", m.n},
              {"k", m.k},
              {"d", m.d},
              {"delta", m.delta},
              {"dual_distance", {{"kind", kind_name(m.dual_distance.kind)}, {"value", m.dual_distance.value}}},
              {"structural", m.structural}};
    if (m.weight_distribution) {
        Json dist = Json::object();
        for (const auto& [w, c] : *m.weight_distribution) dist[std::to_string(w)] = c;
        j["weight_distribution"] = std::move(dist);
    }
    Json wit = Json::object();
    for (const auto& [w, x] : m.witnesses) wit[std::to_string(w)] = x;
    j["witnesses"] = std::move(wit);
    return j;
}

CodeMetrics metrics_from_json(const Json& j) {
    CodeMetrics m;
    m.q = require_uint(j, "q", "metrics");
    m.n = require_uint(j, "n", "metrics");
    m.k = require_uint(j, "k", "metrics");
    m.d = require_uint(j, "d", "metrics");
    m.delta = require_uint(j, "delta", "metrics");
    const Json& dd = require(j, "dual_distance", "metrics");
    m.dual_distance.kind = kind_from(require(dd, "kind", "metrics dual_distance").get<std::string>());
    m.dual_distance.value = require_uint(dd, "value", "metrics dual_distance");
    m.structural = j.value("structural", false);
    if (j.contains("weight_distribution")) {
        std::map<std::size_t, std::uint64_t> dist;
        for (const auto& [w, c] : j.at("weight_distribution").items()) dist[std::stoull(w)] = c.get<std::uint64_t>();
        m.weight_distribution = std::move(dist);
    }
    if (j.contains("witnesses")) {
        for (const auto& [w, x] : j.at("witnesses").items()) m.witnesses[std::stoull(w)] = x.get<std::vector<Elem>>();
    }
    return m;
}

Json to_json(const PartitionTrace& t) {
    Json fs = Json::array();
    for (const auto& a : t.functionals) fs.push_back(a ? Json(*a) : Json(nullptr));
    return {{"q", t.q},          {"n", t.n},
            {"k", t.k},          {"functionals", std::move(fs)},
            {"sets", t.sets},    {"set_sizes", t.set_sizes()},
            {"remainders", t.remainders}};
}

PartitionTrace trace_from_json(const Json& j) {
    PartitionTrace t;
    t.q = require_uint(j, "q", "trace");
    t.n = require_uint(j, "n", "trace");
    t.k = require_uint(j, "k", "trace");
    for (const auto& a : require(j, "functionals", "trace")) {
        if (a.is_null()) t.functionals.emplace_back(std::nullopt);
        else t.functionals.emplace_back(a.get<std::vector<Elem>>());
    }
    t.sets = require(j, "sets", "trace").get<std::vector<std::vector<std::size_t>>>();
    t.remainders = require(j, "remainders", "trace").get<std::vector<std::vector<std::size_t>>>();
    return t;
}

}  // namespace anticode
