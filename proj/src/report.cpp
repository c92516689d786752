#include "swd/report.hpp"

namespace swd {

namespace {

OrderedJson composition_json(const Composition& c) {
    return OrderedJson(c.parts);
}

OrderedJson partition_json(const Partition& p) { return OrderedJson(p.parts); }

std::string composition_cell(const Composition& c) {
    return csv_quote("(" + c.to_string() + ")");
}

std::string theta_cells(const ThetaResult& r) {
    return std::to_string(r.dim_hom_sigma) + "," +
           std::to_string(r.dim_hom_corner) + "," +
           std::to_string(r.dim_image) + "," +
           (r.surjective ? "true" : "false");
}

}  // namespace

OrderedJson to_json(const ThetaResult& result) {
    OrderedJson j;
    j["dim_hom_sigma"] = result.dim_hom_sigma;
    j["dim_hom_corner"] = result.dim_hom_corner;
    j["dim_theta_image"] = result.dim_image;
    j["surjective"] = result.surjective;
    j["image_inside"] = result.image_inside;
    return j;
}

OrderedJson to_json(const CheckRecord& record) {
    OrderedJson j;
    j["name"] = record.name;
    j["statement"] = record.statement;
    j["expected"] = record.expected;
    j["computed"] = record.computed;
    j["pass"] = record.pass;
    j["asserted"] = record.asserted;
    return j;
}

OrderedJson to_json(const SemisimpleReport& report) {
    OrderedJson j;
    j["r"] = report.r;
    OrderedJson dims;
    dims["rank"] = report.corner_dim_rank;
    dims["tableaux"] = report.corner_dim_tableaux;
    dims["census"] = report.corner_dim_census;
    dims["agree"] = report.corner_dims_agree;
    j["corner_dim"] = std::move(dims);
    OrderedJson mults = OrderedJson::array();
    for (const auto& m : report.multiplicities) {
        OrderedJson entry;
        entry["shape"] = partition_json(m.lambda);
        entry["from_characters"] = m.from_characters;
        entry["from_tableaux"] = m.from_tableaux;
        entry["match"] = m.match;
        mults.push_back(std::move(entry));
    }
    j["multiplicities"] = std::move(mults);
    j["multiplicities_match"] = report.multiplicities_match;
    j["tensor_character_identity"] = report.tensor_character_identity;
    return j;
}

OrderedJson to_json(const VerifyReport& report) {
    OrderedJson j;
    j["schema"] = "swd-verify-report/1";
    OrderedJson instance;
    instance["n"] = report.n;
    instance["r"] = report.r;
    instance["field"] = report.field;
    instance["idempotent"] = report.idempotent;
    instance["gamma"] = report.gamma;
    instance["zeta"] = report.zeta;
    instance["guaranteed_regime"] = report.guaranteed_regime;
    j["instance"] = std::move(instance);
    OrderedJson checks = OrderedJson::array();
    for (const auto& c : report.checks) checks.push_back(to_json(c));
    j["checks"] = std::move(checks);
    OrderedJson theta = OrderedJson::array();
    for (const auto& row : report.theta) {
        OrderedJson entry;
        entry["alpha"] = composition_json(row.alpha);
        entry["beta"] = composition_json(row.beta);
        OrderedJson res = to_json(row.result);
        for (auto& [key, value] : res.items()) entry[key] = value;
        theta.push_back(std::move(entry));
    }
    j["theta"] = std::move(theta);
    j["duality_holds"] = report.duality_holds;
    j["semisimple"] =
        report.semisimple ? to_json(*report.semisimple) : OrderedJson(nullptr);
    j["all_asserted_pass"] = report.all_asserted_pass();
    return j;
}

OrderedJson to_json(const FieldIndependence& matrix) {
    OrderedJson j;
    j["schema"] = "swd-independence/1";
    j["n"] = matrix.n;
    j["r"] = matrix.r;
    j["fields"] = OrderedJson(matrix.fields);
    OrderedJson rows = OrderedJson::array();
    for (const auto& row : matrix.rows) {
        OrderedJson entry;
        entry["alpha"] = composition_json(row.alpha);
        entry["beta"] = composition_json(row.beta);
        OrderedJson per = OrderedJson::array();
        for (const auto& res : row.per_field) per.push_back(to_json(res));
        entry["per_field"] = std::move(per);
        entry["independent"] = row.independent;
        rows.push_back(std::move(entry));
    }
    j["rows"] = std::move(rows);
    j["all_independent"] = matrix.all_independent;
    return j;
}

std::string json_text(const OrderedJson& j) { return j.dump(2) + "\n"; }

std::string csv_quote(const std::string& cell) {
    std::string out = "\"";
    for (char ch : cell) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

std::string csv_header() {
    return "alpha,beta,field,dim_hom_sigma,dim_hom_corner,dim_theta_image,"
           "surjective";
}

std::vector<std::string> csv_rows(const VerifyReport& report) {
    std::vector<std::string> rows;
    rows.reserve(report.theta.size());
    for (const auto& row : report.theta)
        rows.push_back(composition_cell(row.alpha) + "," +
                       composition_cell(row.beta) + "," + report.field + "," +
                       theta_cells(row.result));
    return rows;
}

std::vector<std::string> csv_rows(const FieldIndependence& matrix) {
    std::vector<std::string> rows;
    rows.reserve(matrix.rows.size() * matrix.fields.size());
    for (const auto& row : matrix.rows)
        for (std::size_t i = 0; i < row.per_field.size(); ++i)
            rows.push_back(composition_cell(row.alpha) + "," +
                           composition_cell(row.beta) + "," +
                           matrix.fields[i] + "," +
                           theta_cells(row.per_field[i]));
    return rows;
}

std::string csv_document(const std::vector<std::string>& rows) {
    std::string out = csv_header() + "\n";
    for (const auto& row : rows) out += row + "\n";
    return out;
}

}  // namespace swd
