#include "lb/json_io.hpp"

#include <stdexcept>

namespace lb {

namespace {

const json& field(const json& j, const char* name) {
    auto it = j.find(name);
    if (it == j.end()) throw std::invalid_argument(std::string("missing field: ") + name);
    return *it;
}

Rat rat_field(const json& j) {
    if (!j.is_string()) throw std::invalid_argument("rational must be a string");
    return rat_parse(j.get<std::string>());
}

}  // namespace

json label_to_json(const CatalogLabel& l) {
    json j;
    j["family"] = family_name(l.family);
    if (l.lambda) j["lambda"] = rat_str(*l.lambda);
    return j;
}

CatalogLabel label_from_json(const json& j) {
    CatalogLabel l{family_from_name(field(j, "family").get<std::string>()), std::nullopt};
    if (j.contains("lambda")) l.lambda = rat_field(j["lambda"]);
    return l;
}

json algebra_to_json(const LieAlgebra& g) {
    json j;
    j["dim"] = g.dim;
    j["basis"] = g.basis_names;
    json brackets = json::array();
    for (int i = 0; i < g.dim; ++i)
        for (int jj = i + 1; jj < g.dim; ++jj) {
            bool zero = true;
            for (int k = 0; k < g.dim; ++k)
                if (g.c[k].at(i, jj) != 0) zero = false;
            if (zero) continue;
            json b;
            b["i"] = i;
            b["j"] = jj;
            json coeffs = json::array();
            for (int k = 0; k < g.dim; ++k) coeffs.push_back(rat_str(g.c[k].at(i, jj)));
            b["coeffs"] = coeffs;
            brackets.push_back(b);
        }
    j["brackets"] = brackets;
    if (g.label) j["label"] = label_to_json(*g.label);
    return j;
}

LieAlgebra algebra_from_json(const json& j) {
    LieAlgebra g;
    g.dim = field(j, "dim").get<int>();
    if (g.dim != 2 && g.dim != 3) throw std::invalid_argument("dim must be 2 or 3");
    if (j.contains("basis")) {
        g.basis_names = j["basis"].get<std::vector<std::string>>();
        if (static_cast<int>(g.basis_names.size()) != g.dim)
            throw std::invalid_argument("basis size must match dim");
    } else {
        for (int i = 0; i < g.dim; ++i) g.basis_names.push_back("e" + std::to_string(i + 1));
    }
    g.c.assign(g.dim, Mat(g.dim, g.dim));
    for (const json& b : field(j, "brackets")) {
        int i = field(b, "i").get<int>();
        int jj = field(b, "j").get<int>();
        if (i < 0 || i >= g.dim || jj < 0 || jj >= g.dim || i == jj)
            throw std::invalid_argument("bracket indices out of range");
        const json& coeffs = field(b, "coeffs");
        if (static_cast<int>(coeffs.size()) != g.dim)
            throw std::invalid_argument("coeffs size must match dim");
        for (int k = 0; k < g.dim; ++k) {
            Rat v = rat_field(coeffs[k]);
            g.c[k].at(i, jj) = v;
            g.c[k].at(jj, i) = -v;
        }
    }
    if (j.contains("label")) g.label = label_from_json(j["label"]);
    return g;
}

json bialgebra_to_json(const LieAlgebra& g, const Cobracket& d) {
    json j;
    j["algebra"] = algebra_to_json(g);
    json rows = json::array();
    for (int p = 0; p < d.m.rows; ++p) {
        json row = json::array();
        for (int k = 0; k < d.m.cols; ++k) row.push_back(rat_str(d.m.at(p, k)));
        rows.push_back(row);
    }
    j["cobracket"] = rows;
    return j;
}

std::pair<LieAlgebra, Cobracket> bialgebra_from_json(const json& j) {
    LieAlgebra g = algebra_from_json(field(j, "algebra"));
    const json& rows = field(j, "cobracket");
    int nw = wedge_dim(g.dim);
    if (static_cast<int>(rows.size()) != nw)
        throw std::invalid_argument("cobracket must have dim(dim-1)/2 rows");
    Mat m(nw, g.dim);
    for (int p = 0; p < nw; ++p) {
        if (static_cast<int>(rows[p].size()) != g.dim)
            throw std::invalid_argument("cobracket row size must match dim");
        for (int k = 0; k < g.dim; ++k) m.at(p, k) = rat_field(rows[p][k]);
    }
    return {std::move(g), Cobracket(m)};
}

json mat_to_json(const Mat& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows; ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols; ++j) row.push_back(rat_str(m.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

Mat mat_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix must be a non-empty array");
    int rows = static_cast<int>(j.size());
    int cols = static_cast<int>(j[0].size());
    Mat m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        if (static_cast<int>(j[i].size()) != cols)
            throw std::invalid_argument("ragged matrix rows");
        for (int c = 0; c < cols; ++c) m.at(i, c) = rat_field(j[i][c]);
    }
    return m;
}

json tag_to_json(const ClassTag& t) {
    json j;
    j["algebra"] = label_to_json(t.algebra);
    j["case_id"] = t.case_id;
    json params;
    for (const auto& [k, v] : t.params) params[k] = rat_str(v);
    j["params"] = params.is_null() ? json::object() : params;
    j["flags"] = t.flags;
    return j;
}

json derivation_report_to_json(const DerivationReport& r) {
    json j;
    j["D"] = mat_to_json(r.D);
    j["trace"] = rat_str(r.trace);
    j["det"] = rat_str(r.det);
    json cp = json::array();
    for (const Rat& c : r.charpoly) cp.push_back(rat_str(c));
    j["charpoly"] = cp;
    return j;
}

json cohomology_report_to_json(const CohomologyReport& r) {
    json j;
    j["dim_invariants"] = r.dim_invariants;
    j["dim_coboundaries"] = r.dim_coboundaries;
    j["dim_cocycles"] = r.dim_cocycles;
    j["dim_h1"] = r.dim_h1;
    json basis = json::array();
    for (const Cobracket& c : r.cocycle_basis) basis.push_back(mat_to_json(c.m));
    j["cocycle_basis"] = basis;
    return j;
}

json orbit_report_to_json(const OrbitCheckReport& r) {
    json j;
    j["samples"] = r.samples;
    j["failures"] = r.failures;
    j["witnesses"] = r.witnesses;
    return j;
}

}  // namespace lb
