#include "gmot/json_io.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "gmot/rational.hpp"
#include "json.hpp"

namespace gmot {

namespace {

using nlohmann::json;

json parse_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        // e.what() already reports "... at line L, column C ...".
        throw std::runtime_error(e.what());
    }
}

void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed,
                         const std::string& what) {
    for (const auto& [key, value] : obj.items())
        if (!allowed.count(key))
            throw std::invalid_argument(what + ": unknown key '" + key + "'");
}

int int_field(const json& obj, const std::string& key, const std::string& what) {
    if (!obj.contains(key))
        throw std::invalid_argument(what + ": missing '" + key + "'");
    const json& v = obj.at(key);
    if (!v.is_number_integer())
        throw std::invalid_argument(what + ": '" + key + "' must be an integer");
    return v.get<int>();
}

mpq_class rational_scalar(const json& v, const std::string& what) {
    if (v.is_string())
        return rational_from_string(v.get<std::string>());
    if (v.is_number_integer())
        return mpq_class(std::to_string(v.get<long long>()));
    throw std::invalid_argument(what + ": rational entries must be integers or \"p/q\" strings");
}

QMat matrix_field(const json& v, int rows, int cols, const std::string& what) {
    QMat m(rows, cols);
    if (v.is_null())
        return m;
    if (!v.is_array())
        throw std::invalid_argument(what + ": expected an array of rows");
    if (static_cast<int>(v.size()) != rows)
        throw std::invalid_argument(what + ": expected " + std::to_string(rows) + " rows");
    for (int i = 0; i < rows; ++i) {
        const json& row = v.at(i);
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            throw std::invalid_argument(what + ": row " + std::to_string(i) + " needs " +
                                        std::to_string(cols) + " entries");
        for (int j = 0; j < cols; ++j)
            m.at(i, j) = rational_scalar(row.at(j), what);
    }
    return m;
}

std::vector<std::vector<int>> int_grid(const json& v, const std::string& what) {
    if (!v.is_array())
        throw std::invalid_argument(what + ": expected an array of integer rows");
    std::vector<std::vector<int>> out;
    for (const json& row : v) {
        if (!row.is_array())
            throw std::invalid_argument(what + ": expected an array of integer rows");
        std::vector<int> r;
        for (const json& x : row) {
            if (!x.is_number_integer())
                throw std::invalid_argument(what + ": entries must be integers");
            r.push_back(x.get<int>());
        }
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace

GraphInput parse_graph(const std::string& text) {
    json j = parse_text(text);
    if (!j.is_object())
        throw std::invalid_argument("graph: top level must be an object");
    reject_unknown_keys(j, {"vertices", "edges", "vertex_weights", "edge_weights"}, "graph");

    GraphInput out;
    out.graph.vertex_count = int_field(j, "vertices", "graph");
    if (!j.contains("edges") || !j.at("edges").is_array())
        throw std::invalid_argument("graph: missing 'edges' array");
    for (const json& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2 || !e.at(0).is_number_integer() ||
            !e.at(1).is_number_integer())
            throw std::invalid_argument("graph: each edge must be [tail, head]");
        out.graph.edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
    }
    out.graph.validate();

    if (j.contains("vertex_weights")) {
        const json& vw = j.at("vertex_weights");
        if (!vw.is_array() || static_cast<int>(vw.size()) != out.graph.vertex_count)
            throw std::invalid_argument("graph: 'vertex_weights' needs one entry per vertex");
        for (const json& x : vw)
            out.weights.beta.push_back(rational_scalar(x, "graph: vertex_weights"));
        out.has_weights = true;
    } else {
        out.weights.beta.assign(out.graph.vertex_count, 1);
    }
    if (j.contains("edge_weights")) {
        const json& ew = j.at("edge_weights");
        if (!ew.is_array() || static_cast<int>(ew.size()) != out.graph.edge_count())
            throw std::invalid_argument("graph: 'edge_weights' needs one entry per edge");
        for (const json& x : ew)
            out.weights.edge_weights.push_back(rational_scalar(x, "graph: edge_weights"));
        out.has_weights = true;
    }
    out.weights = resolved_weights(out.graph, out.weights);
    return out;
}

CurveProfile parse_curve(const std::string& text) {
    json j = parse_text(text);
    if (!j.is_object())
        throw std::invalid_argument("curve: top level must be an object");
    reject_unknown_keys(j, {"genus", "modulus"}, "curve");

    CurveProfile out;
    out.genus_smooth = int_field(j, "genus", "curve");
    if (j.contains("modulus")) {
        const json& m = j.at("modulus");
        if (!m.is_array())
            throw std::invalid_argument("curve: 'modulus' must be an array of [place, n]");
        for (const json& item : m) {
            if (!item.is_array() || item.size() != 2 || !item.at(0).is_string() ||
                !item.at(1).is_number_integer())
                throw std::invalid_argument("curve: modulus entries are [\"place\", n]");
            out.modulus.assignments.emplace_back(item.at(0).get<std::string>(),
                                                 item.at(1).get<int>());
        }
    }
    out.validate();
    return out;
}

DoubleComplex parse_double_complex(const std::string& text) {
    json j = parse_text(text);
    if (!j.is_object())
        throw std::invalid_argument("double complex: top level must be an object");
    reject_unknown_keys(j, {"dims", "d_h", "d_v"}, "double complex");
    if (!j.contains("dims"))
        throw std::invalid_argument("double complex: missing 'dims'");

    DoubleComplex dc;
    dc.dims = int_grid(j.at("dims"), "double complex: dims");
    int w = dc.width(), h = dc.height();

    auto load = [&](const char* key, bool horizontal) {
        auto& grid = horizontal ? dc.d_h : dc.d_v;
        grid.assign(w, std::vector<QMat>(h));
        for (int p = 0; p < w; ++p)
            for (int q = 0; q < h; ++q) {
                int rows = horizontal ? dc.dim_at(p + 1, q) : dc.dim_at(p, q + 1);
                grid[p][q] = QMat(rows, dc.dim_at(p, q));
            }
        if (!j.contains(key))
            return;
        const json& g = j.at(key);
        if (!g.is_array() || static_cast<int>(g.size()) > w)
            throw std::invalid_argument(std::string("double complex: '") + key +
                                        "' must be a grid no wider than dims");
        for (int p = 0; p < static_cast<int>(g.size()); ++p) {
            const json& col = g.at(p);
            if (!col.is_array() || static_cast<int>(col.size()) > h)
                throw std::invalid_argument(std::string("double complex: '") + key +
                                            "' column " + std::to_string(p) + " too tall");
            for (int q = 0; q < static_cast<int>(col.size()); ++q) {
                std::string what = std::string("double complex: ") + key + "[" +
                                   std::to_string(p) + "][" + std::to_string(q) + "]";
                grid[p][q] = matrix_field(col.at(q), grid[p][q].rows(), grid[p][q].cols(),
                                          what);
            }
        }
    };
    load("d_h", true);
    load("d_v", false);
    dc.validate();
    return dc;
}

StrataData parse_strata(const std::string& text) {
    json j = parse_text(text);
    if (!j.is_object())
        throw std::invalid_argument("strata: top level must be an object");
    reject_unknown_keys(j, {"betti", "d1"}, "strata");
    if (!j.contains("betti"))
        throw std::invalid_argument("strata: missing 'betti'");

    StrataData sd;
    sd.betti = int_grid(j.at("betti"), "strata: betti");
    auto b_of = [&](int k, int q) -> int {
        if (k < 0 || k >= static_cast<int>(sd.betti.size()) || q < 0 ||
            q >= static_cast<int>(sd.betti[k].size()))
            return 0;
        return sd.betti[k][q];
    };
    if (j.contains("d1")) {
        const json& g = j.at("d1");
        if (!g.is_array() || g.size() + 1 > sd.betti.size())
            throw std::invalid_argument("strata: 'd1' needs at most one block per transition");
        for (int k = 0; k < static_cast<int>(g.size()); ++k) {
            const json& row = g.at(k);
            if (!row.is_array())
                throw std::invalid_argument("strata: d1 blocks must be arrays of matrices");
            sd.d1.emplace_back();
            for (int q = 0; q < static_cast<int>(row.size()); ++q) {
                std::string what =
                    "strata: d1[" + std::to_string(k) + "][" + std::to_string(q) + "]";
                sd.d1.back().push_back(
                    matrix_field(row.at(q), b_of(k + 1, q), b_of(k, q), what));
            }
        }
    }
    sd.validate();
    return sd;
}

ClemensSchmidData parse_clemens_schmid(const std::string& text) {
    json j = parse_text(text);
    if (!j.is_object())
        throw std::invalid_argument("clemens-schmid: top level must be an object");
    reject_unknown_keys(j, {"degrees"}, "clemens-schmid");
    if (!j.contains("degrees") || !j.at("degrees").is_array())
        throw std::invalid_argument("clemens-schmid: missing 'degrees' array");

    const json& degrees = j.at("degrees");
    ClemensSchmidData cs;
    cs.degrees.resize(degrees.size());
    for (size_t m = 0; m < degrees.size(); ++m) {
        const json& d = degrees.at(m);
        std::string what = "clemens-schmid: degrees[" + std::to_string(m) + "]";
        if (!d.is_object())
            throw std::invalid_argument(what + " must be an object");
        reject_unknown_keys(
            d, {"dim_homology", "dim_h_j0", "dim_h_jt", "alpha", "i_star", "n", "beta"},
            what);
        cs.degrees[m].dim_homology = int_field(d, "dim_homology", what);
        cs.degrees[m].dim_h_j0 = int_field(d, "dim_h_j0", what);
        cs.degrees[m].dim_h_jt = int_field(d, "dim_h_jt", what);
    }
    for (size_t m = 0; m < degrees.size(); ++m) {
        const json& d = degrees.at(m);
        std::string what = "clemens-schmid: degrees[" + std::to_string(m) + "]";
        ClemensSchmidDegree& out = cs.degrees[m];
        int next_hom =
            m + 2 < cs.degrees.size() ? cs.degrees[m + 2].dim_homology : 0;
        auto mat = [&](const char* key, int rows, int cols) {
            return matrix_field(d.contains(key) ? d.at(key) : json(), rows, cols,
                                what + "." + key);
        };
        out.alpha = mat("alpha", out.dim_h_j0, out.dim_homology);
        out.i_star = mat("i_star", out.dim_h_jt, out.dim_h_j0);
        out.n_map = mat("n", out.dim_h_jt, out.dim_h_jt);
        out.beta = mat("beta", next_hom, out.dim_h_jt);
    }
    cs.validate();
    return cs;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string mpoly_to_json(const MPoly& p) {
    json out = json::array();
    for (const Term& t : p.terms()) {
        json term = json::array();
        term.push_back(rational_to_string(t.coeff));
        term.push_back(t.exps);
        out.push_back(std::move(term));
    }
    return out.dump();
}

MPoly mpoly_from_json(const std::string& text, int nvars) {
    json j = parse_text(text);
    if (!j.is_array())
        throw std::invalid_argument("polynomial: expected [[coeff, [exponents]], ...]");
    std::vector<Term> terms;
    for (const json& item : j) {
        if (!item.is_array() || item.size() != 2 || !item.at(1).is_array())
            throw std::invalid_argument("polynomial: expected [[coeff, [exponents]], ...]");
        Term t;
        t.coeff = rational_scalar(item.at(0), "polynomial");
        for (const json& e : item.at(1)) {
            if (!e.is_number_integer() || e.get<int>() < 0)
                throw std::invalid_argument("polynomial: exponents must be >= 0");
            t.exps.push_back(e.get<int>());
        }
        if (static_cast<int>(t.exps.size()) != nvars)
            throw std::invalid_argument("polynomial: exponent tuple length mismatch");
        terms.push_back(std::move(t));
    }
    return MPoly::from_terms(nvars, std::move(terms));
}

}  // namespace gmot
