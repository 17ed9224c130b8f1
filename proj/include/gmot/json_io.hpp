#pragma once

#include <string>

#include "gmot/curve_invariants.hpp"
#include "gmot/graph_motive.hpp"
#include "gmot/hodge.hpp"
#include "gmot/mpoly.hpp"
#include "gmot/multigraph.hpp"

namespace gmot {

// Parsers take raw JSON text. Malformed JSON raises std::runtime_error whose
// message carries the parser's line and column; structurally wrong but
// well-formed input raises std::invalid_argument naming the field. Unknown
// keys are rejected. Rational scalars are JSON integers or "p/q" strings;
// floats are refused to keep everything exact.

struct GraphInput {
    Multigraph graph;
    WeightBundle weights;
    bool has_weights = false;  // explicit vertex or edge weights present
};

// {"vertices": n, "edges": [[tail, head], ...],
//  "vertex_weights": ["1", "2/3", ...]?, "edge_weights": [...]?}
GraphInput parse_graph(const std::string& text);

// {"genus": g, "modulus": [["P1", 2], ["P2", 1]]}
CurveProfile parse_curve(const std::string& text);

// {"dims": [[...], ...], "d_h": [[matrix, ...], ...]?, "d_v": ...?}
// where matrix is an array of rows of rational scalars; absent or null
// entries are zero maps. Shapes are dictated by dims.
DoubleComplex parse_double_complex(const std::string& text);

// {"betti": [[...], ...], "d1": [[matrix, ...], ...]?}
StrataData parse_strata(const std::string& text);

// {"degrees": [{"dim_homology": h, "dim_h_j0": a, "dim_h_jt": b,
//               "alpha": matrix?, "i_star": matrix?, "n": matrix?,
//               "beta": matrix?}, ...]}
ClemensSchmidData parse_clemens_schmid(const std::string& text);

// Whole file as a string; std::runtime_error when unreadable.
std::string read_file(const std::string& path);

// [[coeff, [exponents]], ...] in the canonical term order, coefficients as
// exact strings.
std::string mpoly_to_json(const MPoly& p);
MPoly mpoly_from_json(const std::string& text, int nvars);

}  // namespace gmot
