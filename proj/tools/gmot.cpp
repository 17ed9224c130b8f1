// Command-line front end: graph polynomial routes, tree/forest identities,
// point counts, curve invariants from a modulus, and spectral-sequence
// bookkeeping, all over exact rationals. Output is deterministic: the same
// input bytes produce the same output bytes.

#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gmot/curve_invariants.hpp"
#include "gmot/graph_motive.hpp"
#include "gmot/hodge.hpp"
#include "gmot/json_io.hpp"
#include "gmot/mpoly.hpp"
#include "gmot/multigraph.hpp"
#include "gmot/polymatrix.hpp"
#include "gmot/rational.hpp"
#include "json.hpp"

namespace {

using gmot::MPoly;
using gmot::Multigraph;
using gmot::WeightBundle;
using ordered_json = nlohmann::ordered_json;

struct RunConfig {
    bool json = false;
    std::string input;
    long max_points = 10'000'000;
    int max_edges = 18;
    unsigned long seed = 2026;
    int trials = 3;
    std::string route = "tree";
    std::string filtration = "columns";
    long q = 0;
    int edge = -1;
    int plucker_d = 0;
    int ss_r = 0, ss_q = 0;
};

void emit(const ordered_json& j) { std::cout << j.dump() << '\n'; }

ordered_json mpoly_json(const MPoly& p) {
    ordered_json terms = ordered_json::array();
    for (const gmot::Term& t : p.terms()) {
        ordered_json term = ordered_json::array();
        term.push_back(gmot::rational_to_string(t.coeff));
        term.push_back(t.exps);
        terms.push_back(std::move(term));
    }
    return terms;
}

gmot::GraphInput load_graph(const RunConfig& cfg) {
    return gmot::parse_graph(gmot::read_file(cfg.input));
}

void guard_edges(const Multigraph& g, const RunConfig& cfg, const std::string& op) {
    if (g.edge_count() > cfg.max_edges)
        throw std::invalid_argument(
            op + ": " + std::to_string(g.edge_count()) + " edges, above the guard of " +
            std::to_string(cfg.max_edges) + "; spanning-tree enumeration may touch up to 2^" +
            std::to_string(g.edge_count()) + " subsets (raise with --max-edges)");
}

WeightBundle seeded_weights(const Multigraph& g, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(1, 9), den(1, 9);
    WeightBundle wb;
    for (int v = 0; v < g.vertex_count; ++v) {
        mpq_class b(num(rng), den(rng));
        b.canonicalize();
        wb.beta.push_back(std::move(b));
    }
    return gmot::resolved_weights(g, wb);
}

// ---- graph subcommands -----------------------------------------------------

void run_psi(const RunConfig& cfg) {
    gmot::GraphInput in = load_graph(cfg);
    guard_edges(in.graph, cfg, "psi");
    MPoly p;
    if (cfg.route == "tree") {
        p = gmot::psi_tree_sum(in.graph);
    } else if (cfg.route == "config") {
        p = gmot::psi_config_det(in.graph);
    } else if (cfg.route == "laplacian") {
        p = gmot::psi_laplacian(in.graph);
    } else {  // all
        p = gmot::psi_tree_sum(in.graph);
        if (gmot::psi_config_det(in.graph) != p || gmot::psi_laplacian(in.graph) != p)
            throw std::logic_error("psi: routes disagree");
    }
    if (cfg.json) {
        ordered_json out;
        out["route"] = cfg.route;
        out["nvars"] = p.nvars();
        out["terms"] = mpoly_json(p);
        emit(out);
    } else {
        std::cout << p.to_string() << '\n';
    }
}

void run_trees(const RunConfig& cfg) {
    gmot::GraphInput in = load_graph(cfg);
    mpz_class count = gmot::matrix_tree_count(in.graph);
    if (cfg.json) {
        ordered_json out;
        out["spanning_trees"] = count.get_str();
        emit(out);
    } else {
        std::cout << count.get_str() << '\n';
    }
}

void run_forests(const RunConfig& cfg) {
    gmot::GraphInput in = load_graph(cfg);
    WeightBundle wb = in.weights;
    if (!in.has_weights) {
        std::mt19937_64 rng(cfg.seed);
        wb = seeded_weights(in.graph, rng);
    }
    auto rows = gmot::forest_charpoly_check(in.graph, wb);
    bool all = true;
    for (const auto& row : rows)
        all = all && row.equal;
    if (cfg.json) {
        ordered_json out;
        out["rows"] = ordered_json::array();
        for (const auto& row : rows) {
            ordered_json r;
            r["s"] = row.s;
            r["coefficient"] = gmot::rational_to_string(row.coefficient);
            r["forest_sum"] = gmot::rational_to_string(row.forest_sum);
            r["sign"] = row.sign;
            r["equal"] = row.equal;
            out["rows"].push_back(std::move(r));
        }
        out["all_equal"] = all;
        emit(out);
    } else {
        for (const auto& row : rows)
            std::cout << "s=" << row.s
                      << " coefficient=" << gmot::rational_to_string(row.coefficient)
                      << " forest_sum=" << gmot::rational_to_string(row.forest_sum)
                      << " sign=" << (row.sign > 0 ? "+1" : "-1")
                      << (row.equal ? " ok" : " MISMATCH") << '\n';
        std::cout << "all_equal: " << (all ? "true" : "false") << '\n';
    }
}

void run_charpoly(const RunConfig& cfg) {
    gmot::GraphInput in = load_graph(cfg);
    gmot::LaplacianSuite suite = gmot::laplacian_suite(in.graph, in.weights);
    int n = suite.l_sym.rows();
    gmot::PolyMatrix pm(n, n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            pm.at(i, j) = MPoly::constant(0, suite.l_sym.at(i, j));
    std::vector<MPoly> coeffs = gmot::charpoly(pm);
    if (cfg.json) {
        ordered_json out;
        out["coefficients"] = ordered_json::array();
        for (const MPoly& c : coeffs)
            out["coefficients"].push_back(
                gmot::rational_to_string(c.is_zero() ? mpq_class(0) : c.constant_value()));
        emit(out);
    } else {
        for (size_t s = 0; s < coeffs.size(); ++s)
            std::cout << "lambda^" << s << ": "
                      << gmot::rational_to_string(
                             coeffs[s].is_zero() ? mpq_class(0) : coeffs[s].constant_value())
                      << '\n';
    }
}

void run_cofactor_check(const RunConfig& cfg) {
    gmot::GraphInput in = load_graph(cfg);
    const Multigraph& g = in.graph;
    std::mt19937_64 rng(cfg.seed);
    int trials = in.has_weights ? 1 : cfg.trials;
    bool all = true;
    int pairs = 0;
    mpq_class last_k;
    for (int t = 0; t < trials; ++t) {
        WeightBundle wb = in.has_weights ? in.weights : seeded_weights(g, rng);
        gmot::RootedTreeWeights trees = gmot::rooted_tree_weights(g, wb);
        last_k = trees.k_total;
        for (int u = 0; u < g.vertex_count; ++u)
            for (int v = 0; v < g.vertex_count; ++v) {
                gmot::IdentityReport rep = gmot::cofactor_tree_identity(g, wb, u, v, trees);
                all = all && rep.equal;
                ++pairs;
            }
    }
    if (cfg.json) {
        ordered_json out;
        out["pairs"] = pairs;
        out["weightings"] = trials;
        out["all_equal"] = all;
        out["k_total_last"] = gmot::rational_to_string(last_k);
        emit(out);
    } else {
        std::cout << "pairs=" << pairs << " weightings=" << trials
                  << " all_equal=" << (all ? "true" : "false")
                  << " k_total_last=" << gmot::rational_to_string(last_k) << '\n';
    }
}

void run_points(const RunConfig& cfg) {
    gmot::GraphInput in = load_graph(cfg);
    gmot::PointCountProfile prof = gmot::count_points(in.graph, cfg.q, cfg.max_points);
    if (prof.hypersurface_count + prof.complement_count != prof.ambient)
        throw std::logic_error("points: counts do not add up to the ambient space");
    if (cfg.json) {
        ordered_json out;
        out["q"] = prof.q;
        out["ambient"] = prof.ambient;
        out["hypersurface"] = prof.hypersurface_count;
        out["complement"] = prof.complement_count;
        emit(out);
    } else {
        std::cout << "{\"hypersurface\": " << prof.hypersurface_count
                  << ", \"complement\": " << prof.complement_count << "}\n";
    }
}

void run_del_con(const RunConfig& cfg) {
    gmot::GraphInput in = load_graph(cfg);
    guard_edges(in.graph, cfg, "del-con");
    if (cfg.edge < 0 || cfg.edge >= in.graph.edge_count())
        throw std::invalid_argument("del-con: edge index out of range");
    gmot::DeletionContractionReport rep =
        gmot::deletion_contraction_check(in.graph, cfg.edge);
    if (cfg.json) {
        ordered_json out;
        out["edge"] = cfg.edge;
        out["equal"] = rep.equal;
        out["lhs"] = mpoly_json(rep.lhs);
        out["rhs"] = mpoly_json(rep.rhs);
        emit(out);
    } else {
        std::cout << "edge " << cfg.edge << ": " << (rep.equal ? "equal" : "NOT equal")
                  << '\n';
    }
}

// ---- curve subcommands ------------------------------------------------------

gmot::CurveProfile load_curve(const RunConfig& cfg) {
    return gmot::parse_curve(gmot::read_file(cfg.input));
}

void run_curve_delta(const RunConfig& cfg) {
    int d = gmot::delta(load_curve(cfg));
    if (cfg.json) {
        ordered_json out;
        out["delta"] = d;
        emit(out);
    } else {
        std::cout << d << '\n';
    }
}

void run_curve_genus(const RunConfig& cfg) {
    gmot::CurveProfile p = load_curve(cfg);
    if (cfg.json) {
        ordered_json out;
        out["genus_smooth"] = p.genus_smooth;
        out["delta"] = gmot::delta(p);
        out["arithmetic_genus"] = gmot::arithmetic_genus(p);
        emit(out);
    } else {
        std::cout << gmot::arithmetic_genus(p) << '\n';
    }
}

void run_curve_jacobian(const RunConfig& cfg) {
    gmot::JacobianProfile j = gmot::jacobian_profile(load_curve(cfg));
    if (cfg.json) {
        ordered_json out;
        out["dim"] = j.dim_total;
        out["abelian"] = j.dim_abelian;
        out["torus"] = j.torus_rank;
        out["unipotent"] = j.unipotent_dim;
        emit(out);
    } else {
        std::cout << "{\"dim\": " << j.dim_total << ", \"torus\": " << j.torus_rank
                  << ", \"unipotent\": " << j.unipotent_dim << "}\n";
    }
}

void run_curve_theta(const RunConfig& cfg) {
    gmot::ThetaProfile t = gmot::theta_profile(load_curve(cfg));
    if (cfg.json) {
        ordered_json out;
        out["dim_theta"] = t.dim_theta;
        out["surjective_at"] = t.surjective_at;
        emit(out);
    } else {
        std::cout << "{\"dim\": " << t.dim_theta << ", \"surjective_at\": " << t.surjective_at
                  << "}\n";
    }
}

void run_curve_uniformization(const RunConfig& cfg) {
    gmot::UniformizationReport u = gmot::uniformization_check(load_curve(cfg));
    if (cfg.json) {
        ordered_json out;
        out["dim"] = u.dim;
        out["lattice_rank"] = u.lattice_rank;
        out["compact"] = u.compact;
        out["rank_at_most_twice_dim"] = u.rank_at_most_twice_dim;
        emit(out);
    } else {
        std::cout << "{\"dim\": " << u.dim << ", \"lattice_rank\": " << u.lattice_rank
                  << ", \"compact\": " << (u.compact ? "true" : "false") << "}\n";
    }
}

void run_curve_plucker(const RunConfig& cfg) {
    int pi = gmot::plucker_pi(cfg.plucker_d);
    if (cfg.json) {
        ordered_json out;
        out["d"] = cfg.plucker_d;
        out["pi"] = pi;
        emit(out);
    } else {
        std::cout << pi << '\n';
    }
}

// ---- spectral sequence subcommands -------------------------------------------

void print_grid(const std::vector<std::vector<int>>& grid) {
    for (const auto& col : grid) {
        for (size_t q = 0; q < col.size(); ++q)
            std::cout << (q ? " " : "") << col[q];
        std::cout << '\n';
    }
}

void run_ss_total(const RunConfig& cfg) {
    gmot::DoubleComplex dc = gmot::parse_double_complex(gmot::read_file(cfg.input));
    std::vector<int> total = gmot::total_cohomology(dc);
    if (cfg.json) {
        ordered_json out;
        out["total"] = total;
        emit(out);
    } else {
        for (size_t k = 0; k < total.size(); ++k)
            std::cout << "H^" << k << ": " << total[k] << '\n';
    }
}

void run_ss_pages(const RunConfig& cfg) {
    gmot::DoubleComplex dc = gmot::parse_double_complex(gmot::read_file(cfg.input));
    gmot::Filtration f = cfg.filtration == "rows" ? gmot::Filtration::by_rows
                                                  : gmot::Filtration::by_columns;
    gmot::SpectralPages pages = gmot::spectral_sequence(dc, f);
    if (cfg.json) {
        ordered_json out;
        out["filtration"] = cfg.filtration;
        out["e0"] = pages.e0;
        out["e1"] = pages.e1;
        out["e2"] = pages.e2;
        out["e2_totals"] = pages.e2_totals;
        out["total"] = pages.total;
        out["degenerates_at_e2"] = pages.degenerates_at_e2;
        out["mismatch_degrees"] = pages.mismatch_degrees;
        emit(out);
    } else {
        std::cout << "filtration: " << cfg.filtration << '\n';
        std::cout << "e0:\n";
        print_grid(pages.e0);
        std::cout << "e1:\n";
        print_grid(pages.e1);
        std::cout << "e2:\n";
        print_grid(pages.e2);
        std::cout << "e2 totals:";
        for (int x : pages.e2_totals)
            std::cout << ' ' << x;
        std::cout << "\ntotal:";
        for (int x : pages.total)
            std::cout << ' ' << x;
        std::cout << "\ndegenerates at e2: " << (pages.degenerates_at_e2 ? "yes" : "no")
                  << '\n';
        if (!pages.mismatch_degrees.empty()) {
            std::cout << "mismatch degrees:";
            for (int k : pages.mismatch_degrees)
                std::cout << ' ' << k;
            std::cout << '\n';
        }
    }
}

void run_ss_ncd(const RunConfig& cfg) {
    gmot::StrataData sd = gmot::parse_strata(gmot::read_file(cfg.input));
    gmot::NcdBetti nb = gmot::ncd_betti(sd);
    if (cfg.json) {
        ordered_json out;
        out["h"] = nb.h;
        out["weight"] = nb.weight;
        emit(out);
    } else {
        for (size_t n = 0; n < nb.h.size(); ++n) {
            std::cout << "H^" << n << ": " << nb.h[n] << " (weights:";
            for (int w : nb.weight[n])
                std::cout << ' ' << w;
            std::cout << ")\n";
        }
    }
}

void run_ss_steenbrink(const RunConfig& cfg) {
    gmot::StrataData sd = gmot::parse_strata(gmot::read_file(cfg.input));
    gmot::SteenbrinkEntry e = gmot::steenbrink_e1(sd, cfg.ss_r, cfg.ss_q);
    if (cfg.json) {
        ordered_json out;
        out["r"] = e.r;
        out["q"] = e.q;
        out["dim"] = e.dim;
        out["terms"] = ordered_json::array();
        for (const auto& t : e.terms) {
            ordered_json term;
            term["k"] = t.k;
            term["stratum"] = t.stratum;
            term["betti_degree"] = t.betti_degree;
            term["dim"] = t.dim;
            term["twist"] = t.twist;
            out["terms"].push_back(std::move(term));
        }
        emit(out);
    } else {
        std::cout << "dim E1^{" << -e.r << "," << e.q + e.r << "} = " << e.dim << '\n';
        for (const auto& t : e.terms)
            std::cout << "k=" << t.k << " stratum=" << t.stratum
                      << " betti_degree=" << t.betti_degree << " dim=" << t.dim
                      << " twist=" << t.twist << '\n';
    }
}

void run_ss_cs_check(const RunConfig& cfg) {
    gmot::ClemensSchmidData cs = gmot::parse_clemens_schmid(gmot::read_file(cfg.input));
    gmot::ExactnessReport rep = gmot::clemens_schmid_check(cs);
    if (cfg.json) {
        ordered_json out;
        out["all_exact"] = rep.all_exact;
        out["nodes"] = ordered_json::array();
        for (const auto& n : rep.nodes) {
            ordered_json node;
            node["index"] = n.index;
            node["label"] = n.label;
            node["dim"] = n.dim;
            node["rank_in"] = n.rank_in;
            node["rank_out"] = n.rank_out;
            node["composite_zero"] = n.composite_zero;
            node["exact"] = n.exact;
            out["nodes"].push_back(std::move(node));
        }
        emit(out);
    } else {
        for (const auto& n : rep.nodes)
            std::cout << n.label << " dim=" << n.dim << " rank_in=" << n.rank_in
                      << " rank_out=" << n.rank_out
                      << " composite_zero=" << (n.composite_zero ? "yes" : "no")
                      << (n.exact ? " exact" : " NOT exact") << '\n';
        std::cout << "all exact: " << (rep.all_exact ? "true" : "false") << '\n';
    }
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    CLI::App app{"Exact graph polynomials, curve invariants, and Hodge bookkeeping"};
    app.require_subcommand(1);

    auto add_json = [&](CLI::App* cmd) { cmd->add_flag("--json", cfg.json, "JSON output"); };
    auto add_input = [&](CLI::App* cmd, const char* what) {
        cmd->add_option("input", cfg.input, what)->required();
    };

    CLI::App* psi = app.add_subcommand("psi", "Graph polynomial of a graph file");
    add_input(psi, "graph JSON file");
    psi->add_option("--route", cfg.route, "tree|config|laplacian|all")
        ->check(CLI::IsMember({"tree", "config", "laplacian", "all"}));
    psi->add_option("--max-edges", cfg.max_edges, "edge-count guard")
        ->check(CLI::PositiveNumber);
    add_json(psi);
    psi->callback([&] { run_psi(cfg); });

    CLI::App* trees = app.add_subcommand("trees", "Spanning tree count (matrix-tree)");
    add_input(trees, "graph JSON file");
    add_json(trees);
    trees->callback([&] { run_trees(cfg); });

    CLI::App* forests =
        app.add_subcommand("forests", "Characteristic polynomial vs rooted forest sums");
    add_input(forests, "graph JSON file");
    forests->add_option("--seed", cfg.seed, "seed for random weights when none are given");
    add_json(forests);
    forests->callback([&] { run_forests(cfg); });

    CLI::App* charpoly =
        app.add_subcommand("charpoly", "Characteristic polynomial of the weighted Laplacian");
    add_input(charpoly, "graph JSON file");
    add_json(charpoly);
    charpoly->callback([&] { run_charpoly(cfg); });

    CLI::App* cof = app.add_subcommand("cofactor-check",
                                       "Signed cofactor vs rooted tree weights, all pairs");
    add_input(cof, "graph JSON file");
    cof->add_option("--seed", cfg.seed, "seed for random weights when none are given");
    cof->add_option("--trials", cfg.trials, "number of random weightings")
        ->check(CLI::PositiveNumber);
    add_json(cof);
    cof->callback([&] { run_cofactor_check(cfg); });

    CLI::App* points =
        app.add_subcommand("points", "Point counts of the graph hypersurface over F_q");
    add_input(points, "graph JSON file");
    points->add_option("--q", cfg.q, "field size (prime)")->required();
    points->add_option("--max-points", cfg.max_points, "enumeration guard on q^m")
        ->check(CLI::PositiveNumber);
    add_json(points);
    points->callback([&] { run_points(cfg); });

    CLI::App* delcon = app.add_subcommand("del-con", "Deletion-contraction identity check");
    add_input(delcon, "graph JSON file");
    delcon->add_option("--edge", cfg.edge, "edge id")->required();
    delcon->add_option("--max-edges", cfg.max_edges, "edge-count guard")
        ->check(CLI::PositiveNumber);
    add_json(delcon);
    delcon->callback([&] { run_del_con(cfg); });

    CLI::App* curve = app.add_subcommand("curve", "Invariants of a curve with a modulus");
    curve->require_subcommand(1);
    struct CurveSub {
        const char* name;
        const char* help;
        void (*fn)(const RunConfig&);
    };
    for (const CurveSub& sub :
         {CurveSub{"delta", "delta invariant", run_curve_delta},
          CurveSub{"genus", "arithmetic genus", run_curve_genus},
          CurveSub{"jacobian", "generalized Jacobian split", run_curve_jacobian},
          CurveSub{"theta", "theta divisor profile", run_curve_theta},
          CurveSub{"uniformization", "dimension and lattice rank", run_curve_uniformization}}) {
        CLI::App* c = curve->add_subcommand(sub.name, sub.help);
        add_input(c, "curve JSON file");
        add_json(c);
        void (*fn)(const RunConfig&) = sub.fn;
        c->callback([&cfg, fn] { fn(cfg); });
    }
    CLI::App* plucker = curve->add_subcommand("plucker", "pi of a smooth plane curve");
    plucker->add_option("--d", cfg.plucker_d, "plane degree")->required();
    add_json(plucker);
    plucker->callback([&] { run_curve_plucker(cfg); });

    CLI::App* ss = app.add_subcommand("ss", "Double complex and strata bookkeeping");
    ss->require_subcommand(1);

    CLI::App* total = ss->add_subcommand("total", "Total complex cohomology");
    add_input(total, "double complex JSON file");
    add_json(total);
    total->callback([&] { run_ss_total(cfg); });

    CLI::App* pages = ss->add_subcommand("pages", "E0, E1, E2 and degeneration verdict");
    add_input(pages, "double complex JSON file");
    pages->add_option("--filtration", cfg.filtration, "columns|rows")
        ->check(CLI::IsMember({"columns", "rows"}));
    add_json(pages);
    pages->callback([&] { run_ss_pages(cfg); });

    CLI::App* ncd = ss->add_subcommand("ncd", "NCD cohomology with weight split");
    add_input(ncd, "strata JSON file");
    add_json(ncd);
    ncd->callback([&] { run_ss_ncd(cfg); });

    CLI::App* steen = ss->add_subcommand("steenbrink", "Limit E1 entry with twists");
    add_input(steen, "strata JSON file");
    steen->add_option("--r", cfg.ss_r, "row index r")->required();
    steen->add_option("--q", cfg.ss_q, "cohomological degree q")->required();
    add_json(steen);
    steen->callback([&] { run_ss_steenbrink(cfg); });

    CLI::App* cscheck = ss->add_subcommand("cs-check", "Clemens-Schmid exactness report");
    add_input(cscheck, "Clemens-Schmid JSON file");
    add_json(cscheck);
    cscheck->callback([&] { run_ss_cs_check(cfg); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
