// Acceptance gate. Runs nine end-to-end checks, prints exactly one PASS/FAIL
// line per criterion, and exits with the number of failures. Wall-clock
// budgets are pinned in the table in main(); a budget of 0 means the
// criterion is exactness-only.

#include <sys/wait.h>

#include <gmpxx.h>

#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "gmot/curve_invariants.hpp"
#include "gmot/graph_motive.hpp"
#include "gmot/hodge.hpp"
#include "gmot/mpoly.hpp"
#include "gmot/multigraph.hpp"
#include "hodge_fixtures.hpp"

using namespace gmot;
namespace corpus = gmot::testing;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;   // stats for the PASS line
    std::string failure;  // first failing check
};

void require(Outcome& o, bool condition, const std::string& what) {
    if (!condition && o.pass) {
        o.pass = false;
        o.failure = what;
    }
}

std::string describe(const Multigraph& g) {
    std::string s = "graph n=" + std::to_string(g.vertex_count) + " edges=[";
    for (int e = 0; e < g.edge_count(); ++e)
        s += (e ? "," : "") + std::to_string(g.edges[e].tail) + "-" +
             std::to_string(g.edges[e].head);
    return s + "]";
}

bool loopless(const Multigraph& g) {
    for (int e = 0; e < g.edge_count(); ++e)
        if (g.is_loop(e))
            return false;
    return true;
}

Multigraph complete_graph(int n) {
    Multigraph g;
    g.vertex_count = n;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            g.edges.push_back({a, b});
    return g;
}

// Every connected simple graph on 1..max_n labeled vertices.
std::vector<Multigraph> connected_simple_graphs(int max_n) {
    std::vector<Multigraph> out;
    for (int n = 1; n <= max_n; ++n) {
        std::vector<std::pair<int, int>> pairs;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                pairs.push_back({a, b});
        long count = static_cast<long>(pairs.size());
        for (long mask = 0; mask < (1L << count); ++mask) {
            Multigraph g;
            g.vertex_count = n;
            for (long i = 0; i < count; ++i)
                if (mask >> i & 1)
                    g.edges.push_back({pairs[i].first, pairs[i].second});
            if (is_connected(g))
                out.push_back(std::move(g));
        }
    }
    return out;
}

WeightBundle random_positive_weights(const Multigraph& g, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(1, 9), den(1, 9);
    WeightBundle wb;
    for (int v = 0; v < g.vertex_count; ++v) {
        mpq_class b(num(rng), den(rng));
        b.canonicalize();
        wb.beta.push_back(std::move(b));
    }
    return resolved_weights(g, wb);
}

// Nondecreasing multiplicity tuples with 1..max_places places and total
// degree at most max_deg; place identity never matters.
std::vector<Modulus> all_moduli(int max_deg, int max_places) {
    std::vector<Modulus> out;
    std::vector<int> mults;
    auto rec = [&](auto&& self, int lo, int left) -> void {
        if (!mults.empty()) {
            Modulus m;
            for (size_t i = 0; i < mults.size(); ++i)
                m.assignments.push_back({"P" + std::to_string(i), mults[i]});
            out.push_back(std::move(m));
        }
        if (static_cast<int>(mults.size()) == max_places)
            return;
        for (int v = lo; v <= left; ++v) {
            mults.push_back(v);
            self(self, v, left - v);
            mults.pop_back();
        }
    };
    rec(rec, 1, max_deg);
    return out;
}

// ---- criterion 1: the three psi routes agree --------------------------------

void criterion_triple_route(Outcome& o) {
    auto check = [&](const Multigraph& g) {
        MPoly tree = psi_tree_sum(g);
        require(o, psi_config_det(g) == tree, describe(g) + ": config route disagrees");
        require(o, psi_laplacian(g) == tree, describe(g) + ": laplacian route disagrees");
    };
    int corpus_count = 0;
    for (const Multigraph& g : corpus::connected_multigraph_corpus(6))
        if (loopless(g)) {
            check(g);
            ++corpus_count;
        }
    std::mt19937 rng(20260814);
    for (int i = 0; i < 100; ++i) {
        Multigraph g = corpus::random_connected_multigraph(rng, 7, 8);
        while (!loopless(g))
            g = corpus::random_connected_multigraph(rng, 7, 8);
        check(g);
    }
    o.detail = std::to_string(corpus_count) + " corpus graphs + 100 random";
}

// ---- criterion 2: matrix-tree numbers ---------------------------------------

void criterion_matrix_tree(Outcome& o) {
    const long cayley[] = {3, 16, 125, 1296};  // n^{n-2}, n = 3..6
    for (int n = 3; n <= 6; ++n) {
        mpz_class count = matrix_tree_count(complete_graph(n));
        require(o, count == cayley[n - 3],
                "K" + std::to_string(n) + " gave " + count.get_str());
    }
    for (int n = 3; n <= 5; ++n) {
        Multigraph g = complete_graph(n);
        long listed = static_cast<long>(enumerate_spanning_trees(g).size());
        require(o, matrix_tree_count(g) == listed,
                "K" + std::to_string(n) + " differs from the enumerated tree list");
    }
    for (int n = 3; n <= 8; ++n) {
        mpz_class count = matrix_tree_count(corpus::cycle(n));
        require(o, count == n, "C" + std::to_string(n) + " gave " + count.get_str());
    }
    o.detail = "K3..K6 = 3,16,125,1296; K_n vs enumeration; C3..C8";
}

// ---- criterion 3: signed cofactor vs rooted tree weights --------------------

void criterion_cofactor_identity(Outcome& o) {
    std::mt19937_64 rng(4242);
    int graphs = 0;
    long pairs = 0;
    for (const Multigraph& g : connected_simple_graphs(5)) {
        ++graphs;
        for (int trial = 0; trial < 3; ++trial) {
            WeightBundle wb = random_positive_weights(g, rng);
            RootedTreeWeights trees = rooted_tree_weights(g, wb);
            for (int u = 0; u < g.vertex_count; ++u)
                for (int v = 0; v < g.vertex_count; ++v) {
                    IdentityReport rep = cofactor_tree_identity(g, wb, u, v, trees);
                    require(o, rep.equal && rep.lhs == rep.rhs,
                            describe(g) + " at (u,v)=(" + std::to_string(u) + "," +
                                std::to_string(v) + ")");
                    ++pairs;
                }
        }
    }
    o.detail = std::to_string(graphs) + " graphs x 3 weightings, " +
               std::to_string(pairs) + " cofactors";
}

// ---- criterion 4: charpoly coefficients vs rooted forest sums ---------------

void criterion_forest_charpoly(Outcome& o) {
    std::mt19937_64 rng(1117);
    int graphs = 0;
    long rows_checked = 0;
    for (const Multigraph& g : connected_simple_graphs(5)) {
        ++graphs;
        WeightBundle wb = random_positive_weights(g, rng);
        std::vector<ForestCheckRow> rows = forest_charpoly_check(g, wb);
        int n = g.vertex_count;
        require(o, static_cast<int>(rows.size()) == n + 1, describe(g) + ": row count");
        for (const ForestCheckRow& row : rows) {
            mpq_class signed_sum =
                (n - row.s) % 2 == 0 ? row.forest_sum : mpq_class(-row.forest_sum);
            require(o, row.equal && row.coefficient == signed_sum,
                    describe(g) + " at s=" + std::to_string(row.s));
            ++rows_checked;
        }
    }
    o.detail = std::to_string(graphs) + " graphs, " + std::to_string(rows_checked) +
               " coefficient rows";
}

// ---- criterion 5: point-count conservation and closed forms -----------------

void criterion_point_counts(Outcome& o) {
    long runs = 0;
    auto counted = [&](const Multigraph& g, long q) {
        PointCountProfile prof = count_points(g, q);
        mpz_class power = 1;
        for (int i = 0; i < g.edge_count(); ++i)
            power *= q;
        mpz_class ambient = (power - 1) / (q - 1);
        require(o, prof.hypersurface_count + prof.complement_count == prof.ambient,
                describe(g) + " at q=" + std::to_string(q) + ": counts do not add up");
        require(o, ambient == prof.ambient,
                describe(g) + " at q=" + std::to_string(q) + ": ambient size is off");
        ++runs;
        return prof;
    };
    for (long q : {2L, 3L, 5L}) {
        PointCountProfile prof = counted(corpus::triangle(), q);
        require(o, prof.hypersurface_count == q + 1,
                "triangle hypersurface at q=" + std::to_string(q) + " is not q+1");
        require(o, prof.complement_count == q * q,
                "triangle complement at q=" + std::to_string(q) + " is not q^2");
    }
    for (long q : {2L, 3L}) {
        PointCountProfile prof = counted(corpus::banana(3), q);
        require(o, prof.hypersurface_count == q + 1,
                "banana-3 hypersurface at q=" + std::to_string(q) + " is not q+1");
    }
    for (long q : {2L, 3L, 5L})
        counted(corpus::k4(), q);
    counted(corpus::banana(4), 3);
    counted(corpus::path(3), 7);
    o.detail = std::to_string(runs) + " runs, conservation on each";
}

// ---- criterion 6: deletion-contraction --------------------------------------

void criterion_deletion_contraction(Outcome& o) {
    std::vector<Multigraph> graphs = corpus::connected_multigraph_corpus(6);
    long checks = 0;
    for (const Multigraph& g : graphs)
        for (int e = 0; e < g.edge_count(); ++e) {
            if (g.is_loop(e) || is_bridge(g, e))
                continue;
            DeletionContractionReport rep = deletion_contraction_check(g, e);
            require(o, rep.equal, describe(g) + " at edge " + std::to_string(e));
            ++checks;
        }
    o.detail = std::to_string(checks) + " edges over " + std::to_string(graphs.size()) +
               " graphs";
}

// ---- criterion 7: curve invariants ------------------------------------------

void criterion_curve_invariants(Outcome& o) {
    CurveProfile cusp{0, Modulus{{{"P", 2}}}};
    CurveProfile node{0, Modulus{{{"P1", 1}, {"P2", 1}}}};
    for (const CurveProfile* p : {&cusp, &node}) {
        const char* name = p == &cusp ? "cusp" : "node";
        require(o, delta(*p) == 1, std::string(name) + ": delta != 1");
        require(o, arithmetic_genus(*p) == 1, std::string(name) + ": pi != 1");
        require(o, jacobian_profile(*p).dim_total == 1, std::string(name) + ": dim J != 1");
    }
    JacobianProfile jc = jacobian_profile(cusp);
    require(o, jc.torus_rank == 0 && jc.unipotent_dim == 1,
            "cusp split is not (torus,unipotent)=(0,1)");
    JacobianProfile jn = jacobian_profile(node);
    require(o, jn.torus_rank == 1 && jn.unipotent_dim == 0,
            "node split is not (torus,unipotent)=(1,0)");

    int moduli_checked = 0;
    for (const Modulus& m : all_moduli(12, 4)) {
        CurveProfile p{0, m};
        require(o, delta(p) == delta_oracle(p),
                "delta vs oracle at degree " + std::to_string(m.degree()) + ", " +
                    std::to_string(m.assignments.size()) + " places");
        for (int g = 0; g <= 3; ++g) {
            CurveProfile pg{g, m};
            require(o, arithmetic_genus(pg) == jacobian_profile(pg).dim_total,
                    "pi != dim J at g=" + std::to_string(g) + ", degree " +
                        std::to_string(m.degree()));
        }
        ++moduli_checked;
    }
    require(o, plucker_pi(3) == 1 && plucker_pi(4) == 3 && plucker_pi(5) == 6,
            "plucker pi(3,4,5) != (1,3,6)");
    o.detail = "cusp/node, " + std::to_string(moduli_checked) +
               " moduli vs oracle and dim J, plucker";
}

// ---- criterion 8: spectral sequences, NCD, Clemens-Schmid, Steenbrink -------

void criterion_hodge(Outcome& o) {
    std::mt19937_64 rng(20260814);
    for (int trial = 0; trial < 200; ++trial) {
        fixtures::DegenerateComplex dcx = fixtures::random_degenerate_complex(rng);
        std::vector<int> total = total_cohomology(dcx.dc);
        require(o, total == dcx.expected_totals,
                "random complex " + std::to_string(trial) + ": totals");
        for (Filtration f : {Filtration::by_columns, Filtration::by_rows}) {
            SpectralPages pages = spectral_sequence(dcx.dc, f);
            require(o, pages.degenerates_at_e2 && pages.e2_totals == total,
                    "random complex " + std::to_string(trial) + ": e2 vs totals");
        }
    }

    int fixture_index = 0;
    for (const StrataData& sd : {fixtures::two_component_ncd(), fixtures::cycle_ncd(3)}) {
        SpectralPages pages = spectral_sequence(strata_to_double_complex(sd));
        require(o, pages.degenerates_at_e2 && pages.e2_totals == pages.total,
                "ncd fixture " + std::to_string(fixture_index) + ": e2 vs totals");
        ++fixture_index;
    }
    NcdBetti two = ncd_betti(fixtures::two_component_ncd());
    require(o,
            two.h.size() == 4 && two.h[0] == 1 && two.h[1] == 0 && two.h[2] == 2 &&
                two.h[3] == 0,
            "two-component ncd is not (1,0,2)");
    NcdBetti cyc = ncd_betti(fixtures::cycle_ncd(3));
    require(o, cyc.h[1] == 1 && cyc.weight[1][0] == 1 && cyc.weight[1][1] == 0,
            "3-cycle ncd H^1 is not one class of weight 0");

    ClemensSchmidData cs = fixtures::nodal_elliptic_cs();
    require(o, clemens_schmid_check(cs).all_exact, "nodal fixture is not exact");
    std::vector<ClemensSchmidData> mutations = fixtures::single_node_mutations(cs);
    require(o, mutations.size() == 10,
            "expected 10 single-node mutations, got " + std::to_string(mutations.size()));
    for (size_t i = 0; i < mutations.size(); ++i)
        require(o, !clemens_schmid_check(mutations[i]).all_exact,
                "mutation " + std::to_string(i) + " left the sequence exact");

    StrataData sd3 = fixtures::cycle_ncd(3);
    struct HandEntry {
        int r, q, dim;
    };
    const HandEntry table[] = {{0, 0, 3}, {1, 0, 0}, {-1, 2, 0}, {-1, 1, 3}, {0, 2, 3}};
    for (const HandEntry& h : table) {
        SteenbrinkEntry e = steenbrink_e1(sd3, h.r, h.q);
        require(o, e.dim == h.dim,
                "steenbrink (r,q)=(" + std::to_string(h.r) + "," + std::to_string(h.q) +
                    ") gave " + std::to_string(e.dim));
    }
    SteenbrinkEntry knee = steenbrink_e1(sd3, -1, 1);
    bool term_ok = false;
    for (const SteenbrinkTerm& t : knee.terms)
        term_ok = term_ok || (t.k == 1 && t.stratum == 2 && t.dim == 3 && t.twist == 0);
    require(o, term_ok, "steenbrink (-1,1) is missing the b_0(D^(2)) twist-0 term");

    o.detail = "200 random complexes, 2 ncd fixtures, cs + 10 mutations, steenbrink table";
}

// ---- criterion 9: CLI determinism -------------------------------------------

struct CmdResult {
    std::string out;
    int status = -1;
};

CmdResult run_command(const std::string& cmd) {
    std::string full = cmd + " 2>/dev/null";
    FILE* pipe = popen(full.c_str(), "r");
    if (!pipe)
        return {};
    CmdResult result;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0)
        result.out.append(buf, n);
    int rc = pclose(pipe);
    result.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return result;
}

std::string subst(std::string s, const std::string& from, const std::string& to) {
    size_t pos;
    while ((pos = s.find(from)) != std::string::npos)
        s.replace(pos, from.size(), to);
    return s;
}

void criterion_cli(Outcome& o) {
    const std::string cli = GMOT_CLI_PATH;
    const std::string fix = GMOT_FIXTURE_DIR;
    const std::vector<std::string> tails = {
        "psi {F}/triangle.json",
        "psi {F}/triangle.json --json",
        "psi {F}/k4.json --route all",
        "psi {F}/banana3.json --route config",
        "psi {F}/banana3.json --route laplacian --json",
        "trees {F}/k4.json",
        "trees {F}/k4.json --json",
        "forests {F}/weighted_path.json",
        "forests {F}/triangle.json --seed 7 --json",
        "charpoly {F}/weighted_path.json",
        "charpoly {F}/triangle.json --json",
        "cofactor-check {F}/weighted_path.json",
        "cofactor-check {F}/triangle.json --seed 5 --trials 2 --json",
        "points {F}/triangle.json --q 3",
        "points {F}/banana3.json --q 2 --json",
        "del-con {F}/k4.json --edge 0",
        "del-con {F}/triangle.json --edge 1 --json",
        "curve delta {F}/cusp.json",
        "curve delta {F}/node.json --json",
        "curve genus {F}/genus2.json",
        "curve genus {F}/cusp.json --json",
        "curve jacobian {F}/cusp.json",
        "curve jacobian {F}/node.json --json",
        "curve theta {F}/genus2.json",
        "curve theta {F}/cusp.json --json",
        "curve uniformization {F}/genus2.json",
        "curve uniformization {F}/node.json --json",
        "curve plucker --d 5",
        "curve plucker --d 4 --json",
        "ss total {F}/dc_square.json",
        "ss total {F}/dc_d2.json --json",
        "ss pages {F}/dc_d2.json",
        "ss pages {F}/dc_square.json --filtration rows --json",
        "ss ncd {F}/strata_two_p1.json",
        "ss ncd {F}/strata_cycle3.json --json",
        "ss steenbrink {F}/strata_cycle3.json --r=0 --q=0",
        "ss steenbrink {F}/strata_cycle3.json --r=-1 --q=1 --json",
        "ss cs-check {F}/cs_nodal.json",
        "ss cs-check {F}/cs_nodal.json --json",
    };
    int runs = 0;
    for (const std::string& tail : tails) {
        std::string cmd = "\"" + cli + "\" " + subst(tail, "{F}", fix);
        CmdResult first = run_command(cmd);
        CmdResult second = run_command(cmd);
        require(o, first.status == 0,
                tail + ": exit " + std::to_string(first.status));
        require(o, !first.out.empty(), tail + ": no output");
        require(o, first.out == second.out, tail + ": outputs differ between runs");
        ++runs;
    }
    o.detail = std::to_string(runs) + " invocations, each run twice";
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        double budget_s;
        void (*fn)(Outcome&);
    };
    const std::vector<Criterion> criteria = {
        {1, "triple-route psi agreement", 60, criterion_triple_route},
        {2, "matrix-tree counts", 10, criterion_matrix_tree},
        {3, "cofactor tree identity", 60, criterion_cofactor_identity},
        {4, "forest charpoly coefficients", 120, criterion_forest_charpoly},
        {5, "point-count conservation", 30, criterion_point_counts},
        {6, "deletion-contraction", 0, criterion_deletion_contraction},
        {7, "curve invariants", 5, criterion_curve_invariants},
        {8, "hodge bookkeeping", 60, criterion_hodge},
        {9, "cli determinism", 30, criterion_cli},
    };

    int failed = 0;
    for (const Criterion& c : criteria) {
        Outcome o;
        auto start = std::chrono::steady_clock::now();
        try {
            c.fn(o);
        } catch (const std::exception& e) {
            o.pass = false;
            o.failure = std::string("exception: ") + e.what();
        }
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

        bool in_budget = c.budget_s <= 0 || secs <= c.budget_s;
        bool pass = o.pass && in_budget;
        std::string note = !o.pass ? o.failure
                           : !in_budget
                               ? "over budget"
                               : o.detail;
        char timing[64];
        if (c.budget_s > 0)
            std::snprintf(timing, sizeof timing, "%.1fs of %.0fs", secs, c.budget_s);
        else
            std::snprintf(timing, sizeof timing, "%.1fs", secs);
        std::printf("criterion %d (%s): %s  [%s; %s]\n", c.id, c.name,
                    pass ? "PASS" : "FAIL", note.c_str(), timing);
        std::fflush(stdout);
        if (!pass)
            ++failed;
    }
    std::printf("acceptance: %d/9 criteria passed\n", 9 - failed);
    return failed;
}
