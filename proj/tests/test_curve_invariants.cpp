#include "gmot/curve_invariants.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"

using namespace gmot;

namespace {

CurveProfile profile(int g, std::vector<std::pair<std::string, int>> places) {
    CurveProfile p;
    p.genus_smooth = g;
    p.modulus.assignments = std::move(places);
    return p;
}

const CurveProfile cusp = profile(0, {{"P", 2}});
const CurveProfile node = profile(0, {{"P1", 1}, {"P2", 1}});

}  // namespace

TEST_CASE("modulus degree and support") {
    Modulus m{{{"P", 3}, {"Q", 1}}};
    CHECK(m.degree() == 4);
    CHECK(m.support() == std::vector<std::string>{"P", "Q"});
    CHECK_NOTHROW(m.validate());

    CHECK_THROWS_AS((Modulus{{{"P", 0}}}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((Modulus{{{"P", 1}, {"P", 2}}}.validate()), std::invalid_argument);
    CHECK_THROWS_AS(profile(-1, {}).validate(), std::invalid_argument);
}

TEST_CASE("delta closed form") {
    CHECK(delta(profile(0, {})) == 0);
    CHECK(delta(profile(3, {})) == 0);
    CHECK(delta(profile(0, {{"P", 1}})) == 0);
    CHECK(delta(cusp) == 1);
    CHECK(delta(node) == 1);
    CHECK(delta(profile(2, {{"P", 2}, {"Q", 2}})) == 3);
    CHECK(delta(profile(0, {{"P", 5}})) == 4);
}

TEST_CASE("delta equals jet-space oracle for every modulus of degree <= 12") {
    // Sweep all multiplicity tuples over at most 4 places, nondecreasing to
    // skip relabelings (delta only sees the multiset).
    const char* names[] = {"P1", "P2", "P3", "P4"};
    int checked = 0;
    std::vector<int> mult;
    auto sweep = [&](auto&& self, int min_next, int deg_left) -> void {
        CurveProfile p;
        p.genus_smooth = 1;
        for (size_t i = 0; i < mult.size(); ++i)
            p.modulus.assignments.emplace_back(names[i], mult[i]);
        CHECK(delta_oracle(p) == delta(p));
        ++checked;
        if (mult.size() == 4)
            return;
        for (int n = min_next; n <= deg_left; ++n) {
            mult.push_back(n);
            self(self, n, deg_left - n);
            mult.pop_back();
        }
    };
    sweep(sweep, 1, 12);
    CHECK(checked > 50);

    CHECK_THROWS_AS(delta_oracle(profile(0, {{"P", 13}})), std::invalid_argument);
}

TEST_CASE("arithmetic genus adds delta to the smooth genus") {
    CHECK(arithmetic_genus(cusp) == 1);
    CHECK(arithmetic_genus(node) == 1);
    CHECK(arithmetic_genus(profile(2, {{"P", 3}, {"Q", 1}})) == 5);
    CHECK(arithmetic_genus(profile(4, {})) == 4);
}

TEST_CASE("plucker formula") {
    CHECK(plucker_pi(3) == 1);
    CHECK(plucker_pi(4) == 3);
    CHECK(plucker_pi(5) == 6);
    CHECK(plucker_genus(3, 1) == 0);  // nodal/cuspidal cubic is rational
    CHECK(plucker_genus(4, 1) == 2);
    CHECK_THROWS_AS(plucker_pi(2), std::invalid_argument);
}

TEST_CASE("riemann-roch bookkeeping") {
    CHECK(rr_expected(3, 1) == 3);
    CHECK(rr_check(3, 0, 3, 1));
    CHECK(!rr_check(4, 0, 3, 1));
    CHECK(rr_check(6, 1, 5, 1));

    RRReport big = rr_large_degree(7, 2);
    CHECK(big.l_prime == 6);
    CHECK(big.i_prime == 0);
    // deg = 2 pi - 2 is exactly the edge where the index may be nonzero.
    CHECK_THROWS_AS(rr_large_degree(2, 2), std::invalid_argument);
}

TEST_CASE("local units structure") {
    LocalUnitsStructure c = local_units_structure(cusp.modulus);
    CHECK(c.torus_rank == 1);
    CHECK(c.unipotent_dim == 1);
    CHECK(c.dim_r_mod_gm == 1);

    LocalUnitsStructure n = local_units_structure(node.modulus);
    CHECK(n.torus_rank == 2);
    CHECK(n.unipotent_dim == 0);
    CHECK(n.dim_r_mod_gm == 1);

    CHECK_THROWS_AS(local_units_structure(Modulus{}), std::invalid_argument);
}

TEST_CASE("jacobian profile splits cusp and node differently") {
    JacobianProfile c = jacobian_profile(cusp);
    CHECK(c.dim_total == 1);
    CHECK(c.dim_abelian == 0);
    CHECK(c.torus_rank == 0);
    CHECK(c.unipotent_dim == 1);

    JacobianProfile n = jacobian_profile(node);
    CHECK(n.dim_total == 1);
    CHECK(n.dim_abelian == 0);
    CHECK(n.torus_rank == 1);
    CHECK(n.unipotent_dim == 0);

    JacobianProfile smooth = jacobian_profile(profile(3, {}));
    CHECK(smooth.dim_total == 3);
    CHECK(smooth.torus_rank == 0);
    CHECK(smooth.unipotent_dim == 0);
}

TEST_CASE("dim J_m equals the arithmetic genus on a modulus sweep") {
    for (int g = 0; g <= 3; ++g)
        for (int n1 = 1; n1 <= 4; ++n1)
            for (int n2 = 0; n2 <= 3; ++n2) {
                CurveProfile p = n2 == 0 ? profile(g, {{"P", n1}})
                                         : profile(g, {{"P", n1}, {"Q", n2}});
                CHECK(jacobian_profile(p).dim_total == arithmetic_genus(p));
            }
}

TEST_CASE("uniformization lattice ranks") {
    UniformizationReport smooth = uniformization_check(profile(2, {}));
    CHECK(smooth.dim == 2);
    CHECK(smooth.lattice_rank == 4);
    CHECK(smooth.compact);

    // Degree-1 modulus changes nothing: J_m = J stays compact.
    UniformizationReport one = uniformization_check(profile(2, {{"P", 1}}));
    CHECK(one.dim == 2);
    CHECK(one.lattice_rank == 4);
    CHECK(one.compact);

    UniformizationReport c = uniformization_check(cusp);
    CHECK(c.dim == 1);
    CHECK(c.lattice_rank == 0);
    CHECK(!c.compact);

    UniformizationReport n = uniformization_check(node);
    CHECK(n.dim == 1);
    CHECK(n.lattice_rank == 1);
    CHECK(!n.compact);

    for (int g = 0; g <= 3; ++g)
        for (int n1 = 1; n1 <= 3; ++n1) {
            UniformizationReport r = uniformization_check(profile(g, {{"P", n1}}));
            CHECK(r.rank_at_most_twice_dim);
            CHECK(r.compact == (profile(g, {{"P", n1}}).modulus.degree() <= 1));
        }
}

TEST_CASE("theta profile") {
    ThetaProfile c = theta_profile(cusp);
    CHECK(c.dim_theta == 0);
    CHECK(c.surjective_at == 1);

    ThetaProfile big = theta_profile(profile(2, {{"P1", 1}, {"P2", 1}}));
    CHECK(big.dim_theta == 2);
    CHECK(big.surjective_at == 3);

    CHECK_THROWS_AS(theta_profile(profile(0, {})), std::invalid_argument);
    CHECK_THROWS_AS(theta_profile(profile(0, {{"P", 1}})), std::invalid_argument);
}
