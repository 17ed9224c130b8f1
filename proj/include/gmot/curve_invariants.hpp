#pragma once

#include <string>
#include <utility>
#include <vector>

namespace gmot {

// Formal sum of places with positive multiplicities. Place names are opaque
// ids; only the support and the multiplicities enter any computation.
struct Modulus {
    std::vector<std::pair<std::string, int>> assignments;

    int degree() const;
    std::vector<std::string> support() const;
    void validate() const;  // multiplicities >= 1, distinct place ids
};

// A smooth curve of genus g with all of the modulus support collapsed to one
// singular point.
struct CurveProfile {
    int genus_smooth = 0;
    Modulus modulus;

    void validate() const;  // g >= 0
};

// delta = dim O_Q / O'_Q with O'_Q = constants + {f : v_P(f) >= n_P}. The
// closed form is max(deg m - 1, 0); delta_oracle recomputes it as an exact
// rank on truncated jet spaces.
int delta(const CurveProfile& profile);

// Brute-force dimension of (sum of jets O_P/m_P^{n_P}) modulo the image of
// the constants, by exact rank. Guard: deg m <= 12.
int delta_oracle(const CurveProfile& profile);

// pi = g + delta.
int arithmetic_genus(const CurveProfile& profile);

// Plane curve of degree d: pi = 1 + d(d-3)/2, and g = pi - delta for a curve
// with total delta-invariant delta.
int plucker_pi(int d);
int plucker_genus(int d, int delta_value);

// Riemann-Roch bookkeeping: l'(D) - i'(D) = deg D + 1 - pi.
int rr_expected(int deg_d, int pi);
bool rr_check(long l_prime, long i_prime, int deg_d, int pi);

// For deg D > 2 pi - 2 the index vanishes and l' is pinned.
struct RRReport {
    long l_prime = 0;
    long i_prime = 0;
};
RRReport rr_large_degree(int deg_d, int pi);

// R_m = product over places of U_P/U_P^{(n_P)} (one G_m and an n_P - 1
// dimensional unipotent part each); dim R_m / G_m = deg m - 1.
struct LocalUnitsStructure {
    int torus_rank = 0;
    int unipotent_dim = 0;
    int dim_r_mod_gm = 0;
};
LocalUnitsStructure local_units_structure(const Modulus& m);

// Extension data of 0 -> R_m/G_m -> J_m -> J -> 0.
struct JacobianProfile {
    int dim_total = 0;
    int dim_abelian = 0;
    int torus_rank = 0;
    int unipotent_dim = 0;
};
JacobianProfile jacobian_profile(const CurveProfile& profile);

// Dimension/lattice bookkeeping of J_m = Omega(-m)^dual / H_1(X - S, Z).
struct UniformizationReport {
    int dim = 0;
    int lattice_rank = 0;
    bool compact = false;
    bool rank_at_most_twice_dim = false;
};
UniformizationReport uniformization_check(const CurveProfile& profile);

// Theta divisor: image of sym^{pi-1}(X); sym^n(X) -> J_m surjective from
// n = pi on.
struct ThetaProfile {
    int dim_theta = 0;
    int surjective_at = 0;
};
ThetaProfile theta_profile(const CurveProfile& profile);

}  // namespace gmot
