#include "gmot/curve_invariants.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "gmot/qmatrix.hpp"

namespace gmot {

int Modulus::degree() const {
    int d = 0;
    for (const auto& [place, n] : assignments)
        d += n;
    return d;
}

std::vector<std::string> Modulus::support() const {
    std::vector<std::string> s;
    for (const auto& [place, n] : assignments)
        s.push_back(place);
    return s;
}

void Modulus::validate() const {
    std::set<std::string> seen;
    for (const auto& [place, n] : assignments) {
        if (n < 1)
            throw std::invalid_argument("Modulus: multiplicities must be >= 1");
        if (!seen.insert(place).second)
            throw std::invalid_argument("Modulus: duplicate place '" + place + "'");
    }
}

void CurveProfile::validate() const {
    if (genus_smooth < 0)
        throw std::invalid_argument("CurveProfile: genus must be >= 0");
    modulus.validate();
}

int delta(const CurveProfile& profile) {
    profile.validate();
    return std::max(profile.modulus.degree() - 1, 0);
}

int delta_oracle(const CurveProfile& profile) {
    profile.validate();
    int deg = profile.modulus.degree();
    if (deg > 12)
        throw std::invalid_argument("delta_oracle: modulus degree capped at 12");
    if (deg == 0)
        return 0;
    // Jet space: per place P, coordinates (f(P), f'(P), ..., f^{(n_P-1)}(P)).
    // O'_Q reduces there to the line of constants (the order >= n_P part
    // truncates to zero), so delta = deg - rank of that line.
    QMat constants(deg, 1);
    int row = 0;
    for (const auto& [place, n] : profile.modulus.assignments) {
        constants.at(row, 0) = 1;  // value slot; derivative slots stay zero
        row += n;
    }
    return deg - constants.rank();
}

int arithmetic_genus(const CurveProfile& profile) {
    return profile.genus_smooth + delta(profile);
}

int plucker_pi(int d) {
    if (d < 3)
        throw std::invalid_argument("plucker_pi: degree must be >= 3");
    return 1 + d * (d - 3) / 2;
}

int plucker_genus(int d, int delta_value) {
    return plucker_pi(d) - delta_value;
}

int rr_expected(int deg_d, int pi) {
    return deg_d + 1 - pi;
}

bool rr_check(long l_prime, long i_prime, int deg_d, int pi) {
    return l_prime - i_prime == rr_expected(deg_d, pi);
}

RRReport rr_large_degree(int deg_d, int pi) {
    if (deg_d <= 2 * pi - 2)
        throw std::invalid_argument("rr_large_degree: requires deg D > 2 pi - 2");
    return {deg_d + 1 - pi, 0};
}

LocalUnitsStructure local_units_structure(const Modulus& m) {
    m.validate();
    if (m.assignments.empty())
        throw std::invalid_argument(
            "local_units_structure: empty modulus (smooth case has no R_m)");
    LocalUnitsStructure out;
    for (const auto& [place, n] : m.assignments) {
        out.torus_rank += 1;
        out.unipotent_dim += n - 1;
    }
    out.dim_r_mod_gm = m.degree() - 1;
    return out;
}

JacobianProfile jacobian_profile(const CurveProfile& profile) {
    profile.validate();
    JacobianProfile out;
    out.dim_abelian = profile.genus_smooth;
    if (profile.modulus.assignments.empty()) {
        out.dim_total = profile.genus_smooth;
        return out;
    }
    LocalUnitsStructure local = local_units_structure(profile.modulus);
    out.torus_rank = local.torus_rank - 1;  // the G_m quotient
    out.unipotent_dim = local.unipotent_dim;
    out.dim_total = out.dim_abelian + out.torus_rank + out.unipotent_dim;
    if (out.dim_total != arithmetic_genus(profile))
        throw std::logic_error("jacobian_profile: dim J_m != arithmetic genus");
    return out;
}

UniformizationReport uniformization_check(const CurveProfile& profile) {
    profile.validate();
    UniformizationReport out;
    out.dim = jacobian_profile(profile).dim_total;
    int s = static_cast<int>(profile.modulus.assignments.size());
    out.lattice_rank = 2 * profile.genus_smooth + std::max(s - 1, 0);
    out.compact = out.lattice_rank == 2 * out.dim;
    out.rank_at_most_twice_dim = out.lattice_rank <= 2 * out.dim;
    if (!out.rank_at_most_twice_dim)
        throw std::logic_error("uniformization_check: lattice rank exceeds 2 dim");
    return out;
}

ThetaProfile theta_profile(const CurveProfile& profile) {
    profile.validate();
    int pi = arithmetic_genus(profile);
    if (pi < 1)
        throw std::invalid_argument("theta_profile: arithmetic genus 0 has no theta divisor");
    ThetaProfile out;
    out.dim_theta = jacobian_profile(profile).dim_total - 1;
    out.surjective_at = pi;
    return out;
}

}  // namespace gmot
