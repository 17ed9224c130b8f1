#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace gmot {

// One monomial with a rational coefficient. `exps` always has the owning
// polynomial's variable count.
struct Term {
    mpq_class coeff;
    std::vector<int> exps;

    bool operator==(const Term&) const = default;
};

// Graded-lex order on exponent tuples: compare total degree first, then
// lexicographically. Returns negative/zero/positive like strcmp.
int compare_grlex(const std::vector<int>& a, const std::vector<int>& b);

// Sparse multivariate polynomial with exact rational coefficients.
// Terms are kept in strictly descending graded-lex order with no zero
// coefficients stored, so equal polynomials are memberwise equal.
class MPoly {
public:
    MPoly() = default;
    explicit MPoly(int nvars) : nvars_(nvars) {}

    static MPoly constant(int nvars, const mpq_class& c);
    static MPoly variable(int nvars, int index);
    static MPoly monomial(int nvars, const mpq_class& coeff, std::vector<int> exps);
    // Sorts, merges duplicates, and drops zero coefficients.
    static MPoly from_terms(int nvars, std::vector<Term> terms);

    int nvars() const { return nvars_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int term_count() const { return static_cast<int>(terms_.size()); }

    int total_degree() const;  // -1 for the zero polynomial
    bool is_constant() const;
    bool is_homogeneous() const;
    bool is_multilinear() const;
    // Constant value; requires is_constant().
    mpq_class constant_value() const;

    MPoly operator-() const;
    MPoly operator+(const MPoly& rhs) const;
    MPoly operator-(const MPoly& rhs) const;
    MPoly operator*(const MPoly& rhs) const;
    MPoly& operator+=(const MPoly& rhs);
    MPoly& operator-=(const MPoly& rhs);
    MPoly& operator*=(const MPoly& rhs);
    MPoly operator*(const mpq_class& c) const;
    bool operator==(const MPoly&) const = default;

    mpq_class eval(const std::vector<mpq_class>& point) const;

    std::string to_string() const;
    std::string to_string(const std::vector<std::string>& names) const;

private:
    int nvars_ = 0;
    std::vector<Term> terms_;

    void normalize();
    void check_vars(const MPoly& other) const;
};

MPoly pow(const MPoly& base, int exponent);

// Exact division: the unique q with a == q*b. Throws std::domain_error when
// b is zero or when the division leaves a remainder.
MPoly divide_exact(const MPoly& a, const MPoly& b);

// Copy of p over nvars+1 variables, with a fresh variable (exponent zero in
// every term) spliced in at `position`.
MPoly insert_variable(const MPoly& p, int position);

// Value of p at a point over the field with q elements, q prime. Coefficient
// denominators must be invertible mod q. Result is in [0, q).
long eval_mod_q(const MPoly& p, const std::vector<long>& point, long q);

}  // namespace gmot
