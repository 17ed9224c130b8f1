#include "gmot/mpoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gmot {

int compare_grlex(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("compare_grlex: exponent tuples of different lengths");
    long da = std::accumulate(a.begin(), a.end(), 0L);
    long db = std::accumulate(b.begin(), b.end(), 0L);
    if (da != db)
        return da < db ? -1 : 1;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i])
            return a[i] < b[i] ? -1 : 1;
    return 0;
}

namespace {

bool term_before(const Term& s, const Term& t) {
    return compare_grlex(s.exps, t.exps) > 0;  // descending
}

}  // namespace

void MPoly::normalize() {
    for (const Term& t : terms_)
        if (static_cast<int>(t.exps.size()) != nvars_)
            throw std::invalid_argument("MPoly: term arity does not match variable count");
    std::sort(terms_.begin(), terms_.end(), term_before);
    size_t w = 0;
    for (size_t r = 0; r < terms_.size(); ++r) {
        if (w > 0 && terms_[w - 1].exps == terms_[r].exps) {
            terms_[w - 1].coeff += terms_[r].coeff;
        } else {
            if (w != r)
                terms_[w] = std::move(terms_[r]);
            ++w;
        }
        if (w > 0 && terms_[w - 1].coeff == 0)
            --w;
    }
    terms_.resize(w);
}

void MPoly::check_vars(const MPoly& other) const {
    if (nvars_ != other.nvars_)
        throw std::invalid_argument("MPoly: variable-count mismatch");
}

MPoly MPoly::constant(int nvars, const mpq_class& c) {
    MPoly p(nvars);
    if (c != 0)
        p.terms_.push_back({c, std::vector<int>(nvars, 0)});
    return p;
}

MPoly MPoly::variable(int nvars, int index) {
    if (index < 0 || index >= nvars)
        throw std::invalid_argument("MPoly::variable: index out of range");
    MPoly p(nvars);
    std::vector<int> e(nvars, 0);
    e[index] = 1;
    p.terms_.push_back({mpq_class(1), std::move(e)});
    return p;
}

MPoly MPoly::monomial(int nvars, const mpq_class& coeff, std::vector<int> exps) {
    if (static_cast<int>(exps.size()) != nvars)
        throw std::invalid_argument("MPoly::monomial: arity mismatch");
    for (int e : exps)
        if (e < 0)
            throw std::invalid_argument("MPoly::monomial: negative exponent");
    MPoly p(nvars);
    if (coeff != 0)
        p.terms_.push_back({coeff, std::move(exps)});
    return p;
}

MPoly MPoly::from_terms(int nvars, std::vector<Term> terms) {
    MPoly p(nvars);
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
}

int MPoly::total_degree() const {
    if (terms_.empty())
        return -1;
    // Leading term has the maximal total degree under graded-lex.
    const std::vector<int>& e = terms_.front().exps;
    return static_cast<int>(std::accumulate(e.begin(), e.end(), 0L));
}

bool MPoly::is_constant() const {
    return terms_.empty() || total_degree() == 0;
}

bool MPoly::is_homogeneous() const {
    if (terms_.empty())
        return true;
    long d = std::accumulate(terms_.front().exps.begin(), terms_.front().exps.end(), 0L);
    for (const Term& t : terms_)
        if (std::accumulate(t.exps.begin(), t.exps.end(), 0L) != d)
            return false;
    return true;
}

bool MPoly::is_multilinear() const {
    for (const Term& t : terms_)
        for (int e : t.exps)
            if (e > 1)
                return false;
    return true;
}

mpq_class MPoly::constant_value() const {
    if (!is_constant())
        throw std::domain_error("MPoly::constant_value: polynomial is not constant");
    return terms_.empty() ? mpq_class(0) : terms_.front().coeff;
}

MPoly MPoly::operator-() const {
    MPoly p(*this);
    for (Term& t : p.terms_)
        t.coeff = -t.coeff;
    return p;
}

MPoly MPoly::operator+(const MPoly& rhs) const {
    check_vars(rhs);
    MPoly out(nvars_);
    out.terms_.reserve(terms_.size() + rhs.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < rhs.terms_.size()) {
        int c = compare_grlex(terms_[i].exps, rhs.terms_[j].exps);
        if (c > 0) {
            out.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            out.terms_.push_back(rhs.terms_[j++]);
        } else {
            mpq_class s = terms_[i].coeff + rhs.terms_[j].coeff;
            if (s != 0)
                out.terms_.push_back({std::move(s), terms_[i].exps});
            ++i;
            ++j;
        }
    }
    out.terms_.insert(out.terms_.end(), terms_.begin() + i, terms_.end());
    out.terms_.insert(out.terms_.end(), rhs.terms_.begin() + j, rhs.terms_.end());
    return out;
}

MPoly MPoly::operator-(const MPoly& rhs) const {
    return *this + (-rhs);
}

MPoly MPoly::operator*(const MPoly& rhs) const {
    check_vars(rhs);
    if (terms_.empty() || rhs.terms_.empty())
        return MPoly(nvars_);
    // Multiply by each term of the smaller factor and merge.
    const MPoly& big = terms_.size() >= rhs.terms_.size() ? *this : rhs;
    const MPoly& small = terms_.size() >= rhs.terms_.size() ? rhs : *this;
    MPoly acc(nvars_);
    for (const Term& t : small.terms_) {
        MPoly part(nvars_);
        part.terms_.reserve(big.terms_.size());
        for (const Term& u : big.terms_) {
            std::vector<int> e(nvars_);
            for (int k = 0; k < nvars_; ++k)
                e[k] = t.exps[k] + u.exps[k];
            part.terms_.push_back({t.coeff * u.coeff, std::move(e)});
        }
        // Products of a sorted list by one monomial stay sorted.
        acc = acc + part;
    }
    return acc;
}

MPoly& MPoly::operator+=(const MPoly& rhs) {
    *this = *this + rhs;
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& rhs) {
    *this = *this - rhs;
    return *this;
}

MPoly& MPoly::operator*=(const MPoly& rhs) {
    *this = *this * rhs;
    return *this;
}

MPoly MPoly::operator*(const mpq_class& c) const {
    if (c == 0)
        return MPoly(nvars_);
    MPoly p(*this);
    for (Term& t : p.terms_)
        t.coeff *= c;
    return p;
}

mpq_class MPoly::eval(const std::vector<mpq_class>& point) const {
    if (static_cast<int>(point.size()) != nvars_)
        throw std::invalid_argument("MPoly::eval: point arity mismatch");
    mpq_class acc = 0;
    for (const Term& t : terms_) {
        mpq_class v = t.coeff;
        for (int k = 0; k < nvars_; ++k)
            for (int r = 0; r < t.exps[k]; ++r)
                v *= point[k];
        acc += v;
    }
    return acc;
}

std::string MPoly::to_string() const {
    std::vector<std::string> names(nvars_);
    for (int k = 0; k < nvars_; ++k)
        names[k] = "x" + std::to_string(k);
    return to_string(names);
}

std::string MPoly::to_string(const std::vector<std::string>& names) const {
    if (static_cast<int>(names.size()) != nvars_)
        throw std::invalid_argument("MPoly::to_string: name count mismatch");
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const Term& t : terms_) {
        mpq_class a = abs(t.coeff);
        bool negative = t.coeff < 0;
        if (first) {
            if (negative)
                os << "-";
            first = false;
        } else {
            os << (negative ? " - " : " + ");
        }
        std::string vars;
        for (int k = 0; k < nvars_; ++k) {
            if (t.exps[k] == 0)
                continue;
            if (!vars.empty())
                vars += "*";
            vars += names[k];
            if (t.exps[k] > 1)
                vars += "^" + std::to_string(t.exps[k]);
        }
        if (vars.empty()) {
            os << a.get_str();
        } else if (a == 1) {
            os << vars;
        } else {
            os << a.get_str() << "*" << vars;
        }
    }
    return os.str();
}

MPoly pow(const MPoly& base, int exponent) {
    if (exponent < 0)
        throw std::invalid_argument("pow: negative exponent");
    MPoly acc = MPoly::constant(base.nvars(), 1);
    MPoly b = base;
    int e = exponent;
    while (e > 0) {
        if (e & 1)
            acc *= b;
        e >>= 1;
        if (e > 0)
            b *= b;
    }
    return acc;
}

MPoly divide_exact(const MPoly& a, const MPoly& b) {
    if (a.nvars() != b.nvars())
        throw std::invalid_argument("divide_exact: variable-count mismatch");
    if (b.is_zero())
        throw std::domain_error("divide_exact: division by zero polynomial");
    int n = a.nvars();
    MPoly q(n);
    MPoly r = a;
    const Term& lb = b.terms().front();
    while (!r.is_zero()) {
        const Term& lr = r.terms().front();
        std::vector<int> e(n);
        for (int k = 0; k < n; ++k) {
            e[k] = lr.exps[k] - lb.exps[k];
            if (e[k] < 0)
                throw std::domain_error("divide_exact: division is not exact");
        }
        MPoly t = MPoly::monomial(n, lr.coeff / lb.coeff, std::move(e));
        q += t;
        r -= t * b;
    }
    return q;
}

MPoly insert_variable(const MPoly& p, int position) {
    if (position < 0 || position > p.nvars())
        throw std::invalid_argument("insert_variable: position out of range");
    std::vector<Term> terms = p.terms();
    for (Term& t : terms)
        t.exps.insert(t.exps.begin() + position, 0);
    return MPoly::from_terms(p.nvars() + 1, std::move(terms));
}

namespace {

bool is_prime(long q) {
    if (q < 2)
        return false;
    for (long d = 2; d * d <= q; ++d)
        if (q % d == 0)
            return false;
    return true;
}

long mod_reduce(long a, long q) {
    long r = a % q;
    return r < 0 ? r + q : r;
}

long mod_pow(long base, long e, long q) {
    long acc = 1 % q;
    base = mod_reduce(base, q);
    while (e > 0) {
        if (e & 1)
            acc = acc * base % q;
        base = base * base % q;
        e >>= 1;
    }
    return acc;
}

long mod_inverse(long a, long q) {
    // q prime, a not divisible by q.
    return mod_pow(a, q - 2, q);
}

long residue_of(const mpz_class& z, long q) {
    mpz_class r = z % q;
    long v = r.get_si();
    return v < 0 ? v + q : v;
}

}  // namespace

long eval_mod_q(const MPoly& p, const std::vector<long>& point, long q) {
    if (!is_prime(q))
        throw std::invalid_argument("eval_mod_q: modulus is not prime");
    if (static_cast<int>(point.size()) != p.nvars())
        throw std::invalid_argument("eval_mod_q: point arity mismatch");
    long acc = 0;
    for (const Term& t : p.terms()) {
        long den = residue_of(t.coeff.get_den(), q);
        if (den == 0)
            throw std::domain_error("eval_mod_q: coefficient denominator divisible by q");
        long v = residue_of(t.coeff.get_num(), q) * mod_inverse(den, q) % q;
        for (int k = 0; k < p.nvars(); ++k)
            v = v * mod_pow(point[k], t.exps[k], q) % q;
        acc = (acc + v) % q;
    }
    return acc;
}

}  // namespace gmot
