#include "gmot/rational.hpp"

#include <stdexcept>

namespace gmot {

mpq_class rational_from_string(const std::string& s) {
    mpq_class r;
    if (s.empty() || mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("not a rational: '" + s + "'");
    if (r.get_den() == 0)
        throw std::invalid_argument("zero denominator in rational: '" + s + "'");
    r.canonicalize();
    return r;
}

std::string rational_to_string(const mpq_class& r) {
    return r.get_str();
}

mpq_class rational_pow(const mpq_class& r, long e) {
    if (e < 0)
        throw std::invalid_argument("rational_pow: negative exponent");
    mpq_class acc(1), base(r);
    while (e > 0) {
        if (e & 1)
            acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

}  // namespace gmot
