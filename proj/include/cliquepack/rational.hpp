// Exact arbitrary-precision scalars. All arithmetic in the analysis layers is
// rational; no floating point is used anywhere downstream of this header.
#ifndef CLIQUEPACK_RATIONAL_HPP
#define CLIQUEPACK_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace cliquepack {

using Integer = mpz_class;
using Rational = mpq_class;

// Raised on malformed external input (graph6 strings, coloring files, flags).
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an input is well-formed but exceeds a hard representation cap.
struct capacity_error : std::runtime_error {
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

inline Integer factorial(long n) {
    Integer r;
    if (n < 0) throw std::invalid_argument("factorial of negative argument");
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

inline Integer binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

inline Rational rational_pow(const Rational& base, long exp) {
    if (exp < 0) {
        if (base == 0) throw std::invalid_argument("0^negative");
        return 1 / rational_pow(base, -exp);
    }
    Rational r = 1, b = base;
    while (exp > 0) {
        if (exp & 1) r *= b;
        b *= b;
        exp >>= 1;
    }
    return r;
}

inline int sign(const Rational& q) { return sgn(q); }

// Canonical textual form: "p/q" in lowest terms, "p" when q == 1.
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Rational parse_rational(const std::string& s) {
    Rational q;
    if (s.empty() || q.set_str(s, 10) != 0) throw parse_error("bad rational: '" + s + "'");
    if (q.get_den() == 0) throw parse_error("zero denominator: '" + s + "'");
    q.canonicalize();
    return q;
}

}  // namespace cliquepack

#endif
