// Sturm-sequence real-root machinery: isolation of polynomial roots in an
// interval, plus just enough exact real-algebraic-number arithmetic (refine,
// compare, sign of a polynomial at the number) to decide sign conditions at
// region boundaries without ever leaving the rationals.
#ifndef CLIQUEPACK_STURM_HPP
#define CLIQUEPACK_STURM_HPP

#include <optional>
#include <string>
#include <vector>

#include "cliquepack/polynomial.hpp"
#include "cliquepack/rational.hpp"

namespace cliquepack {

class SturmChain {
  public:
    explicit SturmChain(const Polynomial& p);  // p must be nonzero
    // Number of distinct real roots of p in the open interval (a, b).
    // Endpoints that happen to be roots are divided out first.
    int count_roots_open(const Rational& a, const Rational& b) const;
    const Polynomial& squarefree() const { return sf_; }

  private:
    int variations(const Rational& x) const;
    Polynomial sf_;
    std::vector<Polynomial> chain_;
};

struct RootInterval {
    Rational lo, hi;  // lo == hi: the root is exactly this rational
    bool is_point() const { return lo == hi; }
};

// Disjoint isolating intervals for all distinct real roots of p in the open
// interval (a, b), in increasing order. Non-point intervals (lo, hi) contain
// exactly one root of p and satisfy p(lo) != 0, p(hi) != 0. Multiple roots
// are handled through the squarefree part. p must be nonzero.
std::vector<RootInterval> isolate_roots(const Polynomial& p, const Rational& a,
                                        const Rational& b);

// A real algebraic number: either an exact rational or the unique root of a
// squarefree polynomial inside an open rational interval (lower, upper) with
// sign(p(lower)) != sign(p(upper)).
class AlgebraicNumber {
  public:
    static AlgebraicNumber rational(const Rational& r);
    static AlgebraicNumber root_of(const Polynomial& p, const Rational& lo, const Rational& hi);

    bool is_rational() const { return rational_; }
    const Rational& rational_value() const { return lo_; }
    const Rational& lower() const { return lo_; }
    const Rational& upper() const { return hi_; }
    const Polynomial& defining_polynomial() const { return poly_; }

    void refine();  // halve the enclosure (may collapse to an exact rational)
    void refine_below(const Rational& width);

    int sign_of(const Polynomial& g) const;  // exact sign of g at this number

    static int compare(AlgebraicNumber& a, AlgebraicNumber& b);  // refines as needed

    std::string approx_str(int digits = 6) const;  // decimal display only

  private:
    AlgebraicNumber() = default;
    bool rational_ = true;
    Rational lo_, hi_;
    Polynomial poly_;
};

}  // namespace cliquepack

#endif
