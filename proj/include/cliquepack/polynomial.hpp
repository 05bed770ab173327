// Dense univariate polynomials over the rationals, ascending-degree storage.
// Degrees stay tiny here (at most ~k for clique size k), so no sparse or
// modular tricks: plain exact coefficient arithmetic.
#ifndef CLIQUEPACK_POLYNOMIAL_HPP
#define CLIQUEPACK_POLYNOMIAL_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include "cliquepack/rational.hpp"

namespace cliquepack {

class Polynomial {
  public:
    Polynomial() = default;
    Polynomial(std::initializer_list<Rational> ascending) : coef_(ascending) { trim(); }
    explicit Polynomial(std::vector<Rational> ascending) : coef_(std::move(ascending)) { trim(); }
    explicit Polynomial(const Rational& constant) : coef_{constant} { trim(); }

    static Polynomial zero() { return Polynomial(); }
    static Polynomial one() { return Polynomial(Rational(1)); }
    // x^d with a rational coefficient
    static Polynomial monomial(const Rational& c, int d);

    bool is_zero() const { return coef_.empty(); }
    // degree of the zero polynomial is -1
    int degree() const { return static_cast<int>(coef_.size()) - 1; }
    const std::vector<Rational>& coefficients() const { return coef_; }
    const Rational& leading() const;
    Rational coefficient(int d) const {
        return d >= 0 && d < static_cast<int>(coef_.size()) ? coef_[d] : Rational(0);
    }

    Rational eval(const Rational& x) const;

    Polynomial derivative() const;
    Polynomial negate() const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial scaled(const Rational& c) const;
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coef_ == b.coef_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    // Euclidean division; remainder has degree < degree(divisor).
    struct DivMod {
        Polynomial quotient, remainder;
    };
    DivMod divmod(const Polynomial& divisor) const;

    // Monic gcd via the Euclidean algorithm.
    static Polynomial gcd(Polynomial a, Polynomial b);
    // p / gcd(p, p'): same real roots, all simple.
    Polynomial squarefree_part() const;

    // Human-readable, e.g. "1 - 4x + 4x^2".
    std::string str() const;

  private:
    void trim();
    std::vector<Rational> coef_;
};

// (1-x)^e as a Polynomial; e >= 0.
Polynomial one_minus_x_pow(int e);

}  // namespace cliquepack

#endif
