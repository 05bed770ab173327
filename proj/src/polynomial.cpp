#include "cliquepack/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace cliquepack {

void Polynomial::trim() {
    while (!coef_.empty() && coef_.back() == 0) coef_.pop_back();
}

Polynomial Polynomial::monomial(const Rational& c, int d) {
    if (d < 0) throw std::invalid_argument("negative monomial degree");
    if (c == 0) return zero();
    std::vector<Rational> v(d + 1, Rational(0));
    v[d] = c;
    return Polynomial(std::move(v));
}

const Rational& Polynomial::leading() const {
    if (coef_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
    return coef_.back();
}

Rational Polynomial::eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coef_.rbegin(); it != coef_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (coef_.size() <= 1) return zero();
    std::vector<Rational> d(coef_.size() - 1);
    for (size_t i = 1; i < coef_.size(); ++i) d[i - 1] = coef_[i] * Rational(static_cast<long>(i));
    return Polynomial(std::move(d));
}

Polynomial Polynomial::negate() const {
    Polynomial r = *this;
    for (auto& c : r.coef_) c = -c;
    return r;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> r(std::max(a.coef_.size(), b.coef_.size()), Rational(0));
    for (size_t i = 0; i < a.coef_.size(); ++i) r[i] += a.coef_[i];
    for (size_t i = 0; i < b.coef_.size(); ++i) r[i] += b.coef_[i];
    return Polynomial(std::move(r));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> r(std::max(a.coef_.size(), b.coef_.size()), Rational(0));
    for (size_t i = 0; i < a.coef_.size(); ++i) r[i] += a.coef_[i];
    for (size_t i = 0; i < b.coef_.size(); ++i) r[i] -= b.coef_[i];
    return Polynomial(std::move(r));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial::zero();
    std::vector<Rational> r(a.coef_.size() + b.coef_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.coef_.size(); ++i)
        for (size_t j = 0; j < b.coef_.size(); ++j) r[i + j] += a.coef_[i] * b.coef_[j];
    return Polynomial(std::move(r));
}

Polynomial Polynomial::scaled(const Rational& c) const {
    if (c == 0) return zero();
    Polynomial r = *this;
    for (auto& x : r.coef_) x *= c;
    return r;
}

Polynomial::DivMod Polynomial::divmod(const Polynomial& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
    Polynomial rem = *this;
    std::vector<Rational> q;
    int dq = degree() - divisor.degree();
    if (dq < 0) return {zero(), rem};
    q.assign(dq + 1, Rational(0));
    while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
        int d = rem.degree() - divisor.degree();
        Rational f = rem.leading() / divisor.leading();
        q[d] = f;
        rem = rem - monomial(f, d) * divisor;
    }
    return {Polynomial(std::move(q)), rem};
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = a.divmod(b).remainder;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.scaled(1 / a.leading());  // monic
}

Polynomial Polynomial::squarefree_part() const {
    if (is_zero()) throw std::domain_error("squarefree part of zero polynomial");
    Polynomial g = gcd(*this, derivative());
    if (g.degree() <= 0) return *this;
    return divmod(g).quotient;
}

std::string Polynomial::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coef_.size(); ++i) {
        if (coef_[i] == 0) continue;
        Rational c = coef_[i];
        if (first) {
            if (c < 0) os << "-", c = -c;
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        if (i == 0 || c != 1) os << to_string(c);
        if (i >= 1) {
            if (c != 1) os << "*";
            os << "x";
            if (i >= 2) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

Polynomial one_minus_x_pow(int e) {
    if (e < 0) throw std::invalid_argument("negative exponent");
    Polynomial base({Rational(1), Rational(-1)});
    Polynomial r = Polynomial::one();
    for (int i = 0; i < e; ++i) r = r * base;
    return r;
}

}  // namespace cliquepack
