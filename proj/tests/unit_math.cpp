#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cliquepack/polynomial.hpp"
#include "cliquepack/rational.hpp"
#include "cliquepack/simplex.hpp"
#include "cliquepack/sturm.hpp"

using namespace cliquepack;

namespace {

Rational rat(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational random_rational(std::mt19937_64& rng, int bound = 20) {
    std::uniform_int_distribution<long> num(-bound, bound);
    std::uniform_int_distribution<long> den(1, bound);
    return rat(num(rng), den(rng));
}

}  // namespace

TEST_CASE("rational basics and field axioms on random values") {
    CHECK(rat(2, 4) == rat(1, 2));
    CHECK(to_string(rat(-6, 8)) == "-3/4");
    CHECK(parse_rational("8/9") == rat(8, 9));
    CHECK(parse_rational("-3") == rat(-3));
    CHECK_THROWS_AS(parse_rational("1/0"), parse_error);
    CHECK_THROWS_AS(parse_rational("abc"), parse_error);

    std::mt19937_64 rng(20260809);
    for (int i = 0; i < 500; ++i) {
        Rational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + (-a) == 0);
        if (a != 0) CHECK(a * (1 / a) == 1);
    }
}

TEST_CASE("factorial and binomial") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(binomial(7, 3) == 35);
    CHECK(binomial(3, 7) == 0);
    CHECK(binomial(13, 2) == 78);
}

TEST_CASE("polynomial arithmetic") {
    Polynomial one_minus_2x({rat(1), rat(-2)});
    Polynomial sq = one_minus_2x * one_minus_2x;
    CHECK(sq == Polynomial({rat(1), rat(-4), rat(4)}));  // (1-2x)^2 = 1 - 4x + 4x^2

    Polynomial p({rat(1), rat(0), rat(-1)});  // 1 - x^2
    CHECK(p.eval(rat(1, 2)) == rat(3, 4));
    CHECK(p.degree() == 2);
    CHECK((p - p).is_zero());
    CHECK(p.derivative() == Polynomial({rat(0), rat(-2)}));

    auto dm = sq.divmod(one_minus_2x);
    CHECK(dm.quotient == one_minus_2x);
    CHECK(dm.remainder.is_zero());

    CHECK(one_minus_x_pow(2) == Polynomial({rat(1), rat(-2), rat(1)}));
    CHECK(Polynomial::monomial(rat(1, 2), 3) == Polynomial({rat(0), rat(0), rat(0), rat(1, 2)}));
}

TEST_CASE("polynomial gcd and squarefree part") {
    Polynomial x_minus_half({rat(-1, 2), rat(1)});
    Polynomial p = x_minus_half * x_minus_half * Polynomial({rat(1), rat(1)});
    Polynomial sf = p.squarefree_part();
    // Same roots {1/2, -1}, each simple.
    CHECK(sf.degree() == 2);
    CHECK(sf.eval(rat(1, 2)) == 0);
    CHECK(sf.eval(rat(-1)) == 0);
    Polynomial g = Polynomial::gcd(p, p.derivative());
    CHECK(g.degree() == 1);
    CHECK(g.eval(rat(1, 2)) == 0);
}

TEST_CASE("solve_feasibility on the spec systems") {
    // Rows 2 and 3 are 0 = 1: infeasible.
    Matrix A{{rat(1)}, {rat(0)}, {rat(0)}};
    std::vector<Rational> b{rat(1), rat(1), rat(1)};
    auto out = solve_feasibility(A, b);
    CHECK_FALSE(out.feasible);
    CHECK(verify_outcome(A, b, out));

    Matrix I3{{rat(1), rat(0), rat(0)}, {rat(0), rat(1), rat(0)}, {rat(0), rat(0), rat(1)}};
    auto out2 = solve_feasibility(I3, b);
    CHECK(out2.feasible);
    CHECK(out2.solution == std::vector<Rational>{rat(1), rat(1), rat(1)});
    CHECK(verify_outcome(I3, b, out2));

    // The k=4, S={2} system at x=1/4: x p3 = 1, (1-x)p0 + x p1 = 1, (1-x)p1 = 1.
    Rational x = rat(1, 4);
    Matrix A3{{rat(0), rat(0), x}, {1 - x, x, rat(0)}, {rat(0), 1 - x, rat(0)}};
    auto out3 = solve_feasibility(A3, b);
    REQUIRE(out3.feasible);
    CHECK(verify_outcome(A3, b, out3));
    CHECK(out3.solution == std::vector<Rational>{rat(8, 9), rat(4, 3), rat(4)});
}

TEST_CASE("verify_outcome rejects corrupted outcomes") {
    Matrix I3{{rat(1), rat(0), rat(0)}, {rat(0), rat(1), rat(0)}, {rat(0), rat(0), rat(1)}};
    std::vector<Rational> b{rat(1), rat(1), rat(1)};
    auto good = solve_feasibility(I3, b);
    REQUIRE(good.feasible);
    auto bad = good;
    bad.solution[1] += 1;
    CHECK_FALSE(verify_outcome(I3, b, bad));

    Matrix A{{rat(1)}, {rat(0)}, {rat(0)}};
    auto inf = solve_feasibility(A, b);
    REQUIRE_FALSE(inf.feasible);
    auto negated = inf;
    for (auto& y : negated.certificate) y = -y;
    CHECK_FALSE(verify_outcome(A, b, negated));
}

TEST_CASE("simplex soundness on 1000 random systems") {
    std::mt19937_64 rng(424242);
    int feasible_count = 0, infeasible_count = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        std::uniform_int_distribution<int> msel(1, 5);
        int m = msel(rng);
        Matrix A(3, std::vector<Rational>(m));
        std::vector<Rational> b(3);
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < m; ++j) A[i][j] = random_rational(rng, 5);
            b[i] = random_rational(rng, 5);
        }
        auto out = solve_feasibility(A, b);
        CHECK(verify_outcome(A, b, out));
        (out.feasible ? feasible_count : infeasible_count)++;
    }
    CHECK(feasible_count > 0);
    CHECK(infeasible_count > 0);
}

TEST_CASE("farkas duality spot-check: moving b along the certificate flips nothing wrongly") {
    std::mt19937_64 rng(777);
    int checked = 0;
    for (int trial = 0; trial < 300 && checked < 50; ++trial) {
        Matrix A(3, std::vector<Rational>(3));
        std::vector<Rational> b(3);
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) A[i][j] = random_rational(rng, 4);
            b[i] = random_rational(rng, 4);
        }
        auto out = solve_feasibility(A, b);
        if (out.feasible) continue;
        ++checked;
        // Pushing b further against the certificate keeps the system infeasible
        // (the same y certifies it).
        std::vector<Rational> b2 = b;
        for (int i = 0; i < 3; ++i) b2[i] -= out.certificate[i];
        auto out2 = solve_feasibility(A, b2);
        CHECK_FALSE(out2.feasible);
        CHECK(verify_outcome(A, b2, out2));
    }
    CHECK(checked > 0);
}

TEST_CASE("lp_maximize basics") {
    // No constraints, three variables in [0,1], c = 1: optimum 3.
    auto r = lp_maximize({rat(1), rat(1), rat(1)}, {}, {});
    CHECK(r.optimum == rat(3));

    // Single constraint x1 + x2 <= 1.
    auto r2 = lp_maximize({rat(1), rat(1)}, {{rat(1), rat(1)}}, {rat(1)});
    CHECK(r2.optimum == rat(1));

    // Objective favors x2; box bound binds.
    auto r3 = lp_maximize({rat(1), rat(3)}, {{rat(1), rat(2)}}, {rat(2)});
    CHECK(r3.optimum == rat(3));  // x2 = 1 (cap), x1 = 0

    CHECK_THROWS_AS(lp_maximize({rat(1)}, {{rat(1)}}, {rat(-1)}), std::invalid_argument);
}

TEST_CASE("isolate_roots on the spec examples") {
    // 2x - 1: one root at 1/2.
    auto roots = isolate_roots(Polynomial({rat(-1), rat(2)}), rat(0), rat(1));
    REQUIRE(roots.size() == 1);
    if (roots[0].is_point()) {
        CHECK(roots[0].lo == rat(1, 2));
    } else {
        CHECK(roots[0].lo < rat(1, 2));
        CHECK(rat(1, 2) < roots[0].hi);
    }

    // (2x-1)^2: still one root (multiplicity via squarefree part).
    Polynomial p({rat(1), rat(-4), rat(4)});
    auto roots2 = isolate_roots(p, rat(0), rat(1));
    CHECK(roots2.size() == 1);

    // x^2 - 2 has no roots in (0,1).
    auto roots3 = isolate_roots(Polynomial({rat(-2), rat(0), rat(1)}), rat(0), rat(1));
    CHECK(roots3.empty());
}

TEST_CASE("root isolation agrees with dense sign scanning on random polynomials") {
    std::mt19937_64 rng(1312);
    for (int trial = 0; trial < 60; ++trial) {
        std::uniform_int_distribution<int> dsel(1, 8);
        int deg = dsel(rng);
        std::vector<Rational> coef(deg + 1);
        bool all_zero = true;
        for (auto& c : coef) {
            c = random_rational(rng, 6);
            if (c != 0) all_zero = false;
        }
        if (all_zero) coef.back() = 1;
        Polynomial p(coef);
        if (p.is_zero()) continue;
        auto roots = isolate_roots(p, rat(0), rat(1));

        // Oracle: count sign changes of the squarefree part on a fine grid,
        // plus exact rational roots found on grid points.
        Polynomial sf = p.squarefree_part();
        const long G = 1000;
        int oracle = 0;
        int prev = 0;
        for (long j = 0; j <= G; ++j) {
            Rational x = rat(j, G);
            int s = sign(sf.eval(x));
            if (s == 0) {
                if (j != 0 && j != G) ++oracle;  // exact grid root inside (0,1)
                continue;
            }
            if (prev != 0 && s != prev) ++oracle;
            prev = s;
        }
        // Sign scanning can only undercount (even numbers of roots between
        // grid points cancel); for degree <= 8 with these coefficients the
        // counts agree unless roots are closer than 1/1000.
        CHECK(static_cast<int>(roots.size()) >= oracle);
        if (static_cast<int>(roots.size()) != oracle) continue;
        // Verify each isolating interval really brackets a root.
        for (const auto& ri : roots) {
            if (ri.is_point()) {
                CHECK(p.eval(ri.lo) == 0);
            } else {
                CHECK(sign(sf.eval(ri.lo)) * sign(sf.eval(ri.hi)) == -1);
            }
        }
    }
}

TEST_CASE("algebraic numbers: compare and sign_of") {
    // sqrt(1/2) as a root of 2x^2 - 1 in (0,1).
    Polynomial p({rat(-1), rat(0), rat(2)});
    auto a = AlgebraicNumber::root_of(p, rat(0), rat(1));
    CHECK(a.sign_of(Polynomial({rat(-1), rat(2)})) > 0);   // 2x-1 > 0 at x ~= 0.707
    CHECK(a.sign_of(Polynomial({rat(-3), rat(4)})) < 0);   // 4x-3 < 0
    CHECK(a.sign_of(p) == 0);

    auto half = AlgebraicNumber::rational(rat(1, 2));
    auto a2 = a;
    CHECK(AlgebraicNumber::compare(half, a2) < 0);

    auto b = AlgebraicNumber::root_of(p, rat(0), rat(1));
    auto c = AlgebraicNumber::root_of(p, rat(1, 2), rat(1));
    CHECK(AlgebraicNumber::compare(b, c) == 0);

    auto third = AlgebraicNumber::rational(rat(1, 3));
    auto x2 = AlgebraicNumber::rational(rat(1, 3));
    CHECK(AlgebraicNumber::compare(third, x2) == 0);

    CHECK(a.approx_str(4).substr(0, 6) == "0.7071");
}
