#include "cliquepack/tsuff.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "cliquepack/parallel.hpp"

namespace cliquepack {

namespace {

// x^a/a! * (1-x)^b/b!, or zero when either factorial argument is negative.
Polynomial coefficient_term(int a, int b) {
    if (a < 0 || b < 0) return Polynomial::zero();
    Rational c(1);
    c /= Rational(factorial(a) * factorial(b));
    return Polynomial::monomial(c, a) * one_minus_x_pow(b);
}

}  // namespace

ParametricSystem build_system(int k, const DegreeSet& S) {
    if (k < 3 || k > 25) throw std::invalid_argument("build_system: k must be in 3..25");
    if (S.k != k) throw std::invalid_argument("build_system: degree set has mismatched k");
    ParametricSystem sys;
    sys.k = k;
    sys.S = S;
    for (int i = 0; i < k; ++i)
        if (!S.members.count(i)) sys.indices.push_back(i);
    if (sys.indices.empty())
        throw std::invalid_argument("build_system: S covers every index, no variables remain");
    for (int i : sys.indices) {
        sys.rows[0].push_back(coefficient_term(i - 2, k - 1 - i));
        sys.rows[1].push_back(coefficient_term(i, k - 3 - i));
        sys.rows[2].push_back(coefficient_term(i - 1, k - 2 - i));
    }
    return sys;
}

FeasibilityOutcome check_at(const ParametricSystem& sys, const Rational& x) {
    if (!(x > 0 && x < 1)) throw std::domain_error("check_at: x must lie in (0,1)");
    Matrix A(3, std::vector<Rational>(sys.columns()));
    for (int r = 0; r < 3; ++r)
        for (size_t c = 0; c < sys.columns(); ++c) A[r][c] = sys.rows[r][c].eval(x);
    return solve_feasibility(A, {Rational(1), Rational(1), Rational(1)});
}

RegionReport grid_sweep(const ParametricSystem& sys, long denominator, int threads,
                        bool stop_at_first_failure) {
    if (denominator < 2) throw std::invalid_argument("grid_sweep: denominator must be >= 2");
    RegionReport report;
    report.mode = RegionReport::Mode::grid;
    report.k = sys.k;
    report.S = sys.S;
    report.holds_for_all = true;

    const long total = denominator - 1;
    const long block = std::max<long>(threads > 1 ? threads * 8 : 64, 1);
    for (long base = 1; base <= total; base += block) {
        long count = std::min(block, total - base + 1);
        std::vector<GridPoint> slots(count);
        parallel_for(static_cast<size_t>(count), threads, [&](size_t idx) {
            Rational x(base + static_cast<long>(idx), denominator);
            x.canonicalize();
            slots[idx] = {x, check_at(sys, x)};
        });
        for (auto& pt : slots) {
            bool feasible = pt.outcome.feasible;
            report.points.push_back(std::move(pt));
            if (!feasible) {
                report.holds_for_all = false;
                if (!report.failure_witness) report.failure_witness = report.points.back().x;
                if (stop_at_first_failure) return report;
            }
        }
    }
    return report;
}

namespace {

Polynomial det2(const Polynomial& a, const Polynomial& b, const Polynomial& c,
                const Polynomial& d) {
    return a * d - b * c;
}

// One candidate basic support: columns cols solved over rows rws by Cramer's
// rule. denom is the subsystem determinant, numer[j] the numerator for
// cols[j], and consistency[r] the cleared-denominator residual of each
// unused row (must vanish for the full system to hold).
struct SupportSystem {
    std::vector<int> cols;
    std::vector<int> rws;
    Polynomial denom;
    std::vector<Polynomial> numer;
    std::vector<Polynomial> consistency;
};

Polynomial det_general(const std::vector<int>& rws,
                       const std::vector<std::vector<Polynomial>>& colvecs) {
    // colvecs[j] holds the full 3-entry column; only rows rws participate.
    const size_t t = rws.size();
    if (t == 1) return colvecs[0][rws[0]];
    if (t == 2)
        return det2(colvecs[0][rws[0]], colvecs[1][rws[0]], colvecs[0][rws[1]],
                    colvecs[1][rws[1]]);
    // Cyclic column expansion along the first row (all terms positive).
    Polynomial acc;
    for (int j = 0; j < 3; ++j) {
        Polynomial minor = det2(colvecs[(j + 1) % 3][rws[1]], colvecs[(j + 2) % 3][rws[1]],
                                colvecs[(j + 1) % 3][rws[2]], colvecs[(j + 2) % 3][rws[2]]);
        acc = acc + colvecs[j][rws[0]] * minor;
    }
    return acc;
}

std::vector<SupportSystem> enumerate_supports(const ParametricSystem& sys,
                                              std::vector<std::string>* notes) {
    const int m = static_cast<int>(sys.columns());
    std::vector<SupportSystem> out;
    const Polynomial ones = Polynomial::one();

    std::vector<std::vector<int>> row_subsets[4] = {
        {}, {{0}, {1}, {2}}, {{0, 1}, {0, 2}, {1, 2}}, {{0, 1, 2}}};

    auto column = [&](int c) {
        std::vector<Polynomial> col(3);
        for (int r = 0; r < 3; ++r) col[r] = sys.rows[r][c];
        return col;
    };

    std::vector<std::vector<int>> col_sets;
    for (int a = 0; a < m; ++a) {
        col_sets.push_back({a});
        for (int b = a + 1; b < m; ++b) {
            col_sets.push_back({a, b});
            for (int c = b + 1; c < m; ++c) col_sets.push_back({a, b, c});
        }
    }

    for (const auto& cols : col_sets) {
        const size_t t = cols.size();
        std::vector<std::vector<Polynomial>> colvecs;
        for (int c : cols) colvecs.push_back(column(c));
        for (const auto& rws : row_subsets[t]) {
            SupportSystem ss;
            ss.cols = cols;
            ss.rws = rws;
            ss.denom = det_general(rws, colvecs);
            if (ss.denom.is_zero()) {
                if (notes) {
                    std::ostringstream os;
                    os << "skipped identically singular support: cols {";
                    for (size_t i = 0; i < cols.size(); ++i)
                        os << (i ? "," : "") << sys.indices[cols[i]];
                    os << "} rows {";
                    for (size_t i = 0; i < rws.size(); ++i) os << (i ? "," : "") << rws[i];
                    os << "}";
                    notes->push_back(os.str());
                }
                continue;
            }
            for (size_t j = 0; j < t; ++j) {
                auto replaced = colvecs;
                for (int r = 0; r < 3; ++r) replaced[j][r] = ones;
                ss.numer.push_back(det_general(rws, replaced));
            }
            for (int r = 0; r < 3; ++r) {
                if (std::find(rws.begin(), rws.end(), r) != rws.end()) continue;
                Polynomial acc;
                for (size_t j = 0; j < t; ++j) acc = acc + sys.rows[r][cols[j]] * ss.numer[j];
                ss.consistency.push_back(acc - ss.denom);
            }
            out.push_back(std::move(ss));
        }
    }
    return out;
}

// Is the system feasible at the algebraic point xi? Exact: a feasible point
// exists iff some support solves its rows with nonnegative coordinates and
// satisfies the remaining rows.
bool feasible_at(const std::vector<SupportSystem>& supports, const AlgebraicNumber& xi) {
    for (const auto& ss : supports) {
        int sd = xi.sign_of(ss.denom);
        if (sd == 0) continue;
        bool ok = true;
        for (const auto& nj : ss.numer)
            if (xi.sign_of(nj) * sd < 0) {
                ok = false;
                break;
            }
        if (!ok) continue;
        for (const auto& cr : ss.consistency)
            if (xi.sign_of(cr) != 0) {
                ok = false;
                break;
            }
        if (ok) return true;
    }
    return false;
}

RegionEndpoint rational_endpoint(const Rational& v) {
    RegionEndpoint e;
    e.is_rational = true;
    e.value = v;
    return e;
}

RegionEndpoint algebraic_endpoint(const AlgebraicNumber& a) {
    if (a.is_rational()) return rational_endpoint(a.rational_value());
    RegionEndpoint e;
    e.is_rational = false;
    e.poly = a.defining_polynomial();
    e.enclosure_lo = a.lower();
    e.enclosure_hi = a.upper();
    e.approx = a.approx_str();
    return e;
}

}  // namespace

std::string RegionEndpoint::str() const {
    if (is_rational) return to_string(value);
    return "~" + approx;
}

std::string RegionInterval::str() const {
    std::string s;
    s += lo_closed ? '[' : '(';
    s += lo.str();
    s += ", ";
    s += hi.str();
    s += hi_closed ? ']' : ')';
    return s;
}

RegionReport exact_region(const ParametricSystem& sys) {
    RegionReport report;
    report.mode = RegionReport::Mode::exact;
    report.k = sys.k;
    report.S = sys.S;

    std::vector<SupportSystem> supports = enumerate_supports(sys, &report.notes);

    // Candidate breakpoints: every root in (0,1) of any determinant,
    // numerator, or consistency polynomial. Between consecutive candidates
    // all the sign data deciding feasibility is constant.
    std::map<std::vector<Rational>, Polynomial> pool;
    auto add_pool = [&](const Polynomial& p) {
        if (p.is_zero() || p.degree() < 1) return;
        Polynomial sf = p.squarefree_part();
        sf = sf.scaled(1 / sf.leading());
        pool.emplace(sf.coefficients(), sf);
    };
    for (const auto& ss : supports) {
        add_pool(ss.denom);
        for (const auto& nj : ss.numer) add_pool(nj);
        for (const auto& cr : ss.consistency) add_pool(cr);
    }

    std::vector<AlgebraicNumber> roots;
    const Rational zero(0), one(1);
    for (const auto& [_, p] : pool) {
        for (const RootInterval& ri : isolate_roots(p, zero, one)) {
            AlgebraicNumber a = ri.is_point() ? AlgebraicNumber::rational(ri.lo)
                                              : AlgebraicNumber::root_of(p, ri.lo, ri.hi);
            bool duplicate = false;
            for (auto& existing : roots)
                if (AlgebraicNumber::compare(existing, a) == 0) {
                    duplicate = true;
                    break;
                }
            if (!duplicate) roots.push_back(std::move(a));
        }
    }
    std::sort(roots.begin(), roots.end(), [](AlgebraicNumber& a, AlgebraicNumber& b) {
        return AlgebraicNumber::compare(a, b) < 0;
    });

    const size_t t = roots.size();
    // Rational separators s_i strictly between consecutive roots (and the
    // interval ends 0 and 1).
    for (auto& r : roots) {
        while (!(r.lower() > 0)) r.refine();
        while (!(r.upper() < 1)) r.refine();
    }
    for (size_t i = 0; i + 1 < t; ++i)
        while (!(roots[i].upper() < roots[i + 1].lower())) {
            roots[i].refine();
            roots[i + 1].refine();
        }
    std::vector<Rational> separators(t + 1);
    for (size_t i = 0; i <= t; ++i) {
        Rational left = i == 0 ? zero : roots[i - 1].upper();
        Rational right = i == t ? one : roots[i].lower();
        separators[i] = (left + right) / 2;
    }

    // Cells: open(0), point(0), open(1), point(1), ..., open(t).
    const size_t ncells = 2 * t + 1;
    std::vector<bool> feas(ncells);
    std::vector<std::optional<Rational>> cell_sample(ncells);
    std::vector<std::optional<FeasibilityOutcome>> cell_outcome(ncells);
    for (size_t i = 0; i <= t; ++i) {
        FeasibilityOutcome out = check_at(sys, separators[i]);
        feas[2 * i] = out.feasible;
        cell_sample[2 * i] = separators[i];
        cell_outcome[2 * i] = std::move(out);
    }
    for (size_t i = 0; i < t; ++i) {
        if (roots[i].is_rational()) {
            FeasibilityOutcome out = check_at(sys, roots[i].rational_value());
            feas[2 * i + 1] = out.feasible;
            cell_sample[2 * i + 1] = roots[i].rational_value();
            cell_outcome[2 * i + 1] = std::move(out);
        } else {
            feas[2 * i + 1] = feasible_at(supports, roots[i]);
        }
    }

    // Merge equal-verdict runs into maximal intervals.
    size_t c = 0;
    while (c < ncells) {
        size_t d = c;
        while (d + 1 < ncells && feas[d + 1] == feas[c]) ++d;
        RegionInterval iv;
        iv.feasible = feas[c];
        if (c == 0) {
            iv.lo = rational_endpoint(zero);
            iv.lo_closed = false;
        } else if (c % 2 == 1) {  // starts at a root point
            iv.lo = algebraic_endpoint(roots[c / 2]);
            iv.lo_closed = true;
        } else {  // starts at an open cell; left neighbour root excluded
            iv.lo = algebraic_endpoint(roots[c / 2 - 1]);
            iv.lo_closed = false;
        }
        if (d == ncells - 1) {
            iv.hi = rational_endpoint(one);
            iv.hi_closed = false;
        } else if (d % 2 == 1) {  // ends at a root point
            iv.hi = algebraic_endpoint(roots[d / 2]);
            iv.hi_closed = true;
        } else {  // ends at an open cell; right neighbour root excluded
            iv.hi = algebraic_endpoint(roots[d / 2]);
            iv.hi_closed = false;
        }
        for (size_t e = c; e <= d; ++e)
            if (cell_sample[e]) {
                iv.sample = cell_sample[e];
                iv.sample_outcome = cell_outcome[e];
                break;
            }
        report.intervals.push_back(std::move(iv));
        c = d + 1;
    }

    report.holds_for_all = true;
    for (size_t i = 0; i < ncells; ++i) {
        if (feas[i]) continue;
        report.holds_for_all = false;
        if (!report.failure_witness && cell_sample[i]) report.failure_witness = cell_sample[i];
    }
    return report;
}

std::vector<DegreeSet> maximal_sets(int k, SweepMode mode, long grid_denominator, int threads) {
    if (k < 3 || k > 12) throw std::invalid_argument("maximal_sets: k must be in 3..12");

    const std::uint32_t full = (1u << k) - 1;
    auto set_of_mask = [&](std::uint32_t mask) {
        std::set<int> mem;
        for (int i = 0; i < k; ++i)
            if ((mask >> i) & 1u) mem.insert(i);
        return DegreeSet(k, std::move(mem));
    };

    // Candidates by ascending size: a failing set dooms all its supersets,
    // and a failing witness x carries over to them.
    std::vector<std::uint32_t> order;
    for (std::uint32_t mask = 0; mask < full; ++mask) order.push_back(mask);
    std::stable_sort(order.begin(), order.end(), [](std::uint32_t a, std::uint32_t b) {
        return __builtin_popcount(a) < __builtin_popcount(b);
    });

    std::map<std::uint32_t, bool> verdict;
    std::vector<std::uint32_t> failing, holding;
    std::vector<Rational> witness_pool;

    for (std::uint32_t mask : order) {
        bool doomed = false;
        for (std::uint32_t f : failing)
            if ((mask & f) == f) {
                doomed = true;
                break;
            }
        if (doomed) {
            verdict[mask] = false;
            continue;
        }
        bool covered = false;
        for (std::uint32_t h : holding)
            if ((mask & h) == mask) {
                covered = true;
                break;
            }
        if (covered) {
            verdict[mask] = true;
            continue;
        }

        ParametricSystem sys = build_system(k, set_of_mask(mask));
        bool holds = true;
        std::optional<Rational> witness;
        for (const Rational& w : witness_pool)
            if (!check_at(sys, w).feasible) {
                holds = false;
                witness = w;
                break;
            }
        if (holds) {
            if (mode == SweepMode::grid) {
                RegionReport rep = grid_sweep(sys, grid_denominator, threads, true);
                holds = rep.holds_for_all;
                witness = rep.failure_witness;
            } else {
                RegionReport rep = exact_region(sys);
                holds = rep.holds_for_all;
                witness = rep.failure_witness;
            }
        }
        verdict[mask] = holds;
        if (holds) {
            holding.push_back(mask);
        } else {
            failing.push_back(mask);
            if (witness && std::find(witness_pool.begin(), witness_pool.end(), *witness) ==
                               witness_pool.end())
                witness_pool.push_back(*witness);
        }
    }

    std::vector<std::uint32_t> maximal;
    for (std::uint32_t h : holding) {
        bool is_max = true;
        for (std::uint32_t h2 : holding)
            if (h2 != h && (h2 & h) == h) {
                is_max = false;
                break;
            }
        if (is_max) maximal.push_back(h);
    }
    std::vector<DegreeSet> out;
    for (std::uint32_t m : maximal) out.push_back(set_of_mask(m));
    std::sort(out.begin(), out.end(), [](const DegreeSet& a, const DegreeSet& b) {
        if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
        return std::lexicographical_compare(a.members.begin(), a.members.end(),
                                            b.members.begin(), b.members.end());
    });
    return out;
}

EulerianIdentityReport eulerian_identities(int k) {
    if (k < 5 || k % 2 == 0) throw std::invalid_argument("eulerian_identities: odd k >= 5");
    EulerianIdentityReport rep;
    rep.k = k;
    for (int i = 1; i <= k - 4; i += 2) rep.f1 = rep.f1 + coefficient_term(i, k - 3 - i);
    for (int i = 1; i <= k - 2; i += 2) rep.f2 = rep.f2 + coefficient_term(i - 1, k - 2 - i);
    for (int i = 3; i <= k - 2; i += 2) rep.f3 = rep.f3 + coefficient_term(i - 2, k - 1 - i);
    rep.f1_equals_f3 = (rep.f1 == rep.f3);
    Polynomial one_minus_2x({Rational(1), Rational(-2)});
    Polynomial target = Polynomial::one();
    for (int i = 0; i < k - 3; ++i) target = target * one_minus_2x;
    target = target.scaled(Rational(1) / Rational(factorial(k - 3)));
    rep.f2_minus_f1_matches = (rep.f2 - rep.f1 == target);
    return rep;
}

DependenceReport dependence_identities(int k, const Rational& x) {
    if (k < 3) throw std::invalid_argument("dependence_identities: k must be >= 3");
    if (!(x > 0 && x < 1)) throw std::domain_error("dependence_identities: x must lie in (0,1)");
    auto term = [&](int a, int b) -> Rational {
        if (a < 0 || b < 0) return 0;
        Rational c(1);
        c /= Rational(factorial(a) * factorial(b));
        return c * rational_pow(x, a) * rational_pow(1 - x, b);
    };
    DependenceReport rep;
    rep.k = k;
    rep.x = x;
    const Rational omx = 1 - x;
    rep.e3_relation = rep.e5_relation = rep.e6_relation = true;
    for (int i = 0; i < k; ++i) {
        Rational e1 = term(i, k - 1 - i), e2 = term(i - 1, k - 1 - i), e3 = term(i, k - 2 - i),
                 e4 = term(i - 2, k - 1 - i), e5 = term(i, k - 3 - i), e6 = term(i - 1, k - 2 - i);
        if (e3 != Rational(k - 1) / omx * e1 - x / omx * e2) rep.e3_relation = false;
        if (e5 != Rational((k - 1) * (k - 2)) / (omx * omx) * e1 -
                      2 * x * Rational(k - 2) / (omx * omx) * e2 + x * x / (omx * omx) * e4)
            rep.e5_relation = false;
        if (e6 != Rational(k - 2) / omx * e2 - x / omx * e4) rep.e6_relation = false;
    }
    return rep;
}

}  // namespace cliquepack
