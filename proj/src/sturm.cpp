#include "cliquepack/sturm.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cliquepack {

SturmChain::SturmChain(const Polynomial& p) {
    if (p.is_zero()) throw std::domain_error("Sturm chain of zero polynomial");
    sf_ = p.squarefree_part();
    chain_.push_back(sf_);
    if (sf_.degree() >= 1) {
        chain_.push_back(sf_.derivative());
        while (true) {
            const Polynomial& a = chain_[chain_.size() - 2];
            const Polynomial& b = chain_.back();
            Polynomial r = a.divmod(b).remainder;
            if (r.is_zero()) break;
            chain_.push_back(r.negate());
        }
    }
}

int SturmChain::variations(const Rational& x) const {
    int count = 0, prev = 0;
    for (const auto& q : chain_) {
        int s = sign(q.eval(x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

int SturmChain::count_roots_open(const Rational& a, const Rational& b) const {
    if (!(a < b)) return 0;
    if (sf_.eval(a) != 0 && sf_.eval(b) != 0) return variations(a) - variations(b);
    // An endpoint is a root: divide it out (roots of sf_ are simple) and
    // recount with the reduced polynomial, whose root set inside (a,b) agrees.
    Polynomial w = sf_;
    while (!w.is_zero() && w.degree() >= 1 && w.eval(a) == 0)
        w = w.divmod(Polynomial({-a, Rational(1)})).quotient;
    while (!w.is_zero() && w.degree() >= 1 && w.eval(b) == 0)
        w = w.divmod(Polynomial({-b, Rational(1)})).quotient;
    if (w.degree() < 1) return 0;
    return SturmChain(w).count_roots_open(a, b);
}

namespace {

// Largest t = lo + (hi-lo)/2^j such that p(t) != 0 and p has no root in
// (lo, t]. Used to shave a root (or potential root) off an interval endpoint.
Rational shrink_from_left(const SturmChain& chain, const Rational& lo, const Rational& hi) {
    Rational step = (hi - lo) / 2;
    for (;;) {
        Rational cand = lo + step;
        if (chain.squarefree().eval(cand) != 0 && chain.count_roots_open(lo, cand) == 0)
            return cand;
        step /= 2;
    }
}

Rational shrink_from_right(const SturmChain& chain, const Rational& lo, const Rational& hi) {
    Rational step = (hi - lo) / 2;
    for (;;) {
        Rational cand = hi - step;
        if (chain.squarefree().eval(cand) != 0 && chain.count_roots_open(cand, hi) == 0)
            return cand;
        step /= 2;
    }
}

}  // namespace

std::vector<RootInterval> isolate_roots(const Polynomial& p, const Rational& a,
                                        const Rational& b) {
    if (p.is_zero()) throw std::domain_error("isolate_roots: zero polynomial");
    std::vector<RootInterval> out;
    if (!(a < b)) return out;
    SturmChain chain(p);
    const Polynomial& sf = chain.squarefree();
    if (chain.count_roots_open(a, b) == 0) return out;

    Rational lo = sf.eval(a) == 0 ? shrink_from_left(chain, a, b) : a;
    Rational hi = sf.eval(b) == 0 ? shrink_from_right(chain, a, b) : b;

    std::vector<std::pair<Rational, Rational>> work{{lo, hi}};
    while (!work.empty()) {
        auto [l, h] = work.back();
        work.pop_back();
        int n = chain.count_roots_open(l, h);
        if (n == 0) continue;
        if (n == 1) {
            out.push_back({l, h});
            continue;
        }
        Rational mid = (l + h) / 2;
        if (sf.eval(mid) != 0) {
            work.emplace_back(l, mid);
            work.emplace_back(mid, h);
        } else {
            out.push_back({mid, mid});
            // Carve out a punctured neighbourhood of the exact root.
            Rational delta = (h - l) / 4;
            while (sf.eval(mid - delta) == 0 || sf.eval(mid + delta) == 0 ||
                   chain.count_roots_open(mid - delta, mid + delta) != 1)
                delta /= 2;
            work.emplace_back(l, mid - delta);
            work.emplace_back(mid + delta, h);
        }
    }
    std::sort(out.begin(), out.end(),
              [](const RootInterval& x, const RootInterval& y) { return x.lo < y.lo; });
    return out;
}

AlgebraicNumber AlgebraicNumber::rational(const Rational& r) {
    AlgebraicNumber n;
    n.rational_ = true;
    n.lo_ = n.hi_ = r;
    n.poly_ = Polynomial({-r, Rational(1)});
    return n;
}

AlgebraicNumber AlgebraicNumber::root_of(const Polynomial& p, const Rational& lo,
                                         const Rational& hi) {
    if (lo == hi) return rational(lo);
    AlgebraicNumber n;
    n.rational_ = false;
    n.poly_ = p.squarefree_part();
    n.lo_ = lo;
    n.hi_ = hi;
    if (sign(n.poly_.eval(lo)) * sign(n.poly_.eval(hi)) >= 0)
        throw std::invalid_argument("root_of: interval does not bracket a simple root");
    return n;
}

void AlgebraicNumber::refine() {
    if (rational_) return;
    Rational mid = (lo_ + hi_) / 2;
    Rational v = poly_.eval(mid);
    if (v == 0) {
        rational_ = true;
        lo_ = hi_ = mid;
        poly_ = Polynomial({-mid, Rational(1)});
        return;
    }
    if (sign(poly_.eval(lo_)) != sign(v))
        hi_ = mid;
    else
        lo_ = mid;
}

void AlgebraicNumber::refine_below(const Rational& width) {
    while (!rational_ && hi_ - lo_ >= width) refine();
}

int AlgebraicNumber::sign_of(const Polynomial& g) const {
    if (g.is_zero()) return 0;
    if (rational_) return sign(g.eval(lo_));
    Polynomial h = Polynomial::gcd(poly_, g);
    if (h.degree() >= 1 && sign(h.eval(lo_)) * sign(h.eval(hi_)) < 0) return 0;
    // g does not vanish here; shrink a local enclosure until it is g-root-free.
    SturmChain gchain(g);
    Rational lo = lo_, hi = hi_;
    while (gchain.count_roots_open(lo, hi) > 0 || gchain.squarefree().eval(lo) == 0 ||
           gchain.squarefree().eval(hi) == 0) {
        Rational mid = (lo + hi) / 2;
        if (sign(poly_.eval(lo)) != sign(poly_.eval(mid)))
            hi = mid;
        else
            lo = mid;
    }
    return sign(g.eval((lo + hi) / 2));
}

int AlgebraicNumber::compare(AlgebraicNumber& a, AlgebraicNumber& b) {
    if (a.rational_ && b.rational_) return sign(a.lo_ - b.lo_);
    // Equality first, so the subsequent refinement loop terminates.
    if (a.sign_of(b.poly_) == 0) {
        if (b.rational_) return 0;  // a is the root of (x - b), i.e. equal
        // a is some root of b's polynomial; equal iff it is the one in b's interval.
        for (;;) {
            if (a.rational_) {
                if (b.lo_ < a.lo_ && a.lo_ < b.hi_) return 0;
                return a.lo_ <= b.lo_ ? -1 : 1;
            }
            if (b.lo_ <= a.lo_ && a.hi_ <= b.hi_) return 0;
            if (a.hi_ <= b.lo_) return -1;
            if (a.lo_ >= b.hi_) return 1;
            a.refine();
        }
    }
    for (;;) {
        if (a.hi_ <= b.lo_) return -1;
        if (b.hi_ <= a.lo_) return 1;
        if (a.rational_ && b.rational_) return sign(a.lo_ - b.lo_);
        a.refine();
        b.refine();
    }
}

std::string AlgebraicNumber::approx_str(int digits) const {
    Rational width(1);
    for (int i = 0; i < digits; ++i) width /= 10;
    AlgebraicNumber copy = *this;
    copy.refine_below(width);
    Rational mid = (copy.lo_ + copy.hi_) / 2;
    // Fixed-point decimal of mid.
    Integer num = mid.get_num(), den = mid.get_den();
    bool neg = num < 0;
    if (neg) num = -num;
    Integer scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    Integer scaled = num * scale / den;
    Integer ip = scaled / scale, fp = scaled % scale;
    std::ostringstream os;
    if (neg) os << '-';
    os << ip.get_str() << '.';
    std::string f = fp.get_str();
    os << std::string(digits - f.size(), '0') << f;
    return os.str();
}

}  // namespace cliquepack
