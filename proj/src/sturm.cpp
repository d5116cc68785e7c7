#include "hypercone/sturm.hpp"

#include <stdexcept>
#include <utility>

#include "hypercone/errors.hpp"

namespace hypercone {

Interval::Interval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
    if (lo > hi) throw std::invalid_argument("Interval: lo > hi");
}

SturmChain::SturmChain(const Poly& p) {
    if (p.is_zero()) throw std::invalid_argument("SturmChain: zero polynomial");
    chain_.push_back(p);
    Poly d = p.derivative();
    if (d.is_zero()) return;
    chain_.push_back(std::move(d));
    for (;;) {
        const Poly& a = chain_[chain_.size() - 2];
        const Poly& b = chain_.back();
        Poly r = a.divmod(b).second;
        if (r.is_zero()) break;
        chain_.push_back((-r).primitive_part());
    }
}

namespace {

int count_changes(const std::vector<int>& signs) {
    int changes = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

}  // namespace

int SturmChain::sign_changes_at(const Rational& x) const {
    std::vector<int> signs;
    signs.reserve(chain_.size());
    for (const auto& q : chain_) signs.push_back(q.eval(x).sign());
    return count_changes(signs);
}

int SturmChain::sign_changes_at_pos_inf() const {
    std::vector<int> signs;
    signs.reserve(chain_.size());
    for (const auto& q : chain_) signs.push_back(q.leading().sign());
    return count_changes(signs);
}

int SturmChain::sign_changes_at_neg_inf() const {
    std::vector<int> signs;
    signs.reserve(chain_.size());
    for (const auto& q : chain_) {
        int s = q.leading().sign();
        if (q.degree() % 2 != 0) s = -s;
        signs.push_back(s);
    }
    return count_changes(signs);
}

int SturmChain::count_roots(const Interval& iv) const {
    if (primal().eval(iv.lo).is_zero())
        throw EndpointIsRoot("count_roots: lower endpoint is a root");
    if (primal().eval(iv.hi).is_zero())
        throw EndpointIsRoot("count_roots: upper endpoint is a root");
    return sign_changes_at(iv.lo) - sign_changes_at(iv.hi);
}

int SturmChain::count_roots_positive() const {
    if (primal().eval(Rational(0)).is_zero())
        throw EndpointIsRoot("count_roots_positive: origin is a root");
    return sign_changes_at(Rational(0)) - sign_changes_at_pos_inf();
}

int SturmChain::count_roots_all() const {
    return sign_changes_at_neg_inf() - sign_changes_at_pos_inf();
}

namespace {

// Split point with p(c) != 0, nudged rightward off the midpoint when the
// midpoint happens to be a root.
Rational nonroot_split(const Poly& p, const Interval& iv) {
    Rational c = iv.midpoint();
    Rational step = iv.width() / Rational(4);
    while (p.eval(c).is_zero()) {
        c += step;
        step /= Rational(2);
        if (c >= iv.hi) throw std::logic_error("nonroot_split: exhausted interval");
    }
    return c;
}

void isolate_rec(const Poly& p, const SturmChain& chain, const Interval& iv, int count,
                 std::vector<Interval>& out) {
    if (count == 0) return;
    if (count == 1) {
        out.push_back(iv);
        return;
    }
    const Rational c = nonroot_split(p, iv);
    const Interval left(iv.lo, c), right(c, iv.hi);
    const int nl = chain.count_roots(left);
    isolate_rec(p, chain, left, nl, out);
    isolate_rec(p, chain, right, count - nl, out);
}

}  // namespace

std::vector<Interval> isolate_roots(const Poly& p, const Interval& iv) {
    if (p.is_zero()) throw std::invalid_argument("isolate_roots: zero polynomial");
    if (p.degree() == 0) return {};
    std::vector<Interval> out;

    // Exact roots at the endpoints are outside the open interval; deflate so
    // the Sturm counts see non-root endpoints.
    Poly q = p;
    while (q.eval(iv.lo).is_zero()) q = q.divide_by_linear(iv.lo);
    while (!q.is_zero() && q.degree() > 0 && q.eval(iv.hi).is_zero())
        q = q.divide_by_linear(iv.hi);
    if (q.degree() <= 0) return {};

    SturmChain chain(q);
    isolate_rec(q, chain, iv, chain.count_roots(iv), out);
    return out;
}

std::vector<Interval> isolate_roots(const Poly& p) {
    if (p.is_zero()) throw std::invalid_argument("isolate_roots: zero polynomial");
    if (p.degree() == 0) return {};
    const Rational b = p.cauchy_root_bound();
    return isolate_roots(p, Interval(-b, b));
}

std::vector<Interval> isolate_positive_roots(const Poly& p) {
    if (p.is_zero()) throw std::invalid_argument("isolate_positive_roots: zero polynomial");
    Poly q = p;
    q.deflate_origin();
    if (q.degree() <= 0) return {};
    return isolate_roots(q, Interval(Rational(0), q.cauchy_root_bound()));
}

Interval refine_root(const Poly& p, Interval iv, int digits) {
    const Rational target = Rational(1) / pow(Rational(10), static_cast<unsigned long>(digits));
    if (iv.lo == iv.hi) {
        if (!p.eval(iv.lo).is_zero())
            throw NoSignChange("refine_root: degenerate bracket off a root");
        return iv;
    }
    int slo = p.eval(iv.lo).sign();
    const int shi = p.eval(iv.hi).sign();
    if (slo == 0 || shi == 0 || slo == shi)
        throw NoSignChange("refine_root: endpoints do not bracket a sign change");
    while (iv.width() >= target) {
        const Rational mid = iv.midpoint();
        const int sm = p.eval(mid).sign();
        if (sm == 0) {
            // Exact rational root: shrink to a symmetric sign-change bracket
            // inside the current one.
            Rational d = iv.width() / Rational(8);
            if (d > target / Rational(4)) d = target / Rational(4);
            while (p.eval(mid - d).sign() == 0 || p.eval(mid + d).sign() == 0)
                d /= Rational(2);
            const Interval tight(mid - d, mid + d);
            if (p.eval(tight.lo).sign() * p.eval(tight.hi).sign() < 0) return tight;
            return Interval(mid, mid);
        }
        if (sm == slo) {
            iv.lo = mid;
            slo = sm;
        } else {
            iv.hi = mid;
        }
    }
    return iv;
}

}  // namespace hypercone
