#pragma once

// Dense univariate polynomials over an exact ordered field (Rational or
// QuadScalar), with Sturm-sequence real-root isolation. Roots come back
// either exact or as open intervals with a sign change, which feed the
// IntervalScalar refiners. A separate helper promotes roots of monic
// rational polynomials to exact QuadScalars when their degree over Q is
// at most two.

#include <algorithm>
#include <optional>
#include <vector>

#include "hyperfuse/interval.hpp"
#include "hyperfuse/quad.hpp"
#include "hyperfuse/rational.hpp"

namespace hyperfuse {

template <typename T>
struct Poly {
    std::vector<T> c; // c[i] multiplies x^i; kept trimmed

    Poly() = default;
    explicit Poly(std::vector<T> coeffs) : c(std::move(coeffs)) { trim(); }

    static Poly constant(T v) { return Poly(std::vector<T>{std::move(v)}); }

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    const T& lead() const { return c.back(); }

    void trim() {
        while (!c.empty() && c.back() == T(0)) c.pop_back();
    }

    T eval(const T& x) const {
        T acc(0);
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    T eval_rational(const Rational& x) const { return eval(T(x)); }

    Poly derivative() const {
        if (c.size() <= 1) return Poly();
        std::vector<T> d(c.size() - 1);
        for (size_t i = 1; i < c.size(); ++i) d[i - 1] = c[i] * T(static_cast<int>(i));
        return Poly(std::move(d));
    }

    friend Poly operator+(const Poly& p, const Poly& q) {
        std::vector<T> r(std::max(p.c.size(), q.c.size()), T(0));
        for (size_t i = 0; i < p.c.size(); ++i) r[i] = r[i] + p.c[i];
        for (size_t i = 0; i < q.c.size(); ++i) r[i] = r[i] + q.c[i];
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& p, const Poly& q) {
        std::vector<T> r(std::max(p.c.size(), q.c.size()), T(0));
        for (size_t i = 0; i < p.c.size(); ++i) r[i] = r[i] + p.c[i];
        for (size_t i = 0; i < q.c.size(); ++i) r[i] = r[i] - q.c[i];
        return Poly(std::move(r));
    }
    friend Poly operator*(const Poly& p, const Poly& q) {
        if (p.is_zero() || q.is_zero()) return Poly();
        std::vector<T> r(p.c.size() + q.c.size() - 1, T(0));
        for (size_t i = 0; i < p.c.size(); ++i)
            for (size_t j = 0; j < q.c.size(); ++j) r[i + j] = r[i + j] + p.c[i] * q.c[j];
        return Poly(std::move(r));
    }

    friend std::pair<Poly, Poly> divrem(const Poly& p, const Poly& q) {
        if (q.is_zero()) throw division_by_zero();
        Poly rem = p;
        std::vector<T> quo(p.c.size() >= q.c.size() ? p.c.size() - q.c.size() + 1 : 0, T(0));
        while (!rem.is_zero() && rem.degree() >= q.degree()) {
            int shift = rem.degree() - q.degree();
            T f = rem.lead() / q.lead();
            quo[shift] = f;
            for (size_t i = 0; i < q.c.size(); ++i)
                rem.c[i + shift] = rem.c[i + shift] - f * q.c[i];
            rem.trim();
        }
        return {Poly(std::move(quo)), rem};
    }

    Poly monic() const {
        if (is_zero()) return *this;
        std::vector<T> r = c;
        for (auto& v : r) v = v / c.back();
        return Poly(std::move(r));
    }
};

template <typename T>
Poly<T> poly_gcd(Poly<T> a, Poly<T> b) {
    while (!b.is_zero()) {
        auto [q, r] = divrem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

template <typename T>
Poly<T> squarefree_part(const Poly<T>& p) {
    if (p.degree() <= 1) return p.monic();
    Poly<T> g = poly_gcd(p, p.derivative());
    if (g.degree() == 0) return p.monic();
    return divrem(p, g).first.monic();
}

// ---------------------------------------------------------------------------
// Sturm sequences and real-root isolation
// ---------------------------------------------------------------------------

template <typename T>
std::vector<Poly<T>> sturm_chain(const Poly<T>& p) {
    std::vector<Poly<T>> chain{p, p.derivative()};
    while (!chain.back().is_zero() && chain.back().degree() > 0) {
        auto [q, r] = divrem(chain[chain.size() - 2], chain.back());
        (void)q;
        if (r.is_zero()) break;
        for (auto& v : r.c) v = -v;
        chain.push_back(std::move(r));
    }
    return chain;
}

template <typename T>
int sign_variations_at(const std::vector<Poly<T>>& chain, const Rational& x) {
    int count = 0, prev = 0;
    for (const auto& q : chain) {
        int s = sign(q.eval_rational(x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

// Rational B such that all real roots lie in (-B, B).
template <typename T>
Rational root_bound(const Poly<T>& p) {
    Poly<T> m = p.monic();
    Rational best(0);
    for (int i = 0; i < m.degree(); ++i) {
        Rational b = QuadScalar(m.c[i]).magnitude_bound();
        if (b > best) best = b;
    }
    return best + 2;
}

struct RootInterval {
    Rational lo, hi; // exact root iff lo == hi; otherwise open interval with a sign change
    bool exact() const { return lo == hi; }
    Rational mid() const { return (lo + hi) / 2; }
};

namespace detail {

template <typename T>
void isolate_rec(const Poly<T>& p, const std::vector<Poly<T>>& chain, const Rational& a,
                 const Rational& b, int va, int vb, std::vector<RootInterval>& out,
                 std::optional<Rational>& deflate_at) {
    if (deflate_at) return;
    int n = va - vb;
    if (n <= 0) return;
    if (n == 1) {
        out.push_back({a, b});
        return;
    }
    Rational m = (a + b) / 2;
    if (sign(p.eval_rational(m)) == 0) {
        deflate_at = m;
        return;
    }
    int vm = sign_variations_at(chain, m);
    isolate_rec(p, chain, a, m, va, vm, out, deflate_at);
    isolate_rec(p, chain, m, b, vm, vb, out, deflate_at);
}

} // namespace detail

// All real roots of a squarefree polynomial, sorted ascending. Exact
// rational roots are returned as point intervals; the rest as open
// intervals whose endpoints are not roots and where p changes sign.
template <typename T>
std::vector<RootInterval> isolate_real_roots(const Poly<T>& p_in) {
    const Poly<T> p0 = squarefree_part(p_in);
    Poly<T> p = p0;
    if (p.degree() <= 0) return {};
    std::vector<RootInterval> exact_roots;
    std::vector<RootInterval> out;
    for (;;) {
        Rational bound = root_bound(p);
        auto chain = sturm_chain(p);
        out.clear();
        std::optional<Rational> deflate;
        int va = sign_variations_at(chain, -bound);
        int vb = sign_variations_at(chain, bound);
        detail::isolate_rec(p, chain, -bound, bound, va, vb, out, deflate);
        if (!deflate) break;
        // A bisection point landed exactly on a root: record it, deflate,
        // and isolate the rest from scratch.
        exact_roots.push_back({*deflate, *deflate});
        std::vector<T> lin{T(-Rational(*deflate)), T(1)};
        p = divrem(p, Poly<T>(std::move(lin))).first;
        if (p.degree() <= 0) {
            out.clear();
            break;
        }
    }
    // Shrink the sign-change intervals until no recorded exact root sits
    // inside one; only then is sorting by position unambiguous.
    for (const RootInterval& ex : exact_roots) {
        for (auto& iv : out) {
            while (!iv.exact() && ex.lo > iv.lo && ex.lo < iv.hi) {
                Rational m = (iv.lo + iv.hi) / 2;
                int sm = sign(p.eval_rational(m));
                if (sm == 0) {
                    iv = {m, m};
                    break;
                }
                if (sm == sign(p.eval_rational(iv.lo))) iv.lo = m;
                else iv.hi = m;
            }
        }
    }
    // Endpoints may touch a deflated root, where the full squarefree
    // polynomial vanishes; shrink until p0 itself changes sign across
    // every interval so downstream bisection can use p0 directly.
    for (auto& iv : out) {
        while (!iv.exact() &&
               (sign(p0.eval_rational(iv.lo)) == 0 || sign(p0.eval_rational(iv.hi)) == 0)) {
            Rational m = (iv.lo + iv.hi) / 2;
            int sm = sign(p.eval_rational(m));
            if (sm == 0) {
                iv = {m, m};
                break;
            }
            if (sm == sign(p.eval_rational(iv.lo))) iv.lo = m;
            else iv.hi = m;
        }
    }
    out.insert(out.end(), exact_roots.begin(), exact_roots.end());
    std::sort(out.begin(), out.end(), [](const RootInterval& x, const RootInterval& y) {
        if (x.exact() && !y.exact()) return x.lo <= y.lo;
        if (!x.exact() && y.exact()) return x.hi <= y.lo;
        return x.lo < y.lo;
    });
    return out;
}

// Bisects a sign-change interval until its width is at most `target`.
template <typename T>
RatInterval bisect_root(const Poly<T>& p, Rational lo, Rational hi, const Rational& target) {
    int slo = sign(p.eval_rational(lo));
    while (hi - lo > target) {
        Rational m = (lo + hi) / 2;
        int sm = sign(p.eval_rational(m));
        if (sm == 0) return {m, m};
        if (sm == slo) lo = m;
        else hi = m;
    }
    return {lo, hi};
}

// Wraps an isolated root as a refinable interval scalar. The bisection
// resumes from the tightest enclosure computed so far.
template <typename T>
IntervalScalar root_scalar(const Poly<T>& p, const RootInterval& r) {
    if (r.exact()) return IntervalScalar::point(r.lo);
    auto state = std::make_shared<RatInterval>(r.lo, r.hi);
    Poly<T> pc = p;
    auto refine = [pc, state](const Rational& width) {
        if (state->second - state->first > width)
            *state = bisect_root(pc, state->first, state->second, width);
        return *state;
    };
    return IntervalScalar(r.lo, r.hi, refine);
}

// ---------------------------------------------------------------------------
// Promotion of roots to exact quadratic scalars
// ---------------------------------------------------------------------------

namespace detail {

// Unique integer inside [lo, hi], if the interval holds exactly one.
inline std::optional<BigInt> unique_integer_in(const Rational& lo, const Rational& hi) {
    BigInt a = rat_ceil(lo), b = rat_floor(hi);
    if (a != b) return std::nullopt;
    return a;
}

} // namespace detail

// Tries to express one isolated real root of a monic squarefree rational
// polynomial as an exact QuadScalar (degree <= 2 over Q). `which` indexes
// into `roots`, the full ascending list from isolate_real_roots. Returns
// nullopt when the root has higher degree.
inline std::optional<QuadScalar> promote_root(const Poly<Rational>& f,
                                              const std::vector<RootInterval>& roots,
                                              size_t which) {
    const RootInterval& tgt = roots[which];
    if (tgt.exact()) return QuadScalar(tgt.lo);

    // Scale x = y/c so g(y) = c^n f(y/c) is monic with integer coefficients;
    // then integer roots and integer quadratic factors are the only options.
    BigInt c = 1;
    for (const auto& co : f.c) c = boost::multiprecision::lcm(c, denominator(co));
    std::vector<Rational> gc(f.c.size());
    BigInt scale = 1;
    for (int i = f.degree(); i >= 0; --i) {
        gc[i] = f.c[i] * Rational(scale);
        scale *= c;
    }
    Poly<Rational> g((std::vector<Rational>(gc)));
    Rational cq(c);

    auto tighten = [&](const RootInterval& r) {
        return bisect_root(f, r.lo, r.hi, Rational(1, 16) / cq);
    };

    RatInterval ti = tighten(tgt);
    if (ti.first == ti.second) return QuadScalar(ti.first);
    // integer root of g?
    if (auto k = detail::unique_integer_in(ti.first * cq, ti.second * cq)) {
        if (g.eval_rational(Rational(*k)) == 0) {
            // a rational root should have been isolated exactly; accept anyway
            Rational root(*k, c);
            if (root > ti.first && root < ti.second) return QuadScalar(root);
        }
    }
    // quadratic factor y^2 - s y + t of g whose roots are (target, other)
    for (size_t j = 0; j < roots.size(); ++j) {
        if (j == which) continue;
        RatInterval oi = roots[j].exact() ? RatInterval{roots[j].lo, roots[j].lo}
                                          : tighten(roots[j]);
        // refine both until the sum and product pin unique integers
        Rational w(1, 16);
        for (int iter = 0; iter < 64; ++iter) {
            RatInterval sum{(ti.first + oi.first) * cq, (ti.second + oi.second) * cq};
            RatInterval prod = detail::iv_mul({ti.first * cq, ti.second * cq},
                                              {oi.first * cq, oi.second * cq});
            if (sum.second - sum.first < Rational(1, 3) &&
                prod.second - prod.first < Rational(1, 3)) {
                auto s = detail::unique_integer_in(sum.first, sum.second);
                auto t = detail::unique_integer_in(prod.first, prod.second);
                if (!s || !t) break;
                BigInt disc = *s * *s - 4 * *t;
                if (disc < 0) break;
                Poly<Rational> quad(std::vector<Rational>{Rational(*t), Rational(-*s), Rational(1)});
                auto [quo, rem] = divrem(g, quad);
                (void)quo;
                if (!rem.is_zero()) break;
                QuadScalar root_plus = (QuadScalar(Rational(*s)) + QuadScalar::sqrt_of(disc.convert_to<std::int64_t>())) / 2;
                for (const QuadScalar& cand : {root_plus, QuadScalar(Rational(*s)) - root_plus}) {
                    QuadScalar x = cand / QuadScalar(cq);
                    if (x > QuadScalar(ti.first) && x < QuadScalar(ti.second)) return x;
                }
                break;
            }
            w /= 16;
            ti = bisect_root(f, ti.first, ti.second, w / cq);
            if (!roots[j].exact()) oi = bisect_root(f, oi.first, oi.second, w / cq);
        }
    }
    return std::nullopt;
}

} // namespace hyperfuse
