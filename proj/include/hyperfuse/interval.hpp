#pragma once

// Certified rational interval enclosures for real algebraic values the
// quadratic field cannot express. Every interval carries a replayable
// refiner: a pure procedure that recomputes an enclosure of any requested
// width from captured data. Values are immutable; refinement returns new
// intervals. Queries that cannot be decided above the precision floor
// fail loudly instead of guessing.

#include <functional>
#include <memory>
#include <utility>

#include "hyperfuse/error.hpp"
#include "hyperfuse/quad.hpp"
#include "hyperfuse/rational.hpp"

namespace hyperfuse {

// Interval width below which sign/identity queries give up.
inline Rational& precision_floor() {
    static Rational floor = Rational(1, boost::multiprecision::pow(BigInt(10), 60));
    return floor;
}
inline void set_precision_floor(const Rational& f) { precision_floor() = f; }

using RatInterval = std::pair<Rational, Rational>;

class IntervalScalar {
public:
    using Refiner = std::function<RatInterval(const Rational& width)>;

    IntervalScalar() : lo_(0), hi_(0) {}

    IntervalScalar(Rational lo, Rational hi, Refiner refine)
        : lo_(std::move(lo)), hi_(std::move(hi)), refine_(std::move(refine)),
          cache_(refine_ ? std::make_shared<RatInterval>(lo_, hi_) : nullptr) {
        if (lo_ > hi_) throw internal_inconsistency("interval with lo > hi");
    }

    static IntervalScalar point(const Rational& v) { return IntervalScalar(v, v, {}); }

    static IntervalScalar of_quad(const QuadScalar& q) {
        if (q.is_rational()) return point(q.as_rational());
        Rational a = q.rational_part(), b = q.radical_part();
        Rational d(q.radicand());
        auto refine = [a, b, d](const Rational& width) {
            Rational target = width / (2 * rat_abs(b));
            unsigned k = 1;
            while (pow2(-static_cast<int>(k)) > target && k < 1000000) ++k;
            Rational slo, shi;
            sqrt_enclosure(d, k, slo, shi);
            if (b >= 0) return RatInterval{a + b * slo, a + b * shi};
            return RatInterval{a + b * shi, a + b * slo};
        };
        auto [lo, hi] = refine(Rational(1, 1024));
        return IntervalScalar(lo, hi, refine);
    }

    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }
    Rational width() const { return hi_ - lo_; }
    Rational midpoint() const { return (lo_ + hi_) / 2; }
    bool is_point() const { return lo_ == hi_; }

    // Rational bound with |value| <= bound.
    Rational magnitude_bound() const {
        Rational m = rat_abs(lo_);
        Rational h = rat_abs(hi_);
        return (m > h ? m : h) + 1;
    }

    // New interval of width <= target (or exact), intersected with the
    // current bounds. No enclosure is ever refined below the precision
    // floor; queries that need more must fail loudly at their level.
    // Enclosures computed across copies of one value are shared through a
    // cache, so a subexpression refined once is cheap everywhere else it
    // appears.
    IntervalScalar refined(const Rational& target_in) const {
        Rational target = target_in < precision_floor() ? precision_floor() : target_in;
        if (width() <= target || !refine_) return *this;
        Rational lo, hi;
        if (cache_ && cache_->second - cache_->first <= target) {
            lo = cache_->first;
            hi = cache_->second;
        } else {
            auto r = refine_(target);
            lo = std::move(r.first);
            hi = std::move(r.second);
            if (cache_ && hi - lo < cache_->second - cache_->first) *cache_ = {lo, hi};
        }
        if (lo < lo_) lo = lo_;
        if (hi > hi_) hi = hi_;
        if (lo > hi) throw internal_inconsistency("refiner left the previous enclosure");
        IntervalScalar out(lo, hi, refine_);
        out.cache_ = cache_;
        return out;
    }

    RatInterval enclosure_at(const Rational& target) const {
        IntervalScalar r = refined(target);
        return {r.lo_, r.hi_};
    }

    double to_double() const { return hyperfuse::to_double(midpoint()); }

    std::string str() const { return "[" + to_string(lo_) + ", " + to_string(hi_) + "]"; }

private:
    Rational lo_, hi_;
    Refiner refine_;
    std::shared_ptr<RatInterval> cache_; // tightest enclosure seen so far
};

namespace detail {

inline RatInterval iv_mul(const RatInterval& x, const RatInterval& y) {
    Rational cs[4] = {x.first * y.first, x.first * y.second, x.second * y.first,
                      x.second * y.second};
    Rational lo = cs[0], hi = cs[0];
    for (int i = 1; i < 4; ++i) {
        if (cs[i] < lo) lo = cs[i];
        if (cs[i] > hi) hi = cs[i];
    }
    return {lo, hi};
}

} // namespace detail

inline IntervalScalar operator+(const IntervalScalar& x, const IntervalScalar& y) {
    auto refine = [x, y](const Rational& width) {
        RatInterval a = x.enclosure_at(width / 2), b = y.enclosure_at(width / 2);
        return RatInterval{a.first + b.first, a.second + b.second};
    };
    return IntervalScalar(x.lo() + y.lo(), x.hi() + y.hi(), refine);
}

inline IntervalScalar operator-(const IntervalScalar& x, const IntervalScalar& y) {
    auto refine = [x, y](const Rational& width) {
        RatInterval a = x.enclosure_at(width / 2), b = y.enclosure_at(width / 2);
        return RatInterval{a.first - b.second, a.second - b.first};
    };
    return IntervalScalar(x.lo() - y.hi(), x.hi() - y.lo(), refine);
}

inline IntervalScalar operator-(const IntervalScalar& x) {
    return IntervalScalar::point(Rational(0)) - x;
}

// Width budgeting: width(xy) <= |x| w_y + |y| w_x + w_x w_y, so refining
// both operands to width/(2 (Mx + My)) meets the request; a shrink loop
// guards against bound drift.
inline IntervalScalar operator*(const IntervalScalar& x, const IntervalScalar& y) {
    auto refine = [x, y](const Rational& width) {
        Rational denom = 2 * (x.magnitude_bound() + y.magnitude_bound());
        Rational w = width / denom;
        for (;;) {
            RatInterval r = detail::iv_mul(x.enclosure_at(w), y.enclosure_at(w));
            if (r.second - r.first <= width) return r;
            if (w < precision_floor())
                throw precision_floor_reached("product refinement stalled");
            w /= 4;
        }
    };
    RatInterval init = detail::iv_mul({x.lo(), x.hi()}, {y.lo(), y.hi()});
    return IntervalScalar(init.first, init.second, refine);
}

// Denominator must exclude zero, refining until it does (an exactly-zero
// denominator runs into the precision floor and fails loudly).
inline IntervalScalar operator/(const IntervalScalar& x, const IntervalScalar& y) {
    auto nonzero_y = [y](const Rational& hint) {
        IntervalScalar cur = y.refined(hint);
        while (cur.lo() <= 0 && cur.hi() >= 0) {
            if (cur.is_point()) throw division_by_zero();
            Rational w = cur.width() / 4;
            if (w < precision_floor())
                throw precision_floor_reached("denominator straddles zero: " + cur.str());
            cur = cur.refined(w);
        }
        return cur;
    };
    auto refine = [x, nonzero_y](const Rational& width) {
        IntervalScalar yc = nonzero_y(Rational(1, 1024));
        Rational ymin = yc.lo() > 0 ? yc.lo() : -yc.hi(); // min |y|
        Rational xmag = x.magnitude_bound();
        // width(x/y) <= (w_x + |x/y| w_y) / |y|; budget both terms
        Rational w = width * ymin * ymin / (2 * (xmag + ymin));
        for (;;) {
            IntervalScalar yr = yc.refined(w);
            RatInterval a = x.enclosure_at(w);
            RatInterval inv{Rational(1) / yr.hi(), Rational(1) / yr.lo()};
            RatInterval r = detail::iv_mul(a, inv);
            if (r.second - r.first <= width) return r;
            if (w < precision_floor())
                throw precision_floor_reached("quotient refinement stalled");
            w /= 4;
        }
    };
    // initial bounds: divide only if the current enclosure already
    // excludes zero, otherwise force one refinement
    IntervalScalar yc = y;
    if (yc.lo() <= 0 && yc.hi() >= 0) {
        auto r = refine(Rational(1, 1024));
        return IntervalScalar(r.first, r.second, refine);
    }
    RatInterval init = detail::iv_mul({x.lo(), x.hi()},
                                      {Rational(1) / yc.hi(), Rational(1) / yc.lo()});
    return IntervalScalar(init.first, init.second, refine);
}

inline IntervalScalar interval_sqrt(const IntervalScalar& x) {
    auto refine = [x](const Rational& width) {
        Rational w = width / 2;
        for (;;) {
            RatInterval a = x.enclosure_at(w);
            if (a.second < 0) throw error("square root of a certified-negative value");
            Rational lo = a.first < 0 ? Rational(0) : a.first;
            unsigned k = 1;
            while (pow2(-static_cast<int>(k)) > w / 2 && k < 1000000) ++k;
            Rational llo, lhi, hlo, hhi;
            sqrt_enclosure(lo, k, llo, lhi);
            sqrt_enclosure(a.second, k, hlo, hhi);
            if (hhi - llo <= width) return RatInterval{llo, hhi};
            if (w < precision_floor())
                throw precision_floor_reached("sqrt refinement stalled");
            w /= 4;
        }
    };
    auto init = refine(Rational(1, 1024));
    return IntervalScalar(init.first, init.second, refine);
}

// Decides the sign, refining as needed; throws precision_floor_reached if
// the interval still straddles zero at the floor.
inline int interval_sign(const IntervalScalar& x) {
    IntervalScalar cur = x;
    for (;;) {
        if (cur.lo() > 0) return 1;
        if (cur.hi() < 0) return -1;
        if (cur.is_point()) return 0; // exactly zero
        Rational w = cur.width() / 4;
        if (w < precision_floor())
            throw precision_floor_reached("sign undecided on " + cur.str());
        cur = cur.refined(w);
    }
}

} // namespace hyperfuse
