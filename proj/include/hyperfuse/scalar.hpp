#pragma once

// A Scalar is either an exact element of a real quadratic field or a
// certified interval with a refiner. Arithmetic stays exact whenever both
// operands are exact; anything touching an interval yields an interval.

#include <string>
#include <variant>

#include "hyperfuse/interval.hpp"
#include "hyperfuse/quad.hpp"

namespace hyperfuse {

class Scalar {
public:
    Scalar() : v_(QuadScalar()) {}
    Scalar(QuadScalar q) : v_(std::move(q)) {}            // NOLINT
    Scalar(IntervalScalar i) : v_(std::move(i)) {}        // NOLINT
    Scalar(int n) : v_(QuadScalar(n)) {}                  // NOLINT
    Scalar(const Rational& r) : v_(QuadScalar(r)) {}      // NOLINT

    bool is_exact() const { return std::holds_alternative<QuadScalar>(v_); }

    const QuadScalar& exact() const {
        if (!is_exact()) throw unsupported_field("interval scalar where an exact value is required");
        return std::get<QuadScalar>(v_);
    }

    const IntervalScalar& interval() const { return std::get<IntervalScalar>(v_); }

    IntervalScalar enclosure() const {
        if (is_exact()) return IntervalScalar::of_quad(exact());
        return interval();
    }

    double to_double() const {
        return is_exact() ? exact().to_double() : interval().to_double();
    }

    std::string str() const { return is_exact() ? exact().str() : interval().str(); }

    friend Scalar operator+(const Scalar& x, const Scalar& y) {
        if (x.is_exact() && y.is_exact()) return Scalar(x.exact() + y.exact());
        return Scalar(x.enclosure() + y.enclosure());
    }
    friend Scalar operator-(const Scalar& x, const Scalar& y) {
        if (x.is_exact() && y.is_exact()) return Scalar(x.exact() - y.exact());
        return Scalar(x.enclosure() - y.enclosure());
    }
    friend Scalar operator*(const Scalar& x, const Scalar& y) {
        if (x.is_exact() && y.is_exact()) return Scalar(x.exact() * y.exact());
        return Scalar(x.enclosure() * y.enclosure());
    }
    friend Scalar operator/(const Scalar& x, const Scalar& y) {
        if (x.is_exact() && y.is_exact()) return Scalar(x.exact() / y.exact());
        return Scalar(x.enclosure() / y.enclosure());
    }

private:
    std::variant<QuadScalar, IntervalScalar> v_;
};

enum class ArithOp { add, sub, mul, div };

inline Scalar scalar_arith(const Scalar& x, const Scalar& y, ArithOp op) {
    switch (op) {
        case ArithOp::add: return x + y;
        case ArithOp::sub: return x - y;
        case ArithOp::mul: return x * y;
        case ArithOp::div: return x / y;
    }
    throw error("unknown arithmetic op");
}

// -1, 0 or +1. Exact for exact scalars; refines intervals up to the
// precision floor and throws precision_floor_reached beyond it.
inline int scalar_sign(const Scalar& x) {
    if (x.is_exact()) return sign(x.exact());
    return interval_sign(x.interval());
}

} // namespace hyperfuse
