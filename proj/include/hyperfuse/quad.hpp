#pragma once

// Exact arithmetic in a real quadratic field Q(sqrt(D)).
//
// A QuadScalar is a + b*sqrt(d) with rational a, b and a square-free
// radicand d >= 0. d == 0 means the value is rational (then b == 0).
// The representation is canonical, so equality is coefficient equality
// and the sign of any value is decidable by rationalizing.

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "hyperfuse/error.hpp"
#include "hyperfuse/rational.hpp"

namespace hyperfuse {

namespace detail {

// Writes n = f*f*rest with rest square-free (complete for square factors
// up to 10^12). Returns {f, rest}.
inline std::pair<BigInt, BigInt> extract_square_part(BigInt n) {
    BigInt f = 1;
    BigInt r;
    if (is_perfect_square(n, r)) return {r, BigInt(1)};
    for (BigInt p = 2; p * p <= n && p <= 1000000; ++p) {
        BigInt pp = p * p;
        while (n % pp == 0) {
            n /= pp;
            f *= p;
        }
        if (is_perfect_square(n, r)) return {f * r, BigInt(1)};
    }
    return {f, n};
}

} // namespace detail

class QuadScalar {
public:
    QuadScalar() : a_(0), b_(0), d_(0) {}
    QuadScalar(int v) : a_(v), b_(0), d_(0) {} // NOLINT: implicit on purpose
    QuadScalar(Rational v) : a_(std::move(v)), b_(0), d_(0) {}

    // a + b*sqrt(d); d is reduced to square-free form.
    QuadScalar(Rational a, Rational b, std::int64_t d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
        if (d < 0) throw error("negative radicand");
        reduce_radicand();
    }

    // sqrt(n) for a nonnegative integer n.
    static QuadScalar sqrt_of(std::int64_t n) {
        if (n < 0) throw error("negative radicand");
        return QuadScalar(Rational(0), Rational(1), n);
    }

    const Rational& rational_part() const { return a_; }
    const Rational& radical_part() const { return b_; }
    std::int64_t radicand() const { return d_; }

    bool is_rational() const { return d_ == 0; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_one() const { return d_ == 0 && a_ == 1; }

    const Rational& as_rational() const {
        if (!is_rational()) throw field_mismatch("value " + str() + " is irrational");
        return a_;
    }

    // Radicand both operands can live over, or throws field_mismatch.
    static std::int64_t merge_radicand(std::int64_t x, std::int64_t y) {
        if (x == 0) return y;
        if (y == 0) return x;
        if (x != y)
            throw field_mismatch("incompatible radicands sqrt(" + std::to_string(x) +
                                 ") and sqrt(" + std::to_string(y) + ")");
        return x;
    }

    friend QuadScalar operator+(const QuadScalar& x, const QuadScalar& y) {
        std::int64_t d = merge_radicand(x.d_, y.d_);
        return make(x.a_ + y.a_, x.b_ + y.b_, d);
    }
    friend QuadScalar operator-(const QuadScalar& x, const QuadScalar& y) {
        std::int64_t d = merge_radicand(x.d_, y.d_);
        return make(x.a_ - y.a_, x.b_ - y.b_, d);
    }
    friend QuadScalar operator-(const QuadScalar& x) { return make(-x.a_, -x.b_, x.d_); }
    friend QuadScalar operator*(const QuadScalar& x, const QuadScalar& y) {
        std::int64_t d = merge_radicand(x.d_, y.d_);
        return make(x.a_ * y.a_ + x.b_ * y.b_ * d, x.a_ * y.b_ + x.b_ * y.a_, d);
    }
    friend QuadScalar operator/(const QuadScalar& x, const QuadScalar& y) {
        if (y.is_zero()) throw division_by_zero();
        std::int64_t d = merge_radicand(x.d_, y.d_);
        // multiply by the conjugate of y; the norm is rational and nonzero
        Rational n = y.a_ * y.a_ - y.b_ * y.b_ * d;
        if (n == 0) throw internal_inconsistency("zero norm for nonzero quadratic scalar");
        return make((x.a_ * y.a_ - x.b_ * y.b_ * d) / n, (x.b_ * y.a_ - x.a_ * y.b_) / n, d);
    }

    QuadScalar& operator+=(const QuadScalar& y) { return *this = *this + y; }
    QuadScalar& operator-=(const QuadScalar& y) { return *this = *this - y; }
    QuadScalar& operator*=(const QuadScalar& y) { return *this = *this * y; }
    QuadScalar& operator/=(const QuadScalar& y) { return *this = *this / y; }

    friend bool operator==(const QuadScalar& x, const QuadScalar& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
    }
    friend bool operator!=(const QuadScalar& x, const QuadScalar& y) { return !(x == y); }

    // Exact sign: rationalize instead of approximating.
    friend int sign(const QuadScalar& x) {
        int sa = sign(x.a_);
        int sb = sign(x.b_);
        if (sb == 0) return sa;
        if (sa == 0) return sb;
        if (sa == sb) return sa;
        // opposite signs: compare a^2 against b^2 d
        int sq = sign(x.a_ * x.a_ - x.b_ * x.b_ * x.d_);
        return sq == 0 ? 0 : sq * sa;
    }

    friend bool operator<(const QuadScalar& x, const QuadScalar& y) { return sign(x - y) < 0; }
    friend bool operator<=(const QuadScalar& x, const QuadScalar& y) { return sign(x - y) <= 0; }
    friend bool operator>(const QuadScalar& x, const QuadScalar& y) { return sign(x - y) > 0; }
    friend bool operator>=(const QuadScalar& x, const QuadScalar& y) { return sign(x - y) >= 0; }

    QuadScalar conj() const { return make(a_, -b_, d_); }

    friend QuadScalar abs(const QuadScalar& x) { return sign(x) < 0 ? -x : x; }

    // Rational upper bound on |value|.
    Rational magnitude_bound() const {
        if (d_ == 0) return rat_abs(a_);
        return rat_abs(a_) + rat_abs(b_) * Rational(isqrt(BigInt(d_)) + 1);
    }

    double to_double() const {
        double v = hyperfuse::to_double(a_);
        if (d_ != 0) v += hyperfuse::to_double(b_) * std::sqrt(static_cast<double>(d_));
        return v;
    }

    // Canonical literal, e.g. "-5/3" or "(2-1*sqrt(3))/1".
    std::string str() const {
        if (b_ == 0) return to_string(a_);
        BigInt r = boost::multiprecision::lcm(denominator(a_), denominator(b_));
        BigInt p = numerator(a_) * (r / denominator(a_));
        BigInt q = numerator(b_) * (r / denominator(b_));
        BigInt qa = q < 0 ? BigInt(-q) : q;
        std::string s = "(" + p.str();
        s += (q < 0) ? "-" : "+";
        s += qa.str();
        s += "*sqrt(" + std::to_string(d_) + "))/" + r.str();
        return s;
    }

private:
    static QuadScalar make(Rational a, Rational b, std::int64_t d) {
        QuadScalar q;
        q.a_ = std::move(a);
        q.b_ = std::move(b);
        q.d_ = (q.b_ == 0) ? 0 : d;
        return q;
    }

    void reduce_radicand() {
        if (b_ == 0 || d_ == 0) { // b*sqrt(0) == 0
            b_ = 0;
            d_ = 0;
            return;
        }
        auto [f, rest] = detail::extract_square_part(BigInt(d_));
        if (rest > BigInt(INT64_MAX)) throw error("radicand too large");
        b_ *= Rational(f);
        d_ = rest.convert_to<std::int64_t>();
        if (d_ == 1) {
            a_ += b_;
            b_ = 0;
            d_ = 0;
        }
    }

    Rational a_, b_;
    std::int64_t d_;
};

// Exact square root within a quadratic field, when one exists.
// The result may live over a different radicand than x (e.g. sqrt of a
// rational); callers decide whether that radicand is acceptable.
inline std::optional<QuadScalar> sqrt_in_quadratic(const QuadScalar& x) {
    if (sign(x) < 0) return std::nullopt;
    if (x.is_zero()) return QuadScalar(0);
    if (x.is_rational()) {
        // sqrt(p/q) = sqrt(p*q)/q
        const Rational& r = x.as_rational();
        BigInt pq = numerator(r) * denominator(r);
        auto [f, rest] = detail::extract_square_part(pq);
        if (rest > BigInt(INT64_MAX)) return std::nullopt;
        Rational coeff(f, denominator(r));
        if (rest == 1) return QuadScalar(coeff);
        return QuadScalar(Rational(0), coeff, rest.convert_to<std::int64_t>());
    }
    // x = a + b*sqrt(d): a root p + q*sqrt(d) needs p^2 + q^2 d = a and 2pq = b,
    // so p^2 is a root of y^2 - a y + b^2 d / 4, which must be rational square.
    const Rational& a = x.rational_part();
    const Rational& b = x.radical_part();
    Rational disc = a * a - b * b * Rational(x.radicand());
    Rational m;
    if (!rational_sqrt(disc, m)) return std::nullopt;
    for (const Rational& cand : {Rational((a + m) / 2), Rational((a - m) / 2)}) {
        Rational p;
        if (!rational_sqrt(cand, p)) continue;
        if (p == 0) continue;
        Rational q = b / (2 * p);
        QuadScalar root(p, q, x.radicand());
        if (root * root == x) return sign(root) >= 0 ? root : -root;
    }
    return std::nullopt;
}

namespace detail {

struct ScalarLexer {
    std::string_view text;
    size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c, const char* what) {
        if (!eat(c)) fail(std::string("expected '") + c + "' " + what);
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw parse_error(msg, 1, static_cast<int>(pos) + 1);
    }
    BigInt digits() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
        if (pos == start) fail("expected digits");
        return BigInt(std::string(text.substr(start, pos - start)));
    }
    BigInt sint() {
        skip_ws();
        bool neg = false;
        if (eat('-')) neg = true;
        else eat('+');
        BigInt v = digits();
        return neg ? BigInt(-v) : v;
    }
    void keyword(const char* kw) {
        skip_ws();
        std::string_view k(kw);
        if (text.substr(pos, k.size()) != k) fail(std::string("expected '") + kw + "'");
        pos += k.size();
    }
    bool at_end() {
        skip_ws();
        return pos == text.size();
    }
};

} // namespace detail

// Parses the exact scalar literal grammar
//   scalar := sint | sint "/" uint | "(" sint (("+"|"-") uint "*" "sqrt(" uint ")")? ")" "/" uint
// and returns the canonical value. If field_radicand is given, a mismatching
// (reduced) radicand in the literal is rejected.
inline QuadScalar parse_scalar(std::string_view text,
                               std::optional<std::int64_t> field_radicand = std::nullopt) {
    detail::ScalarLexer lx{text};
    QuadScalar result;
    lx.skip_ws();
    if (lx.pos < text.size() && text[lx.pos] == '(') {
        lx.expect('(', "at start of quadratic literal");
        BigInt p = lx.sint();
        BigInt q = 0;
        BigInt rad = 0;
        int s = 1;
        lx.skip_ws();
        if (lx.pos < text.size() && (text[lx.pos] == '+' || text[lx.pos] == '-')) {
            s = text[lx.pos] == '-' ? -1 : 1;
            ++lx.pos;
            q = lx.digits();
            lx.expect('*', "before sqrt");
            lx.keyword("sqrt");
            lx.expect('(', "after sqrt");
            rad = lx.digits();
            lx.expect(')', "after radicand");
        }
        lx.expect(')', "closing quadratic literal");
        lx.expect('/', "before denominator");
        BigInt r = lx.digits();
        if (r == 0) lx.fail("zero denominator");
        if (rad > BigInt(INT64_MAX)) lx.fail("radicand too large");
        result = QuadScalar(Rational(p, r), Rational(s * q, r), rad.convert_to<std::int64_t>());
    } else {
        BigInt p = lx.sint();
        if (lx.eat('/')) {
            BigInt r = lx.digits();
            if (r == 0) lx.fail("zero denominator");
            result = QuadScalar(Rational(p, r));
        } else {
            result = QuadScalar(Rational(p));
        }
    }
    if (!lx.at_end()) lx.fail("trailing characters after scalar");
    if (field_radicand && result.radicand() != 0 && result.radicand() != *field_radicand)
        throw field_mismatch("literal radicand sqrt(" + std::to_string(result.radicand()) +
                             ") does not match declared field sqrt(" +
                             std::to_string(*field_radicand) + ")");
    return result;
}

} // namespace hyperfuse
