#pragma once

// Character theory of commutative hypergroups and the Markov-chain reading
// of multiplication.
//
// Characters are the one-dimensional *-representations: row vectors that
// are simultaneous left eigenvectors of every left-multiplication matrix.
// A generic integer probe separates them; its characteristic polynomial is
// solved exactly over the working quadratic field when possible, otherwise
// the table is produced as certified intervals via spectral projectors.
// Only real character tables are supported; commutative instances that
// need complex characters are reported as unsupported.

#include <random>
#include <string>
#include <vector>

#include "hyperfuse/hypergroup.hpp"
#include "hyperfuse/quotient.hpp"
#include "hyperfuse/scalar.hpp"

namespace hyperfuse {

class not_commutative : public error {
public:
    not_commutative() : error("hypergroup is not commutative") {}
};

struct CharacterTable {
    const Hypergroup* parent = nullptr;
    bool exact = false;
    std::vector<std::vector<Scalar>> rows; // rows[m][i] = chi^m(c_i); row 0 trivial
};

namespace detail {

inline Poly<QuadScalar> conj_poly(const Poly<QuadScalar>& p) {
    std::vector<QuadScalar> c = p.c;
    for (auto& v : c) v = v.conj();
    return Poly<QuadScalar>(std::move(c));
}

inline Poly<Rational> lower_to_rational(const Poly<QuadScalar>& p) {
    std::vector<Rational> c(p.c.size());
    for (size_t i = 0; i < p.c.size(); ++i) c[i] = p.c[i].as_rational();
    return Poly<Rational>(std::move(c));
}

// exact value inside an isolated root location?
inline bool root_matches(const QuadScalar& v, const RootInterval& r) {
    if (r.exact()) return v == QuadScalar(r.lo);
    return sign(v - QuadScalar(r.lo)) > 0 && sign(v - QuadScalar(r.hi)) < 0;
}

} // namespace detail

// Simultaneous one-dimensional representations of a commutative hypergroup.
// Rows are ordered by decreasing probe eigenvalue, which puts the trivial
// character first.
inline CharacterTable character_table(const Hypergroup& kk) {
    if (!is_commutative(kk)) throw not_commutative();
    const int n = kk.size();

    std::vector<Mat<QuadScalar>> lmats;
    lmats.reserve(n);
    for (int i = 0; i < n; ++i) lmats.push_back(left_mult_matrix(kk, i));

    // probe x_t = sum t^i c_i with integer t; some t below the bound makes
    // the characteristic polynomial squarefree (characters are distinct
    // functionals, so only finitely many t collide).
    Mat<QuadScalar> m;
    Poly<QuadScalar> q;
    QuadScalar trivial_eig(0);
    bool separated = false;
    for (int t = 1; t <= 4 * n * n + 4 && !separated; ++t) {
        m = Mat<QuadScalar>(n, std::vector<QuadScalar>(n, QuadScalar(0)));
        QuadScalar tp(1);
        trivial_eig = QuadScalar(0);
        for (int i = 0; i < n; ++i) {
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c) m[r][c] += tp * lmats[i][r][c];
            trivial_eig += tp;
            tp *= QuadScalar(t);
        }
        q = char_poly(m);
        separated = poly_gcd(q, q.derivative()).degree() == 0;
    }
    if (!separated) throw internal_inconsistency("no separating probe found");

    auto roots = isolate_real_roots(q);
    if (static_cast<int>(roots.size()) < n)
        throw unsupported_field(
            "commutative algebra with complex characters; real tables only");

    CharacterTable ct;
    ct.parent = &kk;

    // try exact eigenvalues: roots of the rational norm polynomial that
    // promote to degree <= 2 and verify against q
    std::vector<QuadScalar> exact_eigs(n);
    bool all_exact = true;
    {
        Poly<Rational> norm_poly;
        try {
            norm_poly = kk.field_radicand() == 0
                            ? detail::lower_to_rational(q)
                            : detail::lower_to_rational(q * detail::conj_poly(q));
        } catch (const field_mismatch&) {
            throw internal_inconsistency("characteristic polynomial left the working field");
        }
        norm_poly = squarefree_part(norm_poly);
        auto nroots = isolate_real_roots(norm_poly);
        std::vector<QuadScalar> cands;
        for (size_t i = 0; i < nroots.size(); ++i)
            if (auto c = promote_root(norm_poly, nroots, i)) cands.push_back(*c);
        for (int r = 0; r < n && all_exact; ++r) {
            bool found = false;
            for (const QuadScalar& c : cands) {
                try {
                    if (detail::root_matches(c, roots[r]) && q.eval(c).is_zero()) {
                        exact_eigs[r] = c;
                        found = true;
                        break;
                    }
                } catch (const field_mismatch&) {
                    // candidate lives over an incompatible radicand
                }
            }
            all_exact = found;
        }
    }

    if (all_exact) {
        ct.exact = true;
        for (int r = n - 1; r >= 0; --r) { // descending eigenvalue
            Mat<QuadScalar> a = m;
            for (int i = 0; i < n; ++i) a[i][i] -= exact_eigs[r];
            auto basis = left_nullspace(a);
            if (basis.size() != 1)
                throw internal_inconsistency("eigenvalue of separating probe not simple");
            std::vector<QuadScalar>& v = basis[0];
            if (v[0].is_zero())
                throw internal_inconsistency("character with chi(c_0) = 0");
            std::vector<Scalar> row(n);
            for (int i = 0; i < n; ++i) row[i] = Scalar(v[i] / v[0]);
            ct.rows.push_back(std::move(row));
        }
        for (int i = 0; i < n; ++i)
            if (!ct.rows[0][i].exact().is_one())
                throw internal_inconsistency("leading character is not the trivial one");
        // exact invariants: multiplicativity and weighted orthogonality
        WeightData wd = weights(kk);
        for (int r = 0; r < n; ++r)
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    QuadScalar rhs(0);
                    for (int k = 0; k < n; ++k)
                        if (!kk.c(i, j, k).is_zero()) rhs += kk.c(i, j, k) * ct.rows[r][k].exact();
                    if (ct.rows[r][i].exact() * ct.rows[r][j].exact() != rhs)
                        throw internal_inconsistency("character multiplicativity fails");
                }
        for (int r = 0; r < n; ++r)
            for (int s = r + 1; s < n; ++s) {
                QuadScalar dot(0);
                for (int i = 0; i < n; ++i)
                    dot += wd.w[i] * ct.rows[r][i].exact() * ct.rows[s][i].exact();
                if (!dot.is_zero())
                    throw internal_inconsistency("character orthogonality fails");
            }
        return ct;
    }

    // interval mode: spectral projectors. chi^m is proportional to
    // e_0^T prod_{m' != m} (M - lambda_{m'} I), normalized at c_0.
    if (static_cast<int>(roots.size()) != n)
        throw unsupported_field("commutative algebra with complex characters; real tables only");

    int trivial_idx = -1;
    for (int r = 0; r < n; ++r)
        if (detail::root_matches(trivial_eig, roots[r])) trivial_idx = r;
    if (trivial_idx < 0)
        throw internal_inconsistency("trivial character eigenvalue not among isolated roots");

    std::vector<IntervalScalar> eig(n);
    for (int r = 0; r < n; ++r)
        eig[r] = (r == trivial_idx) ? IntervalScalar::point(trivial_eig.as_rational())
                                    : root_scalar(q, roots[r]);

    Mat<IntervalScalar> mi(n, std::vector<IntervalScalar>(n));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) mi[r][c] = IntervalScalar::of_quad(m[r][c]);

    ct.exact = false;
    std::vector<Scalar> trivial_row(n, Scalar(1));
    ct.rows.push_back(std::move(trivial_row));
    for (int r = n - 1; r >= 0; --r) {
        if (r == trivial_idx) continue;
        std::vector<IntervalScalar> u(n, IntervalScalar::point(Rational(0)));
        u[0] = IntervalScalar::point(Rational(1));
        for (int s = 0; s < n; ++s) {
            if (s == r) continue;
            std::vector<IntervalScalar> nu(n, IntervalScalar::point(Rational(0)));
            for (int c = 0; c < n; ++c) {
                IntervalScalar acc = IntervalScalar::point(Rational(0));
                for (int k = 0; k < n; ++k) acc = acc + u[k] * mi[k][c];
                nu[c] = acc - u[c] * eig[s];
            }
            u = std::move(nu);
        }
        std::vector<Scalar> row(n);
        row[0] = Scalar(1);
        for (int i = 1; i < n; ++i) row[i] = Scalar(u[i] / u[0]);
        ct.rows.push_back(std::move(row));
    }

    // certified invariants: every defect interval must contain zero
    Rational tol(1, BigInt(1) << 48);
    if (tol < precision_floor() * 1024) tol = precision_floor() * 1024;
    WeightData wd = weights(kk);
    for (int r = 0; r < n; ++r) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Scalar rhs(0);
                for (int k = 0; k < n; ++k)
                    if (!kk.c(i, j, k).is_zero())
                        rhs = rhs + Scalar(kk.c(i, j, k)) * ct.rows[r][k];
                IntervalScalar diff =
                    (ct.rows[r][i] * ct.rows[r][j] - rhs).enclosure().refined(tol);
                if (diff.width() > tol)
                    throw precision_floor_reached(
                        "cannot certify character multiplicativity at the configured floor");
                if (diff.lo() > 0 || diff.hi() < 0)
                    throw internal_inconsistency("certified multiplicativity violation");
            }
        for (int s = r + 1; s < n; ++s) {
            Scalar dot(0);
            for (int i = 0; i < n; ++i)
                dot = dot + Scalar(wd.w[i]) * ct.rows[r][i] * ct.rows[s][i];
            IntervalScalar d = dot.enclosure().refined(tol);
            if (d.width() > tol)
                throw precision_floor_reached(
                    "cannot certify character orthogonality at the configured floor");
            if (d.lo() > 0 || d.hi() < 0)
                throw internal_inconsistency("certified orthogonality violation");
        }
    }
    return ct;
}

// ---------------------------------------------------------------------------
// dual hypergroup
// ---------------------------------------------------------------------------

struct DualResult {
    bool is_hypergroup = false;
    Hypergroup dual; // valid when is_hypergroup
    // offending negative structure constant otherwise
    int m = -1, m2 = -1, m3 = -1;
    QuadScalar offending;
};

// Expands pointwise products of characters in the character basis. All
// structure constants nonnegative (plus the axioms) gives the dual
// hypergroup; a negative constant is a legitimate "not a hypergroup"
// outcome reported with its witness.
inline DualResult dual_hypergroup(const CharacterTable& ct) {
    if (!ct.exact)
        throw unsupported_field("dual hypergroup requires an exact character table");
    const Hypergroup& kk = *ct.parent;
    const int n = kk.size();

    Mat<QuadScalar> a(n, std::vector<QuadScalar>(n)); // a[i][t] = chi^t(c_i)
    for (int i = 0; i < n; ++i)
        for (int t = 0; t < n; ++t) a[i][t] = ct.rows[t][i].exact();

    std::vector<QuadScalar> table(static_cast<size_t>(n) * n * n, QuadScalar(0));
    for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) {
            std::vector<QuadScalar> y(n);
            for (int i = 0; i < n; ++i) y[i] = ct.rows[r][i].exact() * ct.rows[s][i].exact();
            auto coeffs = solve_unique(a, y);
            if (!coeffs)
                throw internal_inconsistency("character products do not decompose in characters");
            for (int t = 0; t < n; ++t)
                table[(static_cast<size_t>(r) * n + s) * n + t] = (*coeffs)[t];
        }

    // involution: chi -> chi o inv (equals chi itself for real tables, but
    // derived rather than assumed)
    std::vector<int> inv(n, -1);
    for (int r = 0; r < n; ++r) {
        std::vector<QuadScalar> conj_row(n);
        for (int i = 0; i < n; ++i) conj_row[i] = ct.rows[r][kk.inv(i)].exact();
        for (int s = 0; s < n && inv[r] < 0; ++s) {
            bool match = true;
            for (int i = 0; i < n && match; ++i) match = ct.rows[s][i].exact() == conj_row[i];
            if (match) inv[r] = s;
        }
        if (inv[r] < 0) throw internal_inconsistency("conjugate character missing from table");
    }

    DualResult res;
    for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s)
            for (int t = 0; t < n; ++t) {
                const QuadScalar& v = table[(static_cast<size_t>(r) * n + s) * n + t];
                if (sign(v) < 0) {
                    res.m = r;
                    res.m2 = s;
                    res.m3 = t;
                    res.offending = v;
                    return res;
                }
            }

    std::vector<std::string> labels(n);
    for (int t = 0; t < n; ++t) labels[t] = "chi" + std::to_string(t);
    res.dual = validate_hypergroup(std::move(labels), std::move(inv), std::move(table));
    res.is_hypergroup = true;
    return res;
}

// ---------------------------------------------------------------------------
// Markov chains
// ---------------------------------------------------------------------------

class reducible_error : public error {
public:
    explicit reducible_error(std::vector<std::vector<int>> closed)
        : error("chain is reducible (" + std::to_string(closed.size()) +
                " closed communicating class(es))"),
          closed_classes(std::move(closed)) {}
    std::vector<std::vector<int>> closed_classes;
};

struct MarkovChain {
    const Hypergroup* parent = nullptr;
    AlgebraElement probe;
    Mat<QuadScalar> t; // t[k][m] = coefficient of c_m in c_k * probe
};

// Row-stochastic transition matrix of right multiplication by a convex
// probe. Haar stationarity pi T = pi with pi_k = w_k / D is asserted
// exactly.
inline MarkovChain transition_matrix(const Hypergroup& kk, const AlgebraElement& probe) {
    if (probe.parent != &kk) throw error("probe not an element of this hypergroup");
    if (!is_convex(probe)) throw error("probe must lie in Conv(K)");
    MarkovChain mc{&kk, probe, {}};
    mc.t.assign(kk.size(), std::vector<QuadScalar>(kk.size(), QuadScalar(0)));
    for (int k = 0; k < kk.size(); ++k) {
        AlgebraElement row = multiply(basis_element(kk, k), probe);
        QuadScalar s(0);
        for (int m = 0; m < kk.size(); ++m) {
            if (sign(row.coeffs[m]) < 0)
                throw internal_inconsistency("negative transition probability");
            mc.t[k][m] = row.coeffs[m];
            s += row.coeffs[m];
        }
        if (!s.is_one()) throw internal_inconsistency("transition row does not sum to 1");
    }
    WeightData wd = weights(kk);
    for (int m = 0; m < kk.size(); ++m) {
        QuadScalar acc(0);
        for (int k = 0; k < kk.size(); ++k) acc += wd.w[k] / wd.total * mc.t[k][m];
        if (acc != wd.w[m] / wd.total)
            throw internal_inconsistency("Haar distribution is not stationary");
    }
    return mc;
}

namespace detail {

inline void reach(const Mat<QuadScalar>& t, int start, bool transposed, std::vector<bool>& seen) {
    std::vector<int> stack{start};
    seen.assign(t.size(), false);
    seen[start] = true;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u = 0; u < static_cast<int>(t.size()); ++u) {
            const QuadScalar& w = transposed ? t[u][v] : t[v][u];
            if (!seen[u] && sign(w) > 0) {
                seen[u] = true;
                stack.push_back(u);
            }
        }
    }
}

} // namespace detail

inline bool is_irreducible(const MarkovChain& mc) {
    std::vector<bool> fwd, bwd;
    detail::reach(mc.t, 0, false, fwd);
    detail::reach(mc.t, 0, true, bwd);
    for (size_t i = 0; i < mc.t.size(); ++i)
        if (!fwd[i] || !bwd[i]) return false;
    return true;
}

inline std::vector<std::vector<int>> closed_communicating_classes(const MarkovChain& mc) {
    const int n = static_cast<int>(mc.t.size());
    // communicating classes: mutually reachable states
    std::vector<std::vector<bool>> reach_from(n);
    for (int i = 0; i < n; ++i) detail::reach(mc.t, i, false, reach_from[i]);
    std::vector<int> cls(n, -1);
    int next = 0;
    for (int i = 0; i < n; ++i) {
        if (cls[i] >= 0) continue;
        cls[i] = next;
        for (int j = i + 1; j < n; ++j)
            if (reach_from[i][j] && reach_from[j][i]) cls[j] = next;
        ++next;
    }
    std::vector<std::vector<int>> classes(next);
    for (int i = 0; i < n; ++i) classes[cls[i]].push_back(i);
    std::vector<std::vector<int>> closed;
    for (const auto& c : classes) {
        bool leaves = false;
        for (int i : c)
            for (int j = 0; j < n && !leaves; ++j)
                if (cls[j] != cls[i] && sign(mc.t[i][j]) > 0) leaves = true;
        if (!leaves) closed.push_back(c);
    }
    return closed;
}

// Exact stationary distribution of an irreducible chain; equals the Haar
// weights w_k / D, which is asserted.
inline std::vector<QuadScalar> stationary_distribution(const MarkovChain& mc) {
    if (!is_irreducible(mc)) throw reducible_error(closed_communicating_classes(mc));
    const int n = static_cast<int>(mc.t.size());
    Mat<QuadScalar> a(n + 1, std::vector<QuadScalar>(n, QuadScalar(0)));
    std::vector<QuadScalar> b(n + 1, QuadScalar(0));
    for (int m = 0; m < n; ++m) {
        for (int k = 0; k < n; ++k) a[m][k] = mc.t[k][m];
        a[m][m] -= QuadScalar(1);
    }
    for (int k = 0; k < n; ++k) a[n][k] = QuadScalar(1);
    b[n] = QuadScalar(1);
    auto pi = solve_unique(a, b);
    if (!pi) throw internal_inconsistency("stationary system has no unique solution");
    WeightData wd = weights(*mc.parent);
    for (int k = 0; k < n; ++k)
        if ((*pi)[k] != wd.w[k] / wd.total)
            throw internal_inconsistency("stationary distribution differs from Haar weights");
    return *pi;
}

struct WalkResult {
    std::vector<int> trajectory;     // length steps + 1, starts at `start`
    std::vector<Rational> empirical; // occupation frequency over steps 1..steps
    QuadScalar tv_to_haar;           // total variation distance, exact
};

// Deterministic simulation: one mt19937_64 draw per step, compared as the
// exact rational u / 2^64 against the cumulative row thresholds.
inline WalkResult simulate_walk(const MarkovChain& mc, int start, long steps,
                                std::uint64_t seed) {
    const int n = static_cast<int>(mc.t.size());
    if (steps < 1) throw error("walk needs at least one step");
    if (start < 0 || start >= n) throw error("walk start index out of range");
    Mat<QuadScalar> cum = mc.t;
    for (int k = 0; k < n; ++k)
        for (int m = 1; m < n; ++m) cum[k][m] += cum[k][m - 1];

    std::mt19937_64 rng(seed);
    BigInt two64 = BigInt(1) << 64;
    WalkResult res;
    res.trajectory.reserve(steps + 1);
    res.trajectory.push_back(start);
    std::vector<long> counts(n, 0);
    int state = start;
    for (long s = 0; s < steps; ++s) {
        Rational u(BigInt(rng()), two64);
        QuadScalar uq(u);
        int next = n - 1;
        for (int m = 0; m < n; ++m)
            if (sign(cum[state][m] - uq) > 0) {
                next = m;
                break;
            }
        state = next;
        res.trajectory.push_back(state);
        ++counts[state];
    }
    res.empirical.resize(n);
    for (int k = 0; k < n; ++k) res.empirical[k] = Rational(counts[k], steps);

    WeightData wd = weights(*mc.parent);
    QuadScalar tv(0);
    for (int k = 0; k < n; ++k) tv += abs(QuadScalar(res.empirical[k]) - wd.w[k] / wd.total);
    res.tv_to_haar = tv / QuadScalar(2);
    return res;
}

} // namespace hyperfuse
