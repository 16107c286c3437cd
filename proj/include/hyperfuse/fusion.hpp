#pragma once

// Fusion rings: nonnegative-integer structure constants with duality
// N(i,j,0) = delta_{j, inv(i)}. Perron-Frobenius dimensions are computed by
// characteristic-polynomial root isolation and promoted to exact quadratic
// scalars when the minimal polynomial allows; otherwise they stay certified
// intervals. A fusion ring becomes a hypergroup by the d-rescaling, and a
// hypergroup comes from a fusion ring exactly when the sqrt(w_i w_j / w_k)
// rescaling of its constants is a nonnegative-integer table.

#include <cstdint>
#include <string>
#include <vector>

#include "hyperfuse/hypergroup.hpp"
#include "hyperfuse/scalar.hpp"

namespace hyperfuse {

class FusionRing {
public:
    int size() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int i) const { return labels_[i]; }
    int inv(int i) const { return inv_[i]; }
    const std::vector<int>& involution() const { return inv_; }

    std::int64_t n(int i, int j, int k) const {
        return table_[(static_cast<size_t>(i) * labels_.size() + j) * labels_.size() + k];
    }
    const std::vector<std::int64_t>& table() const { return table_; }

    int index_of(const std::string& label) const {
        for (int i = 0; i < size(); ++i)
            if (labels_[i] == label) return i;
        return -1;
    }

private:
    FusionRing() = default;
    friend FusionRing validate_fusion_ring(std::vector<std::string>, std::vector<int>,
                                           std::vector<std::int64_t>);

    std::vector<std::string> labels_;
    std::vector<int> inv_;
    std::vector<std::int64_t> table_;
};

inline ValidationReport check_fusion_ring(const std::vector<std::string>& labels,
                                          const std::vector<int>& inv,
                                          const std::vector<std::int64_t>& table) {
    const size_t n = labels.size();
    if (n == 0) throw error("fusion ring needs at least the unit");
    if (inv.size() != n) throw error("involution list size mismatch");
    if (table.size() != n * n * n) throw error("constant table size mismatch");
    if (!detail::is_permutation(inv)) throw error("involution is not a permutation");
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (labels[i] == labels[j]) throw error("duplicate element label '" + labels[i] + "'");

    auto N = [&](int i, int j, int k) -> std::int64_t {
        return table[(static_cast<size_t>(i) * n + j) * n + k];
    };

    ValidationReport rep;
    auto add = [&](Violation::Kind k, std::vector<int> idx, std::string d = {}) {
        rep.violations.push_back({k, std::move(idx), std::move(d)});
    };

    if (inv[0] != 0) add(Violation::Kind::InvolutionFailure, {0}, "unit not self-dual");
    for (int i = 0; i < static_cast<int>(n); ++i)
        if (inv[inv[i]] != i)
            add(Violation::Kind::InvolutionFailure, {i}, "involution not self-inverse");

    for (int i = 0; i < static_cast<int>(n); ++i)
        for (int j = 0; j < static_cast<int>(n); ++j)
            for (int k = 0; k < static_cast<int>(n); ++k)
                if (N(i, j, k) < 0)
                    add(Violation::Kind::NegativeConstant, {i, j, k}, std::to_string(N(i, j, k)));

    for (int j = 0; j < static_cast<int>(n); ++j)
        for (int k = 0; k < static_cast<int>(n); ++k) {
            std::int64_t expect = (j == k) ? 1 : 0;
            if (N(0, j, k) != expect)
                add(Violation::Kind::UnitFailure, {0, j, k}, std::to_string(N(0, j, k)));
            if (N(j, 0, k) != expect)
                add(Violation::Kind::UnitFailure, {j, 0, k}, std::to_string(N(j, 0, k)));
        }

    for (int i = 0; i < static_cast<int>(n); ++i)
        for (int j = 0; j < static_cast<int>(n); ++j) {
            std::int64_t expect = (j == inv[i]) ? 1 : 0;
            if (N(i, j, 0) != expect)
                add(Violation::Kind::IdentityCoefficientViolation, {i, j},
                    "N(i,j,0) = " + std::to_string(N(i, j, 0)));
        }

    // Frobenius reciprocity N_ij^k = N_{k jbar}^i = N_{ibar k}^j = N_{j kbar}^{ibar}
    for (int i = 0; i < static_cast<int>(n); ++i)
        for (int j = 0; j < static_cast<int>(n); ++j)
            for (int k = 0; k < static_cast<int>(n); ++k) {
                std::int64_t v = N(i, j, k);
                if (v != N(k, inv[j], i) || v != N(inv[i], k, j) || v != N(j, inv[k], inv[i]))
                    add(Violation::Kind::ReciprocityFailure, {i, j, k});
            }

    for (int i = 0; i < static_cast<int>(n); ++i)
        for (int j = 0; j < static_cast<int>(n); ++j)
            for (int k = 0; k < static_cast<int>(n); ++k)
                if (N(i, j, k) != N(inv[j], inv[i], inv[k]))
                    add(Violation::Kind::StarCompatibilityFailure, {i, j, k});

    for (int i = 0; i < static_cast<int>(n); ++i)
        for (int j = 0; j < static_cast<int>(n); ++j)
            for (int l = 0; l < static_cast<int>(n); ++l)
                for (int k = 0; k < static_cast<int>(n); ++k) {
                    std::int64_t lhs = 0, rhs = 0;
                    for (int m = 0; m < static_cast<int>(n); ++m) {
                        lhs += N(i, j, m) * N(m, l, k);
                        rhs += N(j, l, m) * N(i, m, k);
                    }
                    if (lhs != rhs) add(Violation::Kind::AssociativityFailure, {i, j, l, k});
                }

    return rep;
}

inline FusionRing validate_fusion_ring(std::vector<std::string> labels, std::vector<int> inv,
                                       std::vector<std::int64_t> table) {
    ValidationReport rep = check_fusion_ring(labels, inv, table);
    if (!rep.ok()) throw validation_error(std::move(rep));
    FusionRing f;
    f.labels_ = std::move(labels);
    f.inv_ = std::move(inv);
    f.table_ = std::move(table);
    return f;
}

// ---------------------------------------------------------------------------
// Perron-Frobenius dimensions
// ---------------------------------------------------------------------------

struct DimensionVector {
    std::vector<Scalar> dims;
    Scalar global;          // D(F) = sum of d_i^2
    bool exact = false;     // every dim exact over one quadratic field
    std::int64_t radicand = 0; // that field, when exact
};

inline Mat<Rational> left_mult_matrix(const FusionRing& f, int i) {
    Mat<Rational> m(f.size(), std::vector<Rational>(f.size(), Rational(0)));
    for (int k = 0; k < f.size(); ++k)
        for (int j = 0; j < f.size(); ++j) m[k][j] = Rational(f.n(i, j, k));
    return m;
}

// d_i = spectral radius of L_i. Promotes to an exact QuadScalar when the
// minimal polynomial is quadratic (or linear); otherwise keeps a refinable
// certified interval. The whole vector is certified against the character
// property d_i d_j = sum_k N_ij^k d_k: exactly in exact mode, by interval
// containment otherwise.
inline DimensionVector fp_dimension(const FusionRing& f) {
    DimensionVector dv;
    dv.dims.reserve(f.size());
    std::vector<Poly<Rational>> minpolys; // squarefree charpolys, for refiners

    bool all_exact = true;
    std::int64_t rad = 0;
    for (int i = 0; i < f.size(); ++i) {
        Poly<Rational> p = squarefree_part(char_poly(left_mult_matrix(f, i)));
        auto roots = isolate_real_roots(p);
        if (roots.empty()) throw internal_inconsistency("no real eigenvalue for L_" + std::to_string(i));
        size_t pf = roots.size() - 1; // largest real root
        if (auto q = promote_root(p, roots, pf)) {
            try {
                rad = QuadScalar::merge_radicand(rad, q->radicand());
                dv.dims.emplace_back(*q);
            } catch (const field_mismatch&) {
                all_exact = false;
                dv.dims.emplace_back(root_scalar(p, roots[pf]));
            }
        } else {
            all_exact = false;
            dv.dims.emplace_back(root_scalar(p, roots[pf]));
        }
        minpolys.push_back(std::move(p));
    }

    dv.exact = all_exact;
    dv.radicand = all_exact ? rad : 0;

    if (dv.exact) {
        if (!dv.dims[0].exact().is_one())
            throw internal_inconsistency("d_0 != 1");
        for (int i = 0; i < f.size(); ++i) {
            const QuadScalar& d = dv.dims[i].exact();
            if (sign(d - QuadScalar(1)) < 0)
                throw internal_inconsistency("dimension below 1 at " + f.label(i));
            if (d != dv.dims[f.inv(i)].exact())
                throw internal_inconsistency("d_i != d_ibar at " + f.label(i));
        }
        for (int i = 0; i < f.size(); ++i)
            for (int j = 0; j < f.size(); ++j) {
                QuadScalar lhs = dv.dims[i].exact() * dv.dims[j].exact();
                QuadScalar rhs(0);
                for (int k = 0; k < f.size(); ++k)
                    if (f.n(i, j, k) != 0)
                        rhs += QuadScalar(Rational(f.n(i, j, k))) * dv.dims[k].exact();
                if (lhs != rhs)
                    throw internal_inconsistency("character property failed at (" + f.label(i) +
                                                 ", " + f.label(j) + ")");
            }
        QuadScalar g(0);
        for (const auto& d : dv.dims) g += d.exact() * d.exact();
        dv.global = Scalar(g);
        return dv;
    }

    // interval certification of the character property
    Rational tol = precision_floor() * 1024;
    if (tol > Rational(1, BigInt(1) << 100)) tol = Rational(1, BigInt(1) << 100);
    for (int i = 0; i < f.size(); ++i)
        for (int j = 0; j < f.size(); ++j) {
            Scalar rhs(0);
            for (int k = 0; k < f.size(); ++k)
                if (f.n(i, j, k) != 0) rhs = rhs + Scalar(Rational(f.n(i, j, k))) * dv.dims[k];
            IntervalScalar diff = (dv.dims[i] * dv.dims[j] - rhs).enclosure().refined(tol);
            if (diff.width() > tol)
                throw precision_floor_reached(
                    "cannot certify the character property at the configured floor");
            if (diff.lo() > 0 || diff.hi() < 0)
                throw internal_inconsistency("certified character-property violation at (" +
                                             f.label(i) + ", " + f.label(j) + ")");
        }
    Scalar g(0);
    for (const auto& d : dv.dims) g = g + d * d;
    dv.global = g;
    return dv;
}

// ---------------------------------------------------------------------------
// Fusion ring <-> hypergroup
// ---------------------------------------------------------------------------

// K_F with C_ij^k = (d_k / d_i d_j) N_ij^k and weights w_i = d_i^2.
// Requires exact dimensions; degree > 2 dimension data cannot be carried
// into an exact hypergroup table.
inline Hypergroup to_hypergroup(const FusionRing& f, const DimensionVector& dv) {
    if (!dv.exact)
        throw unsupported_field(
            "Perron-Frobenius dimensions leave the quadratic field; cannot build an exact hypergroup");
    const int n = f.size();
    std::vector<QuadScalar> table(static_cast<size_t>(n) * n * n, QuadScalar(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                std::int64_t nij = f.n(i, j, k);
                if (nij == 0) continue;
                table[(static_cast<size_t>(i) * n + j) * n + k] =
                    dv.dims[k].exact() / (dv.dims[i].exact() * dv.dims[j].exact()) *
                    QuadScalar(Rational(nij));
            }
    Hypergroup k = validate_hypergroup(f.labels(), f.involution(), std::move(table));
    WeightData wd = weights(k);
    for (int i = 0; i < n; ++i)
        if (wd.w[i] != dv.dims[i].exact() * dv.dims[i].exact())
            throw internal_inconsistency("weight != d^2 at " + f.label(i));
    if (wd.total != dv.global.exact())
        throw internal_inconsistency("D(K_F) != D(F)");
    return k;
}

inline Hypergroup to_hypergroup(const FusionRing& f) { return to_hypergroup(f, fp_dimension(f)); }

struct RingTestResult {
    bool passes = false;
    std::vector<std::int64_t> n_table; // recovered integers, on pass
    // first offending rescaled coefficient, on failure
    int i = -1, j = -1, k = -1;
    std::string witness;      // exact description, e.g. "sqrt(2)"
    double witness_approx = 0;
};

// Decides whether sqrt(w_i w_j / w_k) C_ij^k is a nonnegative integer for
// all i,j,k. The decision is exact: the square of each rescaled value is an
// exact scalar r, and the value is the integer m iff r == m^2. No precision
// floor is involved.
inline RingTestResult fusion_ring_test(const Hypergroup& kk) {
    WeightData wd = weights(kk);
    const int n = kk.size();
    RingTestResult res;
    res.n_table.assign(static_cast<size_t>(n) * n * n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                const QuadScalar& c = kk.c(i, j, k);
                if (c.is_zero()) continue;
                QuadScalar r = wd.w[i] * wd.w[j] / wd.w[k] * c * c;
                auto root = sqrt_in_quadratic(r);
                bool integral = false;
                if (root && root->is_rational() && denominator(root->as_rational()) == 1) {
                    res.n_table[(static_cast<size_t>(i) * n + j) * n + k] =
                        numerator(root->as_rational()).convert_to<std::int64_t>();
                    integral = true;
                }
                if (!integral) {
                    res.passes = false;
                    res.i = i;
                    res.j = j;
                    res.k = k;
                    if (root) {
                        res.witness = root->str();
                        res.witness_approx = root->to_double();
                    } else {
                        res.witness = "sqrt(" + r.str() + ")";
                        res.witness_approx = std::sqrt(r.to_double());
                    }
                    // pretty-print rational radicands as sqrt(m)
                    if (root && !root->is_rational() && root->rational_part() == 0 &&
                        root->radical_part() == 1)
                        res.witness = "sqrt(" + std::to_string(root->radicand()) + ")";
                    res.n_table.clear();
                    return res;
                }
            }
    res.passes = true;
    return res;
}

struct IndexResult {
    QuadScalar subnet_index; // D(K)/D(H)
    QuadScalar mu_index;     // mu * D(K)^2
};

inline IndexResult index_formulas(const QuadScalar& dk, const QuadScalar& dh,
                                  const QuadScalar& mu) {
    if (sign(dk) <= 0 || sign(dh) <= 0 || sign(mu) <= 0)
        throw error("index formulas need positive inputs");
    return {dk / dh, mu * dk * dk};
}

} // namespace hyperfuse
