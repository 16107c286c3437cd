#pragma once

// Finite hypergroups with exact structure constants: axiom validation,
// the *-algebra CK, weights, Haar element, and the Frobenius identities.
//
// A table entry C(i,j,k) is the coefficient of c_k in c_i * c_j. Axioms:
// nonnegativity, unit row sums, identity support C(i,j,0) > 0 iff j = inv(i),
// unit element c_0, involution compatibility and associativity. Instances
// are immutable once validated; every operation here is a pure function.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "hyperfuse/linalg.hpp"
#include "hyperfuse/quad.hpp"

namespace hyperfuse {

struct Violation {
    enum class Kind {
        InvolutionFailure,
        NegativeConstant,
        RowSumNotOne,
        UnitFailure,
        IdentitySupportViolation,
        StarCompatibilityFailure,
        AssociativityFailure,
        // fusion-ring specific
        IdentityCoefficientViolation,
        ReciprocityFailure,
    };
    Kind kind;
    std::vector<int> idx;
    std::string detail;

    static const char* kind_name(Kind k) {
        switch (k) {
            case Kind::InvolutionFailure: return "InvolutionFailure";
            case Kind::NegativeConstant: return "NegativeConstant";
            case Kind::RowSumNotOne: return "RowSumNotOne";
            case Kind::UnitFailure: return "UnitFailure";
            case Kind::IdentitySupportViolation: return "IdentitySupportViolation";
            case Kind::StarCompatibilityFailure: return "StarCompatibilityFailure";
            case Kind::AssociativityFailure: return "AssociativityFailure";
            case Kind::IdentityCoefficientViolation: return "IdentityCoefficientViolation";
            case Kind::ReciprocityFailure: return "ReciprocityFailure";
        }
        return "?";
    }

    std::string str() const {
        std::string s = kind_name(kind);
        s += "(";
        for (size_t t = 0; t < idx.size(); ++t) s += (t ? "," : "") + std::to_string(idx[t]);
        s += ")";
        if (!detail.empty()) s += ": " + detail;
        return s;
    }

    friend bool operator==(const Violation& a, const Violation& b) {
        return a.kind == b.kind && a.idx == b.idx;
    }
    friend bool operator<(const Violation& a, const Violation& b) {
        if (a.kind != b.kind) return a.kind < b.kind;
        return a.idx < b.idx;
    }
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }

    std::string summary(size_t max_items = 8) const {
        if (ok()) return "valid";
        std::string s = std::to_string(violations.size()) + " axiom violation(s): ";
        for (size_t i = 0; i < violations.size() && i < max_items; ++i)
            s += (i ? "; " : "") + violations[i].str();
        if (violations.size() > max_items) s += "; ...";
        return s;
    }
};

class validation_error : public error {
public:
    explicit validation_error(ValidationReport r)
        : error(r.summary()), report_(std::move(r)) {}
    const ValidationReport& report() const { return report_; }

private:
    ValidationReport report_;
};

namespace detail {

inline bool is_permutation(const std::vector<int>& p) {
    std::vector<bool> seen(p.size(), false);
    for (int v : p) {
        if (v < 0 || v >= static_cast<int>(p.size()) || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

} // namespace detail

class Hypergroup {
public:
    // Empty placeholder; real instances come only from validate_hypergroup.
    Hypergroup() = default;

    int size() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int i) const { return labels_[i]; }
    int inv(int i) const { return inv_[i]; }
    const std::vector<int>& involution() const { return inv_; }
    std::int64_t field_radicand() const { return radicand_; }

    const QuadScalar& c(int i, int j, int k) const {
        return table_[(static_cast<size_t>(i) * labels_.size() + j) * labels_.size() + k];
    }
    const std::vector<QuadScalar>& table() const { return table_; }

    int index_of(const std::string& label) const {
        for (int i = 0; i < size(); ++i)
            if (labels_[i] == label) return i;
        return -1;
    }

    bool same_structure(const Hypergroup& o) const {
        return inv_ == o.inv_ && table_ == o.table_;
    }

private:
    friend Hypergroup validate_hypergroup(std::vector<std::string>, std::vector<int>,
                                          std::vector<QuadScalar>);

    std::vector<std::string> labels_;
    std::vector<int> inv_;
    std::vector<QuadScalar> table_;
    std::int64_t radicand_ = 0;
};

// Full axiom check; reports every violated axiom with its indices, in a
// fixed order. Structural defects (wrong sizes, non-permutation maps,
// mixed fields) throw instead, since the table cannot even be addressed.
inline ValidationReport check_hypergroup(const std::vector<std::string>& labels,
                                         const std::vector<int>& inv,
                                         const std::vector<QuadScalar>& table) {
    const size_t n = labels.size();
    if (n == 0) throw error("hypergroup needs at least the identity element");
    if (inv.size() != n) throw error("involution list size mismatch");
    if (table.size() != n * n * n) throw error("constant table size mismatch");
    if (!detail::is_permutation(inv)) throw error("involution is not a permutation");
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (labels[i] == labels[j]) throw error("duplicate element label '" + labels[i] + "'");

    std::int64_t rad = 0;
    for (const QuadScalar& v : table)
        rad = QuadScalar::merge_radicand(rad, v.radicand()); // throws field_mismatch

    auto C = [&](int i, int j, int k) -> const QuadScalar& {
        return table[(static_cast<size_t>(i) * n + j) * n + k];
    };

    ValidationReport rep;
    auto add = [&](Violation::Kind k, std::vector<int> idx, std::string d = {}) {
        rep.violations.push_back({k, std::move(idx), std::move(d)});
    };

    if (inv[0] != 0) add(Violation::Kind::InvolutionFailure, {0}, "identity not self-adjoint");
    for (int i = 0; i < static_cast<int>(n); ++i)
        if (inv[inv[i]] != i)
            add(Violation::Kind::InvolutionFailure, {i}, "involution not self-inverse");

    for (int i = 0; i < static_cast<int>(n); ++i)
        for (int j = 0; j < static_cast<int>(n); ++j)
            for (int k = 0; k < static_cast<int>(n); ++k)
                if (sign(C(i, j, k)) < 0)
                    add(Violation::Kind::NegativeConstant, {i, j, k}, C(i, j, k).str());

    for (int i = 0; i < static_cast<int>(n); ++i)
        for (int j = 0; j < static_cast<int>(n); ++j) {
            QuadScalar s(0);
            for (int k = 0; k < static_cast<int>(n); ++k) s += C(i, j, k);
            if (!s.is_one())
                add(Violation::Kind::RowSumNotOne, {i, j}, "sum = " + s.str());
        }

    for (int j = 0; j < static_cast<int>(n); ++j)
        for (int k = 0; k < static_cast<int>(n); ++k) {
            QuadScalar expect(j == k ? 1 : 0);
            if (C(0, j, k) != expect)
                add(Violation::Kind::UnitFailure, {0, j, k}, C(0, j, k).str());
            if (C(j, 0, k) != expect)
                add(Violation::Kind::UnitFailure, {j, 0, k}, C(j, 0, k).str());
        }

    for (int i = 0; i < static_cast<int>(n); ++i)
        for (int j = 0; j < static_cast<int>(n); ++j) {
            bool pos = sign(C(i, j, 0)) > 0;
            if (pos != (j == inv[i]))
                add(Violation::Kind::IdentitySupportViolation, {i, j},
                    pos ? "identity in support of off-dual product"
                        : "identity missing from dual product");
            if (C(i, j, 0) != C(j, i, 0))
                add(Violation::Kind::IdentitySupportViolation, {i, j},
                    "identity coefficient not symmetric");
        }

    for (int i = 0; i < static_cast<int>(n); ++i)
        for (int j = 0; j < static_cast<int>(n); ++j)
            for (int k = 0; k < static_cast<int>(n); ++k)
                if (C(i, j, k) != C(inv[j], inv[i], inv[k]))
                    add(Violation::Kind::StarCompatibilityFailure, {i, j, k});

    for (int i = 0; i < static_cast<int>(n); ++i)
        for (int j = 0; j < static_cast<int>(n); ++j)
            for (int l = 0; l < static_cast<int>(n); ++l)
                for (int k = 0; k < static_cast<int>(n); ++k) {
                    QuadScalar lhs(0), rhs(0);
                    for (int m = 0; m < static_cast<int>(n); ++m) {
                        lhs += C(i, j, m) * C(m, l, k);
                        rhs += C(j, l, m) * C(i, m, k);
                    }
                    if (lhs != rhs)
                        add(Violation::Kind::AssociativityFailure, {i, j, l, k});
                }

    return rep;
}

inline Hypergroup validate_hypergroup(std::vector<std::string> labels, std::vector<int> inv,
                                      std::vector<QuadScalar> table) {
    ValidationReport rep = check_hypergroup(labels, inv, table);
    if (!rep.ok()) throw validation_error(std::move(rep));
    Hypergroup k;
    k.labels_ = std::move(labels);
    k.inv_ = std::move(inv);
    k.table_ = std::move(table);
    k.radicand_ = 0;
    for (const QuadScalar& v : k.table_)
        k.radicand_ = QuadScalar::merge_radicand(k.radicand_, v.radicand());
    return k;
}

// ---------------------------------------------------------------------------
// The algebra CK
// ---------------------------------------------------------------------------

struct AlgebraElement {
    const Hypergroup* parent = nullptr;
    std::vector<QuadScalar> coeffs;

    friend bool operator==(const AlgebraElement& x, const AlgebraElement& y) {
        return x.coeffs == y.coeffs;
    }
};

inline AlgebraElement zero_element(const Hypergroup& k) {
    return {&k, std::vector<QuadScalar>(k.size(), QuadScalar(0))};
}

inline AlgebraElement basis_element(const Hypergroup& k, int i) {
    AlgebraElement e = zero_element(k);
    e.coeffs[i] = QuadScalar(1);
    return e;
}

inline AlgebraElement make_element(const Hypergroup& k, std::vector<QuadScalar> coeffs) {
    if (static_cast<int>(coeffs.size()) != k.size())
        throw error("coefficient vector length mismatch");
    return {&k, std::move(coeffs)};
}

inline void require_same_parent(const AlgebraElement& x, const AlgebraElement& y) {
    if (x.parent != y.parent) throw error("algebra elements from different hypergroups");
}

inline AlgebraElement operator+(const AlgebraElement& x, const AlgebraElement& y) {
    require_same_parent(x, y);
    AlgebraElement z = x;
    for (size_t i = 0; i < z.coeffs.size(); ++i) z.coeffs[i] += y.coeffs[i];
    return z;
}

inline AlgebraElement operator-(const AlgebraElement& x, const AlgebraElement& y) {
    require_same_parent(x, y);
    AlgebraElement z = x;
    for (size_t i = 0; i < z.coeffs.size(); ++i) z.coeffs[i] -= y.coeffs[i];
    return z;
}

inline AlgebraElement scale(const QuadScalar& t, const AlgebraElement& x) {
    AlgebraElement z = x;
    for (auto& c : z.coeffs) c *= t;
    return z;
}

// Bilinear extension of the structure constants.
inline AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) {
    require_same_parent(x, y);
    const Hypergroup& k = *x.parent;
    AlgebraElement z = zero_element(k);
    for (int i = 0; i < k.size(); ++i) {
        if (x.coeffs[i].is_zero()) continue;
        for (int j = 0; j < k.size(); ++j) {
            if (y.coeffs[j].is_zero()) continue;
            QuadScalar f = x.coeffs[i] * y.coeffs[j];
            for (int m = 0; m < k.size(); ++m) {
                const QuadScalar& c = k.c(i, j, m);
                if (!c.is_zero()) z.coeffs[m] += f * c;
            }
        }
    }
    return z;
}

// Coefficients here are real, so star only permutes the basis.
inline AlgebraElement star(const AlgebraElement& x) {
    const Hypergroup& k = *x.parent;
    AlgebraElement z = zero_element(k);
    for (int i = 0; i < k.size(); ++i) z.coeffs[k.inv(i)] = x.coeffs[i];
    return z;
}

// Normalized trace: the c_0 coefficient.
inline const QuadScalar& trace(const AlgebraElement& x) { return x.coeffs[0]; }

inline bool is_convex(const AlgebraElement& x) {
    QuadScalar s(0);
    for (const auto& c : x.coeffs) {
        if (sign(c) < 0) return false;
        s += c;
    }
    return s.is_one();
}

// Indices with strictly positive coefficient (the support of a convex
// combination).
inline std::vector<int> support(const AlgebraElement& x) {
    std::vector<int> s;
    for (int i = 0; i < static_cast<int>(x.coeffs.size()); ++i)
        if (sign(x.coeffs[i]) > 0) s.push_back(i);
    return s;
}

inline std::vector<int> support_nonzero(const AlgebraElement& x) {
    std::vector<int> s;
    for (int i = 0; i < static_cast<int>(x.coeffs.size()); ++i)
        if (!x.coeffs[i].is_zero()) s.push_back(i);
    return s;
}

// ---------------------------------------------------------------------------
// Weights, Haar element, Frobenius identities
// ---------------------------------------------------------------------------

struct WeightData {
    std::vector<QuadScalar> w; // w[i] = 1 / C(i, inv(i), 0), w[0] = 1
    QuadScalar total;          // D(K)
};

inline WeightData weights(const Hypergroup& k) {
    WeightData wd;
    wd.w.reserve(k.size());
    wd.total = QuadScalar(0);
    for (int i = 0; i < k.size(); ++i) {
        wd.w.push_back(QuadScalar(1) / k.c(i, k.inv(i), 0));
        wd.total += wd.w.back();
    }
    for (int i = 0; i < k.size(); ++i) {
        if (wd.w[i] != wd.w[k.inv(i)])
            throw internal_inconsistency("weight not involution-invariant at " + std::to_string(i));
        if (sign(wd.w[i] - QuadScalar(1)) < 0)
            throw internal_inconsistency("weight below 1 at " + std::to_string(i));
    }
    return wd;
}

// e_K = (1/D) sum w_k c_k; the postconditions e^2 = e = e*, c_k e = e c_k = e
// are asserted exactly.
inline AlgebraElement haar_element(const Hypergroup& k) {
    WeightData wd = weights(k);
    AlgebraElement e = zero_element(k);
    for (int i = 0; i < k.size(); ++i) e.coeffs[i] = wd.w[i] / wd.total;
    if (multiply(e, e) != e) throw internal_inconsistency("Haar element not idempotent");
    if (star(e) != e) throw internal_inconsistency("Haar element not self-adjoint");
    for (int i = 0; i < k.size(); ++i) {
        AlgebraElement ci = basis_element(k, i);
        if (multiply(ci, e) != e || multiply(e, ci) != e)
            throw internal_inconsistency("Haar element not absorbing at " + k.label(i));
    }
    return e;
}

struct FrobeniusReport {
    bool ok = true;
    int i = -1, j = -1, k = -1;
    std::string identity; // which of the three identities failed first
};

// Verifies C_ij^k = (w_k/w_i) C_{k jbar}^i = (w_k/w_j) C_{ibar k}^j
//                 = (w_k/w_i) C_{j kbar}^{ibar} for all i, j, k.
inline FrobeniusReport frobenius_check(const Hypergroup& kk) {
    WeightData wd = weights(kk);
    for (int i = 0; i < kk.size(); ++i)
        for (int j = 0; j < kk.size(); ++j)
            for (int k = 0; k < kk.size(); ++k) {
                const QuadScalar& lhs = kk.c(i, j, k);
                if (lhs != wd.w[k] / wd.w[i] * kk.c(k, kk.inv(j), i))
                    return {false, i, j, k, "C_ij^k = (w_k/w_i) C_{k jbar}^i"};
                if (lhs != wd.w[k] / wd.w[j] * kk.c(kk.inv(i), k, j))
                    return {false, i, j, k, "C_ij^k = (w_k/w_j) C_{ibar k}^j"};
                if (lhs != wd.w[k] / wd.w[i] * kk.c(j, kk.inv(k), kk.inv(i)))
                    return {false, i, j, k, "C_ij^k = (w_k/w_i) C_{j kbar}^{ibar}"};
            }
    return {};
}

// A hypergroup is a group exactly when every weight is 1.
inline bool is_group(const Hypergroup& k) {
    WeightData wd = weights(k);
    for (const auto& w : wd.w)
        if (!w.is_one()) return false;
    return true;
}

inline bool is_commutative(const Hypergroup& k) {
    for (int i = 0; i < k.size(); ++i)
        for (int j = i + 1; j < k.size(); ++j)
            for (int m = 0; m < k.size(); ++m)
                if (k.c(i, j, m) != k.c(j, i, m)) return false;
    return true;
}

// (L_i)_{kj} = C_ij^k, the matrix of left multiplication by c_i.
inline Mat<QuadScalar> left_mult_matrix(const Hypergroup& kk, int i) {
    Mat<QuadScalar> m(kk.size(), std::vector<QuadScalar>(kk.size(), QuadScalar(0)));
    for (int k = 0; k < kk.size(); ++k)
        for (int j = 0; j < kk.size(); ++j) m[k][j] = kk.c(i, j, k);
    return m;
}

} // namespace hyperfuse
