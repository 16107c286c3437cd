#pragma once

// Adjoint subhypergroup, universal grading group, the derived chain of
// iterated adjoints with its nilpotency verdict, and the maximal subgroup.

#include <string>
#include <vector>

#include "hyperfuse/quotient.hpp"

namespace hyperfuse {

// K_ad = { c_l : c_l appears in some c_k c_kbar }, closed up under
// generation (the support union is already closed for every catalog
// instance; closure guards user input).
inline Subhypergroup adjoint_subhypergroup(const Hypergroup& k) {
    std::vector<int> seed;
    for (int i = 0; i < k.size(); ++i)
        for (int m = 0; m < k.size(); ++m)
            if (sign(k.c(i, k.inv(i), m)) > 0) seed.push_back(m);
    return generated_subhypergroup(k, seed);
}

struct GradingData {
    Subhypergroup adjoint;
    Hypergroup universal_group;            // K // K_ad, a group
    std::vector<int> assignment;           // element index -> group element index
    std::vector<std::vector<int>> components; // K_g per group element
    std::vector<std::vector<int>> group_mul;  // multiplication table of the group
};

// Multiplication table of a hypergroup that is a group: each product is a
// single basis element with coefficient 1.
inline std::vector<std::vector<int>> group_multiplication_table(const Hypergroup& g) {
    if (!is_group(g)) throw internal_inconsistency("expected a group hypergroup");
    std::vector<std::vector<int>> mul(g.size(), std::vector<int>(g.size(), -1));
    for (int a = 0; a < g.size(); ++a)
        for (int b = 0; b < g.size(); ++b) {
            for (int t = 0; t < g.size(); ++t)
                if (g.c(a, b, t).is_one()) mul[a][b] = t;
            if (mul[a][b] < 0) throw internal_inconsistency("group product not a basis element");
        }
    return mul;
}

// G_K = K // K_ad with the double-coset partition as grading assignment.
// The grading law support(c_i c_j) in K_{g(i) g(j)} and faithfulness are
// verified on the result.
inline GradingData universal_grading(const Hypergroup& k) {
    GradingData gd;
    gd.adjoint = adjoint_subhypergroup(k);
    QuotientResult q = quotient_hypergroup(k, gd.adjoint);
    if (!is_group(q.quotient))
        throw internal_inconsistency("universal grading quotient is not a group");
    gd.universal_group = q.quotient;
    gd.assignment = q.space.class_of;
    gd.components = q.space.classes;
    gd.group_mul = group_multiplication_table(gd.universal_group);
    for (const auto& comp : gd.components)
        if (comp.empty()) throw internal_inconsistency("empty grading component");
    for (int i = 0; i < k.size(); ++i)
        for (int j = 0; j < k.size(); ++j) {
            int expect = gd.group_mul[gd.assignment[i]][gd.assignment[j]];
            for (int m = 0; m < k.size(); ++m)
                if (sign(k.c(i, j, m)) > 0 && gd.assignment[m] != expect)
                    throw internal_inconsistency("grading law fails at (" + k.label(i) + ", " +
                                                 k.label(j) + ")");
        }
    return gd;
}

struct DerivedChain {
    // chain[0] = K itself; chain[t] is the t-th iterated adjoint,
    // re-validated as a standalone hypergroup.
    std::vector<Hypergroup> chain;
    std::vector<std::vector<int>> members; // absolute indices in the original K
    std::vector<Hypergroup> groups;        // G_t = chain[t-1] // chain[t]
    bool nilpotent = false;

    const Hypergroup& terminal() const { return chain.back(); }
};

// K = K_0 > K_1 = K_ad > K_2 = (K_1)_ad > ... until stationary; the
// quotients G_t are groups and D(K) = |G_1| ... |G_N| D(K_N) exactly.
inline DerivedChain derived_chain(const Hypergroup& k) {
    DerivedChain dc;
    dc.chain.push_back(k);
    std::vector<int> abs(k.size());
    for (int i = 0; i < k.size(); ++i) abs[i] = i;
    dc.members.push_back(abs);

    for (;;) {
        const Hypergroup& cur = dc.chain.back();
        Subhypergroup ad = adjoint_subhypergroup(cur);
        if (ad.size() == cur.size()) break; // stationary
        QuotientResult q = quotient_hypergroup(cur, ad);
        if (!is_group(q.quotient))
            throw internal_inconsistency("adjoint quotient is not a group");
        dc.groups.push_back(q.quotient);
        Restriction r = restrict_to(cur, ad);
        std::vector<int> nxt(r.sub.size());
        for (int t = 0; t < r.sub.size(); ++t) nxt[t] = dc.members.back()[r.to_parent[t]];
        dc.chain.push_back(std::move(r.sub));
        dc.members.push_back(std::move(nxt));
    }
    dc.nilpotent = dc.terminal().size() == 1;

    QuadScalar rhs = weights(dc.terminal()).total;
    for (const auto& g : dc.groups) rhs *= QuadScalar(g.size());
    if (weights(k).total != rhs)
        throw internal_inconsistency("derived chain weight identity D(K) = prod |G_i| D(K_N) fails");
    return dc;
}

// K^x = { c_k : w_k = 1 }, the maximal subgroup. Its failure to be a
// group-closed subhypergroup would contradict the weight axioms.
inline Subhypergroup maximal_subgroup(const Hypergroup& k) {
    WeightData wd = weights(k);
    std::vector<int> members;
    for (int i = 0; i < k.size(); ++i)
        if (wd.w[i].is_one()) members.push_back(i);
    if (!is_subhypergroup(k, members))
        throw internal_inconsistency("weight-1 elements do not close into a subhypergroup");
    Subhypergroup sub{&k, std::move(members)};
    if (!is_group(restrict_to(k, sub).sub))
        throw internal_inconsistency("unit ring is not a group");
    return sub;
}

} // namespace hyperfuse
