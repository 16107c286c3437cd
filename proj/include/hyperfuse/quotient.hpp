#pragma once

// Subhypergroups, double cosets and quotient hypergroups K//L.
//
// A double coset class is decided by exact equality of the sandwitched
// algebra element e_L c_k e_M — never by support alone. Quotient structure
// constants are extracted by an exact linear solve against the sandwich
// vectors and the result is re-validated; the weight factorization
// D(K) = D(L) * D(K//L) is asserted rather than assumed.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "hyperfuse/hypergroup.hpp"

namespace hyperfuse {

struct Subhypergroup {
    const Hypergroup* parent = nullptr;
    std::vector<int> members; // sorted, always contains 0

    int size() const { return static_cast<int>(members.size()); }
    bool contains(int i) const {
        return std::binary_search(members.begin(), members.end(), i);
    }
    bool is_whole() const { return parent && size() == parent->size(); }

    std::string label_list() const {
        std::string s;
        for (size_t i = 0; i < members.size(); ++i)
            s += (i ? "," : "") + parent->label(members[i]);
        return s;
    }
};

inline void check_subset_indices(const Hypergroup& k, const std::vector<int>& subset) {
    for (int i : subset)
        if (i < 0 || i >= k.size())
            throw error("element index " + std::to_string(i) + " out of range");
}

// Contains the identity, closed under the involution, and support-closed:
// products of members decompose inside the subset.
inline bool is_subhypergroup(const Hypergroup& k, const std::vector<int>& subset) {
    check_subset_indices(k, subset);
    std::vector<bool> in(k.size(), false);
    for (int i : subset) in[i] = true;
    if (!in[0]) return false;
    for (int i : subset)
        if (!in[k.inv(i)]) return false;
    for (int i : subset)
        for (int j : subset)
            for (int m = 0; m < k.size(); ++m)
                if (!in[m] && sign(k.c(i, j, m)) > 0) return false;
    return true;
}

inline Subhypergroup make_subhypergroup(const Hypergroup& k, std::vector<int> subset) {
    std::sort(subset.begin(), subset.end());
    subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
    if (!is_subhypergroup(k, subset))
        throw error("subset {" + [&] {
            std::string s;
            for (size_t i = 0; i < subset.size(); ++i)
                s += (i ? "," : "") + k.label(subset[i]);
            return s;
        }() + "} is not a subhypergroup");
    return {&k, std::move(subset)};
}

// Smallest subhypergroup containing the seed: iterated support closure of
// seed together with its involution and the identity.
inline Subhypergroup generated_subhypergroup(const Hypergroup& k, const std::vector<int>& seed) {
    check_subset_indices(k, seed);
    std::vector<bool> in(k.size(), false);
    in[0] = true;
    for (int i : seed) {
        in[i] = true;
        in[k.inv(i)] = true;
    }
    bool grew = true;
    while (grew) {
        grew = false;
        for (int i = 0; i < k.size(); ++i) {
            if (!in[i]) continue;
            for (int j = 0; j < k.size(); ++j) {
                if (!in[j]) continue;
                for (int m = 0; m < k.size(); ++m) {
                    if (in[m] || sign(k.c(i, j, m)) <= 0) continue;
                    in[m] = true;
                    in[k.inv(m)] = true;
                    grew = true;
                }
            }
        }
    }
    std::vector<int> members;
    for (int i = 0; i < k.size(); ++i)
        if (in[i]) members.push_back(i);
    return {&k, std::move(members)};
}

// Complete list of subhypergroups: closure of the singleton-generated ones
// under pairwise join, sorted by (size, members). Worst case is exponential,
// hence the bound on non-identity elements.
inline std::vector<Subhypergroup> find_subhypergroups(const Hypergroup& k,
                                                      int max_nonidentity = 20) {
    if (k.size() - 1 > max_nonidentity)
        throw error("subhypergroup enumeration bound exceeded (" + std::to_string(k.size() - 1) +
                    " > " + std::to_string(max_nonidentity) + " non-identity elements)");
    std::set<std::vector<int>> found;
    found.insert({0});
    for (int i = 1; i < k.size(); ++i) found.insert(generated_subhypergroup(k, {i}).members);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::vector<int>> cur(found.begin(), found.end());
        for (size_t a = 0; a < cur.size(); ++a)
            for (size_t b = a + 1; b < cur.size(); ++b) {
                std::vector<int> join = cur[a];
                join.insert(join.end(), cur[b].begin(), cur[b].end());
                auto sub = generated_subhypergroup(k, join);
                if (found.insert(sub.members).second) grew = true;
            }
    }
    std::vector<Subhypergroup> out;
    for (const auto& m : found) out.push_back({&k, m});
    std::sort(out.begin(), out.end(), [](const Subhypergroup& x, const Subhypergroup& y) {
        if (x.size() != y.size()) return x.size() < y.size();
        return x.members < y.members;
    });
    return out;
}

// Weight of the subhypergroup inside its parent (structure constants agree
// on members, so parent weights restrict).
inline QuadScalar subgroup_weight(const Subhypergroup& l) {
    const Hypergroup& k = *l.parent;
    QuadScalar d(0);
    for (int i : l.members) d += QuadScalar(1) / k.c(i, k.inv(i), 0);
    return d;
}

// Haar element e_L of a subhypergroup, as an element of CK.
inline AlgebraElement sub_haar_element(const Subhypergroup& l) {
    const Hypergroup& k = *l.parent;
    QuadScalar d = subgroup_weight(l);
    AlgebraElement e = zero_element(k);
    for (int i : l.members) e.coeffs[i] = QuadScalar(1) / k.c(i, k.inv(i), 0) / d;
    return e;
}

struct DoubleCosetSpace {
    const Hypergroup* parent = nullptr;
    Subhypergroup left, right;
    std::vector<std::vector<int>> classes;   // partition of indices, sorted by representative
    std::vector<int> representatives;        // minimal index per class
    std::vector<int> class_of;               // element index -> class index
    std::vector<AlgebraElement> sandwiches;  // e_L c_rep e_M per class

    int count() const { return static_cast<int>(classes.size()); }
};

// L\K/M: k and k' fall in one class iff e_L c_k e_M = e_L c_k' e_M exactly.
inline DoubleCosetSpace double_cosets(const Hypergroup& k, const Subhypergroup& l,
                                      const Subhypergroup& m) {
    AlgebraElement el = sub_haar_element(l);
    AlgebraElement em = sub_haar_element(m);
    std::map<std::vector<QuadScalar>, std::vector<int>,
             bool (*)(const std::vector<QuadScalar>&, const std::vector<QuadScalar>&)>
        groups(+[](const std::vector<QuadScalar>& a, const std::vector<QuadScalar>& b) {
            for (size_t i = 0; i < a.size(); ++i) {
                int s = sign(a[i] - b[i]);
                if (s != 0) return s < 0;
            }
            return false;
        });
    std::vector<AlgebraElement> sandwich_of(k.size(), zero_element(k));
    for (int i = 0; i < k.size(); ++i) {
        sandwich_of[i] = multiply(multiply(el, basis_element(k, i)), em);
        groups[sandwich_of[i].coeffs].push_back(i);
    }
    DoubleCosetSpace dcs;
    dcs.parent = &k;
    dcs.left = l;
    dcs.right = m;
    for (auto& [vec, members] : groups) dcs.classes.push_back(members);
    std::sort(dcs.classes.begin(), dcs.classes.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) { return a[0] < b[0]; });
    dcs.class_of.assign(k.size(), -1);
    for (int t = 0; t < dcs.count(); ++t) {
        dcs.representatives.push_back(dcs.classes[t][0]);
        for (int i : dcs.classes[t]) dcs.class_of[i] = t;
        dcs.sandwiches.push_back(sandwich_of[dcs.classes[t][0]]);
    }
    return dcs;
}

struct QuotientResult {
    Hypergroup quotient;
    DoubleCosetSpace space;
};

// K//L as a hypergroup on the double-coset classes. Structure constants are
// extracted from products of sandwich elements by an exact solve; failure of
// that solve would mean the sandwiches do not span what they multiply into,
// which the theory rules out, hence internal_inconsistency.
inline QuotientResult quotient_hypergroup(const Hypergroup& k, const Subhypergroup& l) {
    DoubleCosetSpace dcs = double_cosets(k, l, l);
    const int m = dcs.count();

    if (dcs.class_of[0] != 0)
        throw internal_inconsistency("identity class not first in quotient");
    for (int i : l.members)
        if (dcs.class_of[i] != 0)
            throw internal_inconsistency("subhypergroup member outside the identity class");

    std::vector<int> inv(m);
    for (int t = 0; t < m; ++t) {
        AlgebraElement starred = star(dcs.sandwiches[t]);
        int target = -1;
        for (int u = 0; u < m; ++u)
            if (dcs.sandwiches[u] == starred) target = u;
        if (target < 0) throw internal_inconsistency("double cosets not closed under star");
        inv[t] = target;
    }

    Mat<QuadScalar> basis(k.size(), std::vector<QuadScalar>(m, QuadScalar(0)));
    for (int t = 0; t < m; ++t)
        for (int i = 0; i < k.size(); ++i) basis[i][t] = dcs.sandwiches[t].coeffs[i];

    std::vector<QuadScalar> table(static_cast<size_t>(m) * m * m, QuadScalar(0));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            AlgebraElement prod = multiply(dcs.sandwiches[a], dcs.sandwiches[b]);
            auto coeffs = solve_unique(basis, prod.coeffs);
            if (!coeffs)
                throw internal_inconsistency("double-coset product does not decompose in sandwich basis");
            for (int t = 0; t < m; ++t)
                table[(static_cast<size_t>(a) * m + b) * m + t] = (*coeffs)[t];
        }

    std::vector<std::string> labels(m);
    for (int t = 0; t < m; ++t) labels[t] = "[" + k.label(dcs.representatives[t]) + "]";

    QuotientResult res{validate_hypergroup(std::move(labels), std::move(inv), std::move(table)),
                       std::move(dcs)};

    // D(K) = D(L) * D(K//L), exactly.
    QuadScalar dk = weights(k).total;
    QuadScalar dl = subgroup_weight(l);
    QuadScalar dq = weights(res.quotient).total;
    if (dk != dl * dq)
        throw internal_inconsistency("weight factorization D(K) = D(L) D(K//L) fails");
    return res;
}

// Re-index a subhypergroup as a standalone hypergroup (slice of the parent
// table), validated again after slicing.
struct Restriction {
    Hypergroup sub;
    std::vector<int> to_parent; // index in sub -> index in parent
};

inline Restriction restrict_to(const Hypergroup& k, const Subhypergroup& l) {
    const int m = l.size();
    std::vector<int> to_parent = l.members;
    std::vector<int> from_parent(k.size(), -1);
    for (int t = 0; t < m; ++t) from_parent[to_parent[t]] = t;
    std::vector<std::string> labels(m);
    std::vector<int> inv(m);
    std::vector<QuadScalar> table(static_cast<size_t>(m) * m * m, QuadScalar(0));
    for (int a = 0; a < m; ++a) {
        labels[a] = k.label(to_parent[a]);
        inv[a] = from_parent[k.inv(to_parent[a])];
        for (int b = 0; b < m; ++b)
            for (int t = 0; t < m; ++t)
                table[(static_cast<size_t>(a) * m + b) * m + t] =
                    k.c(to_parent[a], to_parent[b], to_parent[t]);
    }
    return {validate_hypergroup(std::move(labels), std::move(inv), std::move(table)),
            std::move(to_parent)};
}

// ---------------------------------------------------------------------------
// morphisms
// ---------------------------------------------------------------------------

struct MorphismCheck {
    bool valid = false;
    std::string issue;               // first failed identity, human-readable
    std::vector<int> kernel;         // {k : phi(c_k) = c_0}
    std::vector<int> image_support;  // union of supports of the images
};

// Checks that c_k -> images[k] extends to a *-homomorphism CK -> CL, i.e.
// phi(c_i) phi(c_j) = sum_k C_ij^k phi(c_k) and phi(c_ibar) = phi(c_i)*.
// Requires images[0] = c_0. For valid maps the kernel is verified to be a
// subhypergroup.
inline MorphismCheck morphism_check(const Hypergroup& k, const Hypergroup& target,
                                    const std::vector<AlgebraElement>& images) {
    if (static_cast<int>(images.size()) != k.size())
        throw error("morphism needs one image per element");
    for (const auto& img : images)
        if (img.parent == nullptr || img.coeffs.size() != static_cast<size_t>(target.size()))
            throw error("morphism image not an element of the target algebra");
    MorphismCheck res;
    if (images[0] != basis_element(target, 0)) {
        res.issue = "c_0 must map to c_0";
        return res;
    }
    for (int i = 0; i < k.size() && res.issue.empty(); ++i) {
        if (star(images[i]) != images[k.inv(i)]) {
            res.issue = "star compatibility fails at " + k.label(i);
            break;
        }
        for (int j = 0; j < k.size(); ++j) {
            AlgebraElement lhs = multiply(images[i], images[j]);
            AlgebraElement rhs = zero_element(target);
            for (int t = 0; t < k.size(); ++t) {
                const QuadScalar& c = k.c(i, j, t);
                if (!c.is_zero()) rhs = rhs + scale(c, images[t]);
            }
            if (lhs != rhs) {
                res.issue = "multiplicativity fails at (" + k.label(i) + ", " + k.label(j) + ")";
                break;
            }
        }
    }
    res.valid = res.issue.empty();
    AlgebraElement unit = basis_element(target, 0);
    for (int i = 0; i < k.size(); ++i)
        if (images[i] == unit) res.kernel.push_back(i);
    std::set<int> img;
    for (const auto& e : images)
        for (int t : support_nonzero(e)) img.insert(t);
    res.image_support.assign(img.begin(), img.end());
    if (res.valid && !is_subhypergroup(k, res.kernel))
        throw internal_inconsistency("kernel of a valid morphism is not a subhypergroup");
    return res;
}

// The canonical map K -> K//L, c_k -> class of e_L c_k e_L, as images in
// the quotient algebra.
inline std::vector<AlgebraElement> quotient_map_images(const QuotientResult& q) {
    std::vector<AlgebraElement> images;
    images.reserve(q.space.class_of.size());
    for (int cls : q.space.class_of) images.push_back(basis_element(q.quotient, cls));
    return images;
}

// e_L is central iff e_L x = x e_L for all basis elements; for such L the
// corner map x -> e_L x e_L is multiplicative and the quotient map is a
// morphism.
inline bool haar_is_central(const Hypergroup& k, const Subhypergroup& l) {
    AlgebraElement e = sub_haar_element(l);
    for (int i = 0; i < k.size(); ++i) {
        AlgebraElement ci = basis_element(k, i);
        if (multiply(e, ci) != multiply(ci, e)) return false;
    }
    return true;
}

} // namespace hyperfuse
