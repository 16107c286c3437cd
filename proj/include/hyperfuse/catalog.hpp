#pragma once

// The parametric families used throughout: finite groups (as rings or
// hypergroups), Tambara-Yamagami and near-group rings, Haagerup-Izumi
// rings, the truncated SU(2) level-k rings, the Fibonacci ring, and the
// two-element hypergroup K(d). Every constructor validates its output.

#include <cstdint>
#include <string>
#include <vector>

#include "hyperfuse/fusion.hpp"
#include "hyperfuse/hypergroup.hpp"

namespace hyperfuse {

// A finite group given by its multiplication table; mul[i][j] = index of
// the product, index 0 the identity.
struct GroupSpec {
    std::vector<std::string> names;
    std::vector<std::vector<int>> mul;

    int order() const { return static_cast<int>(names.size()); }

    int inverse(int i) const {
        for (int j = 0; j < order(); ++j)
            if (mul[i][j] == 0) return j;
        throw error("group element without inverse");
    }

    bool abelian() const {
        for (int i = 0; i < order(); ++i)
            for (int j = i + 1; j < order(); ++j)
                if (mul[i][j] != mul[j][i]) return false;
        return true;
    }

    void check() const {
        int n = order();
        if (n == 0) throw error("empty group");
        if (static_cast<int>(mul.size()) != n) throw error("group table size mismatch");
        for (const auto& row : mul)
            if (static_cast<int>(row.size()) != n) throw error("group table row size mismatch");
        for (int i = 0; i < n; ++i)
            if (mul[0][i] != i || mul[i][0] != i) throw error("group identity law fails");
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    if (mul[mul[i][j]][k] != mul[i][mul[j][k]])
                        throw error("group table not associative");
        for (int i = 0; i < n; ++i) inverse(i); // each element invertible
    }

    static GroupSpec trivial() { return {{"e"}, {{0}}}; }

    static GroupSpec cyclic(int n, char gen = 'g') {
        if (n < 1) throw error("cyclic group order must be >= 1");
        GroupSpec g;
        g.names.resize(n);
        g.names[0] = "e";
        for (int i = 1; i < n; ++i)
            g.names[i] = i == 1 ? std::string(1, gen) : std::string(1, gen) + std::to_string(i);
        g.mul.assign(n, std::vector<int>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) g.mul[i][j] = (i + j) % n;
        return g;
    }

    static GroupSpec product(const GroupSpec& a, const GroupSpec& b) {
        GroupSpec g;
        int na = a.order(), nb = b.order();
        g.names.resize(static_cast<size_t>(na) * nb);
        g.mul.assign(static_cast<size_t>(na) * nb, std::vector<int>(static_cast<size_t>(na) * nb));
        auto id = [&](int i, int j) { return i * nb + j; };
        for (int i = 0; i < na; ++i)
            for (int j = 0; j < nb; ++j) {
                std::string nm;
                if (i == 0 && j == 0) nm = "e";
                else if (j == 0) nm = a.names[i];
                else if (i == 0) nm = b.names[j];
                else nm = a.names[i] + b.names[j];
                g.names[id(i, j)] = nm;
            }
        for (int i = 0; i < na; ++i)
            for (int j = 0; j < nb; ++j)
                for (int k = 0; k < na; ++k)
                    for (int l = 0; l < nb; ++l)
                        g.mul[id(i, j)][id(k, l)] = id(a.mul[i][k], b.mul[j][l]);
        return g;
    }

    // r^3 = s^2 = e, s r = r^2 s
    static GroupSpec symmetric3() {
        GroupSpec g;
        g.names = {"e", "r", "r2", "s", "rs", "r2s"};
        // element (i, a) = r^i s^a, (i,a)(j,b) = r^(i + j*(-1)^a) s^(a+b)
        auto id = [](int i, int a) { return a * 3 + i; };
        g.mul.assign(6, std::vector<int>(6));
        for (int i = 0; i < 3; ++i)
            for (int a = 0; a < 2; ++a)
                for (int j = 0; j < 3; ++j)
                    for (int b = 0; b < 2; ++b) {
                        int exp = a ? (i + 3 - j) % 3 : (i + j) % 3;
                        g.mul[id(i, a)][id(j, b)] = id(exp, (a + b) % 2);
                    }
        return g;
    }

    // "Z2", "Z6", "Z2xZ3", "S3", products like "S3xZ2"
    static GroupSpec parse(const std::string& spec) {
        GroupSpec acc;
        bool first = true;
        size_t pos = 0;
        while (pos < spec.size()) {
            size_t next = spec.find('x', pos);
            std::string tok = spec.substr(pos, next == std::string::npos ? next : next - pos);
            GroupSpec factor;
            if (tok == "S3") {
                factor = symmetric3();
            } else if (tok.size() >= 2 && (tok[0] == 'Z' || tok[0] == 'z')) {
                int n = std::stoi(tok.substr(1));
                factor = cyclic(n, first ? 'a' : static_cast<char>('a' + 1));
            } else {
                throw error("unknown group spec '" + tok + "' (try Z<n>, S3, or products with x)");
            }
            acc = first ? factor : product(acc, factor);
            first = false;
            if (next == std::string::npos) break;
            pos = next + 1;
        }
        if (first) throw error("empty group spec");
        // distinct generator letters per cyclic factor done crudely above;
        // rebuild names if a product introduced duplicates
        for (size_t i = 0; i < acc.names.size(); ++i)
            for (size_t j = i + 1; j < acc.names.size(); ++j)
                if (acc.names[i] == acc.names[j])
                    acc.names[j] += "'";
        acc.check();
        return acc;
    }
};

// ---------------------------------------------------------------------------
// group ring / group hypergroup
// ---------------------------------------------------------------------------

inline FusionRing group_ring(const GroupSpec& g) {
    g.check();
    int n = g.order();
    std::vector<std::int64_t> table(static_cast<size_t>(n) * n * n, 0);
    std::vector<int> inv(n);
    for (int i = 0; i < n; ++i) inv[i] = g.inverse(i);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            table[(static_cast<size_t>(i) * n + j) * n + g.mul[i][j]] = 1;
    return validate_fusion_ring(g.names, inv, std::move(table));
}

inline Hypergroup group_hypergroup(const GroupSpec& g) {
    g.check();
    int n = g.order();
    std::vector<QuadScalar> table(static_cast<size_t>(n) * n * n, QuadScalar(0));
    std::vector<int> inv(n);
    for (int i = 0; i < n; ++i) inv[i] = g.inverse(i);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            table[(static_cast<size_t>(i) * n + j) * n + g.mul[i][j]] = QuadScalar(1);
    return validate_hypergroup(g.names, inv, std::move(table));
}

// ---------------------------------------------------------------------------
// near-group family: G u {rho}, rho^2 = sum_g g + m rho, g rho = rho g = rho
// ---------------------------------------------------------------------------

inline FusionRing near_group(const GroupSpec& g, int m) {
    g.check();
    if (!g.abelian()) throw error("near-group ring needs an abelian group");
    if (m < 0) throw error("near-group multiplicity must be >= 0");
    int n = g.order();
    int sz = n + 1;
    int rho = n;
    std::vector<std::string> labels = g.names;
    labels.push_back("rho");
    std::vector<int> inv(sz);
    for (int i = 0; i < n; ++i) inv[i] = g.inverse(i);
    inv[rho] = rho;
    std::vector<std::int64_t> table(static_cast<size_t>(sz) * sz * sz, 0);
    auto at = [&](int i, int j, int k) -> std::int64_t& {
        return table[(static_cast<size_t>(i) * sz + j) * sz + k];
    };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) at(i, j, g.mul[i][j]) = 1;
    for (int i = 0; i < n; ++i) {
        at(i, rho, rho) = 1;
        at(rho, i, rho) = 1;
    }
    for (int i = 0; i < n; ++i) at(rho, rho, i) = 1;
    at(rho, rho, rho) = m;
    return validate_fusion_ring(std::move(labels), std::move(inv), std::move(table));
}

// Tambara-Yamagami: the m = 0 near-group ring.
inline FusionRing tambara_yamagami(const GroupSpec& g) { return near_group(g, 0); }

// ---------------------------------------------------------------------------
// Haagerup-Izumi family: G u {g rho}, g rho g' = (g g'^-1) rho,
// rho^2 = e + sum_g g rho
// ---------------------------------------------------------------------------

inline FusionRing haagerup_izumi(const GroupSpec& g) {
    g.check();
    if (!g.abelian()) throw error("Haagerup-Izumi ring needs an abelian group");
    int n = g.order();
    int sz = 2 * n;
    auto grp = [&](int i) { return i; };          // a_i
    auto rho = [&](int i) { return n + i; };      // b_i = a_i rho
    std::vector<std::string> labels = g.names;
    for (int i = 0; i < n; ++i) labels.push_back(i == 0 ? "rho" : g.names[i] + "rho");
    std::vector<int> inv(sz);
    for (int i = 0; i < n; ++i) inv[grp(i)] = g.inverse(i);
    for (int i = 0; i < n; ++i) inv[rho(i)] = rho(i); // (g rho)* = g rho
    std::vector<std::int64_t> table(static_cast<size_t>(sz) * sz * sz, 0);
    auto at = [&](int i, int j, int k) -> std::int64_t& {
        return table[(static_cast<size_t>(i) * sz + j) * sz + k];
    };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            at(grp(i), grp(j), grp(g.mul[i][j])) = 1;  // a_i a_j
            at(grp(i), rho(j), rho(g.mul[i][j])) = 1;  // a_i b_j = b_{ij}
            at(rho(i), grp(j), rho(g.mul[i][g.inverse(j)])) = 1; // b_i a_j = b_{i j^-1}
            // b_i b_j = a_{i j^-1} + sum_k b_k
            at(rho(i), rho(j), grp(g.mul[i][g.inverse(j)])) = 1;
            for (int k = 0; k < n; ++k) at(rho(i), rho(j), rho(k)) += 1;
        }
    return validate_fusion_ring(std::move(labels), std::move(inv), std::move(table));
}

// ---------------------------------------------------------------------------
// SU(2) level k: objects v0..vk, truncated Clebsch-Gordan rules
// ---------------------------------------------------------------------------

inline FusionRing su2_level(int k) {
    if (k < 1) throw error("su2 level must be >= 1");
    int sz = k + 1;
    std::vector<std::string> labels(sz);
    for (int i = 0; i < sz; ++i) labels[i] = "v" + std::to_string(i);
    std::vector<int> inv(sz);
    for (int i = 0; i < sz; ++i) inv[i] = i; // all objects self-dual
    std::vector<std::int64_t> table(static_cast<size_t>(sz) * sz * sz, 0);
    for (int i = 0; i < sz; ++i)
        for (int j = 0; j < sz; ++j)
            for (int l = std::abs(i - j); l <= std::min(i + j, 2 * k - i - j); l += 2)
                table[(static_cast<size_t>(i) * sz + j) * sz + l] = 1;
    return validate_fusion_ring(std::move(labels), std::move(inv), std::move(table));
}

// Rank-2 ring with tau^2 = e + tau.
inline FusionRing fibonacci() {
    std::vector<std::string> labels{"e", "tau"};
    std::vector<int> inv{0, 1};
    std::vector<std::int64_t> table(8, 0);
    auto at = [&](int i, int j, int k) -> std::int64_t& { return table[(i * 2 + j) * 2 + k]; };
    at(0, 0, 0) = 1;
    at(0, 1, 1) = 1;
    at(1, 0, 1) = 1;
    at(1, 1, 0) = 1;
    at(1, 1, 1) = 1;
    return validate_fusion_ring(std::move(labels), std::move(inv), std::move(table));
}

// ---------------------------------------------------------------------------
// the two-element hypergroup K(d): c1 c1 = (1/d) c0 + ((d-1)/d) c1
// ---------------------------------------------------------------------------

inline Hypergroup two_element(const QuadScalar& d) {
    if (sign(d - QuadScalar(1)) < 0) throw error("two_element parameter must satisfy d >= 1");
    std::vector<QuadScalar> table(8, QuadScalar(0));
    auto at = [&](int i, int j, int k) -> QuadScalar& { return table[(i * 2 + j) * 2 + k]; };
    at(0, 0, 0) = QuadScalar(1);
    at(0, 1, 1) = QuadScalar(1);
    at(1, 0, 1) = QuadScalar(1);
    at(1, 1, 0) = QuadScalar(1) / d;
    at(1, 1, 1) = (d - QuadScalar(1)) / d;
    return validate_hypergroup({"c0", "c1"}, {0, 1}, std::move(table));
}

} // namespace hyperfuse
