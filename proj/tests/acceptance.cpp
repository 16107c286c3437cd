// Acceptance suite: end-to-end checks of the family data and structural
// properties, one pass/fail line per criterion. Exits with the number of
// failed criteria.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "test_support.hpp"

using namespace hyperfuse;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void criterion(int number, const std::string& what, const std::function<void()>& body) {
    try {
        body();
        std::cout << "[PASS] criterion " << number << ": " << what << "\n";
    } catch (const std::exception& e) {
        ++failures;
        std::cout << "[FAIL] criterion " << number << ": " << what << " -- " << e.what() << "\n";
    }
}

void require(bool cond, const std::string& what) {
    if (!cond) throw std::runtime_error(what);
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

QuadScalar quotient_weight_by_group(const FusionRing& f, int group_order) {
    Hypergroup k = to_hypergroup(f);
    std::vector<int> members(group_order);
    for (int i = 0; i < group_order; ++i) members[i] = i;
    QuotientResult q = quotient_hypergroup(k, make_subhypergroup(k, members));
    require(q.quotient.size() == 2, "group quotient should have two classes");
    return weights(q.quotient).w[1];
}

std::vector<std::pair<std::string, Hypergroup>> acceptance_catalog() {
    std::vector<std::pair<std::string, Hypergroup>> cat;
    cat.emplace_back("K(2)", two_element(QuadScalar(2)));
    cat.emplace_back("K(2+sqrt3)", two_element(QuadScalar(2) + QuadScalar::sqrt_of(3)));
    cat.emplace_back("K_fibonacci", to_hypergroup(fibonacci()));
    cat.emplace_back("K_TY(Z2)", to_hypergroup(tambara_yamagami(GroupSpec::parse("Z2"))));
    cat.emplace_back("K_TY(Z3)", to_hypergroup(tambara_yamagami(GroupSpec::parse("Z3"))));
    cat.emplace_back("K_TY(Z2xZ2)", to_hypergroup(tambara_yamagami(GroupSpec::parse("Z2xZ2"))));
    cat.emplace_back("K_NG(Z2,1)", to_hypergroup(near_group(GroupSpec::parse("Z2"), 1)));
    cat.emplace_back("K_NG(Z2,2)", to_hypergroup(near_group(GroupSpec::parse("Z2"), 2)));
    cat.emplace_back("K_NG(Z3,3)", to_hypergroup(near_group(GroupSpec::parse("Z3"), 3)));
    cat.emplace_back("K_HI(Z2)", to_hypergroup(haagerup_izumi(GroupSpec::parse("Z2"))));
    cat.emplace_back("K_HI(Z3)", to_hypergroup(haagerup_izumi(GroupSpec::parse("Z3"))));
    cat.emplace_back("K_su2(2)", to_hypergroup(su2_level(2)));
    cat.emplace_back("K_su2(3)", to_hypergroup(su2_level(3)));
    cat.emplace_back("K_su2(4)", to_hypergroup(su2_level(4)));
    cat.emplace_back("Z4", group_hypergroup(GroupSpec::parse("Z4")));
    cat.emplace_back("Z6", group_hypergroup(GroupSpec::parse("Z6")));
    cat.emplace_back("Z2xZ2", group_hypergroup(GroupSpec::parse("Z2xZ2")));
    cat.emplace_back("S3", group_hypergroup(GroupSpec::symmetric3()));
    return cat;
}

AlgebraElement seeded_convex(const Hypergroup& k, std::mt19937& rng) {
    std::uniform_int_distribution<int> num(0, 5);
    AlgebraElement e = zero_element(k);
    QuadScalar total(0);
    for (auto& c : e.coeffs) {
        c = QuadScalar(num(rng));
        total += c;
    }
    if (total.is_zero()) return basis_element(k, 0);
    for (auto& c : e.coeffs) c /= total;
    return e;
}

} // namespace

int main() {
    criterion(1, "two-element table reproduction (exact weights, < 1 s each)", [] {
        struct Row {
            std::function<QuadScalar()> weight;
            QuadScalar expect;
            const char* name;
        };
        QuadScalar s5 = QuadScalar::sqrt_of(5), s3 = QuadScalar::sqrt_of(3),
                   s21 = QuadScalar::sqrt_of(21), s13 = QuadScalar::sqrt_of(13),
                   s6 = QuadScalar::sqrt_of(6);
        std::vector<Row> rows;
        rows.push_back({[] { return weights(to_hypergroup(fibonacci())).w[1]; },
                        (QuadScalar(3) + s5) / 2, "fibonacci"});
        rows.push_back({[] {
                            return quotient_weight_by_group(
                                near_group(GroupSpec::parse("Z2"), 2), 2);
                        },
                        QuadScalar(2) + s3, "near_group(Z2,2)//Z2"});
        rows.push_back({[] {
                            return quotient_weight_by_group(
                                near_group(GroupSpec::parse("Z3"), 3), 3);
                        },
                        (QuadScalar(5) + s21) / 2, "near_group(Z3,3)//Z3"});
        rows.push_back({[] {
                            return quotient_weight_by_group(
                                haagerup_izumi(GroupSpec::parse("Z3")), 3);
                        },
                        (QuadScalar(11) + QuadScalar(3) * s13) / 2, "haagerup_izumi(Z3)//Z3"});
        rows.push_back({[s6] { return weights(two_element(QuadScalar(5) + QuadScalar(2) * s6)).w[1]; },
                        QuadScalar(5) + QuadScalar(2) * s6, "two_element(5+2*sqrt6)"});
        for (const Row& r : rows) {
            auto t0 = Clock::now();
            QuadScalar w = r.weight();
            double dt = seconds_since(t0);
            require(w == r.expect, std::string(r.name) + ": wrong weight " + w.str());
            require(dt < 1.0, std::string(r.name) + ": took " + std::to_string(dt) + " s");
        }
    });

    criterion(2, "rescaling lemmas for near-group and haagerup-izumi quotients", [] {
        for (int n = 2; n <= 4; ++n) {
            GroupSpec g = n == 4 ? GroupSpec::parse("Z4") : GroupSpec::cyclic(n, 'a');
            for (int m = 1; m <= 3; ++m) {
                QuadScalar w = quotient_weight_by_group(near_group(g, m), n);
                QuadScalar expect =
                    (QuadScalar(m) * QuadScalar::sqrt_of(static_cast<std::int64_t>(m) * m + 4 * n) +
                     QuadScalar(m * m + 2 * n)) /
                    QuadScalar(2 * n);
                require(w == expect, "near_group(Z" + std::to_string(n) + "," + std::to_string(m) +
                                         ") quotient weight " + w.str() + " != " + expect.str());
            }
        }
        for (int n = 1; n <= 3; ++n) {
            GroupSpec g = GroupSpec::cyclic(n, 'a');
            QuadScalar w = quotient_weight_by_group(haagerup_izumi(g), n);
            QuadScalar expect =
                (QuadScalar(2 + n * n) +
                 QuadScalar(n) * QuadScalar::sqrt_of(static_cast<std::int64_t>(n) * n + 4)) /
                QuadScalar(2);
            require(w == expect, "haagerup_izumi(Z" + std::to_string(n) + ") quotient weight " +
                                     w.str() + " != " + expect.str());
        }
    });

    criterion(3, "integrality verdicts: round trips pass, the 2+sqrt3 quotient fails at sqrt2", [] {
        std::vector<FusionRing> rings;
        rings.push_back(fibonacci());
        rings.push_back(tambara_yamagami(GroupSpec::parse("Z2")));
        rings.push_back(tambara_yamagami(GroupSpec::parse("Z3")));
        rings.push_back(near_group(GroupSpec::parse("Z2"), 2));
        rings.push_back(near_group(GroupSpec::parse("Z3"), 3));
        rings.push_back(haagerup_izumi(GroupSpec::parse("Z2")));
        rings.push_back(haagerup_izumi(GroupSpec::parse("Z3")));
        rings.push_back(su2_level(2));
        rings.push_back(su2_level(3));
        rings.push_back(su2_level(4));
        rings.push_back(group_ring(GroupSpec::symmetric3()));
        for (const FusionRing& f : rings) {
            RingTestResult rt = fusion_ring_test(to_hypergroup(f));
            require(rt.passes, "round trip failed");
            require(rt.n_table == f.table(), "recovered table differs");
        }
        // the quotient hypergroup with w = 2 + sqrt3
        QuadScalar w = QuadScalar(2) + QuadScalar::sqrt_of(3);
        Hypergroup k = two_element(w);
        RingTestResult rt = fusion_ring_test(k);
        require(!rt.passes, "2+sqrt3 hypergroup must fail the test");
        require(rt.witness == "sqrt(2)", "witness is " + rt.witness + ", expected sqrt(2)");
        require(rt.i == 1 && rt.j == 1 && rt.k == 1, "witness at wrong indices");
        // the rescaled rules read c1~ c1~ = c0 + sqrt2 c1~: the identity
        // coefficient rescales to exactly 1
        require(w * k.c(1, 1, 0) == QuadScalar(1), "rescaled identity coefficient != 1");
    });

    criterion(4, "fourier matrix of K(d), weighted orthogonality, self-duality", [] {
        for (const QuadScalar& d :
             {QuadScalar(2), QuadScalar(2) + QuadScalar::sqrt_of(3),
              (QuadScalar(3) + QuadScalar::sqrt_of(5)) / 2}) {
            Hypergroup k = two_element(d);
            CharacterTable ct = character_table(k);
            require(ct.exact && ct.rows.size() == 2, "table shape");
            require(ct.rows[0][0].exact().is_one() && ct.rows[0][1].exact().is_one(),
                    "trivial row");
            require(ct.rows[1][0].exact().is_one(), "chi1(c0) != 1");
            require(ct.rows[1][1].exact() == -(QuadScalar(1) / d), "chi1(c1) != -1/d");
            WeightData wd = weights(k);
            QuadScalar dot(0);
            for (int i = 0; i < 2; ++i)
                dot += wd.w[i] * ct.rows[0][i].exact() * ct.rows[1][i].exact();
            require(dot.is_zero(), "orthogonality");
            DualResult dr = dual_hypergroup(ct);
            require(dr.is_hypergroup && dr.dual.same_structure(k), "self-duality");
        }
    });

    criterion(5, "quotient factorization suite over the catalog (< 30 s)", [] {
        auto t0 = Clock::now();
        int checked = 0;
        for (const auto& [name, k] : acceptance_catalog()) {
            if (k.size() > 12) continue;
            QuadScalar dk = weights(k).total;
            for (const Subhypergroup& l : find_subhypergroups(k)) {
                QuotientResult q = quotient_hypergroup(k, l); // re-validates inside
                require(weights(q.quotient).total * subgroup_weight(l) == dk,
                        name + ": D(K) != D(L) D(K//L)");
                // the quotient map sends exactly L to the identity class
                for (int i = 0; i < k.size(); ++i)
                    require((q.space.class_of[i] == 0) == l.contains(i),
                            name + ": kernel of the quotient map is not L");
                if (haar_is_central(k, l)) {
                    MorphismCheck mc = morphism_check(k, q.quotient, quotient_map_images(q));
                    require(mc.valid, name + ": quotient map not a morphism");
                    require(mc.kernel == l.members, name + ": morphism kernel mismatch");
                }
                ++checked;
            }
        }
        require(checked >= 50, "too few quotients checked: " + std::to_string(checked));
        double dt = seconds_since(t0);
        require(dt < 30.0, "suite took " + std::to_string(dt) + " s");
    });

    criterion(6, "grading suite: TY nilpotency chains and K(d) flatness", [] {
        for (const char* gname : {"Z2", "Z3", "Z2xZ2"}) {
            GroupSpec g = GroupSpec::parse(gname);
            Hypergroup ty = to_hypergroup(tambara_yamagami(g));
            GradingData gd = universal_grading(ty);
            require(gd.universal_group.size() == 2,
                    std::string("TY(") + gname + "): universal grading group not Z2");
            DerivedChain dc = derived_chain(ty);
            require(dc.nilpotent, std::string("TY(") + gname + ") not nilpotent");
            require(dc.groups.size() == 2 && dc.groups[0].size() == 2 &&
                        dc.groups[1].size() == g.order(),
                    std::string("TY(") + gname + ") chain groups wrong");
            require(weights(ty).total == QuadScalar(2 * g.order()),
                    std::string("TY(") + gname + "): D != 2|G|");
        }
        for (const QuadScalar& d : {QuadScalar(2), QuadScalar(2) + QuadScalar::sqrt_of(3)}) {
            Hypergroup k = two_element(d);
            require(adjoint_subhypergroup(k).size() == 2, "K(d): K_ad != K");
            require(!derived_chain(k).nilpotent, "K(d) must not be nilpotent");
        }
    });

    criterion(7, "markov suite: exact stationarity and a seeded walk (< 5 s)", [] {
        auto t0 = Clock::now();
        std::mt19937 rng(123456);
        auto cat = acceptance_catalog();
        for (int trial = 0; trial < 100; ++trial) {
            const auto& [name, k] = cat[trial % cat.size()];
            AlgebraElement probe = seeded_convex(k, rng);
            MarkovChain mc = transition_matrix(k, probe); // asserts pi T = pi internally
            WeightData wd = weights(k);
            for (int m = 0; m < k.size(); ++m) {
                QuadScalar acc(0);
                for (int i = 0; i < k.size(); ++i) acc += wd.w[i] / wd.total * mc.t[i][m];
                require(acc == wd.w[m] / wd.total, name + ": pi T != pi");
            }
        }
        Hypergroup k2 = two_element(QuadScalar(2));
        WalkResult w = simulate_walk(transition_matrix(k2, basis_element(k2, 1)), 0, 100000, 42);
        require(sign(w.tv_to_haar - QuadScalar(Rational(1, 50))) < 0,
                "tv distance " + std::to_string(w.tv_to_haar.to_double()) + " >= 0.02");
        double dt = seconds_since(t0);
        require(dt < 5.0, "markov suite took " + std::to_string(dt) + " s");
    });

    criterion(8, "axiom oracle equivalence on 200 perturbed tables", [] {
        using testsupport::RawTable;
        std::vector<RawTable> bases;
        bases.push_back(testsupport::raw_two_element(QuadScalar(2)));
        bases.push_back(testsupport::raw_two_element(QuadScalar(2) + QuadScalar::sqrt_of(3)));
        bases.push_back(testsupport::raw_of(to_hypergroup(tambara_yamagami(GroupSpec::parse("Z2")))));
        bases.push_back(testsupport::raw_of(group_hypergroup(GroupSpec::parse("Z2xZ2"))));
        bases.push_back(testsupport::raw_of(to_hypergroup(fibonacci())));
        bases.push_back(testsupport::raw_of(group_hypergroup(GroupSpec::symmetric3())));
        std::mt19937 rng(20260810);
        std::uniform_int_distribution<int> num(-3, 4), den(1, 4), howmany(1, 2);
        int agreed = 0;
        for (int trial = 0; trial < 200; ++trial) {
            RawTable t = bases[trial % bases.size()];
            std::uniform_int_distribution<int> pos(0, static_cast<int>(t.c.size()) - 1);
            int edits = howmany(rng);
            for (int e = 0; e < edits; ++e) {
                QuadScalar v(Rational(num(rng), den(rng)));
                if (t.labels.size() > 2 && trial % 7 == 0)
                    v = v + QuadScalar(Rational(num(rng), den(rng)));
                t.c[pos(rng)] = v;
            }
            ValidationReport lib = check_hypergroup(t.labels, t.inv, t.c);
            std::vector<Violation> a = lib.violations;
            std::vector<Violation> b = testsupport::oracle_validate(t);
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            require(a.empty() == b.empty(), "accept/reject disagreement at trial " +
                                                std::to_string(trial));
            require(a.size() == b.size() &&
                        std::equal(a.begin(), a.end(), b.begin(),
                                   [](const Violation& x, const Violation& y) { return x == y; }),
                    "violation sets differ at trial " + std::to_string(trial));
            ++agreed;
        }
        require(agreed == 200, "not all trials ran");
    });

    criterion(9, "index formulas on the intermediate-net lattice", [] {
        // ambient inclusion: D(K_F) for the near-group ring Z2+2
        QuadScalar dkf = fp_dimension(near_group(GroupSpec::parse("Z2"), 2)).global.exact();
        QuadScalar s3 = QuadScalar::sqrt_of(3);
        require(dkf == QuadScalar(6) + QuadScalar(2) * s3, "D(K_F) != 6 + 2 sqrt3");

        // quotient edge: D(K) with K = K_F // Z2, computed by the quotient module
        Hypergroup kf = to_hypergroup(near_group(GroupSpec::parse("Z2"), 2));
        QuotientResult q = quotient_hypergroup(kf, make_subhypergroup(kf, {0, 1}));
        QuadScalar dk = weights(q.quotient).total;
        require(dk == QuadScalar(3) + s3, "D(K//Z2) != 3 + sqrt3");
        require(index_formulas(dkf, QuadScalar(2), QuadScalar(1)).subnet_index == dk,
                "subnet index of the Z2 edge");

        // the parallel edges multiply to the same total index
        QuadScalar d_a3 = weights(to_hypergroup(su2_level(2))).total; // 4
        require(d_a3 == QuadScalar(4), "D(K_A3) != 4");
        require(QuadScalar(2) * dkf == d_a3 * dk, "lattice edges do not commute");

        // mu-indices down the two routes agree: mu(B^K) = mu(B) D(K)^2
        QuadScalar mu_spin16 = index_formulas(QuadScalar(2), QuadScalar(1), QuadScalar(1)).mu_index;
        require(mu_spin16 == QuadScalar(4), "mu after the Z2 orbifold");
        QuadScalar mu_direct = index_formulas(dkf, QuadScalar(1), QuadScalar(1)).mu_index;
        QuadScalar mu_two_step = index_formulas(dk, QuadScalar(1), mu_spin16).mu_index;
        require(mu_direct == mu_two_step, "mu-index routes disagree");
        require(mu_direct == QuadScalar(48) + QuadScalar(24) * s3, "mu != 48 + 24 sqrt3");
    });

    std::cout << (failures ? "ACCEPTANCE: FAILED " : "ACCEPTANCE: all criteria passed (")
              << (failures ? std::to_string(failures) + " criteria" : "9/9") << (failures ? "" : ")")
              << "\n";
    return failures;
}
