#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "test_support.hpp"

using namespace hyperfuse;

namespace {

AlgebraElement rand_convex(const Hypergroup& k, std::mt19937& rng) {
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

TEST_CASE("character table of K(d) is the fourier matrix") {
    for (const QuadScalar& d : {QuadScalar(2), QuadScalar(2) + QuadScalar::sqrt_of(3),
                                parse_scalar("(3+1*sqrt(5))/2")}) {
        Hypergroup k = two_element(d);
        CharacterTable ct = character_table(k);
        REQUIRE(ct.exact);
        REQUIRE(ct.rows.size() == 2);
        CHECK(ct.rows[0][0].exact().is_one());
        CHECK(ct.rows[0][1].exact().is_one());
        CHECK(ct.rows[1][0].exact().is_one());
        CHECK(ct.rows[1][1].exact() == -(QuadScalar(1) / d));
        // weighted orthogonality: 1*1*1 + d*1*(-1/d) = 0
        WeightData wd = weights(k);
        QuadScalar dot(0);
        for (int i = 0; i < 2; ++i)
            dot += wd.w[i] * ct.rows[0][i].exact() * ct.rows[1][i].exact();
        CHECK(dot.is_zero());
    }
}

TEST_CASE("character tables of groups and small instances") {
    CharacterTable z2 = character_table(group_hypergroup(GroupSpec::parse("Z2")));
    REQUIRE(z2.rows.size() == 2);
    CHECK(z2.rows[1][1].exact() == QuadScalar(-1));

    Hypergroup fib = to_hypergroup(fibonacci());
    CharacterTable cf = character_table(fib);
    REQUIRE(cf.exact);
    // chi1(tau) = -1/phi^2 = (sqrt5 - 3)/2; and chi satisfies the defining quadratic
    QuadScalar chi = cf.rows[1][1].exact();
    CHECK(chi == parse_scalar("(-3+1*sqrt(5))/2"));
    CHECK(chi * chi == fib.c(1, 1, 0) + fib.c(1, 1, 1) * chi);

    Hypergroup ty = to_hypergroup(tambara_yamagami(GroupSpec::parse("Z2")));
    CharacterTable ct = character_table(ty);
    REQUIRE(ct.exact);
    REQUIRE(ct.rows.size() == 3);
    // rows: (1,1,1), (1,1,-1), (1,-1,0)
    CHECK(ct.rows[1][1].exact().is_one());
    CHECK(ct.rows[1][2].exact() == QuadScalar(-1));
    CHECK(ct.rows[2][1].exact() == QuadScalar(-1));
    CHECK(ct.rows[2][2].exact().is_zero());
}

TEST_CASE("unsupported character situations") {
    CHECK_THROWS_AS(character_table(group_hypergroup(GroupSpec::parse("Z3"))),
                    unsupported_field); // complex characters
    CHECK_THROWS_AS(character_table(group_hypergroup(GroupSpec::symmetric3())),
                    not_commutative);
}

TEST_CASE("interval character table of the z7 cosine scheme") {
    Hypergroup c7 = testsupport::c7_cosine_scheme();
    CharacterTable ct = character_table(c7); // certified internally
    CHECK(!ct.exact);
    REQUIRE(ct.rows.size() == 4);
    // the three nontrivial rows carry cos(2 pi k/7) values for k = 1, 2, 3
    // at the columns 1..3; check the multiset via the k=1 value per row.
    std::vector<double> vals;
    for (int m = 1; m < 4; ++m) {
        IntervalScalar iv = ct.rows[m][1].enclosure().refined(Rational(1, 1000000000));
        vals.push_back(iv.to_double());
    }
    std::sort(vals.begin(), vals.end());
    CHECK(std::abs(vals[0] - std::cos(6 * M_PI / 7)) < 1e-6);
    CHECK(std::abs(vals[1] - std::cos(4 * M_PI / 7)) < 1e-6);
    CHECK(std::abs(vals[2] - std::cos(2 * M_PI / 7)) < 1e-6);

    CHECK_THROWS_AS(dual_hypergroup(ct), unsupported_field);
}

TEST_CASE("dual hypergroups") {
    // K(d) is self-dual
    for (const QuadScalar& d : {QuadScalar(2), QuadScalar(2) + QuadScalar::sqrt_of(3)}) {
        Hypergroup k = two_element(d);
        DualResult dr = dual_hypergroup(character_table(k));
        REQUIRE(dr.is_hypergroup);
        CHECK(dr.dual.same_structure(k));
    }

    Hypergroup fib = to_hypergroup(fibonacci());
    DualResult df = dual_hypergroup(character_table(fib));
    REQUIRE(df.is_hypergroup);
    CHECK(df.dual.same_structure(fib));

    // abelian 2-groups: pontryagin duality
    Hypergroup v4 = group_hypergroup(GroupSpec::parse("Z2xZ2"));
    DualResult dv = dual_hypergroup(character_table(v4));
    REQUIRE(dv.is_hypergroup);
    CHECK(is_group(dv.dual));
    CHECK(dv.dual.size() == 4);
    CHECK(dv.dual.same_structure(v4));

    Hypergroup ty = to_hypergroup(tambara_yamagami(GroupSpec::parse("Z2")));
    DualResult dt = dual_hypergroup(character_table(ty));
    REQUIRE(dt.is_hypergroup);
    CHECK(dt.dual.same_structure(ty));
}

TEST_CASE("only the trivial character keeps all values at 1 or above") {
    std::vector<Hypergroup> instances;
    instances.push_back(two_element(QuadScalar(2)));
    instances.push_back(two_element(QuadScalar(2) + QuadScalar::sqrt_of(3)));
    instances.push_back(to_hypergroup(fibonacci()));
    instances.push_back(to_hypergroup(tambara_yamagami(GroupSpec::parse("Z2"))));
    instances.push_back(group_hypergroup(GroupSpec::parse("Z2xZ2")));
    for (const Hypergroup& k : instances) {
        CharacterTable ct = character_table(k);
        REQUIRE(ct.exact);
        for (size_t m = 1; m < ct.rows.size(); ++m) {
            bool small_or_negative = false;
            for (int i = 0; i < k.size(); ++i) {
                const QuadScalar& v = ct.rows[m][i].exact();
                if (sign(v) <= 0 || abs(v) < QuadScalar(1)) small_or_negative = true;
            }
            CHECK(small_or_negative);
        }
    }
}

TEST_CASE("transition matrices") {
    Hypergroup k2 = two_element(QuadScalar(2));
    MarkovChain mc = transition_matrix(k2, basis_element(k2, 1));
    CHECK(mc.t[0][0].is_zero());
    CHECK(mc.t[0][1].is_one());
    CHECK(mc.t[1][0] == QuadScalar(Rational(1, 2)));
    CHECK(mc.t[1][1] == QuadScalar(Rational(1, 2)));

    MarkovChain id = transition_matrix(k2, basis_element(k2, 0));
    CHECK(id.t[0][0].is_one());
    CHECK(id.t[1][1].is_one());

    // probe e_K: every row is the Haar distribution
    Hypergroup ty = to_hypergroup(tambara_yamagami(GroupSpec::parse("Z2")));
    MarkovChain he = transition_matrix(ty, haar_element(ty));
    WeightData wd = weights(ty);
    for (int k = 0; k < ty.size(); ++k)
        for (int m = 0; m < ty.size(); ++m) CHECK(he.t[k][m] == wd.w[m] / wd.total);

    AlgebraElement bad = basis_element(ty, 0);
    bad.coeffs[1] = QuadScalar(1); // sums to 2
    CHECK_THROWS_AS(transition_matrix(ty, bad), error);
}

TEST_CASE("composite probes compose transition matrices") {
    Hypergroup s3 = group_hypergroup(GroupSpec::symmetric3());
    std::mt19937 rng(5);
    for (int iter = 0; iter < 10; ++iter) {
        AlgebraElement x = rand_convex(s3, rng), y = rand_convex(s3, rng);
        MarkovChain tx = transition_matrix(s3, x), ty = transition_matrix(s3, y);
        MarkovChain txy = transition_matrix(s3, multiply(x, y));
        CHECK(txy.t == mat_mul(tx.t, ty.t));
    }
}

TEST_CASE("stationary distributions") {
    Hypergroup k2 = two_element(QuadScalar(2));
    auto pi = stationary_distribution(transition_matrix(k2, basis_element(k2, 1)));
    CHECK(pi[0] == QuadScalar(Rational(1, 3)));
    CHECK(pi[1] == QuadScalar(Rational(2, 3)));

    QuadScalar d = QuadScalar(2) + QuadScalar::sqrt_of(3);
    Hypergroup kd = two_element(d);
    auto pid = stationary_distribution(transition_matrix(kd, basis_element(kd, 1)));
    CHECK(pid[1] == d / (QuadScalar(1) + d));

    // TY(Z2) with probe (c_g + c_rho)/2: haar weights (1,1,2)/4
    Hypergroup ty = to_hypergroup(tambara_yamagami(GroupSpec::parse("Z2")));
    AlgebraElement probe = zero_element(ty);
    probe.coeffs[1] = QuadScalar(Rational(1, 2));
    probe.coeffs[2] = QuadScalar(Rational(1, 2));
    auto pit = stationary_distribution(transition_matrix(ty, probe));
    CHECK(pit[0] == QuadScalar(Rational(1, 4)));
    CHECK(pit[1] == QuadScalar(Rational(1, 4)));
    CHECK(pit[2] == QuadScalar(Rational(1, 2)));

    // identity chain is reducible; closed classes are the singletons
    try {
        stationary_distribution(transition_matrix(k2, basis_element(k2, 0)));
        FAIL("expected reducible_error");
    } catch (const reducible_error& e) {
        CHECK(e.closed_classes.size() == 2);
    }
}

TEST_CASE("haar stationarity for random convex probes") {
    std::mt19937 rng(31337);
    std::vector<Hypergroup> cat;
    cat.push_back(two_element(QuadScalar(2)));
    cat.push_back(to_hypergroup(fibonacci()));
    cat.push_back(to_hypergroup(tambara_yamagami(GroupSpec::parse("Z3"))));
    cat.push_back(group_hypergroup(GroupSpec::symmetric3()));
    for (const Hypergroup& k : cat)
        for (int iter = 0; iter < 15; ++iter)
            CHECK_NOTHROW(transition_matrix(k, rand_convex(k, rng))); // asserts pi T = pi inside
}

TEST_CASE("random walks are deterministic and converge") {
    Hypergroup k2 = two_element(QuadScalar(2));
    MarkovChain mc = transition_matrix(k2, basis_element(k2, 1));

    CHECK_THROWS_AS(simulate_walk(mc, 0, 0, 1), error);

    WalkResult w = simulate_walk(mc, 0, 100000, 42);
    CHECK(w.trajectory.size() == 100001);
    CHECK(sign(w.tv_to_haar - QuadScalar(Rational(1, 50))) < 0); // tv < 0.02

    WalkResult w2 = simulate_walk(mc, 0, 100000, 42);
    CHECK(w.trajectory == w2.trajectory);
    WalkResult w3 = simulate_walk(mc, 0, 1000, 43);
    CHECK(w3.trajectory != std::vector<int>(w.trajectory.begin(), w.trajectory.begin() + 1001));
}

TEST_CASE("one-step haar sampling passes a chi-square sanity check") {
    Hypergroup ty = to_hypergroup(tambara_yamagami(GroupSpec::parse("Z2")));
    MarkovChain mc = transition_matrix(ty, haar_element(ty));
    const long trials = 100000;
    WalkResult w = simulate_walk(mc, 0, trials, 20260810);
    // expected haar frequencies (1/4, 1/4, 1/2)
    double expected[3] = {trials / 4.0, trials / 4.0, trials / 2.0};
    double chi2 = 0;
    for (int i = 0; i < 3; ++i) {
        double obs = to_double(w.empirical[i]) * trials;
        chi2 += (obs - expected[i]) * (obs - expected[i]) / expected[i];
    }
    CHECK(chi2 < 13.8155); // chi-square 0.999 quantile, 2 degrees of freedom
}
