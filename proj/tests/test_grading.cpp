#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace hyperfuse;

namespace {

// does partition a refine partition b? (every a-block inside one b-block)
bool refines(const std::vector<int>& a, const std::vector<int>& b) {
    std::map<int, int> img;
    for (size_t i = 0; i < a.size(); ++i) {
        auto it = img.find(a[i]);
        if (it == img.end()) img[a[i]] = b[i];
        else if (it->second != b[i]) return false;
    }
    return true;
}

} // namespace

TEST_CASE("adjoint subhypergroup") {
    Hypergroup z6 = group_hypergroup(GroupSpec::parse("Z6"));
    CHECK(adjoint_subhypergroup(z6).members == std::vector<int>{0});

    Hypergroup ty = to_hypergroup(tambara_yamagami(GroupSpec::parse("Z2")));
    CHECK(adjoint_subhypergroup(ty).members == std::vector<int>{0, 1});

    Hypergroup kd = two_element(QuadScalar(2) + QuadScalar::sqrt_of(3));
    CHECK(adjoint_subhypergroup(kd).size() == 2); // whole hypergroup
}

TEST_CASE("universal grading of tambara-yamagami hypergroups") {
    for (const char* g : {"Z2", "Z3", "Z2xZ2"}) {
        GroupSpec gs = GroupSpec::parse(g);
        Hypergroup ty = to_hypergroup(tambara_yamagami(gs));
        GradingData gd = universal_grading(ty);
        CHECK(gd.universal_group.size() == 2); // always Z2
        CHECK(is_group(gd.universal_group));
        // degree 0 component = group part, degree 1 = {rho}
        CHECK(static_cast<int>(gd.components[0].size()) == gs.order());
        CHECK(gd.components[1] == std::vector<int>{gs.order()});
    }
}

TEST_CASE("grading of groups and of K(d)") {
    Hypergroup z4 = group_hypergroup(GroupSpec::parse("Z4"));
    GradingData gd = universal_grading(z4);
    CHECK(gd.universal_group.size() == 4); // G_K = K for groups
    for (const auto& comp : gd.components) CHECK(comp.size() == 1);

    Hypergroup kd = two_element(QuadScalar(3));
    GradingData trivial = universal_grading(kd);
    CHECK(trivial.universal_group.size() == 1);
}

TEST_CASE("derived chains") {
    Hypergroup ty = to_hypergroup(tambara_yamagami(GroupSpec::parse("Z2")));
    DerivedChain dc = derived_chain(ty);
    REQUIRE(dc.chain.size() == 3);
    REQUIRE(dc.groups.size() == 2);
    CHECK(dc.groups[0].size() == 2);
    CHECK(dc.groups[1].size() == 2);
    CHECK(dc.nilpotent);
    CHECK(weights(ty).total == QuadScalar(4)); // 2 * 2 * 1

    DerivedChain abelian = derived_chain(group_hypergroup(GroupSpec::parse("Z2xZ2")));
    CHECK(abelian.nilpotent);
    CHECK(abelian.groups.size() == 1);

    QuadScalar d = QuadScalar(2) + QuadScalar::sqrt_of(3);
    DerivedChain flat = derived_chain(two_element(d));
    CHECK(!flat.nilpotent);
    CHECK(flat.chain.size() == 1);
    CHECK(weights(flat.terminal()).total == QuadScalar(1) + d);

    // TY(Z3): D = 2 * 3, chain groups Z2 then Z3
    DerivedChain ty3 = derived_chain(to_hypergroup(tambara_yamagami(GroupSpec::parse("Z3"))));
    CHECK(ty3.nilpotent);
    REQUIRE(ty3.groups.size() == 2);
    CHECK(ty3.groups[0].size() == 2);
    CHECK(ty3.groups[1].size() == 3);
}

TEST_CASE("maximal subgroup") {
    Hypergroup ng = to_hypergroup(near_group(GroupSpec::parse("Z2"), 2));
    CHECK(maximal_subgroup(ng).members == std::vector<int>{0, 1});

    Hypergroup s3 = group_hypergroup(GroupSpec::symmetric3());
    CHECK(maximal_subgroup(s3).size() == 6);

    Hypergroup fib = to_hypergroup(fibonacci());
    CHECK(maximal_subgroup(fib).members == std::vector<int>{0});

    // two-step decomposition: K^x then K // K^x
    QuotientResult q = quotient_hypergroup(ng, maximal_subgroup(ng));
    CHECK(q.quotient.size() == 2);
    CHECK(weights(q.quotient).w[1] == QuadScalar(2) + QuadScalar::sqrt_of(3));

    // K^x is itself a member of the subhypergroup lattice, and no larger
    // group sits above it
    for (const Hypergroup& k : {ng, to_hypergroup(tambara_yamagami(GroupSpec::parse("Z3")))}) {
        Subhypergroup mx = maximal_subgroup(k);
        bool in_lattice = false;
        for (const Subhypergroup& l : find_subhypergroups(k)) {
            if (l.members == mx.members) in_lattice = true;
            if (is_group(restrict_to(k, l).sub)) CHECK(l.size() <= mx.size());
        }
        CHECK(in_lattice);
    }
}

TEST_CASE("universal grading refines subhypergroup-induced gradings") {
    for (const Hypergroup& k :
         {group_hypergroup(GroupSpec::parse("Z4")), group_hypergroup(GroupSpec::parse("Z6")),
          to_hypergroup(tambara_yamagami(GroupSpec::parse("Z2")))}) {
        GradingData gd = universal_grading(k);
        std::vector<int> universal = gd.assignment;
        for (const Subhypergroup& l : find_subhypergroups(k)) {
            // intermediate subhypergroups containing K_ad give faithful gradings
            bool contains_ad = std::includes(l.members.begin(), l.members.end(),
                                             gd.adjoint.members.begin(), gd.adjoint.members.end());
            if (!contains_ad) continue;
            QuotientResult q = quotient_hypergroup(k, l);
            if (!is_group(q.quotient)) continue;
            CHECK(refines(universal, q.space.class_of));
        }
    }
}
