#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace hyperfuse;

namespace {

const char* k2_file = R"(# the easiest nontrivial hypergroup
[hypergroup]
name = K(2)
elements = c0, c1
involution = c0, c1
c1*c1 = c0:1/2, c1:1/2
)";

const char* fib_fusion_file = R"([fusion]
name = fibonacci
elements = e, tau
involution = e, tau
tau*tau = e, tau
)";

} // namespace

TEST_CASE("loading hypergroup files") {
    LoadedObject obj = load_object_from_string(k2_file);
    REQUIRE(!obj.is_fusion());
    CHECK(obj.name == "K(2)");
    const Hypergroup& k = obj.hypergroup();
    CHECK(k.size() == 2);
    CHECK(k.c(1, 1, 0) == QuadScalar(Rational(1, 2)));
    CHECK(k.c(0, 1, 1).is_one()); // unit law filled in
    CHECK(weights(k).total == QuadScalar(3));
}

TEST_CASE("loading fusion files") {
    LoadedObject obj = load_object_from_string(fib_fusion_file);
    REQUIRE(obj.is_fusion());
    const FusionRing& f = obj.fusion();
    CHECK(f.n(1, 1, 0) == 1);
    CHECK(f.n(1, 1, 1) == 1);
    CHECK(f.n(0, 1, 1) == 1);
}

TEST_CASE("quadratic literals with a declared field") {
    std::string text = R"([hypergroup]
field = 3
elements = c0, c1
involution = c0, c1
c1*c1 = c0:(2-1*sqrt(3))/1, c1:(-1+1*sqrt(3))/1
)";
    LoadedObject obj = load_object_from_string(text);
    const Hypergroup& k = obj.hypergroup();
    CHECK(k.field_radicand() == 3);
    CHECK(weights(k).w[1] == QuadScalar(2) + QuadScalar::sqrt_of(3));

    // mismatched radicand is rejected
    std::string bad = text;
    bad.replace(bad.find("field = 3"), 9, "field = 5");
    CHECK_THROWS_AS(load_object_from_string(bad), field_mismatch);
}

TEST_CASE("diagnostics name the offending construct") {
    // missing product
    std::string missing = R"([hypergroup]
elements = c0, c1, c2
involution = c0, c2, c1
c1*c1 = c0:1/2, c1:1/4, c2:1/4
c1*c2 = c0
c2*c2 = c1
)";
    try {
        load_object_from_string(missing);
        FAIL("expected parse error");
    } catch (const parse_error& e) {
        CHECK(e.message().find("c2*c1") != std::string::npos);
    }

    // unknown element in a product
    CHECK_THROWS_AS(load_object_from_string("[hypergroup]\nelements = a\ninvolution = a\nb*b = a\n"),
                    parse_error);
    // bad scalar literal carries the line
    try {
        load_object_from_string(
            "[hypergroup]\nelements = a, b\ninvolution = a, b\nb*b = a:1/0\n");
        FAIL("expected parse error");
    } catch (const parse_error& e) {
        CHECK(e.line() == 4);
    }
    // duplicate product
    CHECK_THROWS_AS(
        load_object_from_string(
            "[hypergroup]\nelements = a, b\ninvolution = a, b\nb*b = a\nb*b = a\n"),
        parse_error);
    // axiom violations surface as validation errors
    CHECK_THROWS_AS(
        load_object_from_string(
            "[hypergroup]\nelements = a, b\ninvolution = a, b\nb*b = a:1/3, b:1/3\n"),
        validation_error);
}

TEST_CASE("save then load is the identity on objects") {
    std::vector<LoadedObject> objs;
    objs.push_back({"K", to_hypergroup(near_group(GroupSpec::parse("Z2"), 2))});
    objs.push_back({"fib", fibonacci()});
    objs.push_back({"s3", group_hypergroup(GroupSpec::symmetric3())});
    objs.push_back({"hi", haagerup_izumi(GroupSpec::parse("Z3"))});
    for (const LoadedObject& obj : objs) {
        std::string text = save_object_to_string(obj);
        LoadedObject back = load_object_from_string(text);
        CHECK(back.name == obj.name);
        REQUIRE(back.is_fusion() == obj.is_fusion());
        if (obj.is_fusion()) {
            CHECK(back.fusion().table() == obj.fusion().table());
            CHECK(back.fusion().labels() == obj.fusion().labels());
        } else {
            CHECK(back.hypergroup().same_structure(obj.hypergroup()));
            CHECK(back.hypergroup().labels() == obj.hypergroup().labels());
        }
        // canonical files reproduce themselves byte for byte
        CHECK(save_object_to_string(back) == text);
    }
}

TEST_CASE("analysis reports round-trip through json") {
    AnalysisReport rep;
    rep.subject = "demo";
    rep.status = AnalysisReport::Status::ok;
    auto& kv = rep.section(ReportSection::key_values("values"));
    kv.add("plain", "hello");
    kv.add("weight", ReportValue::of(QuadScalar(2) + QuadScalar::sqrt_of(3)));
    auto& tab = rep.section(ReportSection::table("tab", {"a", "b"}));
    tab.add_row({ReportValue::plain("x"), ReportValue::of(Rational(1, 3))});
    rep.section(ReportSection::verdict("check", true, "fine"));

    nlohmann::json j = to_json(rep);
    AnalysisReport back = report_from_json(j);
    CHECK(back == rep);
    CHECK(to_json(back) == j);

    // scalar values embed both representations
    CHECK(j["sections"][0]["entries"][1]["value"]["exact"] == "(2+1*sqrt(3))/1");
    double approx = j["sections"][0]["entries"][1]["value"]["approx"].get<double>();
    CHECK(std::abs(approx - 3.73205080757) < 1e-9);
}
