#include "doctest.h"

#include "sharpmilnor/catalog.hpp"
#include "sharpmilnor/certify.hpp"

#include <algorithm>

using namespace sharpmilnor;

namespace {
PolarContext make_polar(const SharpFrame& f) { return PolarContext(f, choose_polar(f)); }
}  // namespace

TEST_CASE("quick checks") {
    SUBCASE("t1 has empty baseline") {
        SharpFrame f = canonical_frame(fixture("t1"));
        CHECK(baseline_orders(f).empty());
        auto quick = quick_checks(f);
        REQUIRE(quick.has_value());
        CHECK(quick->allowed_orders.empty());
        CHECK(quick->proven);
    }
    SUBCASE("three generic lines") {
        Arrangement tri = make_projective({ProjLine::make(Rat(1), Rat(0), Rat(0)),
                                           ProjLine::make(Rat(0), Rat(1), Rat(0)),
                                           ProjLine::make(Rat(1), Rat(1), Rat(-1))});
        SharpFrame f = build_frame(tri, find_sharp_pairs(tri)[0], 0, 1);
        CHECK(f.p0_multiplicity() == 2);
        CHECK(quick_checks(f).has_value());
    }
    SUBCASE("braid6 baseline is {3} and quick checks abstain") {
        SharpFrame f = canonical_frame(fixture("braid6"));
        CHECK(baseline_orders(f) == std::set<long long>{3});
        CHECK_FALSE(quick_checks(f).has_value());
    }
}

TEST_CASE("final-point condition") {
    SUBCASE("example0 passes") {
        SharpFrame f = canonical_frame(fixture("example0"));
        CHECK(cond_last(f, removable_set(f).a0));
    }
    SUBCASE("example4 chart fails, flipped chart passes") {
        SharpFrame f1 = canonical_frame(fixture("example4"), 1);
        CHECK_FALSE(cond_last(f1, removable_set(f1).a0));
        SharpFrame f2 = canonical_frame(fixture("example4"), -1);
        CHECK(cond_last(f2, removable_set(f2).a0));
        CHECK(cond_last(f2, removable_set(f2).a03));
    }
    SUBCASE("empty family is vacuously true") {
        SharpFrame f = canonical_frame(fixture("t1"));
        CHECK(cond_last(f, {}));
    }
}

TEST_CASE("frame certificates") {
    SUBCASE("example0 settles through the no-cycle rule") {
        SharpFrame f = canonical_frame(fixture("example0"));
        PolarContext polar = make_polar(f);
        Certificate cert = certify_frame(polar);
        CHECK(cert.allowed_orders.empty());
        CHECK(cert.proven);
    }
    SUBCASE("braid6 narrows to order three") {
        SharpFrame f = canonical_frame(fixture("braid6"));
        PolarContext polar = make_polar(f);
        Certificate cert = certify_frame(polar);
        CHECK(cert.allowed_orders == std::set<long long>{3});
    }
    SUBCASE("example4 flipped frame reaches triviality") {
        SharpFrame f = canonical_frame(fixture("example4"), -1);
        PolarContext polar = make_polar(f);
        Certificate cert = certify_frame(polar);
        CHECK(cert.allowed_orders.empty());
        CHECK(cert.proven);
    }
}

TEST_CASE("full reports") {
    SUBCASE("example0") {
        MonodromyReport report = certify(fixture("example0").arrangement);
        CHECK(report.combined.allowed_orders.empty());
        for (const auto& [d, beta] : report.betti.betas) CHECK(beta == 0);
        CHECK(report.consistent);
    }
    SUBCASE("braid6 keeps order three and matches the oracle") {
        MonodromyReport report = certify(fixture("braid6").arrangement);
        CHECK(report.combined.allowed_orders.count(3));
        CHECK(report.betti.beta(3) == 1);
        CHECK(report.betti.b1_fiber == 7);
        CHECK(report.consistent);
    }
    SUBCASE("example4 combines to triviality") {
        MonodromyReport report = certify(fixture("example4").arrangement);
        CHECK(report.combined.allowed_orders.empty());
        for (const auto& [d, beta] : report.betti.betas) CHECK(beta == 0);
        CHECK(report.consistent);
    }
    SUBCASE("t1") {
        MonodromyReport report = certify(fixture("t1").arrangement);
        CHECK(report.combined.allowed_orders.empty());
        CHECK(report.consistent);
    }
}

TEST_CASE("certificates never widen across frames") {
    MonodromyReport report = certify(fixture("example4").arrangement);
    for (const auto& fr : report.frames)
        for (long long d : report.combined.allowed_orders)
            CHECK(fr.certificate.allowed_orders.count(d));
}

TEST_CASE("report json carries the schema fields") {
    MonodromyReport report = certify(fixture("t1").arrangement);
    std::string json = report_json(report);
    for (const char* key : {"\"n\"", "\"sharp_pairs\"", "\"frames\"", "\"betti\"",
                            "\"b1_fiber\"", "\"consistent\"", "\"combined_allowed\""})
        CHECK(json.find(key) != std::string::npos);
}

TEST_CASE("non-sharp input is rejected") {
    // Eight lines whose crossings land on both sides of every candidate pair.
    std::vector<ProjLine> lines = {
        ProjLine::make(Rat(1), Rat(1, 2), Rat(-1, 2)), ProjLine::make(Rat(1), Rat(1), Rat(3, 4)),
        ProjLine::make(Rat(1), Rat(3, 2), Rat(-3, 2)), ProjLine::make(Rat(1), Rat(-1, 4), Rat(1, 2)),
        ProjLine::make(Rat(1), Rat(-1, 2), Rat(-1, 2)), ProjLine::make(Rat(1), Rat(1, 3), Rat(-4, 3)),
        ProjLine::make(Rat(1), Rat(-1, 3), Rat(1)),     ProjLine::make(Rat(1), Rat(0), Rat(1, 2)),
    };
    Arrangement arr = make_projective(std::move(lines));
    REQUIRE(find_sharp_pairs(arr).empty());
    CHECK_THROWS_AS(certify(arr), std::invalid_argument);
}
