#include "seifert5/errors.hpp"
#include "seifert5/ke.hpp"

#include <doctest.h>

using namespace seifert5;

namespace {

KEAttestations full() {
    const Attestation a{true, "test"};
    return {a, a, a, a};
}

}  // namespace

TEST_CASE("degree-d criterion thresholds") {
    struct Row { long d, a, b, threshold; };
    for (const Row r : {Row{1, 3, 3, 6}, Row{2, 2, 2, 5}, Row{6, 1, 1, 4}, Row{5, 1, 1, 3}}) {
        for (long m = 2; m <= 100; ++m) {
            const auto c = degree_criterion_certify(Integer(r.d), make_rat(r.a), make_rat(r.b), Integer(m), full());
            CHECK((c.verdict == KEVerdict::positive) == (m > r.threshold));
        }
        CHECK(derived_threshold(Integer(r.d), make_rat(r.a), make_rat(r.b), 100) == Integer(r.threshold));
    }
    const auto c = degree_criterion_certify(Integer(1), make_rat(3), make_rat(3), Integer(12), full());
    CHECK(c.inequalities[0].value == make_rat(3, 12));
    CHECK(c.inequalities[1].value == make_rat(9, 12));
    CHECK(c.inequalities[1].bound == make_rat(3, 2));
}

TEST_CASE("missing attestations never give a positive verdict") {
    KEAttestations partial = full();
    partial.special_line.reset();
    CHECK_FALSE(partial.complete());
    CHECK(degree_criterion_certify(Integer(1), make_rat(3), make_rat(3), Integer(50), partial).verdict == KEVerdict::indeterminate);
}

TEST_CASE("elliptic criterion") {
    const Attestation a{true, "test"};
    CHECK(elliptic_criterion_certify(Integer(9), a).verdict == KEVerdict::positive);
    CHECK(elliptic_criterion_certify(Integer(8), a).verdict == KEVerdict::indeterminate);
    CHECK(elliptic_criterion_certify(Integer(100), a).verdict == KEVerdict::positive);
    CHECK(elliptic_criterion_certify(Integer(100), std::nullopt).verdict == KEVerdict::indeterminate);
}

TEST_CASE("catalog data and certificates") {
    const auto q = degree_data(catalog("Q"), "quartic");
    CHECK(q.d == 2);
    CHECK(q.a == 2);
    CHECK(q.b == 2);
    const auto f4 = degree_data(catalog("F4"), "quadric");
    CHECK(f4.d == 4);
    CHECK(f4.a == make_rat(3, 2));
    CHECK(f4.b == 2);
    CHECK(certify_catalog("P123", "sextic", Integer(5)).verdict == KEVerdict::positive);
    CHECK(certify_catalog("P123", "sextic", Integer(4)).verdict == KEVerdict::indeterminate);
    CHECK(certify_catalog("F4", "quadric", Integer(3)).verdict == KEVerdict::positive);
    CHECK(certify_catalog("F5", "quadric", Integer(3)).verdict == KEVerdict::positive);
}

TEST_CASE("threshold catalog re-derives") {
    for (const auto& row : ke_threshold_catalog()) {
        CAPTURE(row.surface);
        if (row.threshold)
            CHECK(derived_threshold(row.d, row.a, row.b, 100) == *row.threshold);
        for (const auto& m : row.listed_m)
            CHECK(certify_catalog(row.surface, row.curve, m).verdict == KEVerdict::positive);
    }
}

TEST_CASE("property: certificates are monotone in m on catalog entries") {
    for (const auto& row : ke_threshold_catalog()) {
        bool was_positive = false;
        for (long m = 2; m <= 60; ++m) {
            if (row.a <= (1 - make_rat(1, m)) * row.b) continue;  // v <= 0: not log del Pezzo
            const bool pos = degree_criterion_certify(row.d, row.a, row.b, Integer(m), full()).verdict == KEVerdict::positive;
            if (was_positive) CHECK(pos);
            was_positive = pos;
        }
    }
}

TEST_CASE("klt predicates") {
    KltInput bad;
    bad.component_coefficients = {make_rat(1)};
    CHECK(klt_point_predicates(bad).verdict == KltVerdict::not_klt);

    KltInput good;
    good.component_coefficients = {make_rat(1, 2)};
    good.points.push_back({"p", false, make_rat(1, 2), {}, {}, {}, {}});
    CHECK(klt_point_predicates(good).verdict == KltVerdict::klt);

    KltInput missing;
    missing.points.push_back({"q", true, {}, {}, {}, {}, {}});
    CHECK(klt_point_predicates(missing).verdict == KltVerdict::indeterminate);

    KltInput via_line;
    via_line.points.push_back({"A1", true, {}, Integer(2), make_rat(1, 4), {}, {}});
    CHECK(klt_point_predicates(via_line).verdict == KltVerdict::klt);
}
