#include "oracles.hpp"
#include "seifert5/batch.hpp"

#include <doctest.h>

using namespace seifert5;

TEST_CASE("parallel group kernel matches the serial reference") {
    std::mt19937_64 rng(5);
    std::vector<Presentation> in;
    for (int i = 0; i < 500; ++i) {
        const auto p = oracle::random_presentation(rng);
        in.push_back({p.generators, oracle::to_matrix(p.relations, p.generators)});
    }
    in.push_back({3, IntMatrix::from_rows({{1, 2}})});  // shape mismatch is reported, not thrown
    const auto serial = groups_from_presentations_serial(in);
    CHECK(serial == groups_from_presentations_parallel(in));
    CHECK_FALSE(serial.back().group);
    CHECK_FALSE(serial.back().error.empty());
}

TEST_CASE("parallel main-series sweep matches the serial reference") {
    const auto serial = main_series_sweep_serial(2, 40);
    CHECK(serial.size() == 39 * 4);
    CHECK(serial == main_series_sweep_parallel(2, 40));
    for (const auto& row : serial) {
        CAPTURE(row.m);
        CAPTURE(row.base);
        CHECK(row.error.empty());
        CHECK(row.constructed == row.admitted);
    }
    CHECK(main_series_sweep_parallel(5, 4).empty());
}
