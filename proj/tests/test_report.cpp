#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "redei8/report.hpp"

using namespace redei8;

TEST_CASE("field report for a worked field") {
    FieldSpec f = FieldSpec::validate({13, 3});
    FieldReport r = build_field_report(f, /*with_oracle=*/true);
    CHECK(r.delta == -39);
    CHECK(r.r2 == 1);
    CHECK(r.r4 == 1);
    CHECK(r.r8 == 0);
    CHECK(r.predicted == std::vector<int>{0});
    CHECK(r.qb_diagonal == std::vector<int>{1});
    CHECK(r.b_matrix == std::vector<int>{1});
    REQUIRE(r.oracle.has_value());
    CHECK(r.oracle->h == 4);
    CHECK(r.oracle->elementary_divisor_2part == std::vector<std::uint64_t>{4});
    CHECK(r.consistent);
}

TEST_CASE("json lines round-trip") {
    for (bool with_oracle : {false, true}) {
        for (const auto &primes : enumerate_field_primes(300, std::nullopt)) {
            FieldSpec f = FieldSpec::validate(primes);
            FieldReport r = build_field_report(f, with_oracle);
            FieldReport back = field_report_from_json_line(to_json_line(r));
            CHECK(back == r);
        }
    }
}

TEST_CASE("json keys appear in the documented order") {
    FieldSpec f = FieldSpec::validate({13, 3});
    std::string line = to_json_line(build_field_report(f, true));
    std::vector<std::string> keys = {"\"primes\"",      "\"delta\"",    "\"r2\"",
                                     "\"r4\"",          "\"r8\"",       "\"rho\"",
                                     "\"predicted\"",   "\"qb_diagonal\"", "\"b_matrix\"",
                                     "\"oracle\"",      "\"consistent\""};
    std::size_t pos = 0;
    for (const std::string &k : keys) {
        std::size_t at = line.find(k, pos);
        REQUIRE(at != std::string::npos);
        pos = at;
    }
    // no oracle key without --oracle
    std::string bare = to_json_line(build_field_report(f, false));
    CHECK(bare.find("\"oracle\"") == std::string::npos);
}

TEST_CASE("field enumeration follows the prime pattern") {
    auto t2 = enumerate_field_primes(100, 2);
    std::vector<std::int64_t> deltas;
    for (const auto &primes : t2) {
        std::int64_t d = -1;
        for (std::uint64_t p : primes)
            d *= static_cast<std::int64_t>(p);
        deltas.push_back(d);
    }
    for (std::int64_t expected : {-15, -39, -55, -87, -91})
        CHECK(std::count(deltas.begin(), deltas.end(), expected) == 1);
    CHECK(std::is_sorted(deltas.rbegin(), deltas.rend()));

    auto tiny = enumerate_field_primes(3, std::nullopt);
    REQUIRE(tiny.size() == 1);
    CHECK(tiny[0] == std::vector<std::uint64_t>{3});

    // every enumerated field validates
    for (const auto &primes : enumerate_field_primes(600, std::nullopt))
        CHECK_NOTHROW(FieldSpec::validate(primes));

    // squarefree filter: 45 = 3^2 * 5 and 75 = 3 * 5^2 are absent
    for (const auto &primes : enumerate_field_primes(100, std::nullopt)) {
        std::int64_t d = 1;
        for (std::uint64_t p : primes)
            d *= static_cast<std::int64_t>(p);
        CHECK(d != 45);
        CHECK(d != 75);
    }
}

TEST_CASE("scan output is identical for 1 and 8 jobs") {
    std::ostringstream a, b;
    ScanSummary sa = run_scan(1500, std::nullopt, false, 1, a);
    ScanSummary sb = run_scan(1500, std::nullopt, false, 8, b);
    CHECK(a.str() == b.str());
    CHECK(sa.field_count == sb.field_count);
    CHECK(sa.field_count > 0);
    CHECK(sa.inconsistent_deltas.empty());
    CHECK(sa.r4_r8_cells == sb.r4_r8_cells);
}

TEST_CASE("scan records parse back and agree with direct construction") {
    std::ostringstream out;
    run_scan(400, std::nullopt, true, 2, out);
    std::istringstream in(out.str());
    std::string line;
    std::size_t n = 0;
    while (std::getline(in, line)) {
        FieldReport r = field_report_from_json_line(line);
        FieldSpec f = FieldSpec::validate(r.primes);
        CHECK(build_field_report(f, true) == r);
        CHECK(r.consistent);
        ++n;
    }
    CHECK(n > 0);
}
