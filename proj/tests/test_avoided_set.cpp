#include <doctest.h>

#include <avoidance/avoided_set.hpp>
#include <avoidance/corpus.hpp>

#include <map>

#include "support/quadratic_oracle.hpp"

using namespace avoidance;

namespace {

ConvergentTable table_for(const char* spec) { return ConvergentTable(parse_cf(spec)); }

std::vector<std::int64_t> theo_values(const char* spec, std::int64_t limit) {
    return avoided_set_theoretical(parse_cf(spec), limit).values();
}

std::vector<std::int64_t> brute(const char* spec, std::int64_t limit) {
    PartitionPrefix p = build_partition(parse_cf(spec), limit - 1);
    return avoided_set_bruteforce(p, limit);
}

}  // namespace

TEST_CASE("doubles criterion") {
    auto r2 = table_for("[1;(2)]");
    CHECK(double_is_avoided(r2, 0));        // p_0 = 1, case (iii): 2 is avoided
    CHECK_FALSE(double_is_avoided(r2, 1));  // p_1 = 3, p_2 = 7 odd, a_2 = 2 < 3

    auto onethree = table_for("[1;(3)]");
    CHECK_FALSE(double_is_avoided(onethree, 1));  // p_1 = 4 even: parity gate
    CHECK(double_is_avoided(onethree, 2));        // p_2 = 13, p_3 = 43 odd, a_3 = 3
    CHECK(double_is_avoided(onethree, 3));        // p_3 = 43, p_4 = 142 even, a_4 = 3

    CHECK_THROWS_AS(double_is_avoided(r2, -1), std::invalid_argument);
}

TEST_CASE("intermediates criterion") {
    auto r2 = table_for("[1;(2)]");
    CHECK(intermediate_is_avoided(r2, 0, 1));  // 4 = p_0 + p_1, p_0 odd
    CHECK(intermediate_is_avoided(r2, 1, 1));  // 10 = p_1 + p_2
    CHECK_THROWS_AS(intermediate_is_avoided(r2, 0, 2), std::invalid_argument);
    CHECK_THROWS_AS(intermediate_is_avoided(r2, 0, 0), std::invalid_argument);

    auto onethree = table_for("[1;(3)]");
    CHECK_FALSE(intermediate_is_avoided(onethree, 1, 1));  // 17 = p_1 + p_2 fails all three
    CHECK(intermediate_is_avoided(onethree, 0, 1));        // 5
    CHECK(intermediate_is_avoided(onethree, 0, 2));        // 9 = p_0 + 2 p_1, p_2 odd

    // n = -1 matters: x = 4 = p_{-1} + 3 p_0 for [1;4,(2)], case (iii)
    auto wide = table_for("[1;4,(2)]");
    CHECK(intermediate_is_avoided(wide, -1, 3));
    CHECK_FALSE(intermediate_is_avoided(wide, -1, 2));
}

TEST_CASE("theoretical avoided sets match hand/oracle data") {
    CHECK(theo_values("[1;(1)]", 100) ==
          std::vector<std::int64_t>{1, 2, 3, 5, 8, 13, 21, 34, 55, 89});
    CHECK(theo_values("[1;(2)]", 50) ==
          std::vector<std::int64_t>{1, 2, 3, 4, 7, 10, 17, 24, 41});
    CHECK(theo_values("[1;(2)]", 200) ==
          std::vector<std::int64_t>{1, 2, 3, 4, 7, 10, 17, 24, 41, 58, 99, 140});
    CHECK(theo_values("[1;(3)]", 200) ==
          std::vector<std::int64_t>{1, 2, 4, 5, 9, 13, 26, 30, 43, 56, 86, 142, 185});
    CHECK(theo_values("[1;4,(2)]", 60) ==
          std::vector<std::int64_t>{1, 2, 4, 5, 6, 11, 16, 27, 38});

    for (const char* spec : {"[1;(1)]", "[2;(2)]", "[5;1,(3)]"})
        CHECK(theo_values(spec, 1) == std::vector<std::int64_t>{1});
}

TEST_CASE("structural kinds carry their witnesses") {
    auto set = avoided_set_theoretical(parse_cf("[1;(2)]"), 50);
    std::map<std::int64_t, AvoidedEntry> by_value;
    for (const auto& e : set.entries) by_value[e.value] = e;

    CHECK(by_value[1].kind == AvoidedKind::ConvergentNumerator);
    CHECK(by_value[1].n == 0);
    CHECK(by_value[2].kind == AvoidedKind::DoubleOfConvergent);
    CHECK(by_value[2].n == 0);
    CHECK(by_value[3].kind == AvoidedKind::ConvergentNumerator);
    CHECK(by_value[4].kind == AvoidedKind::IntermediateNumerator);
    CHECK(by_value[4].n == 0);
    CHECK(by_value[4].k == 1);
    CHECK(by_value[10].kind == AvoidedKind::IntermediateNumerator);
    CHECK(by_value[10].n == 1);
    CHECK(by_value[24].kind == AvoidedKind::IntermediateNumerator);
    CHECK(by_value[24].n == 2);
    CHECK(by_value[41].kind == AvoidedKind::ConvergentNumerator);
    CHECK(by_value[41].n == 4);

    // Fibonacci: 2 = p_1 wins over 2 = 2 p_0
    auto fib = avoided_set_theoretical(parse_cf("[1;(1)]"), 100);
    for (const auto& e : fib.entries) CHECK(e.kind == AvoidedKind::ConvergentNumerator);

    // [1;4,(2)]: 4 is the n = -1 intermediate with k = a_1 - 1
    auto wide = avoided_set_theoretical(parse_cf("[1;4,(2)]"), 60);
    std::map<std::int64_t, AvoidedEntry> wide_by_value;
    for (const auto& e : wide.entries) wide_by_value[e.value] = e;
    CHECK(wide_by_value[4].kind == AvoidedKind::IntermediateNumerator);
    CHECK(wide_by_value[4].n == -1);
    CHECK(wide_by_value[4].k == 3);
}

TEST_CASE("membership test scans even witnesses") {
    CFSpec r2 = parse_cf("[1;(2)]");
    Int witness = 0;
    CHECK(membership_test(r2, 4));
    CHECK_FALSE(membership_test(r2, 6, &witness));
    CHECK(witness == 10);
    CHECK_FALSE(membership_test(parse_cf("[1;(1)]"), 4, &witness));
    CHECK(witness == 2);  // E(2) = +0.38 sits between 0 and E(4) = +0.76

    CHECK(membership_test(r2, 1));
    CHECK(membership_test(r2, 2));
    CHECK_THROWS_AS(membership_test(parse_cf("[1;2,3]"), 5), std::invalid_argument);
}

TEST_CASE("brute force oracle equals the closed form") {
    CHECK(brute("[1;(1)]", 1000) ==
          std::vector<std::int64_t>{1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144, 233, 377, 610,
                                    987});
    CHECK(brute("[1;(2)]", 200) == theo_values("[1;(2)]", 200));
    CHECK(brute("[1;(3)]", 200) == theo_values("[1;(3)]", 200));
    CHECK(brute("[1;4,(2)]", 60) == theo_values("[1;4,(2)]", 60));
    CHECK(brute("[2;(2)]", 150) == theo_values("[2;(2)]", 150));
    CHECK(brute("[3;(1,2)]", 150) == theo_values("[3;(1,2)]", 150));
}

TEST_CASE("1 and 2 are avoided vacuously, and sets grow consistently") {
    for (const char* spec : {"[1;(1)]", "[1;(2)]", "[2;(2)]", "[1;2,(3,4)]"}) {
        auto small = brute(spec, 2);
        CHECK(small == std::vector<std::int64_t>{1, 2});

        auto s1 = theo_values(spec, 300);
        auto s2 = theo_values(spec, 900);
        REQUIRE(s1.size() <= s2.size());
        for (std::size_t i = 0; i < s1.size(); ++i) CHECK(s1[i] == s2[i]);
    }
}

TEST_CASE("three pipelines agree on a sampled spec") {
    CFSpec cf = parse_cf("[2;1,(4,2)]");
    std::int64_t limit = 400;
    auto theo = avoided_set_theoretical(cf, limit).values();
    auto from_brute = brute("[2;1,(4,2)]", limit);
    CHECK(theo == from_brute);

    ErrorEngine engine(normalize_to_unit_interval(cf).cf);
    std::vector<std::int64_t> member;
    for (std::int64_t x = 1; x <= limit; ++x)
        if (membership_test(engine, x)) member.push_back(x);
    CHECK(member == theo);
}

TEST_CASE("pipelines agree on an independent corpus seed") {
    for (const CFSpec& cf : corpus_generate(7, 5)) {
        auto theo = avoided_set_theoretical(cf, 300).values();
        auto from_brute = avoided_set_bruteforce(build_partition(cf, 299), 300);
        CHECK(theo == from_brute);
    }
}

TEST_CASE("parallel brute force equals the serial reference") {
    PartitionPrefix p = build_partition(parse_cf("[1;2,(3,4)]"), 1500);
    CHECK(avoided_set_bruteforce(p, 1500) == avoided_set_bruteforce_serial(p, 1500));
}

TEST_CASE("input contracts") {
    CHECK_THROWS_AS(avoided_set_theoretical(parse_cf("[1;2,3]"), 100),
                    std::invalid_argument);
    PartitionPrefix p = build_partition(parse_cf("[1;(1)]"), 10);
    CHECK_THROWS_AS(avoided_set_bruteforce(p, 12), std::invalid_argument);
    CHECK_NOTHROW(avoided_set_bruteforce(p, 11));
}
