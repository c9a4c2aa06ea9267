#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "permclass/enumerator.hpp"
#include "permclass/structure.hpp"

using namespace permclass;

namespace {

Permutation P(const std::string& s) { return parse_permutation(s); }

template <typename F>
void for_all_permutations(std::size_t n, F&& fn) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    do {
        fn(Permutation(v));
    } while (std::next_permutation(v.begin(), v.end()));
}

template <typename F>
void for_avoiders_1324(std::size_t n, F&& fn) {
    enumerate_avoiders(P("1324"), n, std::nullopt, fn);
}

bool boundary_ordered(const Permutation& p) {
    const std::size_t n = p.size();
    return n >= 2 && p.at(1) < p.at(n) &&
           p.position_of(1) < p.position_of(static_cast<int>(n));
}

}  // namespace

TEST_CASE("boundary deletions") {
    const Permutation p = P("245169783");
    CHECK(to_string(apply_boundary_deletion(p, BoundaryDeletion::DelMinValue)) ==
          "13458672");
    CHECK(to_string(apply_boundary_deletion(p, BoundaryDeletion::DelMaxValue)) ==
          "24516783");
    CHECK(to_string(apply_boundary_deletion(p, BoundaryDeletion::DelFirstEntry)) ==
          "34158672");
    CHECK(to_string(apply_boundary_deletion(p, BoundaryDeletion::DelLastEntry)) ==
          "23415867");
    CHECK(apply_boundary_deletion(Permutation{}, BoundaryDeletion::DelMinValue) ==
          Permutation{});
    CHECK(std::string(boundary_deletion_name(BoundaryDeletion::DelMinValue)) == "del-min");
    CHECK(std::string(boundary_deletion_name(BoundaryDeletion::DelMaxValue)) == "del-max");
    CHECK(std::string(boundary_deletion_name(BoundaryDeletion::DelFirstEntry)) ==
          "del-first-entry");
    CHECK(std::string(boundary_deletion_name(BoundaryDeletion::DelLastEntry)) ==
          "del-last-entry");
}

TEST_CASE("classify_boundary examples") {
    const auto almost = classify_boundary(P("245169783"));
    CHECK(almost.almost_decomposable());
    CHECK(almost.witnesses == std::set<BoundaryDeletion>{BoundaryDeletion::DelMinValue,
                                                         BoundaryDeletion::DelLastEntry});

    CHECK(classify_boundary(P("3612745")).neither());
    CHECK(classify_boundary(P("3517264")).neither());

    const auto decomp = classify_boundary(P("23154"));
    CHECK(decomp.decomposable());
    REQUIRE(decomp.comps.size() == 2);
    CHECK(to_string(decomp.comps[0]) == "231");
    CHECK(to_string(decomp.comps[1]) == "21");

    CHECK(classify_boundary(Permutation{}).neither());
    CHECK(classify_boundary(P("1")).neither());
    CHECK(classify_boundary(P("21")).neither());
    CHECK(classify_boundary(identity(4)).decomposable());
}

TEST_CASE("witness sets are exact") {
    for_all_permutations(6, [](const Permutation& p) {
        const auto cls = classify_boundary(p);
        if (!cls.almost_decomposable()) return;
        CHECK(component_count(p) == 1);
        CHECK_FALSE(cls.witnesses.empty());
        for (BoundaryDeletion d :
             {BoundaryDeletion::DelMinValue, BoundaryDeletion::DelMaxValue,
              BoundaryDeletion::DelFirstEntry, BoundaryDeletion::DelLastEntry}) {
            CHECK(cls.witnesses.count(d) ==
                  (is_decomposable(apply_boundary_deletion(p, d)) ? 1 : 0));
        }
    });
}

TEST_CASE("sum form of decomposable 1324-avoiders") {
    auto form = sum_form_1324(P("2143"));
    CHECK(to_string(form.head) == "21");
    CHECK(form.middle_count == 0);
    CHECK(to_string(form.tail) == "21");

    form = sum_form_1324(P("123"));
    CHECK(to_string(form.head) == "1");
    CHECK(form.middle_count == 1);
    CHECK(to_string(form.tail) == "1");

    form = sum_form_1324(P("23415867"));
    CHECK(to_string(form.head) == "2341");
    CHECK(form.middle_count == 1);
    CHECK(to_string(form.tail) == "312");

    CHECK_THROWS_AS(sum_form_1324(P("3612745")), std::invalid_argument);
    CHECK_THROWS_AS(sum_form_1324(P("214365")), std::invalid_argument);  // contains 1324
}

TEST_CASE("sum form reconstructs the permutation, exhaustive n <= 7") {
    for (std::size_t n = 2; n <= 7; ++n)
        for_avoiders_1324(n, [](const Permutation& p, long) {
            if (!is_decomposable(p)) return;
            const auto form = sum_form_1324(p);
            std::vector<Permutation> parts{form.head};
            parts.insert(parts.end(), form.middle_count, P("1"));
            parts.push_back(form.tail);
            CHECK(direct_sum(std::span<const Permutation>(parts)) == p);
        });
}

TEST_CASE("corner regions") {
    const auto corners = corner_regions(P("3612745"));
    CHECK(corners.northwest == std::set<std::size_t>{2});
    CHECK(corners.southeast.empty());

    const auto both = corner_regions(P("351624"));
    CHECK(both.northwest == std::set<std::size_t>{2});
    CHECK(both.southeast == std::set<std::size_t>{5});

    CHECK(corner_regions(identity(4)).northwest.empty());
    CHECK_THROWS_AS(corner_regions(P("321")), std::invalid_argument);
    CHECK_THROWS_AS(corner_regions(Permutation{}), std::invalid_argument);
}

TEST_CASE("side regions") {
    const auto sides = side_regions(P("3612745"), 2);
    CHECK(sides.southern == std::set<std::size_t>{4});
    CHECK(sides.eastern == std::set<std::size_t>{6});
    CHECK(sides.central.empty());

    CHECK_THROWS_AS(side_regions(P("3612745"), 1), std::invalid_argument);
    CHECK_THROWS_AS(side_regions(P("3612745"), 3), std::invalid_argument);
}

TEST_CASE("almost-decomposability holds below the inversion bound") {
    for (std::size_t n = 4; n <= 8; ++n) {
        const auto report = verify_almost_decomposability(n);
        CHECK(report.n == n);
        CHECK(report.k_max == 2 * static_cast<long>(n) - 7);
        CHECK(report.violations.empty());
    }
    // at n = 7 the census holds 3612745 and its inverse
    const auto report7 = verify_almost_decomposability(7);
    REQUIRE(report7.boundary_neither.size() == 2);
    CHECK(to_string(report7.boundary_neither[0]) == "3416725");
    CHECK(to_string(report7.boundary_neither[1]) == "3612745");
    CHECK(inverse(report7.boundary_neither[0]) == report7.boundary_neither[1]);
    CHECK(report7.to_json() ==
          "{\"n\":7,\"k_max\":7,\"violations\":[],"
          "\"boundary_neither\":[\"3416725\",\"3612745\"]}");
}

TEST_CASE("counterexample family at k = 2n-6") {
    const Permutation member = P("361278945");
    CHECK(inversion_count(member) == 12);
    CHECK_FALSE(contains_1324(member));
    CHECK(classify_boundary(member).neither());

    const auto report9 = verify_almost_decomposability(9);
    CHECK(report9.violations.empty());
    CHECK(std::find(report9.boundary_neither.begin(), report9.boundary_neither.end(),
                    member) != report9.boundary_neither.end());
}

TEST_CASE("forbidden witness pairs, exhaustive n <= 8") {
    for (std::size_t n = 2; n <= 8; ++n)
        for_all_permutations(n, [](const Permutation& p) {
            const auto cls = classify_boundary(p);
            if (!cls.almost_decomposable()) return;
            CHECK_FALSE((cls.witnesses.count(BoundaryDeletion::DelMinValue) &&
                         cls.witnesses.count(BoundaryDeletion::DelFirstEntry)));
            CHECK_FALSE((cls.witnesses.count(BoundaryDeletion::DelMaxValue) &&
                         cls.witnesses.count(BoundaryDeletion::DelLastEntry)));
        });
}

TEST_CASE("the four remaining witness pairs are all realizable") {
    using BD = BoundaryDeletion;
    const std::pair<BD, BD> wanted[4] = {{BD::DelMinValue, BD::DelMaxValue},
                                         {BD::DelMinValue, BD::DelLastEntry},
                                         {BD::DelFirstEntry, BD::DelMaxValue},
                                         {BD::DelFirstEntry, BD::DelLastEntry}};
    bool found[4] = {false, false, false, false};
    for (std::size_t n = 3; n <= 7; ++n)
        for_all_permutations(n, [&](const Permutation& p) {
            const auto cls = classify_boundary(p);
            if (!cls.almost_decomposable()) return;
            for (int i = 0; i < 4; ++i)
                if (cls.witnesses.count(wanted[i].first) &&
                    cls.witnesses.count(wanted[i].second))
                    found[i] = true;
        });
    for (int i = 0; i < 4; ++i) CHECK(found[i]);
}

TEST_CASE("corner existence and exclusion, exhaustive n <= 9") {
    for (std::size_t n = 2; n <= 9; ++n)
        for_avoiders_1324(n, [n](const Permutation& p, long k) {
            if (!boundary_ordered(p)) return;
            const auto corners = corner_regions(p);
            if (component_count(p) == 1)
                CHECK(corners.northwest.size() + corners.southeast.size() > 0);
            if (k <= 2 * static_cast<long>(n) - 6)
                CHECK((corners.northwest.empty() || corners.southeast.empty()));
        });
}

TEST_CASE("side exclusion and central emptiness, exhaustive n <= 9") {
    for (std::size_t n = 2; n <= 9; ++n)
        for_avoiders_1324(n, [n](const Permutation& p, long k) {
            if (!boundary_ordered(p)) return;
            const auto corners = corner_regions(p);
            const bool in_regime = k <= 2 * static_cast<long>(n) - 7;
            for (std::size_t anchor : corners.northwest) {
                const auto sides = side_regions(p, anchor);
                CHECK(sides.central.empty());
                if (in_regime)
                    CHECK((sides.southern.empty() || sides.eastern.empty()));
            }
            if (!in_regime || corners.northwest.size() < 2) return;
            // two-anchor strengthening: a southern point of the lower anchor
            // and an eastern point of the higher anchor cannot coexist
            for (std::size_t i1 : corners.northwest)
                for (std::size_t i2 : corners.northwest) {
                    if (p.at(i1) >= p.at(i2)) continue;
                    const bool southern1 = !side_regions(p, i1).southern.empty();
                    const bool eastern2 = !side_regions(p, i2).eastern.empty();
                    CHECK_FALSE((southern1 && eastern2));
                }
        });
}

TEST_CASE("reversed boundary order forces a decomposable end deletion, n <= 9") {
    for (std::size_t n = 2; n <= 9; ++n)
        for_avoiders_1324(n, [n](const Permutation& p, long k) {
            if (k > 2 * static_cast<long>(n) - 5) return;
            if (p.at(1) <= p.at(p.size())) return;
            const bool first_ok = is_decomposable(
                apply_boundary_deletion(p, BoundaryDeletion::DelFirstEntry));
            const bool last_ok = is_decomposable(
                apply_boundary_deletion(p, BoundaryDeletion::DelLastEntry));
            CHECK((first_ok || last_ok));
        });
}

TEST_CASE("indecomposable 132-avoiders keep n in front or 1 at the end, n <= 10") {
    const Permutation pat = P("132");
    for (std::size_t n = 2; n <= 10; ++n)
        enumerate_avoiders(pat, n, std::nullopt, [n](const Permutation& p, long k) {
            if (component_count(p) != 1) return;
            if (k > 2 * static_cast<long>(n) - 5) return;
            CHECK((p.at(1) == static_cast<int>(n) || p.at(p.size()) == 1));
        });
}
