#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "mcgdim/orbifolds.hpp"

using namespace mcgdim;

namespace {

OrbifoldSignature sig(bool orientable, int genus, std::vector<std::int64_t> elliptic,
                      std::vector<std::vector<std::int64_t>> circles) {
    OrbifoldSignature o;
    o.orientable = orientable;
    o.genus = genus;
    o.elliptic_orders = std::move(elliptic);
    for (auto& c : circles) o.boundaries.push_back({std::move(c)});
    return o;
}

} // namespace

TEST_CASE("cone and corner sums are exact") {
    auto [e1, c1] = ef_cf(sig(true, 0, {3, 3, 4}, {}));
    CHECK(e1 == Rational(25, 12));
    CHECK(c1 == Rational(0));

    auto [e2, c2] = ef_cf(sig(true, 0, {}, {{2, 4}}));
    CHECK(e2 == Rational(0));
    CHECK(c2 == Rational(5, 4));

    auto [e3, c3] = ef_cf(sig(false, 1, {2, 6}, {{2, 2}, {}}));
    CHECK(e3 == Rational(4, 3));
    CHECK(c3 == Rational(1));
}

TEST_CASE("orbifold euler characteristic subtracts cones fully, corners half") {
    CHECK(orbifold_euler(sig(true, 0, {}, {})) == Rational(2));
    CHECK(orbifold_euler(sig(true, 1, {}, {})) == Rational(0));
    CHECK(orbifold_euler(sig(false, 1, {}, {})) == Rational(1));
    CHECK(orbifold_euler(sig(true, 0, {}, {{2, 4, 6}})) == Rational(-1, 24));
    CHECK(orbifold_euler(sig(true, 0, {}, {{2, 4, 5}})) == Rational(-1, 40));
    CHECK(orbifold_euler(sig(true, 0, {}, {{2, 3, 8}})) == Rational(-1, 48));
    CHECK(orbifold_euler(sig(false, 2, {2, 2}, {})) == Rational(-1));
    CHECK(orbifold_euler(sig(true, 0, {2, 3, 7}, {})) == Rational(-1, 42));
}

TEST_CASE("the order equation inverts the euler characteristic when it can") {
    auto order = [](const OrbifoldSignature& o, int g) { return rh_order(o, g); };
    CHECK(order(sig(true, 0, {}, {{2, 4, 6}}), 4) == 48);
    CHECK(order(sig(true, 0, {}, {{2, 4, 5}}), 5) == 120);
    CHECK(order(sig(true, 0, {}, {{2, 3, 8}}), 6) == 192);
    CHECK(order(sig(false, 2, {2, 2}, {}), 4) == 2);
    CHECK(order(sig(false, 4, {}, {}), 4) == 1);
    CHECK(order(sig(true, 0, {2, 3, 7}, {}), 4) == 84);

    CHECK_FALSE(order(sig(true, 1, {}, {}), 4).has_value());
    CHECK_FALSE(order(sig(true, 0, {}, {}), 4).has_value());
    CHECK_FALSE(order(sig(false, 1, {3}, {}), 4).has_value());
    CHECK_FALSE(order(sig(true, 1, {2, 2, 4}, {}), 4).has_value());
}

TEST_CASE("underlying surface turns cones and mirrors into punctures") {
    Surface u1 = underlying_surface(sig(true, 0, {}, {{2, 4, 6}}));
    CHECK(u1.kind == SurfaceKind::Orientable);
    CHECK(u1.genus == 0);
    CHECK(u1.punctures == 0);
    CHECK(u1.boundaries == 1);
    CHECK(vcd_weyl(sig(true, 0, {}, {{2, 4, 6}})) == 1);

    Surface u2 = underlying_surface(sig(false, 1, {3, 5}, {{2, 2}, {}}));
    CHECK(u2.kind == SurfaceKind::NonOrientable);
    CHECK(u2.genus == 1);
    CHECK(u2.punctures == 3);
    CHECK(u2.boundaries == 1);
    CHECK(vcd_weyl(sig(false, 1, {3, 5}, {{2, 2}, {}})) == 3);

    CHECK(vcd_weyl(sig(false, 1, {2, 6}, {})) == 0);
    CHECK(vcd_weyl(sig(false, 4, {}, {})) == 3);
}

TEST_CASE("slot counters") {
    OrbifoldSignature o = sig(false, 1, {3, 5}, {{2, 2}, {}});
    CHECK(elliptic_count(o) == 2);
    CHECK(corner_count(o) == 2);
    CHECK(mirror_boundary_count(o) == 1);
    CHECK(cornered_boundary_count(o) == 1);
    CHECK(validate_inequalities(o));
    CHECK(validate_inequalities(sig(true, 0, {2}, {{2}})));
}

TEST_CASE("bracelet reduction picks the least rotation or reflection") {
    CHECK(bracelet_canonical({6, 2, 4}) == std::vector<std::int64_t>{2, 4, 6});
    CHECK(bracelet_canonical({3, 2, 3, 2}) == std::vector<std::int64_t>{2, 3, 2, 3});
    CHECK(bracelet_canonical({5, 4, 3, 2}) == std::vector<std::int64_t>{2, 3, 4, 5});
    CHECK(bracelet_canonical({}) == std::vector<std::int64_t>{});
    CHECK(bracelet_canonical({7}) == std::vector<std::int64_t>{7});

    auto classes = [](std::vector<std::int64_t> beads) {
        std::sort(beads.begin(), beads.end());
        std::set<std::vector<std::int64_t>> forms;
        do {
            forms.insert(bracelet_canonical(beads));
        } while (std::next_permutation(beads.begin(), beads.end()));
        return forms.size();
    };
    CHECK(classes({2, 3, 10, 15}) == 3);
    CHECK(classes({2, 3, 4, 5}) == 3);
    CHECK(classes({2, 2, 3, 3}) == 2);
    CHECK(classes({2, 3, 4}) == 1);
    CHECK(classes({2, 2, 2, 2}) == 1);
    CHECK(classes({2, 3, 4, 5, 6}) == 12);
}

TEST_CASE("bracelet reduction is invariant under rotation and reflection") {
    std::mt19937 rng(20260823u);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t len = 1 + rng() % 7;
        std::vector<std::int64_t> t(len);
        for (auto& v : t) v = 2 + static_cast<std::int64_t>(rng() % 9);
        auto canon = bracelet_canonical(t);
        CHECK(bracelet_canonical(canon) == canon);
        std::vector<std::int64_t> rot(t.begin() + static_cast<long>(rng() % len), t.end());
        rot.insert(rot.end(), t.begin(), t.begin() + (static_cast<long>(t.size() - rot.size())));
        CHECK(bracelet_canonical(rot) == canon);
        std::vector<std::int64_t> rev(t.rbegin(), t.rend());
        CHECK(bracelet_canonical(rev) == canon);
    }
}

TEST_CASE("canonical form sorts cones and boundary circles") {
    OrbifoldSignature o = canonical(sig(false, 1, {5, 3}, {{2, 2}, {}}));
    CHECK(o.elliptic_orders == std::vector<std::int64_t>{3, 5});
    REQUIRE(o.boundaries.size() == 2);
    CHECK(o.boundaries[0].is_mirror());
    CHECK(o.boundaries[1].corner_orders == std::vector<std::int64_t>{2, 2});

    OrbifoldSignature p =
        canonical(sig(true, 0, {}, {{3, 3}, {6, 2, 4}, {}}));
    REQUIRE(p.boundaries.size() == 3);
    CHECK(p.boundaries[0].is_mirror());
    CHECK(p.boundaries[1].corner_orders == std::vector<std::int64_t>{3, 3});
    CHECK(p.boundaries[2].corner_orders == std::vector<std::int64_t>{2, 4, 6});
}

TEST_CASE("signature comparison is a strict total order on canonical forms") {
    OrbifoldSignature a = canonical(sig(true, 0, {}, {{2, 4, 6}}));
    OrbifoldSignature b = canonical(sig(false, 3, {}, {}));
    CHECK(signature_equal(a, a));
    CHECK_FALSE(signature_equal(a, b));
    CHECK(signature_less(a, b) != signature_less(b, a));
    CHECK_FALSE(signature_less(a, a));
}

TEST_CASE("invalid signatures are rejected") {
    CHECK_THROWS_AS(validate(sig(true, 0, {1}, {})), domain_error);
    CHECK_THROWS_AS(validate(sig(true, 0, {}, {{0}})), domain_error);
    CHECK_THROWS_AS(validate(sig(false, 0, {}, {})), domain_error);
    CHECK_THROWS_AS(validate(sig(true, -1, {}, {})), domain_error);
    CHECK_NOTHROW(validate(sig(true, 0, {}, {})));
    CHECK_NOTHROW(validate(sig(false, 1, {2}, {{}})));
}
