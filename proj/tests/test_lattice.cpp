#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qe2/lattice.hpp"

using namespace qe2;

TEST_CASE("basis vectors are unit and orthonormal") {
    StateVector e = basis_vector(LatticeIndex{0, 0});
    CHECK(e.norm() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(inner(basis_vector(LatticeIndex{1, 2}), basis_vector(LatticeIndex{1, 2})) == cplx(1.0, 0.0));
    CHECK(inner(basis_vector(LatticeIndex{1, 2}), basis_vector(LatticeIndex{2, 1})) == cplx(0.0, 0.0));

    std::mt19937_64 rng(7);
    Window w = Window::cube(3, -50, 50);
    for (int t = 0; t < 64; ++t) {
        LatticeIndex a = w.sample(rng), b = w.sample(rng);
        cplx ip = inner(basis_vector(a), basis_vector(b));
        CHECK(ip == (a == b ? cplx(1.0, 0.0) : cplx(0.0, 0.0)));
    }
}

TEST_CASE("inner conjugates the first slot") {
    StateVector e = basis_vector(LatticeIndex{0, 0});
    StateVector two_i(2);
    two_i.add(LatticeIndex{0, 0}, cplx(0.0, 2.0));
    CHECK(inner(e, two_i) == cplx(0.0, 2.0));

    StateVector i_e(2);
    i_e.add(LatticeIndex{0, 0}, cplx(0.0, 1.0));
    CHECK(inner(i_e, e) == cplx(0.0, -1.0));

    StateVector sum(2);
    sum.add(LatticeIndex{0, 0}, 1.0);
    sum.add(LatticeIndex{1, 0}, 1.0);
    CHECK(inner(sum, basis_vector(LatticeIndex{1, 0})) == cplx(1.0, 0.0));
}

TEST_CASE("inner requires matching dimensions") {
    CHECK_THROWS_AS(inner(basis_vector(LatticeIndex{0}), basis_vector(LatticeIndex{0, 0})),
                    std::invalid_argument);
}

TEST_CASE("Parseval on windows: norm^2 equals sum of |amplitude|^2") {
    std::mt19937_64 rng(11);
    StateVector v(2);
    double s = 0;
    Window w = Window::cube(2, -8, 8);
    for (int t = 0; t < 40; ++t) {
        LatticeIndex x = w.sample(rng);
        cplx a(std::uniform_real_distribution<>(-1, 1)(rng),
               std::uniform_real_distribution<>(-1, 1)(rng));
        v.amp[x] += a;
    }
    for (auto& [x, a] : v.amp) s += std::norm(a);
    CHECK(v.norm() * v.norm() == doctest::Approx(s).epsilon(1e-14));
}

TEST_CASE("interior examples") {
    Margins m2(2);
    m2.side = {{2, 2}, {2, 2}};
    auto i1 = Window::cube(2, -8, 8).interior(m2);
    REQUIRE(i1.has_value());
    CHECK(i1->lo(0) == -6);
    CHECK(i1->hi(0) == 6);
    CHECK(i1->lo(1) == -6);
    CHECK(i1->hi(1) == 6);

    Margins z1(1);
    auto i2 = Window::cube(1, -3, 3).interior(z1);
    REQUIRE(i2.has_value());
    CHECK(i2->lo(0) == -3);
    CHECK(i2->hi(0) == 3);

    Margins m5(1);
    m5.side = {{5, 5}};
    CHECK_FALSE(Window::cube(1, -2, 2).interior(m5).has_value());  // distinct empty condition
}

TEST_CASE("interior composes additively") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 32; ++t) {
        Window w = Window::cube(2, -9, 9);
        Margins a(2), b(2);
        for (int k = 0; k < 2; ++k) {
            a.side[static_cast<std::size_t>(k)] = {static_cast<std::int64_t>(rng() % 3),
                                                   static_cast<std::int64_t>(rng() % 3)};
            b.side[static_cast<std::size_t>(k)] = {static_cast<std::int64_t>(rng() % 3),
                                                   static_cast<std::int64_t>(rng() % 3)};
        }
        auto one = w.interior(a);
        REQUIRE(one.has_value());
        auto two = one->interior(b);
        Margins ab = a;
        ab += b;
        auto direct = w.interior(ab);
        REQUIRE(two.has_value() == direct.has_value());
        if (two) CHECK(two->bounds == direct->bounds);
    }
}

TEST_CASE("window enumeration and membership agree") {
    Window w(std::vector<std::pair<std::int64_t, std::int64_t>>{{-1, 1}, {0, 2}});
    auto pts = w.enumerate();
    CHECK(pts.size() == 9);
    for (auto& p : pts) CHECK(w.contains(p));
    CHECK_FALSE(w.contains(LatticeIndex{2, 0}));
    CHECK(w.point_count() == 9);
}

TEST_CASE("true zeros are pruned, small amplitudes are kept") {
    StateVector v(1);
    v.add(LatticeIndex{0}, 1.0);
    v.add(LatticeIndex{0}, -1.0);
    v.add(LatticeIndex{1}, 1e-200);
    v.prune();
    CHECK(v.amp.count(LatticeIndex{0}) == 0);
    CHECK(v.amp.count(LatticeIndex{1}) == 1);
}
