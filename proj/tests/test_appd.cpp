#include <doctest.h>

#include <set>

#include "esd/appd.hpp"

using namespace esd::appd;
using esd::arith::Nat;

TEST_CASE("window bounds") {
    auto w5 = window(5);
    CHECK(w5.lo == 2);
    CHECK(w5.hi == 3);
    auto w13 = window(13);
    CHECK(w13.lo == 4);
    CHECK(w13.hi == 9);
    auto w3 = window(3);
    CHECK(w3.empty());
    auto w2521 = window(2521);
    CHECK(w2521.lo == 631);
    CHECK(w2521.hi == 1890);
    // Every A in the window passes the bounds check and nothing outside does.
    for (Nat a = w13.lo; a <= w13.hi; ++a) CHECK(esd::decomp::bounds_check(13, a));
    CHECK_FALSE(esd::decomp::bounds_check(13, w13.lo - 1));
    CHECK_FALSE(esd::decomp::bounds_check(13, w13.hi + 1));
}

TEST_CASE("prod_sum_equiv and quadratic_roots") {
    CHECK(prod_sum_equiv(3, 2, 1, 2));
    CHECK_FALSE(prod_sum_equiv(3, 2, 1, 3));
    auto r = quadratic_roots(3, 2);
    REQUIRE(r.has_value());
    CHECK(r->first == 2);
    CHECK(r->second == 1);
    CHECK_FALSE(quadratic_roots(3, 3).has_value());   // negative discriminant
    CHECK_FALSE(quadratic_roots(5, 5).has_value());   // 5 not a square
    auto big = quadratic_roots(6, 8);
    REQUIRE(big.has_value());
    CHECK(big->first == 4);
    CHECK(big->second == 2);
}

TEST_CASE("disc_lower_bound") {
    CHECK(disc_lower_bound(2, 1, 5) == 1);
    CHECK(disc_lower_bound(644, 1, 2521) == 1);
    // m = 4*631 - 2521 = 3: need 9*d'^2 >= 2524, so d' = 17.
    CHECK(disc_lower_bound(631, 1, 2521) == 17);
    CHECK_THROWS_AS(disc_lower_bound(600, 1, 2521), esd::arith::DomainError);
}

TEST_CASE("direct_search small examples") {
    auto h5 = direct_search(5, 1, 1, 1);
    REQUIRE(h5.size() == 1);
    CHECK(h5[0].a == 2);
    CHECK(h5[0].dec.a == 2);
    CHECK(h5[0].dec.b == 5);
    CHECK(h5[0].dec.c == 10);

    auto h29 = direct_search(29, 1, 2, 2);
    bool found8 = false;
    for (const auto& h : h29)
        if (h.a == 8 && h.r == 2 && h.s == 2) found8 = true;
    CHECK(found8);
}

TEST_CASE("back_search reconstructs parameters") {
    auto hits = back_search(29, 1, 8);
    REQUIRE(!hits.empty());
    // m = 3, M = 8: u = 6 gives roots (4, 2), d' = 2.
    bool seen = false;
    for (const auto& h : hits) {
        CHECK(h.m == 3);
        if (h.r == 2 && h.s == 2 && h.c_prime == 4) seen = true;
        CHECK(esd::arith::check_unit_fraction_identity(29, h.dec.a, h.dec.b, h.dec.c));
    }
    CHECK(seen);
    // A outside the window or not a multiple of alpha yields nothing.
    CHECK(back_search(29, 1, 3).empty());
    CHECK(back_search(29, 2, 9).empty());
}

TEST_CASE("direct and back agree as A-sets (complete grids)") {
    // The grid (r <= 130, s <= 20) is complete for P < 500: d' <= (M+1)/3
    // and the smaller root is <= sqrt(M) <= 20.
    for (int p : {5, 13, 29, 97, 101, 197, 313, 389, 499}) {
        if (!esd::arith::is_prime(p)) continue;
        for (int alpha : {1, 2, 3}) {
            std::set<Nat> from_direct;
            for (const auto& h : direct_search(p, alpha, 130, 20))
                from_direct.insert(h.a);
            std::set<Nat> from_back;
            auto w = window(p);
            for (Nat a = w.lo; a <= w.hi; ++a)
                if (!back_search(p, alpha, a).empty()) from_back.insert(a);
            CHECK(from_direct == from_back);
        }
    }
}

TEST_CASE("candidate_set_F matches back_search hits") {
    auto f = candidate_set_F(29, 1);
    std::set<Nat> fs(f.begin(), f.end());
    CHECK(fs.count(8) == 1);
    auto w = window(29);
    for (const auto& a : f) {
        CHECK(a >= w.lo);
        CHECK(a <= w.hi);
        CHECK(!back_search(29, 1, a).empty());
    }
    CHECK(std::is_sorted(f.begin(), f.end()));
}

TEST_CASE("divisor_constructor") {
    // P = 29, alpha = 1, s = 2: m_s = 45, divisors ≡ -1 (mod 8): {15},
    // giving r = 2, m = 3, c' = 4, A = 8.
    auto hits = divisor_constructor(29, 1, 2);
    REQUIRE(hits.size() == 1);
    CHECK(hits[0].r == 2);
    CHECK(hits[0].a == 8);
    // Constructor hits are a subset of back_search hits at the same A.
    for (const auto& h : hits) {
        bool matched = false;
        for (const auto& bh : back_search(29, 1, h.a))
            if (bh.r == h.r && bh.s == h.s) matched = true;
        CHECK(matched);
    }
}

TEST_CASE("affine_coeffs stays in (1/4, 1/3]") {
    for (int alpha : {1, 2, 5})
        for (int r = 1; r <= 6; ++r)
            for (int s = 1; s <= 6; ++s) {
                auto ac = affine_coeffs(alpha, r, s);
                CHECK(ac.lambda > mpq_class(1, 4));
                CHECK(ac.lambda <= mpq_class(1, 3));
                CHECK(ac.margin == ac.lambda - mpq_class(1, 4));
                CHECK(ac.margin > 0);
            }
    CHECK(affine_coeffs(1, 1, 1).lambda == mpq_class(1, 3));
}

TEST_CASE("counting criterion") {
    std::set<Nat> h{1, 2, 3}, t{1, 2};
    CHECK(counting_criterion(h, t));
    CHECK(counting_criterion(h, h));
    CHECK_FALSE(counting_criterion(t, h));
}
