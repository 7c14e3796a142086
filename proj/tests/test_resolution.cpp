#include "lct/resolution.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace lct;

namespace {

DynkinType A(int m) { return DynkinType::make(DynkinKind::A, m); }
DynkinType D(int m) { return DynkinType::make(DynkinKind::D, m); }
DynkinType E(int m) { return DynkinType::make(DynkinKind::E, m); }

Vector q(std::initializer_list<std::pair<long long, long long>> xs) {
    Vector v;
    for (auto [p, d] : xs) v.push_back(frac(p, d));
    return v;
}

std::vector<int> unit(int m, int k) {
    std::vector<int> b(m, 0);
    b[k - 1] = 1;
    return b;
}

std::vector<DynkinType> all_types() {
    std::vector<DynkinType> out;
    for (int m = 1; m <= 8; ++m) out.push_back(A(m));
    for (int m = 4; m <= 8; ++m) out.push_back(D(m));
    for (int m = 6; m <= 8; ++m) out.push_back(E(m));
    return out;
}

}  // namespace

TEST(Rational, ToStringIsLowestTermsWithPositiveDenominator) {
    EXPECT_EQ(to_string(frac(6, -4)), "-3/2");
    EXPECT_EQ(to_string(frac(3)), "3/1");
    EXPECT_EQ(to_string(frac(0, 5)), "0/1");
    EXPECT_EQ(parse_rational(" 10/4 "), frac(5, 2));
    EXPECT_EQ(parse_rational("-7"), frac(-7));
    EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
    EXPECT_THROW(parse_rational("1/-2"), std::invalid_argument);
    EXPECT_THROW(parse_rational("0.5"), std::invalid_argument);
    EXPECT_THROW(parse_rational(""), std::invalid_argument);
}

TEST(DynkinType, RankRanges) {
    EXPECT_NO_THROW(A(1));
    EXPECT_NO_THROW(A(8));
    EXPECT_THROW(A(0), std::invalid_argument);
    EXPECT_THROW(A(9), std::invalid_argument);
    EXPECT_THROW(D(3), std::invalid_argument);
    EXPECT_THROW(E(5), std::invalid_argument);
    EXPECT_THROW(E(9), std::invalid_argument);
    EXPECT_EQ(DynkinType::parse("D7"), D(7));
    EXPECT_EQ(DynkinType::parse("E8").name(), "E8");
    EXPECT_THROW(DynkinType::parse("F4"), std::invalid_argument);
    EXPECT_THROW(DynkinType::parse("A"), std::invalid_argument);
}

TEST(IntersectionMatrix, SmallExamples) {
    auto a2 = intersection_matrix(A(2));
    EXPECT_EQ(a2.rows(), (std::vector<std::vector<int>>{{-2, 1}, {1, -2}}));

    auto a7 = intersection_matrix(A(7));
    EXPECT_EQ(a7.entry(3, 4), 1);
    EXPECT_EQ(a7.entry(1, 3), 0);

    auto d5 = intersection_matrix(D(5));
    EXPECT_EQ(d5.entry(1, 3), 1);
    EXPECT_EQ(d5.entry(2, 3), 1);
    EXPECT_EQ(d5.entry(3, 4), 1);
    EXPECT_EQ(d5.entry(4, 5), 1);
    EXPECT_EQ(d5.entry(1, 2), 0);
}

TEST(IntersectionMatrix, SymmetricNegativeDefiniteWithDiagonalMinusTwo) {
    for (auto t : all_types()) {
        auto m = intersection_matrix(t);
        for (int i = 1; i <= t.rank; ++i) {
            EXPECT_EQ(m.entry(i, i), -2) << t.name();
            for (int j = 1; j <= t.rank; ++j) EXPECT_EQ(m.entry(i, j), m.entry(j, i)) << t.name();
        }
        EXPECT_TRUE(m.negative_definite()) << t.name();
        // |det| of a Cartan matrix is the order of the discriminant group.
        int expect = t.kind == DynkinKind::A ? t.rank + 1 : t.kind == DynkinKind::D ? 4 : 9 - t.rank;
        Rational det = determinant(m.to_rational());
        EXPECT_EQ(t.rank % 2 == 0 ? det : -det, Rational(expect)) << t.name();
    }
}

TEST(Pullback, PrintedCoefficientVectors) {
    EXPECT_EQ(pullback_coefficients(A(7), unit(7, 4)).coeffs,
              q({{1, 2}, {1, 1}, {3, 2}, {2, 1}, {3, 2}, {1, 1}, {1, 2}}));
    EXPECT_EQ(pullback_coefficients(A(8), unit(8, 3)).coeffs,
              q({{2, 3}, {4, 3}, {2, 1}, {5, 3}, {4, 3}, {1, 1}, {2, 3}, {1, 3}}));
    EXPECT_EQ(pullback_coefficients(A(6), unit(6, 2)).coeffs,
              q({{5, 7}, {10, 7}, {8, 7}, {6, 7}, {4, 7}, {2, 7}}));
    EXPECT_EQ(pullback_coefficients(D(7), unit(7, 1)).coeffs,
              q({{7, 4}, {5, 4}, {5, 2}, {2, 1}, {3, 2}, {1, 1}, {1, 2}}));
    EXPECT_EQ(pullback_coefficients(D(8), unit(8, 1)).coeffs,
              q({{2, 1}, {3, 2}, {3, 1}, {5, 2}, {2, 1}, {3, 2}, {1, 1}, {1, 2}}));
}

TEST(Pullback, AnticanonicalCurves) {
    for (int m = 1; m <= 8; ++m) {
        auto n = pullback_coefficients(A(m), anticanonical_incidence(A(m)));
        EXPECT_EQ(n.coeffs, Vector(m, Rational(1))) << "A" << m;
    }
    for (int m = 4; m <= 8; ++m) {
        auto n = pullback_coefficients(D(m), anticanonical_incidence(D(m)));
        Vector expect(m, Rational(2));
        expect[0] = expect[1] = expect[m - 1] = 1;
        EXPECT_EQ(n.coeffs, expect) << "D" << m;
    }
}

TEST(Pullback, AnticanonicalSelfIntersectionIsOne) {
    for (auto t : all_types()) {
        CurveClass c = anticanonical_curve(t);
        auto n = pullback_coefficients(c, t);
        EXPECT_EQ(intersection_number(c, n, c, -1), 1) << t.name();
    }
}

TEST(Pullback, ResidualVanishesForAllSmallIncidences) {
    for (auto t : all_types()) {
        Matrix m = intersection_matrix(t).to_rational();
        std::vector<int> b(t.rank, 0);
        // Odometer over {0,1,2}^rank.
        for (;;) {
            auto n = pullback_coefficients(t, b);
            for (int i = 0; i < t.rank; ++i) {
                Rational r = b[i];
                for (int j = 0; j < t.rank; ++j) r += m[i][j] * n.coeffs[j];
                ASSERT_EQ(r, 0) << t.name();
            }
            int k = 0;
            while (k < t.rank && b[k] == 2) b[k++] = 0;
            if (k == t.rank) break;
            ++b[k];
        }
    }
}

TEST(Pullback, RejectsBadIncidence) {
    EXPECT_THROW(pullback_coefficients(A(3), {1, 0}), std::invalid_argument);
    EXPECT_THROW(pullback_coefficients(A(3), {1, -1, 0}), std::invalid_argument);
}

TEST(Pullback, ReversalCommutesWithInvolution) {
    oracle::RationalSampler rng(7);
    for (int m = 1; m <= 8; ++m)
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<int> b(m);
            for (auto& x : b) x = static_cast<int>(rng.integer(0, 3));
            std::vector<int> rev(b.rbegin(), b.rend());
            EXPECT_EQ(pullback_coefficients(A(m), rev).coeffs,
                      involution_reverse(pullback_coefficients(A(m), b)).coeffs);
        }
}

TEST(Involution, Examples) {
    PullbackCoefficients l3{A(6), q({{4, 7}, {8, 7}, {12, 7}, {9, 7}, {6, 7}, {3, 7}})};
    EXPECT_EQ(involution_reverse(l3).coeffs, q({{3, 7}, {6, 7}, {9, 7}, {12, 7}, {8, 7}, {4, 7}}));
    PullbackCoefficients flat{A(3), Vector(3, Rational(1))};
    EXPECT_EQ(involution_reverse(flat).coeffs, flat.coeffs);
    auto l4 = pullback_coefficients(A(7), unit(7, 4));
    EXPECT_EQ(involution_reverse(l4).coeffs, l4.coeffs);
    EXPECT_THROW(involution_reverse(PullbackCoefficients{D(5), Vector(5, Rational(0))}), std::invalid_argument);
}

TEST(IntersectionNumber, PrintedProducts) {
    auto l2 = unit_curve(A(6), 2, "L2");
    auto l2p = unit_curve(A(6), 2, "L2'");
    auto l3 = unit_curve(A(6), 3, "L3");
    auto n2 = pullback_coefficients(l2, A(6));
    auto n3 = pullback_coefficients(l3, A(6));
    EXPECT_EQ(intersection_number(l2, n2, l2, -1), frac(3, 7));
    EXPECT_EQ(intersection_number(l3, n3, l3, -1), frac(5, 7));
    EXPECT_EQ(intersection_number(l2, n2, l3, 0), frac(8, 7));
    EXPECT_EQ(intersection_number(l2, n2, l2p, 0), frac(10, 7));

    auto m2 = unit_curve(A(7), 2, "L2");
    auto m3 = unit_curve(A(7), 3, "L3");
    auto k2 = pullback_coefficients(m2, A(7));
    auto k3 = pullback_coefficients(m3, A(7));
    EXPECT_EQ(intersection_number(m2, k2, m2, -1), frac(1, 2));
    EXPECT_EQ(intersection_number(m3, k3, m3, -1), frac(7, 8));
    EXPECT_EQ(intersection_number(m2, k2, m3, 0), frac(5, 4));
}

TEST(IntersectionNumber, SymmetricOnRandomCurves) {
    oracle::RationalSampler rng(11);
    auto types = all_types();
    for (int trial = 0; trial < 200; ++trial) {
        auto t = types[static_cast<std::size_t>(rng.integer(0, static_cast<long long>(types.size()) - 1))];
        CurveClass c1{"X", 1, -1, {}}, c2{"Y", 1, -1, {}};
        for (int i = 0; i < t.rank; ++i) {
            c1.exc_intersections.push_back(static_cast<int>(rng.integer(0, 2)));
            c2.exc_intersections.push_back(static_cast<int>(rng.integer(0, 2)));
        }
        Rational s = rng.pick(-2, 2);
        EXPECT_EQ(intersection_number(c1, pullback_coefficients(c1, t), c2, s),
                  intersection_number(c2, pullback_coefficients(c2, t), c1, s));
    }
}

TEST(Cartier, SimpleCases) {
    EXPECT_TRUE(cartier_check({{A(3), Vector(3, Rational(1))}, {A(3), Vector(3, Rational(1))}}));
    EXPECT_FALSE(cartier_check({{A(3), q({{1, 2}, {1, 1}, {1, 2}})}, {A(3), q({{1, 3}, {0, 1}, {0, 1}})}}));
}

TEST(Cartier, SixPointTriple) {
    // L2 + L2' + L3 sums to (2, 4, 4, 3, 2, 1); 8/7 + 8/7 + 12/7 = 4 at E3.
    auto n2 = pullback_coefficients(A(6), unit(6, 2));
    auto n3 = pullback_coefficients(A(6), unit(6, 3));
    EXPECT_TRUE(cartier_check({n2, n2, n3}));
    auto c = pullback_coefficients(anticanonical_curve(A(6)), A(6));
    EXPECT_TRUE(cartier_check({n2, n2, n3}, c, 3));
    EXPECT_FALSE(cartier_check({n2, n3}));
}
