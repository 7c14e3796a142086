#include "lct/catalog.hpp"
#include "lct/polytope.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace lct;

namespace {

// The chain system written out by hand: 2a_i - a_{i-1} - a_{i+1} >= 0 and
// 1 - a_1 - a_m >= 0.
LinIneqSystem chain_system(int m) {
    std::vector<std::string> vars;
    for (int i = 1; i <= m; ++i) vars.push_back("a" + std::to_string(i));
    LinIneqSystem s(vars);
    for (int i = 0; i < m; ++i) {
        Vector r(m, Rational(0));
        r[i] = 2;
        if (i > 0) r[i - 1] = -1;
        if (i + 1 < m) r[i + 1] = -1;
        s.add_ge(r, 0);
    }
    Vector c(m, Rational(0));
    c[0] -= 1;
    c[m - 1] -= 1;
    s.add_ge(c, -1);
    return s;
}

Vector unit(std::size_t n, std::size_t k) {
    Vector v(n, Rational(0));
    v[k] = 1;
    return v;
}

Vector q(std::initializer_list<std::pair<long long, long long>> xs) {
    Vector v;
    for (auto [p, d] : xs) v.push_back(frac(p, d));
    return v;
}

Vector maxima(const LinIneqSystem& s) {
    Vector out;
    for (std::size_t k = 0; k < s.dimension(); ++k) {
        auto r = maximize(s, unit(s.dimension(), k));
        EXPECT_TRUE(r.optimal());
        out.push_back(r.value);
    }
    return out;
}

// Random system in the cross-check range: <= 4 variables, coefficients in
// {-2..2}, rhs in {0, 1}, inside the box 0 <= x <= 2.
LinIneqSystem random_system(oracle::RationalSampler& rng) {
    const int n = static_cast<int>(rng.integer(1, 4));
    std::vector<std::string> vars;
    for (int i = 0; i < n; ++i) vars.push_back("x" + std::to_string(i));
    LinIneqSystem s(vars);
    for (int i = 0; i < n; ++i) {
        s.add_ge(unit(n, i), 0);
        Vector r(n, Rational(0));
        r[i] = -1;
        s.add_ge(r, -2);
    }
    const int rows = static_cast<int>(rng.integer(1, 4));
    for (int k = 0; k < rows; ++k) {
        Vector r(n);
        for (auto& x : r) x = rng.integer(-2, 2);
        Rational rhs = rng.integer(0, 1);
        if (rng.integer(0, 5) == 0)
            s.add_eq(r, rhs);
        else
            s.add_ge(r, rhs);
    }
    return s;
}

}  // namespace

TEST(Maximize, ChainSystemBounds) {
    EXPECT_EQ(maxima(chain_system(3)), q({{3, 4}, {1, 1}, {3, 4}}));
    EXPECT_EQ(maxima(chain_system(4)), q({{4, 5}, {6, 5}, {6, 5}, {4, 5}}));
    EXPECT_EQ(maxima(chain_system(5)), q({{5, 6}, {4, 3}, {3, 2}, {4, 3}, {5, 6}}));
    EXPECT_EQ(maxima(chain_system(6)), q({{6, 7}, {10, 7}, {12, 7}, {12, 7}, {10, 7}, {6, 7}}));
}

TEST(Maximize, ChainMaximaFollowClosedForm) {
    // max a_k = k(m+1-k)/(m+1), attained at the tent vector.
    for (int m = 1; m <= 8; ++m) {
        auto s = chain_system(m);
        for (int k = 1; k <= m; ++k) {
            auto r = maximize(s, unit(m, k - 1));
            ASSERT_TRUE(r.optimal());
            EXPECT_EQ(r.value, frac(k * (m + 1 - k), m + 1)) << m << " " << k;
        }
    }
}

TEST(Maximize, ContradictoryPairGivesUnitCertificate) {
    LinIneqSystem s({"x"});
    s.add_ge({frac(1)}, 1);
    s.add_ge({frac(-1)}, 0);
    auto r = maximize(s, {frac(1)});
    ASSERT_EQ(r.status, LPStatus::Infeasible);
    ASSERT_TRUE(r.certificate);
    EXPECT_EQ(r.certificate->multipliers, q({{1, 1}, {1, 1}}));
    EXPECT_TRUE(verify_infeasibility(s, *r.certificate));
}

TEST(Maximize, D8ForkMaximumAgreesWithVertexEnumeration) {
    auto sys = base_system(DynkinType::make(DynkinKind::D, 8));
    Vector c = unit(8, 2);
    auto r = maximize(sys, c);
    ASSERT_TRUE(r.optimal());
    EXPECT_EQ(r.value, 3);
    EXPECT_EQ(oracle::vertex_maximum(sys, c), Rational(3));
    EXPECT_TRUE(sys.satisfied_by(q({{3, 2}, {3, 2}, {3, 1}, {5, 2}, {2, 1}, {3, 2}, {1, 1}, {1, 2}})));
}

TEST(Maximize, UnboundedAndErrors) {
    LinIneqSystem s({"x", "y"});
    s.add_ge({frac(1), frac(0)}, 0);
    EXPECT_EQ(maximize(s, {frac(1), frac(0)}).status, LPStatus::Unbounded);
    EXPECT_EQ(maximize(s, {frac(-1), frac(0)}).value, 0);
    EXPECT_THROW(maximize(s, {frac(1)}), std::invalid_argument);
    EXPECT_THROW(s.add_ge({frac(1)}, 0), std::invalid_argument);
    EXPECT_THROW(LinIneqSystem({"x", "x"}), std::invalid_argument);
}

TEST(Maximize, WitnessIsLexicographicallySmallestOnTheOptimalFace) {
    LinIneqSystem s({"x", "y"});
    s.add_ge({frac(1), frac(0)}, 0);
    s.add_ge({frac(0), frac(1)}, 0);
    s.add_ge({frac(-1), frac(-1)}, -1);
    auto r = maximize(s, {frac(1), frac(1)});
    ASSERT_TRUE(r.optimal());
    EXPECT_EQ(r.witness, q({{0, 1}, {1, 1}}));
}

TEST(Maximize, EqualityRowsAndFreeVariables) {
    LinIneqSystem s({"x", "y"});
    s.add_eq({frac(1), frac(1)}, 1);
    s.add_ge({frac(-1), frac(0)}, -3);
    s.add_ge({frac(0), frac(-1)}, -5);
    auto r = maximize(s, {frac(0), frac(1)});
    ASSERT_TRUE(r.optimal());
    EXPECT_EQ(r.value, 5);
    EXPECT_EQ(r.witness, q({{-4, 1}, {5, 1}}));
    EXPECT_TRUE(verify_result(s, {frac(0), frac(1)}, r));
}

TEST(Maximize, RedundantEqualitiesAreTolerated) {
    LinIneqSystem s({"x", "y"});
    s.add_eq({frac(1), frac(1)}, 1);
    s.add_eq({frac(2), frac(2)}, 2);
    s.add_ge({frac(1), frac(0)}, 0);
    s.add_ge({frac(0), frac(1)}, 0);
    auto r = maximize(s, {frac(1), frac(0)});
    ASSERT_TRUE(r.optimal());
    EXPECT_EQ(r.value, 1);
    EXPECT_TRUE(verify_result(s, {frac(1), frac(0)}, r));
}

TEST(Maximize, AgreesWithVertexEnumerationAndFourierMotzkin) {
    oracle::RationalSampler rng(2024);
    int infeasible = 0, optimal = 0;
    for (int trial = 0; trial < 300; ++trial) {
        auto s = random_system(rng);
        Vector c(s.dimension());
        for (auto& x : c) x = rng.integer(-2, 2);
        auto r = maximize(s, c);
        ASSERT_TRUE(verify_result(s, c, r));
        auto vmax = oracle::vertex_maximum(s, c);
        auto fm = fm_maximize(s, c);
        if (!vmax) {
            ++infeasible;
            ASSERT_EQ(r.status, LPStatus::Infeasible);
            ASSERT_TRUE(verify_infeasibility(s, *r.certificate));
            EXPECT_EQ(fm.status, LPStatus::Infeasible);
        } else {
            ++optimal;
            ASSERT_TRUE(r.optimal());
            EXPECT_EQ(r.value, *vmax);
            EXPECT_TRUE(s.satisfied_by(r.witness));
            ASSERT_EQ(fm.status, LPStatus::Optimal);
            EXPECT_EQ(fm.value, *vmax);
        }
    }
    EXPECT_GT(infeasible, 0);
    EXPECT_GT(optimal, 0);
}

TEST(Maximize, DualCertificatesCheckOut) {
    for (int m = 1; m <= 8; ++m) {
        auto s = chain_system(m);
        for (int k = 0; k < m; ++k) {
            Vector c = unit(m, k);
            auto r = maximize(s, c);
            ASSERT_TRUE(r.optimal());
            EXPECT_TRUE(verify_dual_bound(s, c, r.dual, r.value));
            Vector wrong = r.dual;
            wrong.back() += 1;
            EXPECT_FALSE(verify_dual_bound(s, c, wrong, r.value));
        }
    }
}

TEST(Farkas, TamperedCertificatesAreRejected) {
    LinIneqSystem s({"x"});
    s.add_ge({frac(1)}, 1);
    s.add_ge({frac(-1)}, 0);
    EXPECT_FALSE(verify_infeasibility(s, {q({{1, 1}, {0, 1}})}));
    EXPECT_FALSE(verify_infeasibility(s, {q({{-1, 1}, {-1, 1}})}));
    EXPECT_FALSE(verify_infeasibility(s, {q({{1, 1}})}));
    EXPECT_TRUE(verify_infeasibility(s, {q({{3, 1}, {3, 1}})}));
}

TEST(IsImplied, ChainConsequences) {
    auto s5 = chain_system(5);
    auto r = is_implied(s5, Constraint{q({{0, 1}, {1, 1}, {-2, 3}, {0, 1}, {0, 1}}), Relation::GE, 0, {}});
    EXPECT_TRUE(r.implied);
    auto s7 = chain_system(7);
    Vector c(7, Rational(0));
    c[3] = 1;
    c[4] = frac(-4, 5);
    EXPECT_TRUE(is_implied(s7, Constraint{c, Relation::GE, 0, {}}).implied);
}

TEST(IsImplied, AllChainBoundsCarryCertificates) {
    for (int m = 2; m <= 8; ++m) {
        auto s = chain_system(m);
        for (int k = 1; k < m; ++k) {
            // a_k >= k/(k+1) a_{k+1}
            Vector up(m, Rational(0));
            up[k - 1] = 1;
            up[k] = frac(-k, k + 1);
            // a_{k+1} >= (m-k)/(m-k+1) a_k
            Vector down(m, Rational(0));
            down[k] = 1;
            down[k - 1] = frac(-(m - k), m - k + 1);
            for (const auto& row : {up, down}) {
                Constraint ineq{row, Relation::GE, 0, {}};
                auto r = is_implied(s, ineq);
                ASSERT_TRUE(r.implied) << m << " " << k;
                EXPECT_TRUE(verify_implication(s, ineq, *r.certificate));
            }
            // a_i = i/(m+1) attains the ratio, so the next-stronger one fails.
            Vector tight = up;
            tight[k] = frac(-(k + 1), k + 2);
            auto r = is_implied(s, Constraint{tight, Relation::GE, 0, {}});
            ASSERT_FALSE(r.implied) << m << " " << k;
            ASSERT_TRUE(r.counterexample);
            EXPECT_TRUE(s.satisfied_by(*r.counterexample));
            EXPECT_LT(dot(tight, *r.counterexample), 0);
        }
    }
}

TEST(IsImplied, CounterexampleIsFeasibleAndViolating) {
    auto s = chain_system(3);
    Constraint ineq{q({{1, 1}, {-1, 1}, {0, 1}}), Relation::GE, 0, {}};
    auto r = is_implied(s, ineq);
    EXPECT_FALSE(r.implied);
    ASSERT_TRUE(r.counterexample);
    EXPECT_TRUE(s.satisfied_by(*r.counterexample));
    EXPECT_LT(dot(ineq.coeffs, *r.counterexample), 0);
    EXPECT_EQ(*r.counterexample, q({{1, 2}, {1, 1}, {1, 2}}));
    // (1/2, 1, 3/4) breaks 1 - a1 - a3 >= 0, so it is not a valid witness.
    EXPECT_FALSE(s.satisfied_by(q({{1, 2}, {1, 1}, {3, 4}})));
}

TEST(IsImplied, InfeasibleSystemImpliesEverything) {
    LinIneqSystem s({"x"});
    s.add_ge({frac(1)}, 1);
    s.add_ge({frac(-1)}, 0);
    Constraint ineq{{frac(1)}, Relation::GE, 100, {}};
    auto r = is_implied(s, ineq);
    EXPECT_TRUE(r.implied);
    EXPECT_TRUE(verify_implication(s, ineq, *r.certificate));
}

TEST(IsImplied, Errors) {
    auto s = chain_system(3);
    EXPECT_THROW(is_implied(s, Constraint{q({{1, 1}}), Relation::GE, 0, {}}), std::invalid_argument);
    EXPECT_THROW(is_implied(s, Constraint{q({{1, 1}, {0, 1}, {0, 1}}), Relation::EQ, 0, {}}), std::invalid_argument);
}

TEST(Eliminate, TriangleProjection) {
    LinIneqSystem s({"x", "y"});
    s.add_ge({frac(1), frac(0)}, 0);
    s.add_ge({frac(-1), frac(1)}, 0);
    s.add_ge({frac(0), frac(-1)}, -1);
    auto p = eliminate(s, "x");
    EXPECT_EQ(p.variables(), std::vector<std::string>{"y"});
    ASSERT_EQ(p.size(), 2u);
    std::vector<std::pair<Rational, Rational>> rows;
    for (const auto& c : p.constraints()) rows.emplace_back(c.coeffs[0], c.rhs);
    std::sort(rows.begin(), rows.end());
    EXPECT_EQ(rows[0], std::make_pair(Rational(-1), Rational(-1)));
    EXPECT_EQ(rows[1], std::make_pair(Rational(1), Rational(0)));
}

TEST(Eliminate, ChainMaximumSurvives) {
    auto s = chain_system(3);
    auto p = eliminate(s, "a2");
    auto r = maximize(p, unit(2, 0));
    ASSERT_TRUE(r.optimal());
    EXPECT_EQ(r.value, frac(3, 4));
}

TEST(Eliminate, Errors) {
    LinIneqSystem empty;
    EXPECT_THROW(eliminate(empty, "x"), std::invalid_argument);
    EXPECT_THROW(eliminate(chain_system(2), "a3"), std::invalid_argument);
}

TEST(Eliminate, PreservesOptimumOfUninvolvedObjective) {
    oracle::RationalSampler rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        auto s = random_system(rng);
        if (s.dimension() < 2) continue;
        const std::size_t drop = static_cast<std::size_t>(rng.integer(0, static_cast<long long>(s.dimension()) - 1));
        Vector c(s.dimension());
        for (auto& x : c) x = rng.integer(-2, 2);
        c[drop] = 0;
        auto before = maximize(s, c);
        auto p = eliminate(s, s.variables()[drop]);
        Vector c2;
        for (std::size_t j = 0; j < c.size(); ++j)
            if (j != drop) c2.push_back(c[j]);
        auto after = maximize(p, c2);
        ASSERT_EQ(before.status, after.status);
        if (before.optimal()) {
            EXPECT_EQ(before.value, after.value);
        }
    }
}

TEST(Eliminate, EqualityIsSubstituted) {
    LinIneqSystem s({"x", "y"});
    s.add_eq({frac(1), frac(-2)}, 0);
    s.add_ge({frac(-1), frac(0)}, -4);
    auto p = eliminate(s, "x");
    auto r = maximize(p, {frac(1)});
    ASSERT_TRUE(r.optimal());
    EXPECT_EQ(r.value, 2);
}
