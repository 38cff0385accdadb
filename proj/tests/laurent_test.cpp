#include "twaff/laurent.hpp"

#include <gtest/gtest.h>

#include <random>
#include <thread>

namespace twaff {
namespace {

LaurentPoly q(std::int64_t e) { return LaurentPoly::monomial(e); }

LaurentPoly random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> exp(-12, 12), coeff(-5, 5), terms(0, 6);
    LaurentPoly p;
    for (int i = terms(rng); i > 0; --i) p += LaurentPoly::monomial(exp(rng), coeff(rng));
    return p;
}

// Direct closed form: (q^{mr} - q^{-mr}) / (q^r - q^{-r})
LaurentPoly qint_by_division(int m, int r) {
    return exact_divide(q(static_cast<std::int64_t>(m) * r) - q(-static_cast<std::int64_t>(m) * r), q(r) - q(-r));
}

TEST(LaurentPoly, ArithmeticBasics) {
    const LaurentPoly a = q(2) + LaurentPoly(3L);
    const LaurentPoly b = q(-1) - q(1);
    EXPECT_EQ(a * b, q(1) - q(3) + LaurentPoly::monomial(-1, 3) - LaurentPoly::monomial(1, 3));
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_TRUE(LaurentPoly().terms().empty());
    EXPECT_EQ(a.bar(), q(-2) + LaurentPoly(3L));
    EXPECT_EQ((q(1) + q(-1)).pow(2), q(2) + LaurentPoly(2L) + q(-2));
}

TEST(LaurentPoly, Rendering) {
    EXPECT_EQ(to_string(q(4) + LaurentPoly(1L) + q(-4)), "q^4 + 1 + q^-4");
    EXPECT_EQ(to_string(LaurentPoly::monomial(3, 2) - q(1)), "2q^3 - q");
    EXPECT_EQ(to_string(-q(-1)), "-q^-1");
    EXPECT_EQ(to_string(LaurentPoly()), "0");
    EXPECT_EQ(to_string(LaurentPoly(-7L)), "-7");
}

TEST(QInt, Values) {
    EXPECT_EQ(qint(1, 3), LaurentPoly(1L));
    EXPECT_EQ(qint(2, 1), q(1) + q(-1));
    EXPECT_EQ(qint(3, 2), q(4) + LaurentPoly(1L) + q(-4));
    EXPECT_TRUE(qint(0, 1).is_zero());
}

TEST(QInt, MatchesDefiningQuotient) {
    for (int m = 1; m <= 12; ++m)
        for (int r = 1; r <= 4; ++r) {
            EXPECT_EQ(qint(m, r), qint_by_division(m, r)) << m << "," << r;
            EXPECT_EQ(qint(m, r), qint(m, r).bar());
            EXPECT_EQ(qint(m, r) * qint(1, r), qint(m, r));
        }
}

TEST(QBinom, Values) {
    EXPECT_EQ(qbinom(5, 0, 2), LaurentPoly(1L));
    EXPECT_EQ(qbinom(2, 1, 1), q(1) + q(-1));
    // sympy: [4]![2]!^-2 expanded
    EXPECT_EQ(qbinom(4, 2, 1), q(4) + q(2) + LaurentPoly(2L) + q(-2) + q(-4));
    EXPECT_EQ(qbinom(4, 2, 1), qbinom(4, 4 - 2, 1));
    EXPECT_THROW(qbinom(3, 4, 1), Error);
    EXPECT_THROW(qbinom(3, -1, 1), Error);
}

TEST(QBinom, PascalRecurrenceAndSymmetry) {
    for (int r = 1; r <= 3; ++r)
        for (int m = 1; m <= 9; ++m)
            for (int k = 1; k < m; ++k) {
                const LaurentPoly lhs = qbinom(m, k, r);
                const LaurentPoly rhs = q(static_cast<std::int64_t>(r) * k) * qbinom(m - 1, k, r) +
                                        q(-static_cast<std::int64_t>(r) * (m - k)) * qbinom(m - 1, k - 1, r);
                EXPECT_EQ(lhs, rhs) << m << " " << k << " " << r;
                EXPECT_EQ(lhs, qbinom(m, m - k, r));
            }
}

TEST(ExactDivide, RejectsInexact) {
    EXPECT_THROW(exact_divide(q(2) + LaurentPoly(1L), q(1) + LaurentPoly(1L)), Error);
    EXPECT_THROW(exact_divide(q(1), LaurentPoly()), Error);
}

TEST(Cyclotomic, KnownPolynomials) {
    EXPECT_EQ(cyclotomic(3), (detail::DensePoly{1, 1, 1}));
    EXPECT_EQ(cyclotomic(9), (detail::DensePoly{1, 0, 0, 1, 0, 0, 1}));
    EXPECT_EQ(cyclotomic(15), (detail::DensePoly{1, -1, 0, 1, -1, 1, 0, -1, 1}));
    EXPECT_EQ(euler_phi(25), 20);
}

TEST(Cyclotomic, ConcurrentFirstUse) {
    std::vector<std::thread> pool;
    std::vector<int> degrees(8, 0);
    for (int i = 0; i < 8; ++i) pool.emplace_back([&, i] { degrees[i] = euler_phi(105); });
    for (auto& th : pool) th.join();
    for (int d : degrees) EXPECT_EQ(d, 48);
}

TEST(MultEps, Examples) {
    EXPECT_EQ(mult_eps(LaurentPoly(1L), 5), 0);
    EXPECT_EQ(mult_eps(qint(5, 1), 5), 1);
    EXPECT_EQ(mult_eps(qint(6, 2), 3), 1);
    EXPECT_EQ(mult_eps(q(-7) * qint(5, 1), 5), 1);
    EXPECT_EQ(mult_eps(qint(5, 1).pow(3) * qint(3, 1), 5), 3);
    EXPECT_THROW(mult_eps(LaurentPoly(), 5), Error);
}

// Closed form: a primitive l-th root is a root of [m]_{q^r} iff l | mr and
// l does not divide r, and never a double root.
TEST(MultEps, AgreesWithDivisibilityRule) {
    for (int l = 3; l <= 15; l += 2)
        for (int r = 1; r <= 4; ++r)
            for (int m = 1; m <= 60; ++m) {
                const int rule = ((m * r) % l == 0 && r % l != 0) ? 1 : 0;
                EXPECT_EQ(mult_eps(qint(m, r), l), rule) << "m=" << m << " r=" << r << " l=" << l;
            }
}

TEST(EvalAtEps, Examples) {
    EXPECT_TRUE(eval_at_eps(qint(7, 1), 7).is_zero());
    EXPECT_EQ(eval_at_eps(LaurentPoly(1L), 5).residue(), LaurentPoly(1L));
    EXPECT_EQ(eval_at_eps(q(5), 5), eval_at_eps(LaurentPoly(1L), 5));
    EXPECT_EQ(eval_at_eps(q(-1), 5), eval_at_eps(q(4), 5));
    EXPECT_FALSE(eval_at_eps(qint(2, 1), 9).is_zero());
    // [3]_q vanishes at a primitive 9th root? no: 9 does not divide 3
    EXPECT_FALSE(eval_at_eps(qint(3, 1), 9).is_zero());
    EXPECT_TRUE(eval_at_eps(qint(3, 3), 9).is_zero());
}

TEST(EvalAtEps, ZeroIffCyclotomicDivides) {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const LaurentPoly f = random_poly(rng);
        if (f.is_zero()) continue;
        for (int l : {3, 5, 9, 15}) EXPECT_EQ(eval_at_eps(f, l).is_zero(), mult_eps(f, l) >= 1);
    }
}

TEST(EvalAtEps, RingMorphism) {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        const LaurentPoly f = random_poly(rng), g = random_poly(rng);
        for (int l : {3, 7, 9, 15}) {
            EXPECT_EQ(eval_at_eps(f * g, l), eval_at_eps(f, l) * eval_at_eps(g, l));
            EXPECT_EQ(eval_at_eps(f + g, l), eval_at_eps(f, l) + eval_at_eps(g, l));
        }
    }
}

} // namespace
} // namespace twaff
