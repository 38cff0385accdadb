#include "twaff/center.hpp"

#include <gtest/gtest.h>

#include "twaff/selftest.hpp"

namespace twaff {
namespace {

LaurentPoly q(std::int64_t e) { return LaurentPoly::monomial(e); }

TEST(DetHr, Examples) {
    const DetHrData a = det_hr(parse_type("A4_2"), 1, 5);
    EXPECT_EQ(a.table_mult, 1);
    EXPECT_EQ(a.formula_mult, 1);
    EXPECT_FALSE(a.discrepancy);
    EXPECT_EQ(a.slot_count, 2);

    for (int r = 1; r <= 12; ++r)
        if (r % 5 != 0) {
            EXPECT_EQ(det_hr(parse_type("D3_2"), r, 5).table_mult, 0) << r;
        }
    EXPECT_EQ(det_hr(parse_type("A2_2"), 1, 7).formula_mult, 0);
    EXPECT_EQ(det_hr(parse_type("A2_2"), 1, 7).table_mult, 0);
}

TEST(DetHr, DiscrepancyOutsideA2n) {
    // l | r, k !| r: the table counts #I_0 = 2, the product #I^5 = 1 slot.
    const DetHrData d = det_hr(parse_type("D3_2"), 5, 5);
    EXPECT_EQ(d.slot_count, 1);
    EXPECT_EQ(d.table_mult, 2);
    EXPECT_EQ(d.formula_mult, 1);
    EXPECT_TRUE(d.discrepancy);
    // k | r: no tension
    EXPECT_FALSE(det_hr(parse_type("D3_2"), 10, 5).discrepancy);
    EXPECT_EQ(det_hr(parse_type("D3_2"), 10, 5).formula_mult, 2);
}

TEST(DetHr, A2nNeverFlagged) {
    for (int n = 1; n <= 3; ++n) {
        const TwistedType t = build_type(Family::A2n_2, n);
        for (int l : admissible_orders(t, 15))
            for (int r = 1; r <= 40; ++r) EXPECT_FALSE(det_hr(t, r, l).discrepancy) << n << " " << l << " " << r;
    }
}

TEST(DetHr, TableValuesAreZeroOneOrN) {
    for (const auto& t : test_types())
        for (int l : admissible_orders(t, 15))
            for (int r = 1; r <= 30; ++r) {
                const int m = det_hr(t, r, l).table_mult;
                EXPECT_TRUE(m == 0 || m == 1 || m == t.n);
            }
}

TEST(DetHr, FlagsExactlyWhereLDividesRAndKDoesNot) {
    for (const auto& t : test_types()) {
        if (t.family == Family::A2n_2) continue;
        for (int l : admissible_orders(t, 15))
            for (int r = 1; r <= 30; ++r)
                EXPECT_EQ(det_hr(t, r, l).discrepancy, r % l == 0 && r % t.k != 0)
                    << type_name(t) << " l=" << l << " r=" << r;
    }
}

TEST(DetHr, Errors) {
    EXPECT_THROW(det_hr(parse_type("A2_2"), 0, 5), Error);
    EXPECT_THROW(det_hr(parse_type("A2_2"), 1, 4), Error);
}

TEST(JSets, Examples) {
    EXPECT_TRUE(jsets(parse_type("D4_3"), 5, 10).double_prime.empty());
    EXPECT_TRUE(jsets(parse_type("A5_2"), 7, 50).double_prime.empty());

    const JSet j = jsets(parse_type("A4_2"), 5, 20);
    std::vector<int> rs;
    for (const auto& s : j.double_prime) {
        rs.push_back(s.r);
        EXPECT_EQ(s.i_star, 2);
    }
    EXPECT_EQ(rs, (std::vector<int>{1, 3, 7, 9, 11, 13, 17, 19}));
    // J' imaginary slots at 5, 10, 15, 20 over I_0 = {1, 2}
    EXPECT_EQ(j.prime_imaginary.size(), 8u);
}

TEST(JSets, PrimeSlotsOutsideTheRootSystem) {
    // D3_2: d = (1,1,2), I^5 = {1} while I_0 = {1,2}
    const JSet j = jsets(parse_type("D3_2"), 5, 10);
    ASSERT_EQ(j.prime_imaginary.size(), 4u);
    EXPECT_TRUE(j.prime_imaginary[0].in_root_system);
    EXPECT_FALSE(j.prime_imaginary[1].in_root_system);
    EXPECT_TRUE(j.prime_imaginary[2].in_root_system);
    EXPECT_TRUE(j.prime_imaginary[3].in_root_system);
}

TEST(JSets, A2nm1AndE6Degrees) {
    // n~ - n + 1 = 3 for both: odd multiples of 3 not divisible by 9
    for (const char* name : {"A5_2", "E6_2"}) {
        std::vector<int> rs;
        for (const auto& s : jsets(parse_type(name), 9, 30).double_prime) rs.push_back(s.r);
        EXPECT_EQ(rs, (std::vector<int>{3, 15, 21})) << name;
    }
}

TEST(Star, A2Example) {
    const StarElement s = star_coeffs(parse_type("A2_2"), 1, 3);
    EXPECT_EQ(s.i_star, 1);
    ASSERT_EQ(s.coeffs.size(), 1u);
    EXPECT_EQ(s.coeffs.at(1), LaurentPoly(1L));
}

TEST(Star, A4Example) {
    const StarElement s = star_coeffs(parse_type("A4_2"), 1, 5);
    EXPECT_EQ(s.i_star, 2);
    EXPECT_EQ(s.coeffs.at(1), q(2) + q(-2));
    EXPECT_EQ(s.coeffs.at(2), q(1) + q(-1));
    EXPECT_FALSE(eval_at_eps(s.coeffs.at(2), 5).is_zero());
}

TEST(Star, E6AndA5Examples) {
    const StarElement e = star_coeffs(parse_type("E6_2"), 3, 9);
    EXPECT_EQ(e.i_star, 2);
    EXPECT_EQ(e.coeffs.at(2), LaurentPoly(-1L));
    EXPECT_EQ(e.coeffs.at(1), -qint(2, 3));
    const StarElement a = star_coeffs(parse_type("A5_2"), 3, 9);
    EXPECT_EQ(a.i_star, 3);
    // d = (1,2,1,1), so I^3 = {2, 3}
    EXPECT_EQ(a.coeffs.size(), 2u);
    EXPECT_EQ(a.coeffs.at(3), LaurentPoly(-1L));
}

TEST(Star, NotAStarDegree) {
    try {
        star_coeffs(parse_type("D3_2"), 1, 5);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotAStarDegree);
    }
    EXPECT_THROW(star_coeffs(parse_type("A4_2"), 2, 5), Error);
    EXPECT_THROW(star_coeffs(parse_type("A4_2"), 5, 5), Error);
}

TEST(Multiplicities, SmallWeights) {
    const TwistedType t = parse_type("A2_2");
    const RootCatalog c = real_roots_upto(t, 1);
    EXPECT_EQ(highest_coeff_mult(c, LatticeVector{0, 0}, 5), 0u);
    EXPECT_EQ(ziz_bound(c, LatticeVector{0, 0}, 5), 0u);
    EXPECT_EQ(highest_coeff_mult(c, LatticeVector{0, 1}, 5), 0u);
    const RootCatalog c0 = real_roots_upto(t, 0);
    EXPECT_EQ(highest_coeff_mult(c0, LatticeVector{0, 5}, 5), 1u);
    EXPECT_EQ(ziz_bound(c0, LatticeVector{0, 5}, 5), 1u);
    EXPECT_EQ(graded_center_dim(c0, LatticeVector{0, 5}, 5), 1u);
    EXPECT_EQ(graded_center_dim(c0, LatticeVector{0, 4}, 5), 0u);
    EXPECT_EQ(graded_center_dim(c0, LatticeVector{0, 0}, 5), 1u);
}

TEST(Multiplicities, StarDegreeContributes) {
    // A2_2 at l=3: r = 1 lies in J'' so delta itself carries a central element.
    const TwistedType t = parse_type("A2_2");
    const RootCatalog c = real_roots_upto(t, 1);
    const AgreementReport rep = compare_bounds(c, delta_vector(t), 3);
    EXPECT_TRUE(rep.agree);
    EXPECT_GE(rep.bound, 1u);
    EXPECT_GE(graded_center_dim(c, delta_vector(t), 3), 1u);
}

TEST(Multiplicities, AgreementOnSmallGrid) {
    for (const auto& t : grid_types()) {
        const RootCatalog c = real_roots_upto(t, 2);
        for (int l : {5, 7})
            for (const auto& eta : weight_grid(t, 2, 3)) {
                const AgreementReport rep = compare_bounds(c, eta, l);
                EXPECT_TRUE(rep.agree) << type_name(t) << " " << format_root(eta);
                EXPECT_TRUE(rep.flagged_r.empty());
            }
    }
}

TEST(Multiplicities, FlaggedGapIsExplained) {
    const TwistedType t = parse_type("D3_2");
    const RootCatalog c = real_roots_upto(t, 5);
    const LatticeVector eta = 5 * delta_vector(t);
    const AgreementReport rep = compare_bounds(c, eta, 5);
    EXPECT_FALSE(rep.agree);
    EXPECT_LT(rep.highest, rep.bound);
    EXPECT_EQ(rep.flagged_r, (std::vector<int>{5}));
    EXPECT_TRUE(rep.explained);
    // gap is one missing slot at 5 delta times sum_m par(eta - 5 m delta) = 1
    EXPECT_EQ(rep.bound - rep.highest, 1u);
}

TEST(PZ, A2Example) {
    const PZRelation pz = pz_relation(parse_type("A2_2"), 5);
    EXPECT_EQ(pz.l_i, (std::vector<int>{5, 5}));
    EXPECT_EQ(pz.exponents, (std::vector<int>{1, 2}));
    EXPECT_EQ(pz.statement, "K_delta^5 - (K_0^5)^1 (K_1^5)^2");
}

TEST(PZ, D43NineDividesByThree) {
    const PZRelation pz = pz_relation(parse_type("D4_3"), 9);
    EXPECT_EQ(pz.l_i, (std::vector<int>{9, 9, 3}));
    EXPECT_EQ(pz.exponents, (std::vector<int>{1, 2, 3}));
}

TEST(CenterCatalog, Structure) {
    for (const auto& t : test_types())
        for (int l : admissible_orders(t, 9)) {
            const CenterCatalog c = center_generators(t, l, 2 * l);
            int kpart = 0, pos = 0, neg = 0;
            for (const auto& g : c.generators) {
                switch (g.tag) {
                case GeneratorTag::KPower:
                case GeneratorTag::KDelta: ++kpart; break;
                case GeneratorTag::RealPower:
                case GeneratorTag::ImaginarySlot:
                case GeneratorTag::Star: ++pos; break;
                default: ++neg;
                }
                if (g.tag == GeneratorTag::RealPower) {
                    EXPECT_EQ(g.weight, static_cast<std::int64_t>(g.power) * *g.root);
                    EXPECT_LE(g.weight.delta_degree(), 2 * l);
                }
                if (g.tag == GeneratorTag::ImaginarySlot) {
                    EXPECT_EQ(g.r % l, 0);
                }
                if (t.family == Family::Dnp1_2 || t.family == Family::D4_3) {
                    EXPECT_NE(g.tag, GeneratorTag::Star);
                    EXPECT_NE(g.tag, GeneratorTag::NegStar);
                }
            }
            EXPECT_EQ(kpart, t.size() + 1);
            EXPECT_EQ(pos, neg);
            EXPECT_EQ(c.pz.exponents.size(), static_cast<std::size_t>(t.size()));
        }
}

TEST(CenterCatalog, SlotDivergencesOnlyOffK) {
    const CenterCatalog c = center_generators(parse_type("D3_2"), 5, 10);
    ASSERT_EQ(c.divergences.size(), 1u);
    EXPECT_EQ(c.divergences[0].r, 5);
    EXPECT_EQ(c.divergences[0].slot, 2);
    EXPECT_TRUE(center_generators(parse_type("A4_2"), 5, 10).divergences.empty());
}

TEST(CenterCatalog, StarGeneratorsCarryCoefficients) {
    const CenterCatalog c = center_generators(parse_type("A4_2"), 5, 3);
    int stars = 0;
    for (const auto& g : c.generators)
        if (g.tag == GeneratorTag::Star) {
            ++stars;
            ASSERT_TRUE(g.star.has_value());
            EXPECT_EQ(g.index, 2);
        }
    EXPECT_EQ(stars, 2);  // r = 1, 3
}

} // namespace
} // namespace twaff
