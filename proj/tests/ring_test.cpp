#include <gtest/gtest.h>

#include "oaf/oaf.hpp"
#include "support/helpers.hpp"
#include "support/isomorphism.hpp"

namespace oaf {
namespace {

using testing::isomorphic;

TEST(ZMod, SmallestRingIsAField) {
    const auto r = make_zmod(2);
    EXPECT_EQ(r.order(), 2u);
    EXPECT_TRUE(r.is_field());
    EXPECT_EQ(r.nonunits().count(), 1u);
}

TEST(ZMod, Z4IsLocalWithNonunitsZeroAndTwo) {
    const auto r = make_zmod(4);
    EXPECT_TRUE(r.is_local());
    EXPECT_EQ(testing::elements(r.nonunits()), (std::vector<Elem>{0, 2}));
    EXPECT_EQ(testing::elements(r.units()), (std::vector<Elem>{1, 3}));
}

TEST(ZMod, Z12Units) {
    const auto r = make_zmod(12);
    EXPECT_FALSE(r.is_local());
    EXPECT_EQ(testing::elements(r.units()), (std::vector<Elem>{1, 5, 7, 11}));
}

TEST(ZMod, UnitCountIsEulerPhi) {
    for (int n = 2; n <= 64; ++n) {
        EXPECT_EQ(make_zmod(n).units().count(), testing::euler_phi(n)) << n;
    }
}

TEST(ZMod, NilpotentsAreMultiplesOfTheRadical) {
    for (int n = 2; n <= 64; ++n) {
        const auto r = make_zmod(n);
        const auto rad = testing::radical_of(n);
        for (Elem a = 0; a < r.order(); ++a) EXPECT_EQ(r.is_nilpotent(a), a % rad == 0) << n << " " << a;
    }
}

TEST(ZMod, LocalExactlyForPrimePowers) {
    for (int n = 2; n <= 64; ++n) {
        int m = n;
        int p = 2;
        while (m % p) ++p;
        while (m % p == 0) m /= p;
        EXPECT_EQ(make_zmod(n).is_local(), m == 1) << n;
    }
}

TEST(ZMod, RejectsOrderBelowTwo) {
    EXPECT_THROW(make_zmod(1), Error);
    EXPECT_THROW(make_zmod(0), Error);
    try {
        make_zmod(-3);
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::invalid_order);
    }
}

TEST(ZMod, F5IsAReducedField) {
    const auto r = make_zmod(5);
    EXPECT_TRUE(r.is_field());
    EXPECT_TRUE(r.is_reduced());
}

TEST(ZMod, FromIntReducesModN) {
    const auto r = make_zmod(7);
    EXPECT_EQ(r.from_int(-1), 6u);
    EXPECT_EQ(r.from_int(15), 1u);
}

TEST(PolyQuotient, DualNumbersOverF2) {
    const auto f2 = make_zmod(2);
    const auto r = make_poly_quotient(f2, {0, 0, 1});
    EXPECT_EQ(r.order(), 4u);
    EXPECT_TRUE(r.is_local());
    const Elem x = 2;
    EXPECT_EQ(r.name(x), "x");
    EXPECT_EQ(r.mul(x, x), r.zero());
    const auto m = nonunit_ideal(r);
    EXPECT_EQ(testing::elements(m.members()), (std::vector<Elem>{0, x}));
    EXPECT_TRUE(ideal_power(m, 2).is_zero());
}

TEST(PolyQuotient, SplitModulusGivesF2xF2) {
    const auto f2 = make_zmod(2);
    const auto r = make_poly_quotient(f2, {0, 1, 1});
    EXPECT_EQ(r.order(), 4u);
    EXPECT_FALSE(r.is_local());
    EXPECT_EQ(all_ideals(r).maximal().size(), 2u);
    const auto idem = r.idempotents();
    EXPECT_NE(std::find(idem.begin(), idem.end(), Elem{2}), idem.end());
    EXPECT_TRUE(isomorphic(r, make_product({f2, f2})));
}

TEST(PolyQuotient, DegreeOneModulusGivesTheBase) {
    const auto z4 = make_zmod(4);
    const auto r = make_poly_quotient(z4, {0, 1});
    EXPECT_EQ(r.order(), 4u);
    EXPECT_TRUE(isomorphic(r, z4));
}

TEST(PolyQuotient, RejectsNonMonicOrConstantModulus) {
    const auto z4 = make_zmod(4);
    try {
        make_poly_quotient(z4, {1, 2});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::unsupported_modulus);
    }
    EXPECT_THROW(make_poly_quotient(z4, {1}), Error);
}

TEST(Product, F2xF2) {
    const auto f2 = make_zmod(2);
    const auto r = make_product({f2, f2});
    EXPECT_EQ(r.order(), 4u);
    EXPECT_FALSE(r.is_local());
    EXPECT_EQ(all_ideals(r).size(), 4u);
    EXPECT_EQ(testing::elements(r.units()), (std::vector<Elem>{product_element(r, {1, 1})}));
}

TEST(Product, ThreeCopiesOfF2HaveEightIdeals) {
    const auto f2 = make_zmod(2);
    EXPECT_EQ(all_ideals(make_product({f2, f2, f2})).size(), 8u);
}

TEST(Product, Z4xF2IsGeneralZpi) {
    const RingAnalysis ra(make_product({make_zmod(4), make_zmod(2)}));
    EXPECT_FALSE(ra.is_local());
    EXPECT_TRUE(is_general_ZPI(ra));
}

TEST(Product, RejectsEmptyAndSingleton) {
    EXPECT_THROW(make_product({}), Error);
    try {
        make_product({make_zmod(3)});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::arity);
    }
}

TEST(Product, ComponentsRoundTrip) {
    const auto r = make_product({make_zmod(3), make_zmod(4)});
    for (Elem a = 0; a < r.order(); ++a) {
        EXPECT_EQ(product_element(r, {product_component(r, a, 0), product_component(r, a, 1)}), a);
    }
}

TEST(Quotient, Z8ModFourIsZ4) {
    const auto z8 = make_zmod(8);
    const auto q = make_quotient(z8, principal_ideal(z8, 4));
    EXPECT_EQ(q.order(), 4u);
    EXPECT_TRUE(isomorphic(q, make_zmod(4)));
}

TEST(Quotient, ByZeroIsIsomorphic) {
    for (const char* e : {"Z/12", "Z/2 x Z/4", "poly(F_3, 0, 0, 1)", "idealize(Z/4, self)"}) {
        const auto r = testing::ring(e);
        EXPECT_TRUE(isomorphic(make_quotient(r, zero_ideal(r)), r)) << e;
    }
}

TEST(Quotient, ProjectionOfF2xF2) {
    const auto f2 = make_zmod(2);
    const auto r = make_product({f2, f2});
    const auto q = make_quotient(r, principal_ideal(r, product_element(r, {1, 0})));
    EXPECT_TRUE(isomorphic(q, f2));
}

TEST(Quotient, RejectsTheUnitIdeal) {
    const auto r = make_zmod(6);
    try {
        make_quotient(r, unit_ideal(r));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::improper_ideal);
    }
}

TEST(Quotient, ProjectionIsAHomomorphism) {
    const auto r = testing::ring("Z/3 x Z/9");
    const auto qm = make_quotient_map(r, principal_ideal(r, product_element(r, {0, 3})));
    for (Elem a = 0; a < r.order(); ++a) {
        for (Elem b = 0; b < r.order(); ++b) {
            EXPECT_EQ(qm.projection[r.add(a, b)], qm.ring.add(qm.projection[a], qm.projection[b]));
            EXPECT_EQ(qm.projection[r.mul(a, b)], qm.ring.mul(qm.projection[a], qm.projection[b]));
        }
    }
}

TEST(Local, Examples) {
    EXPECT_TRUE(make_zmod(8).is_local());
    EXPECT_FALSE(make_zmod(12).is_local());
    const auto z12 = make_zmod(12);
    EXPECT_TRUE(z12.is_unit(z12.add(2, 3)));
    EXPECT_FALSE(make_product({make_zmod(2), make_zmod(2)}).is_local());
}

TEST(Idempotents, SplittingMatchesLocalFactors) {
    // R is isomorphic to the product of the rings eR over primitive idempotents e.
    for (const char* e : {"Z/12", "Z/30", "Z/2 x Z/4", "poly(F_2, 0, 1, 1)", "Z/3 x poly(F_2, 0, 0, 1)"}) {
        const auto r = testing::ring(e);
        const auto prims = r.primitive_idempotents();
        std::vector<FiniteRing> parts;
        for (Elem p : prims) {
            const Elem other = r.sub(r.one(), p);
            parts.push_back(make_quotient(r, principal_ideal(r, other)));
            EXPECT_TRUE(parts.back().is_local()) << e;
        }
        if (parts.size() == 1) {
            EXPECT_TRUE(r.is_local()) << e;
        } else {
            EXPECT_TRUE(isomorphic(make_product(parts), r)) << e;
        }
    }
}

TEST(Nilpotency, Examples) {
    const auto z8 = make_zmod(8);
    EXPECT_EQ(nilpotency_index(principal_ideal(z8, 2)), 3u);
    const auto r = testing::ring("idealize(Z/4, self)");
    EXPECT_EQ(nilpotency_index(nonunit_ideal(r)), 3u);
    EXPECT_FALSE(nilpotency_index(unit_ideal(z8)).has_value());
}

TEST(Elements, CrossRingArithmeticIsRejected) {
    const auto a = make_zmod(4);
    const auto b = make_zmod(4);
    EXPECT_THROW(a.element(1) + b.element(1), Error);
    EXPECT_EQ((a.element(3) * a.element(3)).index(), 1u);
}

TEST(Config, OrderCapIsEnforced) {
    Config cfg;
    cfg.max_ring_order = 100;
    EXPECT_THROW(make_zmod(101, cfg), ResourceLimitError);
    const auto r = make_zmod(10, cfg);
    EXPECT_THROW(make_product({r, r, r}), ResourceLimitError);
}

}  // namespace
}  // namespace oaf
