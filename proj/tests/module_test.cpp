#include <gtest/gtest.h>

#include "oaf/oaf.hpp"
#include "support/helpers.hpp"
#include "support/isomorphism.hpp"

namespace oaf {
namespace {

using testing::elements;

TEST(Module, SelfOverZ4) {
    const auto a = make_zmod(4);
    const auto e = make_module_self(a);
    EXPECT_EQ(e.order(), 4u);
    EXPECT_EQ(e.kind(), ModuleKind::self);
    for (Elem r = 0; r < 4; ++r) {
        for (Elem x = 0; x < 4; ++x) EXPECT_EQ(e.act(r, x), a.mul(r, x));
    }
    EXPECT_TRUE(annihilator(e).is_zero());
    EXPECT_TRUE(module_is_cyclic(e));
}

TEST(Module, QuotientOfZ4ByTwo) {
    const auto a = make_zmod(4);
    const auto e = make_module_quotient(a, principal_ideal(a, 2));
    EXPECT_EQ(e.order(), 2u);
    for (Elem x = 0; x < 2; ++x) EXPECT_EQ(e.act(2, x), e.zero());
    EXPECT_EQ(annihilator(e), principal_ideal(a, 2));
    EXPECT_EQ(e.description(), "quotmod(2)");
}

TEST(Module, SelfOverF2IsSimple) {
    const auto e = make_module_self(make_zmod(2));
    EXPECT_EQ(module_submodules(e).size(), 2u);
}

TEST(Module, SubmodulesOfSelfAreIdeals) {
    for (std::string_view s : {std::string_view("Z/12"), std::string_view("Z/2 x Z/4"), xy_square_ring}) {
        const auto a = testing::ring(std::string(s));
        const auto subs = module_submodules(make_module_self(a));
        const auto lat = all_ideals(a);
        ASSERT_EQ(subs.size(), lat.size()) << s;
        for (std::size_t i = 0; i < subs.size(); ++i) EXPECT_EQ(subs[i], lat[i].members()) << s;
    }
}

TEST(Module, ProductAndMismatch) {
    const auto a = make_zmod(4);
    const auto e = make_module_product({make_module_self(a), make_module_quotient(a, principal_ideal(a, 2))});
    EXPECT_EQ(e.order(), 8u);
    EXPECT_FALSE(module_is_cyclic(make_module_product({make_module_self(a), make_module_self(a)})));
    try {
        make_module_product({make_module_self(a), make_module_self(make_zmod(4))});
        FAIL();
    } catch (const Error& err) {
        EXPECT_EQ(err.kind(), ErrorKind::module_mismatch);
    }
    EXPECT_THROW(make_module_product({make_module_self(a)}), Error);
}

TEST(Module, RejectsBrokenAction) {
    // A constant action violates (a + b) e = ae + be.
    const auto z3 = make_zmod(3);
    std::vector<Elem> add(9), act(9);
    for (Elem a = 0; a < 3; ++a) {
        for (Elem e = 0; e < 3; ++e) {
            add[a * 3 + e] = (a + e) % 3;
            act[a * 3 + e] = e;
        }
    }
    try {
        make_module(z3, 3, add, act, "broken");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::module_axiom);
    }
}

TEST(Module, ConditionDataForZ4OverItself) {
    const auto a = make_zmod(4);
    const auto e = make_module_self(a);
    const auto m = principal_ideal(a, 2);
    const std::vector<Elem> expected{0, 2};
    EXPECT_EQ(elements(ideal_times_module(m, e)), expected);
    EXPECT_EQ(elements(element_times_module(2, e)), expected);
    EXPECT_EQ(elements(ideal_times_element(m, e, 1)), expected);
    EXPECT_EQ(elements(ideal_times_element(m, e, 3)), expected);
}

TEST(Module, Divisibility) {
    EXPECT_TRUE(divisible_module(make_module_self(make_zmod(4))));
    const auto f2f2 = make_product({make_zmod(2), make_zmod(2)});
    const auto proj = make_module_quotient(f2f2, principal_ideal(f2f2, product_element(f2f2, {0, 1})));
    EXPECT_EQ(proj.order(), 2u);
    EXPECT_TRUE(divisible_module(proj));
    EXPECT_TRUE(divisible_module(make_module_self(make_zmod(5))));
    // Over Z/6, 2 is not regular; the only regular elements are units.
    EXPECT_FALSE(has_nonunit_regular(make_zmod(6)));
}

TEST(TrivialExtension, Z4OverItself) {
    const auto a = make_zmod(4);
    const auto r = make_trivial_extension(a, make_module_self(a));
    EXPECT_EQ(r.order(), 16u);
    EXPECT_TRUE(r.is_local());
    EXPECT_EQ(r.description(), "idealize(Z/4, self)");
    EXPECT_EQ(r.name(extension_element(r, 2, 1)), "pair(2, 1)");
}

TEST(TrivialExtension, MultiplicationRule) {
    const auto a = make_zmod(6);
    const auto e = make_module_quotient(a, principal_ideal(a, 3));
    const auto r = make_trivial_extension(a, e);
    EXPECT_EQ(r.order(), a.order() * e.order());
    for (Elem x = 0; x < a.order(); ++x) {
        for (Elem u = 0; u < e.order(); ++u) {
            for (Elem y = 0; y < a.order(); ++y) {
                for (Elem v = 0; v < e.order(); ++v) {
                    const Elem lhs = r.mul(extension_element(r, x, u), extension_element(r, y, v));
                    const Elem rhs = extension_element(r, a.mul(x, y), e.add(e.act(x, v), e.act(y, u)));
                    EXPECT_EQ(lhs, rhs);
                }
            }
        }
    }
}

TEST(TrivialExtension, F2OverItselfIsDualNumbers) {
    const auto f2 = make_zmod(2);
    const auto r = make_trivial_extension(f2, make_module_self(f2));
    EXPECT_EQ(r.order(), 4u);
    EXPECT_TRUE(r.is_local());
    EXPECT_TRUE(ideal_power(nonunit_ideal(r), 2).is_zero());
    EXPECT_TRUE(testing::isomorphic(r, make_poly_quotient(f2, {0, 0, 1})));
}

TEST(TrivialExtension, ZeroModuleGivesTheBase) {
    const auto a = make_zmod(9);
    const auto r = make_trivial_extension(a, make_module_zero(a));
    EXPECT_TRUE(testing::isomorphic(r, a));
}

TEST(TrivialExtension, BaseAndModuleAreRecoverable) {
    const auto a = make_zmod(4);
    const auto r = make_trivial_extension(a, make_module_self(a));
    EXPECT_TRUE(extension_base(r).same_as(a));
    EXPECT_EQ(extension_module(r).order(), 4u);
    EXPECT_THROW(extension_base(a), Error);
}

TEST(TrivialExtension, LiftedIdealsAreOaExactlyWhenTheBaseIdealIs) {
    for (const char* s : {"Z/4", "Z/9", "Z/6", "Z/8", "poly(F_2, 0, 0, 1)"}) {
        const auto a = testing::ring(s);
        const auto la = all_ideals(a);
        for (const auto& e : {make_module_self(a), make_module_zero(a)}) {
            const auto r = make_trivial_extension(a, e);
            for (auto i : la.proper()) {
                const auto lifted = lift_ideal(r, la[i]);
                EXPECT_EQ(lifted.size(), la[i].size() * e.order());
                EXPECT_EQ(static_cast<bool>(is_OA_definitional(lifted)), static_cast<bool>(is_OA_definitional(la[i])))
                    << s << " " << la[i].to_string();
            }
        }
    }
}

TEST(TrivialExtension, OaIdealList) {
    const auto a = make_zmod(4);
    const auto r = oa_ideals_of_trivial_extension(a, make_module_self(a));
    // Brute force over R.
    const auto lat = all_ideals(r.ring);
    std::size_t oa = 0;
    for (auto i : lat.proper()) oa += is_OA_definitional(lat[i]) ? 1 : 0;
    EXPECT_EQ(r.ideals.size(), oa);
    for (const auto& i : r.ideals) EXPECT_TRUE(is_OA_definitional(i));
    const auto m_lift = lift_ideal(r.ring, principal_ideal(a, 2));
    EXPECT_NE(std::find(r.ideals.begin(), r.ideals.end(), m_lift), r.ideals.end());
}

TEST(TrivialExtension, AllProperIdealsOaOverAField) {
    const auto f2 = make_zmod(2);
    const auto r = make_trivial_extension(f2, make_module_self(f2));
    const auto lat = all_ideals(r);
    for (auto i : lat.proper()) EXPECT_TRUE(is_OA_definitional(lat[i]));
}

TEST(TrivialExtension, RadicalOfZeroTimesE) {
    const auto a = make_zmod(4);
    const auto r = make_trivial_extension(a, make_module_self(a));
    const auto ze = lift_ideal(r, zero_ideal(a));
    EXPECT_EQ(radical(ze), nonunit_ideal(r));
}

}  // namespace
}  // namespace oaf
