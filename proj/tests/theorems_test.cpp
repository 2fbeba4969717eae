#include <gtest/gtest.h>

#include "oaf/oaf.hpp"
#include "support/helpers.hpp"

namespace oaf {
namespace {

const CheckResult& find(const std::vector<CheckResult>& v, const std::string& name) {
    for (const auto& c : v) {
        if (c.name == name) return c;
    }
    throw std::out_of_range(name);
}

std::vector<CheckResult> extension_results(const std::string& expr) {
    const auto e = testing::elab(expr);
    const RingAnalysis a(e->base->ring);
    const RingAnalysis r(e->ring);
    return extension_checks({a, e->module->module, r});
}

TEST(RingChecks, HoldOnNamedRings) {
    for (const char* expr : {"Z/8", "Z/12", "Z/2 x Z/9", "idealize(Z/4, self)"}) {
        const RingAnalysis ra(testing::ring(expr));
        for (const auto& c : ring_checks(ra)) EXPECT_NE(c.status, CheckStatus::fails) << expr << " " << c.name << " " << c.detail;
    }
}

TEST(RingChecks, ZpiArithmeticalOafStatements) {
    const RingAnalysis z8(make_zmod(8));
    EXPECT_TRUE(is_general_ZPI(z8));
    EXPECT_TRUE(z8.is_arithmetical());
    EXPECT_TRUE(principal_OA_factorizations(z8));

    const RingAnalysis sq(testing::ring(std::string(xy_square_ring)));
    EXPECT_FALSE(is_general_ZPI(sq));
    EXPECT_FALSE(sq.is_arithmetical());
    EXPECT_TRUE(is_OAF_bruteforce(sq));
    EXPECT_EQ(check_zpi_arithmetical_oaf(sq).status, CheckStatus::holds);
}

TEST(RingChecks, DividedNilpotentSufficiencyOnSelfIdealization) {
    const RingAnalysis ra(testing::ring("idealize(Z/4, self)"));
    EXPECT_EQ(check_divided_nilpotent_sufficiency(ra).status, CheckStatus::holds);
}

TEST(RingChecks, NonLocalFactorizationOnZ12) {
    const RingAnalysis ra(make_zmod(12));
    EXPECT_EQ(check_nonlocal_factorization(ra).status, CheckStatus::holds);
    EXPECT_EQ(is_OAF_bruteforce(ra), is_general_ZPI(ra));
    EXPECT_EQ(check_oa_prime_or_m2(ra).status, CheckStatus::hypotheses_not_met);
}

TEST(RingChecks, QuotientStabilityOnZ8) {
    const RingAnalysis ra(make_zmod(8));
    EXPECT_EQ(check_quotient_stability(ra).status, CheckStatus::holds);
    const RingAnalysis q(make_quotient(ra.ring(), principal_ideal(ra.ring(), 4)));
    EXPECT_TRUE(is_OAF_bruteforce(q));
}

TEST(RingChecks, QuotientStabilityIsSkippedForLargeOrNonOafRings) {
    const RingAnalysis cube(testing::ring(std::string(xy_cube_ring)));
    EXPECT_EQ(check_quotient_stability(cube).status, CheckStatus::hypotheses_not_met);
    const RingAnalysis big(make_zmod(64));
    EXPECT_EQ(check_quotient_stability(big).status, CheckStatus::hypotheses_not_met);
}

TEST(RingChecks, AllProperOaIffLocalWithSquareZero) {
    for (const auto& expr : standard_corpus()) {
        const RingAnalysis ra(testing::ring(expr));
        bool all = true;
        for (auto i : ra.lattice().proper()) all = all && is_OA_definitional(ra.lattice()[i]).value;
        const bool local_sq_zero = ra.is_local() && ra.maximal_squared() == ra.lattice().zero_index();
        EXPECT_EQ(all, local_sq_zero) << expr;
    }
}

TEST(ProductCheck, ZpiFactors) {
    const auto e = testing::elab("Z/4 x Z/3");
    const RingAnalysis r(e->ring), r1(e->factors[0]->ring), r2(e->factors[1]->ring);
    EXPECT_EQ(check_product_oaf_zpi(r, r1, r2).status, CheckStatus::holds);
    EXPECT_TRUE(is_OAF_bruteforce(r));
}

TEST(ProductCheck, NonZpiFactor) {
    const auto e = testing::elab("Z/2 x " + std::string(xy_square_ring));
    const RingAnalysis r(e->ring), r1(e->factors[0]->ring), r2(e->factors[1]->ring);
    EXPECT_EQ(check_product_oaf_zpi(r, r1, r2).status, CheckStatus::holds);
    EXPECT_FALSE(is_OAF_bruteforce(r));
    EXPECT_TRUE(is_OAF_bruteforce(r2));
}

TEST(ExtensionChecks, SelfIdealizationOfZ4) {
    const auto res = extension_results("idealize(Z/4, self)");
    for (const auto& c : res) EXPECT_NE(c.status, CheckStatus::fails) << c.name << " " << c.detail;
    EXPECT_EQ(find(res, "self_extension_oaf_not_all_oa").status, CheckStatus::holds);
    EXPECT_EQ(find(res, "extension_oaf").status, CheckStatus::holds);
    EXPECT_EQ(find(res, "extension_field_base").status, CheckStatus::hypotheses_not_met);
}

TEST(ExtensionChecks, FieldBase) {
    const auto res = extension_results("idealize(F_2, self)");
    EXPECT_EQ(find(res, "extension_field_base").status, CheckStatus::holds);
    EXPECT_EQ(find(res, "self_extension_oaf_not_all_oa").status, CheckStatus::hypotheses_not_met);
}

TEST(ExtensionChecks, AnnihilatedByMaximal) {
    // E = A/M has ME = 0.
    const auto res = extension_results("idealize(Z/4, quotmod(2))");
    EXPECT_EQ(find(res, "extension_annihilated_by_m").status, CheckStatus::holds);
    const RingAnalysis r(testing::ring("idealize(Z/4, quotmod(2))"));
    bool all = true;
    for (auto i : r.lattice().proper()) all = all && is_OA_definitional(r.lattice()[i]).value;
    EXPECT_TRUE(all);
    EXPECT_TRUE(is_OAF_bruteforce(r));

    const RingAnalysis s(testing::ring("idealize(Z/9, quotmod(3))"));
    EXPECT_TRUE(is_OAF_bruteforce(s));
}

TEST(ExtensionChecks, NonLocalBaseWithZeroModule) {
    const auto res = extension_results("idealize(Z/6, zero)");
    for (const auto& c : res) EXPECT_NE(c.status, CheckStatus::fails) << c.name << " " << c.detail;
}

TEST(ExtensionChecks, NonLocalBaseWithCyclicModule) {
    for (const char* expr : {"idealize(Z/6, quotmod(2))", "idealize(Z/6, self)", "idealize(Z/2 x Z/2, quotmod((1, 0)))"}) {
        const auto res = extension_results(expr);
        for (const auto& c : res) EXPECT_NE(c.status, CheckStatus::fails) << expr << " " << c.name << " " << c.detail;
    }
}

TEST(ExtensionChecks, DivisibleFormNeverApplies) {
    for (const char* expr : {"idealize(Z/4, self)", "idealize(Z/6, self)", "idealize(F_3, self)"}) {
        EXPECT_EQ(find(extension_results(expr), "extension_divisible_oa_form").status, CheckStatus::hypotheses_not_met);
    }
}

TEST(ExtensionChecks, ModuleProducts) {
    for (const char* expr : {"idealize(Z/4, self x self)", "idealize(F_2, self x self)", "idealize(Z/4, quotmod(2) x quotmod(2))"}) {
        const auto res = extension_results(expr);
        for (const auto& c : res) EXPECT_NE(c.status, CheckStatus::fails) << expr << " " << c.name << " " << c.detail;
    }
}

TEST(Verification, StandardCorpusPasses) {
    const auto res = run_verification(standard_corpus(), "standard", {}, 4);
    EXPECT_EQ(res.rings.size(), 135u);
    for (const auto& [name, s] : res.checks) {
        EXPECT_EQ(s.fails, 0u) << name;
        for (const auto& f : s.failures) ADD_FAILURE() << name << " on " << f.expr << ": " << f.detail;
    }
    EXPECT_TRUE(res.disagreements.empty());
    EXPECT_TRUE(res.all_pass);
}

TEST(Verification, OrderIsIndependentOfJobCount) {
    std::vector<std::string> corpus;
    for (int n = 2; n <= 30; ++n) corpus.push_back("Z/" + std::to_string(n));
    const auto a = run_verification(corpus, "t", {}, 1);
    const auto b = run_verification(corpus, "t", {}, 7);
    ASSERT_EQ(a.rings.size(), b.rings.size());
    for (std::size_t i = 0; i < a.rings.size(); ++i) {
        EXPECT_EQ(a.rings[i].expr, b.rings[i].expr);
        ASSERT_EQ(a.rings[i].checks.size(), b.rings[i].checks.size());
        for (std::size_t k = 0; k < a.rings[i].checks.size(); ++k) {
            EXPECT_EQ(a.rings[i].checks[k].status, b.rings[i].checks[k].status);
        }
    }
}

TEST(Verification, ErrorsPropagate) {
    EXPECT_THROW(run_verification({"Z/4", "F_4"}, "bad", {}, 2), Error);
}

}  // namespace
}  // namespace oaf
