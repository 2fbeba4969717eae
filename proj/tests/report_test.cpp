#include <gtest/gtest.h>

#include "oaf/oaf.hpp"
#include "oaf/report.hpp"
#include "support/helpers.hpp"

namespace oaf::report {
namespace {

TEST(Csv, QuotesFieldsWithCommasAndQuotes) {
    EXPECT_EQ(csv_field("plain"), "plain");
    EXPECT_EQ(csv_field("(x, y)"), "\"(x, y)\"");
    EXPECT_EQ(csv_field("a\"b"), "\"a\"\"b\"");
    const Table t{{"a", "b"}, {{"1", "(2, 3)"}}};
    EXPECT_EQ(to_csv(t), "a,b\n1,\"(2, 3)\"\n");
}

TEST(Markdown, Table) {
    const Table t{{"a", "b"}, {{"1", "x|y"}}};
    EXPECT_EQ(to_markdown(t), "| a | b |\n| --- | --- |\n| 1 | x\\|y |\n");
}

TEST(Classify, JsonFields) {
    const RingAnalysis ra(make_zmod(8));
    const auto j = classify_document("Z/8", classify(ra));
    EXPECT_EQ(j["schema"], 1);
    EXPECT_EQ(j["expr"], "Z/8");
    for (const char* k : {"local", "OAF", "ZPI", "chained"}) EXPECT_TRUE(j[k].get<bool>()) << k;
    EXPECT_TRUE(j["obstructions"].empty());
    EXPECT_EQ(j["agreement"].size(), 3u);
}

TEST(Classify, ObstructionIsRecorded) {
    const RingAnalysis ra(testing::ring(std::string(xy_cube_ring)));
    const auto j = classify_document(std::string(xy_cube_ring), classify(ra));
    EXPECT_FALSE(j["OAF"].get<bool>());
    EXPECT_EQ(j["obstructions"]["OAF"], "(x)");
}

TEST(Ideals, TableListsGenerators) {
    const RingAnalysis ra(make_zmod(8));
    const auto t = ideals_table(ra);
    ASSERT_EQ(t.rows.size(), 4u);
    EXPECT_EQ(t.rows[1][1], "(2)");
    EXPECT_EQ(t.rows[1][4], "true");  // prime
    EXPECT_EQ(t.rows[3][1], "(0)");
    EXPECT_EQ(t.rows[3][7], "false");  // OA
    const auto j = ideals_document("Z/8", ra);
    EXPECT_EQ(j["ideals"].size(), 4u);
    EXPECT_EQ(j["ideals"][2]["generators"], "(4)");
    EXPECT_TRUE(j["ideals"][2]["OA"].get<bool>());
}

TEST(Factorize, Document) {
    const RingAnalysis ra(make_zmod(8));
    const auto w = ra.factorization(ra.lattice().zero_index(), FactorClass::oa);
    const auto j = factorize_document("Z/8", zero_ideal(ra.ring()), FactorClass::oa, w);
    EXPECT_EQ(j["factors"], Json::array({"(2)", "(4)"}));
    EXPECT_TRUE(j["verified"].get<bool>());
    EXPECT_EQ(factorize_table(w).rows.size(), 2u);
    const auto none = factorize_document("Z/8", zero_ideal(ra.ring()), FactorClass::oa, std::nullopt);
    EXPECT_FALSE(none["factorizable"].get<bool>());
}

TEST(Verification, DocumentIsDeterministic) {
    std::vector<std::string> corpus{"Z/8", "Z/12", "idealize(Z/4, self)", "Z/2 x Z/4"};
    const auto a = dump(verification_document(run_verification(corpus, "t", {}, 1)));
    const auto b = dump(verification_document(run_verification(corpus, "t", {}, 3)));
    EXPECT_EQ(a, b);
    const auto j = Json::parse(a);
    EXPECT_EQ(j["ring_count"], 4);
    EXPECT_TRUE(j["all_pass"].get<bool>());
    EXPECT_EQ(j["theorems"]["product_oaf_zpi"]["holds"], 1);
    EXPECT_EQ(j["rings"][2]["checks"]["self_extension_oaf_not_all_oa"]["status"], "holds");
    EXPECT_EQ(a.find("time"), std::string::npos);
}

TEST(Verification, MarkdownAndCsv) {
    const auto res = run_verification({"Z/8"}, "t");
    const auto md = verification_markdown(res);
    EXPECT_NE(md.find("| oa_characterization | 1 | 0 | 0 |"), std::string::npos);
    const auto csv = to_csv(verification_detail_table(res));
    EXPECT_EQ(csv.rfind("expr,check,status,detail\n", 0), 0u);
}

TEST(Corpus, Document) {
    const auto j = corpus_document("standard", standard_corpus());
    EXPECT_EQ(j["count"], 135);
    EXPECT_EQ(j["rings"][0], "Z/2");
}

TEST(Format, Parse) {
    EXPECT_EQ(parse_format("json"), Format::json);
    EXPECT_EQ(parse_format("markdown"), Format::md);
    EXPECT_FALSE(parse_format("xml").has_value());
}

}  // namespace
}  // namespace oaf::report
