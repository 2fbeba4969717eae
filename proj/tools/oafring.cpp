// oafring: classify finite commutative rings, list their ideals, factor
// ideals and run the structure checks over the standard corpus.
//
// Exit codes: 0 success, 1 a check or cross-check disagreed, 2 usage or
// input error, 3 resource limit exceeded.

#include <iostream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "oaf/oaf.hpp"
#include "oaf/report.hpp"

namespace {

enum Exit { ok = 0, disagreement = 1, usage = 2, resource = 3 };

struct Options {
    std::string format = "json";
    std::size_t max_order = oaf::Config{}.enumeration_bound;
    unsigned jobs = 0;
    std::uint64_t seed = 0;
    std::string expr;
    std::string ideal;
    std::string cls = "oa";
    std::string corpus = "standard";
};

oaf::Config config_of(const Options& o) {
    oaf::Config cfg;
    cfg.enumeration_bound = o.max_order;
    return cfg;
}

std::string normalized(const std::string& expr) { return oaf::dsl::to_string(oaf::dsl::parse_program(expr)); }

void emit(const Options& o, const oaf::report::Json& j, const oaf::report::Table& t) {
    const auto f = *oaf::report::parse_format(o.format);
    if (f == oaf::report::Format::json) {
        std::cout << oaf::report::dump(j);
    } else if (f == oaf::report::Format::csv) {
        std::cout << oaf::report::to_csv(t);
    } else {
        std::cout << oaf::report::to_markdown(t);
    }
}

int cmd_classify(const Options& o) {
    const std::string expr = normalized(o.expr);
    const oaf::RingAnalysis ra(oaf::dsl::ring_from_string(expr, config_of(o)));
    const auto rep = oaf::classify(ra);
    emit(o, oaf::report::classify_document(expr, rep), oaf::report::classify_table(expr, rep));
    for (const auto& [k, v] : rep.agreement) {
        if (!v) return disagreement;
    }
    return ok;
}

int cmd_ideals(const Options& o) {
    const std::string expr = normalized(o.expr);
    const oaf::RingAnalysis ra(oaf::dsl::ring_from_string(expr, config_of(o)));
    emit(o, oaf::report::ideals_document(expr, ra), oaf::report::ideals_table(ra));
    return ok;
}

int cmd_factorize(const Options& o) {
    const auto cls = oaf::parse_factor_class(o.cls);
    if (!cls) throw oaf::Error(oaf::ErrorKind::invalid_argument, "unknown class '" + o.cls + "'");
    const std::string expr = normalized(o.expr);
    const auto elab = oaf::dsl::elaborate(expr, config_of(o));
    const oaf::RingAnalysis ra(elab->ring);
    const auto gens = oaf::dsl::parse_generators(*elab, o.ideal);
    const oaf::Ideal target = oaf::ideal_generated_by(elab->ring, gens);
    const auto idx = ra.lattice().index_of(target);
    const auto w = ra.factorization(idx, *cls);
    emit(o, oaf::report::factorize_document(expr, target, *cls, w), oaf::report::factorize_table(w));
    return ok;
}

int cmd_verify(const Options& o) {
    const auto corpus = oaf::corpus_by_name(o.corpus);
    const unsigned jobs = o.jobs ? o.jobs : std::max(1u, std::thread::hardware_concurrency());
    const auto res = oaf::run_verification(corpus, o.corpus, config_of(o), jobs);
    const auto f = *oaf::report::parse_format(o.format);
    if (f == oaf::report::Format::json) {
        std::cout << oaf::report::dump(oaf::report::verification_document(res));
    } else if (f == oaf::report::Format::csv) {
        std::cout << oaf::report::to_csv(oaf::report::verification_detail_table(res));
    } else {
        std::cout << oaf::report::verification_markdown(res);
    }
    return res.all_pass ? ok : disagreement;
}

int cmd_corpus(const Options& o) {
    const auto corpus = oaf::corpus_by_name(o.corpus);
    emit(o, oaf::report::corpus_document(o.corpus, corpus), oaf::report::corpus_table(corpus));
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ideal factorization and absorbing-ideal analysis of finite commutative rings"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv", "md", "markdown"}));
    app.add_option("--max-order", o.max_order, "Largest ring order whose ideals may be enumerated")
        ->check(CLI::PositiveNumber);
    app.add_option("--jobs", o.jobs, "Worker threads for verify-theorems (0 = hardware concurrency)");
    app.add_option("--seed", o.seed, "Reserved; no command uses randomness");

    auto* classify = app.add_subcommand("classify", "Classify a ring");
    classify->add_option("expr", o.expr, "Ring expression")->required();
    auto* ideals = app.add_subcommand("ideals", "List the ideals of a ring");
    ideals->add_option("expr", o.expr, "Ring expression")->required();
    auto* factorize = app.add_subcommand("factorize", "Factor an ideal into ideals of a class");
    factorize->add_option("expr", o.expr, "Ring expression")->required();
    factorize->add_option("--ideal", o.ideal, "Comma-separated generators")->required();
    factorize->add_option("--class", o.cls, "oa, ta, prime, primary, principal-prime or principal-oa");
    auto* verify = app.add_subcommand("verify-theorems", "Run all structure checks over a corpus");
    verify->add_option("--corpus", o.corpus, "Corpus name");
    auto* corpus = app.add_subcommand("corpus", "List the expressions of a corpus");
    corpus->add_option("--corpus", o.corpus, "Corpus name");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? ok : usage;
    }

    try {
        if (*classify) return cmd_classify(o);
        if (*ideals) return cmd_ideals(o);
        if (*factorize) return cmd_factorize(o);
        if (*verify) return cmd_verify(o);
        if (*corpus) return cmd_corpus(o);
    } catch (const oaf::ResourceLimitError& e) {
        oaf::report::Json j{{"error", "resource-limit"}, {"bound", e.bound_name()}, {"limit", e.bound()},
                            {"requested", e.requested()}, {"message", e.what()}};
        std::cerr << j.dump() << '\n';
        return resource;
    } catch (const oaf::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return disagreement;
    }
    return usage;
}
