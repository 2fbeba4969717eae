#pragma once

/**
 * @file verify.hpp
 * @brief Runs every structure check over a list of ring expressions.
 *
 * Rings are analysed in parallel; results are stored by corpus position so
 * the output does not depend on scheduling.
 */

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "oaf/elaborate.hpp"
#include "oaf/theorems.hpp"

namespace oaf {

struct RingVerification {
    std::string expr;
    ClassificationReport report;
    std::vector<CheckResult> checks;
};

struct CheckFailure {
    std::string expr;
    std::string detail;
};

struct CheckSummary {
    std::size_t holds = 0;
    std::size_t fails = 0;
    std::size_t hypotheses_not_met = 0;
    std::vector<CheckFailure> failures;
};

struct VerificationResult {
    std::string corpus;
    std::vector<RingVerification> rings;
    std::map<std::string, CheckSummary> checks;
    /// Agreement flags that came out false, as "expr: flag".
    std::vector<std::string> disagreements;
    bool all_pass = true;
};

/// Classification and all applicable checks for one expression. Products of
/// two rings also get the product check, and trivial extensions the
/// extension checks.
inline RingVerification verify_ring(const std::string& expr, const Config& cfg = {}) {
    const auto elab = dsl::elaborate(expr, cfg);
    const RingAnalysis ra(elab->ring);
    RingVerification out{expr, classify(ra), ring_checks(ra)};
    if (elab->factors.size() == 2) {
        const RingAnalysis r1(elab->factors[0]->ring);
        const RingAnalysis r2(elab->factors[1]->ring);
        out.checks.push_back(check_product_oaf_zpi(ra, r1, r2));
    }
    if (elab->base && elab->module) {
        const RingAnalysis a(elab->base->ring);
        const ExtensionContext x{a, elab->module->module, ra};
        for (auto& c : extension_checks(x)) out.checks.push_back(std::move(c));
    }
    return out;
}

/// Verifies every expression with up to `jobs` worker threads. The first
/// exception in corpus order is rethrown after all workers finish.
inline VerificationResult run_verification(const std::vector<std::string>& corpus, std::string corpus_name,
                                           const Config& cfg = {}, unsigned jobs = 1) {
    VerificationResult res;
    res.corpus = std::move(corpus_name);
    std::vector<RingVerification> slots(corpus.size());
    std::vector<std::exception_ptr> errors(corpus.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < corpus.size(); i = next++) {
            try {
                slots[i] = verify_ring(corpus[i], cfg);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(corpus.size(), 1))));
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }

    for (auto& rv : slots) {
        for (const auto& c : rv.checks) {
            auto& s = res.checks[c.name];
            switch (c.status) {
                case CheckStatus::holds: ++s.holds; break;
                case CheckStatus::hypotheses_not_met: ++s.hypotheses_not_met; break;
                case CheckStatus::fails:
                    ++s.fails;
                    s.failures.push_back({rv.expr, c.detail});
                    res.all_pass = false;
                    break;
            }
        }
        for (const auto& [flag, ok] : rv.report.agreement) {
            if (!ok) {
                res.disagreements.push_back(rv.expr + ": " + flag);
                res.all_pass = false;
            }
        }
    }
    res.rings = std::move(slots);
    return res;
}

}  // namespace oaf
