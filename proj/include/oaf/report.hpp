#pragma once

/**
 * @file report.hpp
 * @brief JSON, CSV and Markdown renderings of classification, ideal tables,
 * factorizations, verification runs and corpora.
 *
 * JSON objects use sorted keys and carry no timing data, so equal inputs
 * give byte-identical output. Every document has "schema": 1.
 */

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "oaf/corpus.hpp"
#include "oaf/verify.hpp"

namespace oaf::report {

using Json = nlohmann::json;

inline constexpr int schema_version = 1;

enum class Format { json, csv, md };

inline std::optional<Format> parse_format(std::string_view s) {
    if (s == "json") return Format::json;
    if (s == "csv") return Format::csv;
    if (s == "md" || s == "markdown") return Format::md;
    return std::nullopt;
}

/// Rows of strings under a header; the common shape of the CSV and Markdown forms.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

inline std::string to_csv(const Table& t) {
    std::ostringstream os;
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << csv_field(cells[i]);
        os << '\n';
    };
    line(t.columns);
    for (const auto& r : t.rows) line(r);
    return os.str();
}

inline std::string md_cell(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '|') out += '\\';
        out += c;
    }
    return out;
}

inline std::string to_markdown(const Table& t) {
    std::ostringstream os;
    auto line = [&](const std::vector<std::string>& cells) {
        os << '|';
        for (const auto& c : cells) os << ' ' << md_cell(c) << " |";
        os << '\n';
    };
    line(t.columns);
    os << '|';
    for (std::size_t i = 0; i < t.columns.size(); ++i) os << " --- |";
    os << '\n';
    for (const auto& r : t.rows) line(r);
    return os.str();
}

inline std::string yes_no(bool b) { return b ? "true" : "false"; }

// -- classify -------------------------------------------------------------

inline std::vector<std::pair<std::string, bool>> verdicts(const ClassificationReport& r) {
    return {
        {"local", r.is_local},
        {"field", r.is_field},
        {"OAF", r.is_OAF},
        {"OAF_characterized", r.is_OAF_characterized},
        {"TAF", r.is_TAF},
        {"ZPI", r.is_general_ZPI},
        {"pi_ring", r.is_pi_ring},
        {"Q_ring", r.is_Q_ring},
        {"UFR", r.is_UFR},
        {"chained", r.is_chained},
        {"arithmetical", r.is_arithmetical},
        {"all_proper_OA", r.all_proper_OA},
    };
}

inline Json classification_json(const ClassificationReport& r) {
    Json j;
    j["ring"] = r.ring;
    j["order"] = r.order;
    j["ideal_count"] = r.ideal_count;
    for (const auto& [k, v] : verdicts(r)) j[k] = v;
    j["obstructions"] = Json::object();
    for (const auto& [k, i] : r.obstructions) j["obstructions"][k] = i.to_string();
    j["agreement"] = Json::object();
    for (const auto& [k, v] : r.agreement) j["agreement"][k] = v;
    return j;
}

inline Json classify_document(const std::string& expr, const ClassificationReport& r) {
    Json j = classification_json(r);
    j["schema"] = schema_version;
    j["command"] = "classify";
    j["expr"] = expr;
    return j;
}

inline Table classify_table(const std::string& expr, const ClassificationReport& r) {
    Table t{{"property", "value"}, {}};
    t.rows.push_back({"expr", expr});
    t.rows.push_back({"ring", r.ring});
    t.rows.push_back({"order", std::to_string(r.order)});
    t.rows.push_back({"ideal_count", std::to_string(r.ideal_count)});
    for (const auto& [k, v] : verdicts(r)) t.rows.push_back({k, yes_no(v)});
    for (const auto& [k, i] : r.obstructions) t.rows.push_back({"obstruction." + k, i.to_string()});
    for (const auto& [k, v] : r.agreement) t.rows.push_back({"agreement." + k, yes_no(v)});
    return t;
}

// -- ideals ---------------------------------------------------------------

struct IdealRow {
    std::size_t index;
    std::string generators;
    std::size_t size;
    bool principal, prime, maximal, primary, oa, ta;
};

inline std::vector<IdealRow> ideal_rows(const RingAnalysis& ra) {
    const auto& lat = ra.lattice();
    std::vector<bool> maximal(lat.size(), false);
    for (auto m : lat.maximal()) maximal[m] = true;
    std::vector<IdealRow> rows;
    for (std::size_t i = 0; i < lat.size(); ++i) {
        rows.push_back({i, lat[i].to_string(), lat[i].size(), lat.is_principal(i), ra.in_class(i, FactorClass::prime),
                        maximal[i], ra.in_class(i, FactorClass::primary), ra.in_class(i, FactorClass::oa),
                        ra.in_class(i, FactorClass::ta)});
    }
    return rows;
}

inline Json ideals_document(const std::string& expr, const RingAnalysis& ra) {
    Json j;
    j["schema"] = schema_version;
    j["command"] = "ideals";
    j["expr"] = expr;
    j["ring"] = ra.ring().description();
    j["order"] = ra.ring().order();
    j["ideals"] = Json::array();
    for (const auto& r : ideal_rows(ra)) {
        j["ideals"].push_back({{"index", r.index}, {"generators", r.generators}, {"size", r.size},
                               {"principal", r.principal}, {"prime", r.prime}, {"maximal", r.maximal},
                               {"primary", r.primary}, {"OA", r.oa}, {"TA", r.ta}});
    }
    return j;
}

inline Table ideals_table(const RingAnalysis& ra) {
    Table t{{"index", "generators", "size", "principal", "prime", "maximal", "primary", "OA", "TA"}, {}};
    for (const auto& r : ideal_rows(ra)) {
        t.rows.push_back({std::to_string(r.index), r.generators, std::to_string(r.size), yes_no(r.principal),
                          yes_no(r.prime), yes_no(r.maximal), yes_no(r.primary), yes_no(r.oa), yes_no(r.ta)});
    }
    return t;
}

// -- factorize ------------------------------------------------------------

inline Json factorize_document(const std::string& expr, const Ideal& target, FactorClass c,
                               const std::optional<FactorizationWitness>& w) {
    Json j;
    j["schema"] = schema_version;
    j["command"] = "factorize";
    j["expr"] = expr;
    j["ideal"] = target.to_string();
    j["class"] = to_string(c);
    j["factorizable"] = w.has_value();
    j["factors"] = Json::array();
    if (w) {
        for (const auto& f : w->factors) j["factors"].push_back(f.to_string());
    }
    j["verified"] = w ? w->verified : false;
    return j;
}

inline Table factorize_table(const std::optional<FactorizationWitness>& w) {
    Table t{{"position", "factor"}, {}};
    if (w) {
        for (std::size_t i = 0; i < w->factors.size(); ++i) t.rows.push_back({std::to_string(i + 1), w->factors[i].to_string()});
    }
    return t;
}

// -- verify-theorems ------------------------------------------------------

inline Json verification_document(const VerificationResult& v) {
    Json j;
    j["schema"] = schema_version;
    j["command"] = "verify-theorems";
    j["corpus"] = v.corpus;
    j["ring_count"] = v.rings.size();
    j["rings"] = Json::array();
    for (const auto& rv : v.rings) {
        Json r = classification_json(rv.report);
        r["expr"] = rv.expr;
        r["checks"] = Json::object();
        for (const auto& c : rv.checks) {
            Json cj{{"status", to_string(c.status)}};
            if (!c.detail.empty()) cj["detail"] = c.detail;
            r["checks"][c.name] = cj;
        }
        j["rings"].push_back(std::move(r));
    }
    j["theorems"] = Json::object();
    for (const auto& [name, s] : v.checks) {
        Json f = Json::array();
        for (const auto& x : s.failures) f.push_back({{"expr", x.expr}, {"detail", x.detail}});
        j["theorems"][name] = {{"holds", s.holds}, {"fails", s.fails},
                               {"hypotheses_not_met", s.hypotheses_not_met}, {"failures", f}};
    }
    j["disagreements"] = v.disagreements;
    j["all_pass"] = v.all_pass;
    return j;
}

inline Table verification_summary_table(const VerificationResult& v) {
    Table t{{"check", "holds", "fails", "hypotheses_not_met"}, {}};
    for (const auto& [name, s] : v.checks) {
        t.rows.push_back({name, std::to_string(s.holds), std::to_string(s.fails), std::to_string(s.hypotheses_not_met)});
    }
    return t;
}

inline Table verification_detail_table(const VerificationResult& v) {
    Table t{{"expr", "check", "status", "detail"}, {}};
    for (const auto& rv : v.rings) {
        for (const auto& c : rv.checks) t.rows.push_back({rv.expr, c.name, to_string(c.status), c.detail});
    }
    return t;
}

inline std::string verification_markdown(const VerificationResult& v) {
    std::ostringstream os;
    os << "# verify-theorems: corpus " << v.corpus << "\n\n";
    os << "rings: " << v.rings.size() << "\n\nall_pass: " << yes_no(v.all_pass) << "\n\n";
    os << to_markdown(verification_summary_table(v));
    bool any = false;
    for (const auto& [name, s] : v.checks) {
        for (const auto& f : s.failures) {
            if (!any) os << "\n## Failures\n\n";
            any = true;
            os << "- " << name << " on `" << f.expr << "`: " << f.detail << '\n';
        }
    }
    for (const auto& d : v.disagreements) {
        if (!any) os << "\n## Failures\n\n";
        any = true;
        os << "- disagreement: " << d << '\n';
    }
    return os.str();
}

// -- corpus ---------------------------------------------------------------

inline Json corpus_document(const std::string& name, const std::vector<std::string>& exprs) {
    return {{"schema", schema_version}, {"command", "corpus"}, {"corpus", name}, {"count", exprs.size()}, {"rings", exprs}};
}

inline Table corpus_table(const std::vector<std::string>& exprs) {
    Table t{{"index", "expr"}, {}};
    for (std::size_t i = 0; i < exprs.size(); ++i) t.rows.push_back({std::to_string(i), exprs[i]});
    return t;
}

/// JSON text with two-space indentation and a trailing newline.
inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace oaf::report
