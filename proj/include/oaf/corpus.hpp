#pragma once

/**
 * @file corpus.hpp
 * @brief The standard ring corpus as DSL expressions.
 */

#include <string>
#include <string_view>
#include <vector>

#include "oaf/error.hpp"

namespace oaf {

/// F_2[x,y]/(x^2, y^2, xy), order 8.
inline constexpr std::string_view xy_square_ring = "quot(poly(poly(F_2, 0, 0, 1), 0, 0, 1), x*y)";

/// F_2[x,y]/(x^3, y^3, x^2 y, x y^2), order 64.
inline constexpr std::string_view xy_cube_ring = "quot(poly(poly(F_2, 0, 0, 0, 1), 0, 0, 0, 1), x^2*y, x*y^2)";

/// Rings of order at most 8 that appear in the product part of the corpus.
inline std::vector<std::string> small_corpus_rings() {
    std::vector<std::string> out;
    for (int n = 2; n <= 8; ++n) out.push_back("Z/" + std::to_string(n));
    out.push_back("poly(F_2, 0, 0, 1)");
    out.push_back("poly(F_2, 0, 0, 0, 1)");
    out.emplace_back(xy_square_ring);
    return out;
}

/// Z/n for 2 <= n <= 64, F_p[x]/(x^k) for p in {2, 3} and k in {2, 3}, the
/// two-variable rings over F_2, all products of two small rings, and
/// idealizations of F_2, Z/4, Z/9 and F_2[x]/(x^2) by themselves and by their
/// quotients A/I for each proper I.
inline std::vector<std::string> standard_corpus() {
    std::vector<std::string> out;
    for (int n = 2; n <= 64; ++n) out.push_back("Z/" + std::to_string(n));
    for (const char* p : {"F_2", "F_3"}) {
        out.push_back("poly(" + std::string(p) + ", 0, 0, 1)");
        out.push_back("poly(" + std::string(p) + ", 0, 0, 0, 1)");
    }
    out.emplace_back(xy_square_ring);
    out.emplace_back(xy_cube_ring);

    const auto small = small_corpus_rings();
    for (std::size_t i = 0; i < small.size(); ++i) {
        for (std::size_t j = i; j < small.size(); ++j) out.push_back(small[i] + " x " + small[j]);
    }

    const std::vector<std::pair<std::string, std::vector<std::string>>> ext = {
        {"F_2", {"0"}},
        {"Z/4", {"0", "2"}},
        {"Z/9", {"0", "3"}},
        {"poly(F_2, 0, 0, 1)", {"0", "x"}},
    };
    for (const auto& [a, ideals] : ext) {
        out.push_back("idealize(" + a + ", self)");
        for (const auto& g : ideals) out.push_back("idealize(" + a + ", quotmod(" + g + "))");
    }
    return out;
}

/// Corpus by name. Only "standard" is defined.
inline std::vector<std::string> corpus_by_name(std::string_view name) {
    if (name == "standard") return standard_corpus();
    throw Error(ErrorKind::invalid_argument, "unknown corpus '" + std::string(name) + "'");
}

}  // namespace oaf
