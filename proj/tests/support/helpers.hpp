#pragma once

// Small conveniences shared by the test suites.

#include <numeric>
#include <string>
#include <vector>

#include "oaf/oaf.hpp"

namespace oaf::testing {

inline std::shared_ptr<const dsl::ElabRing> elab(const std::string& expr) { return dsl::elaborate(expr); }

inline FiniteRing ring(const std::string& expr) { return dsl::ring_from_string(expr); }

/// Ideal of an elaborated ring from a generator list such as "x, y^2".
inline Ideal ideal(const dsl::ElabRing& r, const std::string& gens) {
    return ideal_generated_by(r.ring, dsl::parse_generators(r, gens));
}

inline std::vector<Elem> elements(const ElementSet& s) { return members_of(s); }

inline std::size_t euler_phi(std::size_t n) {
    std::size_t count = 0;
    for (std::size_t k = 1; k <= n; ++k) count += std::gcd(k, n) == 1 ? 1 : 0;
    return count;
}

inline std::size_t divisor_count(std::size_t n) {
    std::size_t count = 0;
    for (std::size_t d = 1; d <= n; ++d) count += n % d == 0 ? 1 : 0;
    return count;
}

/// Largest square-free divisor of n.
inline std::size_t radical_of(std::size_t n) {
    std::size_t r = 1;
    for (std::size_t p = 2; p <= n; ++p) {
        if (n % p == 0) {
            r *= p;
            while (n % p == 0) n /= p;
        }
    }
    return r;
}

}  // namespace oaf::testing
