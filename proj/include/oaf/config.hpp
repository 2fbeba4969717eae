#pragma once

#include <cstddef>
#include <cstdint>

namespace oaf {

/// Size limits that gate exhaustive work. Derived rings inherit the
/// configuration of the ring(s) they are built from.
struct Config {
    /// Commutativity, identities and inverses are checked exhaustively up to this order.
    std::size_t audit_bound = 4096;
    /// Associativity and distributivity are checked on all triples up to this order,
    /// and on a fixed sample above it.
    std::size_t ternary_audit_bound = 256;
    /// Rings up to this order get dense add/mul tables; larger rings use
    /// structured arithmetic on the construction tree.
    std::size_t table_threshold = 256;
    /// Largest ring order whose ideal lattice may be enumerated.
    std::size_t enumeration_bound = 1024;
    /// Largest ordered tuple count (order^(n+1)) an n-absorbing scan may visit.
    std::uint64_t tuple_scan_bound = std::uint64_t{1} << 28;
    /// Hard cap on the order of any constructed ring.
    std::size_t max_ring_order = std::size_t{1} << 20;
};

}  // namespace oaf
