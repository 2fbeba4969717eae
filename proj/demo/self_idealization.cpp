// Z/4 idealized by itself: an OAF ring in which not every proper ideal is OA.

#include <iostream>

#include "oaf/oaf.hpp"

int main() {
    using namespace oaf;
    const FiniteRing a = make_zmod(4);
    const FiniteModule e = make_module_self(a);
    const FiniteRing r = make_trivial_extension(a, e);
    const RingAnalysis ra(r);

    std::cout << r.description() << ": order " << r.order() << ", " << ra.lattice().size() << " ideals\n";
    for (auto i : ra.lattice().proper()) {
        const Ideal& id = ra.lattice()[i];
        const auto oa = is_OA_definitional(id);
        std::cout << "  " << id.to_string() << " size " << id.size() << (oa ? "  OA" : "  not OA");
        if (!oa.value) {
            const auto& w = *oa.witness;
            std::cout << " (witness " << r.name(w[0]) << ", " << r.name(w[1]) << ", " << r.name(w[2]) << ")";
        }
        std::cout << '\n';
    }

    std::cout << "OAF (factorization search): " << std::boolalpha << is_OAF_bruteforce(ra) << '\n';
    std::cout << "OAF (structure test):       " << is_OAF_characterized(ra) << '\n';

    const Ideal m = principal_ideal(a, 2);
    const auto me = ideal_times_module(m, e);
    std::cout << "ME = 2E: " << (me == element_times_module(2, e)) << '\n';
    for (Elem x : {Elem{1}, Elem{3}}) {
        std::cout << "ME = M*" << x << ": " << (me == ideal_times_element(m, e, x)) << '\n';
    }
}
