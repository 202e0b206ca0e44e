// Walks the su(2,2) signatures [j1,j2;d] with small spins over a range of
// conformal weights and prints the size of the parabolic multiplet each
// reducible one generates inside the category of P_{1,3} modules.

#include <iostream>

#include "pvm/conformal.hpp"
#include "pvm/multiplet.hpp"

int main() {
    using namespace pvm;
    const auto& rs = conformal::a3();
    const auto s = conformal::noncuspidal_subset();
    for (int twice_j1 = 0; twice_j1 <= 2; ++twice_j1)
        for (int twice_j2 = 0; twice_j2 <= 2; ++twice_j2)
            for (int d = -1; d <= 5; ++d) {
                conformal::SignatureNC sig(Rational(twice_j1, 2), Rational(twice_j2, 2), d);
                Weight w = conformal::weight_nc(sig);
                auto hits = pvm_reducibility_set(rs, s, w);
                if (hits.empty())
                    continue;
                auto g = build_multiplet(rs, s, w);
                std::cout << "[" << to_string(sig.j1) << "," << to_string(sig.j2) << ";" << d << "]  weight "
                          << to_string(w) << "  hits " << hits.size() << "  multiplet " << g.vertices.size()
                          << " vertices / " << g.edges.size() << " edges\n";
            }
}
