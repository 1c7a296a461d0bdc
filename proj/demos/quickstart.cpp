// Build the crossed product of Sweedler's 4-dimensional Hopf algebra with
// k[C3], check a braiding quadruple on it and print the braiding table.

#include <iostream>

#include "hopfcross/io.hpp"
#include "hopfcross/presets.hpp"

using namespace hopfcross;

int main() {
    CrossedSystem S = h4_c3_system();
    HopfData P = build_crossed_product(S);
    std::cout << "crossed product: " << P.name << ", dim " << P.dim() << "\n";
    std::cout << "Hopf axioms: " << (verify_hopf(P).all_passed() ? "pass" : "fail") << "\n";
    std::cout << "semisimple: " << (is_semisimple(P).semisimple ? "yes" : "no") << "\n\n";

    Scalar gamma = Scalar::zeta(3, 1);
    BraidingQuadruple Q = certify_quadruple(S, h4_c3_quadruple(Scalar(1L), gamma));
    Pairing sigma = assemble_sigma(S, Q);
    std::cout << "braiding on the product (alpha = 1, gamma = zeta_3):\n";
    std::cout << sigma_table_tsv(sigma, P.basis_labels);
    return 0;
}
