// A short tour of the library: monodromy types, a two-block product
// complex, and a small moduli count.
#include <iostream>
#include <vector>

#include <nilstrat/nilstrat.hpp>

using namespace nilstrat;

int main() {
    // Jordan type of the Kronecker sum J_2 (x) I + I (x) J_3, two ways.
    const Partition a{2}, b{3};
    std::cout << "tensor " << a.to_string() << " x " << b.to_string() << " = " << tensor_type(a, b).to_string()
              << " (matrix route " << tensor_type_by_matrix(a, b).to_string() << ")\n";

    // Two blocks: a plain one and a 2-dimensional one carrying J_2.
    const TameBlockSpec plain = trivial_block("plain");
    const TameBlockSpec twisted{"twisted", 2, Partition{2}, 1};
    const std::vector<BlockInput> blocks{{plain, Partition{2}}, {twisted, Partition{1}}};
    std::cout << "total type " << total_type(blocks).to_string() << "\n";

    // One complex per block, then their product.
    const ComponentComplex first(2, {{"top", Partition{2}}, {"low", Partition{1, 1}}},
                                 {{"x", {"top", "low"}}, {"y", {"top"}}});
    const ComponentComplex second(1, {{"u", Partition{1}}}, {{"z", {"u"}}});
    const std::vector<ProductFactor> factors{{first, plain}, {second, twisted}};
    const auto product = product_complex(factors);
    std::cout << "product of size " << product.n() << ", valid: " << (is_valid(product) ? "yes" : "no") << "\n";
    for (const auto& [id, incidence] : product.points()) {
        std::cout << "  point " << id << ": type " << mu_of_point(product, id).to_string() << ", minimal lift "
                  << minimal_lift(product, id) << "\n";
    }

    // Pairs (Phi, Sigma) in GL_1(F_5) with Phi Sigma Phi^-1 = Sigma.
    ModuliInstance inst;
    inst.q = 1;
    inst.r = 1;
    inst.p = 5;
    std::cout << "moduli pairs for q=1, r=1, p=5: " << enumerate_pairs(inst).size() << "\n";
}
