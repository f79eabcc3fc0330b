#include "app.hpp"

namespace hopfcoh::app {

const std::map<std::string, SpecFile>& builtins() {
    static const std::map<std::string, SpecFile> table = [] {
        const FieldSpec f3 = FieldSpec::prime(3);
        auto h4 = std::make_shared<const HopfAlgebra>(buildSweedlerH4(f3));
        auto kz2 = std::make_shared<const HopfAlgebra>(buildFunctionHopf(FiniteGroup::cyclic(2), f3));
        auto e2 = std::make_shared<const ComoduleAlgebra>(buildDualNumbersComodule(h4));
        auto e2alg = std::make_shared<const StructureAlgebra>(dualNumbers(f3));
        const FiniteGroup s3 = FiniteGroup::symmetric(3);
        auto conj = std::make_shared<const ComoduleAlgebra>(
            buildConjugationComodule(s3, {s3.identity(), *s3.find("(12)")}, f3));

        std::map<std::string, SpecFile> t;
        t.emplace("h4_f3", specOf(h4));
        t.emplace("kz2_f3", specOf(kz2));
        t.emplace("e2_over_h4_f3", specOf(e2));
        t.emplace("k_over_h4_f3", specOf(std::make_shared<const ComoduleAlgebra>(trivialCoefficients(h4))));
        t.emplace("h4_over_h4_f3", specOf(std::make_shared<const ComoduleAlgebra>(regularComodule(h4))));
        t.emplace("e2_over_k_f3", specOf(std::make_shared<const ComoduleAlgebra>(trivialHopfCoefficients(e2alg))));
        t.emplace("k_over_kz2_f3", specOf(std::make_shared<const ComoduleAlgebra>(trivialCoefficients(kz2))));
        t.emplace("kz2_over_kz2_f3", specOf(std::make_shared<const ComoduleAlgebra>(regularComodule(kz2))));
        t.emplace("s3_conjugation_f3", specOf(conj));
        t.emplace("e2_module_f3", specOf(regularHopfModule(e2), "E2 as a Hopf module over (H4, E2)"));
        return t;
    }();
    return table;
}

} // namespace hopfcoh::app
