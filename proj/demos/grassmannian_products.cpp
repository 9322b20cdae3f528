/*
   Copyright 2026 The qsatake Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Quantum products on G(2,5) three ways: rim rule, Pieri, wedge action.

#include <iostream>

#include <qsatake/type_a.hpp>

using namespace qsatake;

int main() {
    GrassmannSpace g(2, 3);
    const Partition lam{3, 1};
    std::cout << "G(2,5), lambda = " << to_string(lam) << "\n";
    for (int l = 1; l < g.n(); ++l) {
        auto rim = power_sum_rim_product(l, lam, g).v;
        auto wedge = wedge_power_action(l, {g, PartitionVector::basis(lam)}).v;
        auto pieri = q_multiply_symfunc(power_sum_in_eh(l), lam, g).v;
        std::cout << "  p" << l << " * s" << to_string(lam) << " = " << pretty(rim) << ((rim == wedge && rim == pieri) ? "" : "   (methods disagree!)") << "\n";
    }
    std::cout << "  s(2,1) * s(3,1) = " << pretty(q_multiply_symfunc(schur_in_h({2, 1}), lam, g).v) << "\n";
    std::cout << "  basis change residual at q=1: " << satake_basis_change_check(g, 1.0) << "\n";
}
