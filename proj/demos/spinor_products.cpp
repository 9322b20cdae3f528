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

// OG(5,10): x_q powers through the spin representation, tau products from the
// P~ spectral calculus.

#include <iostream>
#include <vector>

#include <qsatake/spinor.hpp>

using namespace qsatake;

int main() {
    const int n = 5;
    for (const auto& lam : std::vector<StrictPartition>{{}, {2, 1}, {4, 3}}) {
        std::cout << "tau" << to_string(lam) << ":\n";
        for (int r = 1; 2 * r - 1 <= 2 * n - 3; ++r) std::cout << "  p" << 2 * r - 1 << " * = " << pretty(spinor_power_product(r, lam, n)) << "\n";
        auto s = spinor_spectral_product({3, 1}, lam, n);
        std::cout << "  tau(3,1) * = " << pretty(s.value) << "  [rounding " << s.residual << "]\n";
        std::cout << "  tau4 * = " << pretty(spinor_tau_top_product(lam, n).from_formula) << "\n";
    }
}
