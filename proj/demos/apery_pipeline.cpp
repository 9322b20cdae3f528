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

// From the OG(5,10) hyperplane matrix to Apery's operator and zeta(3).

#include <iostream>

#include <qsatake/qde.hpp>

using namespace qsatake;

int main() {
    auto M = hyperplane_matrix(parse_space("OG:5"));
    auto L = minimal_operator(M).op;
    std::cout << "minimal operator:  " << L.to_string() << "\n";
    auto lf = lefschetz_transform(L, 7);
    std::cout << "quantum Lefschetz: strip " << detail::factor_string(lf.factor) << "\n                   " << lf.op.to_string() << "\n";
    auto reg = regularize(lf.op);
    std::cout << "regularized:       " << reg.op.to_string() << "\n";
    std::cout << "recurrence:        " << operator_to_recurrence(reg.op).to_string() << "\n\n";

    auto rep = zeta3_report(12);
    std::cout << "zeta(3) = " << decimal_string(rep.zeta.lo, 40) << "...\n";
    for (const auto& row : rep.rows) std::cout << "  n=" << row.n << "  |zeta(3) - 6b/a| <= " << scientific_string(row.error_upper, 4) << "\n";
}
