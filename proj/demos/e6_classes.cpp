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

// Special classes p_d on the Cayley plane E6/P1 from the centralizer of x.

#include <iostream>

#include <qsatake/lie_tables.hpp>

using namespace qsatake;

int main() {
    auto cmp = compare_centralizer_table(e6_table());
    std::cout << "E6 exponents:";
    for (int d : cmp.exponents_computed) std::cout << " " << d;
    std::cout << "\n";
    for (const auto& row : cmp.rows) {
        std::cout << "p_" << row.d << " =";
        for (const auto& [word, c] : row.p_computed) std::cout << " " << (c > 0 ? "+" : "") << c.get_str() << " s_" << word;
        std::cout << (row.p_match ? "   (matches table)" : "   (differs from table)") << "\n";
    }
}
