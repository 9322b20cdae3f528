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

#ifndef QSATAKE_TESTS_FIXTURES_HPP
#define QSATAKE_TESTS_FIXTURES_HPP

// Published values used by several test binaries.

#include <string>
#include <vector>

namespace fixtures {

// Hyperplane multiplication on OG(5,10), rows as printed: '0', '1' or 't'.
inline const std::vector<std::string>& og5_matrix_rows() {
    static const std::vector<std::string> rows = {
        "00000000000t0000", "1000000000000t00", "01000000000000t0", "0010000000000000",
        "001000000000000t", "0001000000000000", "0001100000000000", "0000011000000000",
        "0000001000000000", "0000000110000000", "0000000010000000", "0000000001000000",
        "0000000001100000", "0000000000011000", "0000000000000100", "0000000000000010",
    };
    return rows;
}

inline const std::vector<std::string>& og5_basis() {
    static const std::vector<std::string> b = {"()",      "(1)",     "(2)",       "(3)",     "(2,1)",   "(4)",
                                               "(3,1)",   "(4,1)",   "(3,2)",     "(4,2)",   "(3,2,1)", "(4,3)",
                                               "(4,2,1)", "(4,3,1)", "(4,3,2)",   "(4,3,2,1)"};
    return b;
}

}  // namespace fixtures

#endif
