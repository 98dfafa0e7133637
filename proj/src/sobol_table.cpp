#include "lowdisc/generators.hpp"

namespace lowdisc::gen {

// Dimensions 2..16 of the Joe-Kuo table (new-joe-kuo-6.21201); dimension 1 is
// the van der Corput column and needs no entry. Rows are {s, a, m_1..m_s}.
const SobolTable& sobol_default_table() {
    static const SobolTable table{
        "joe-kuo-6.21201",
        {
            {1, 0, {1}},
            {2, 1, {1, 3}},
            {3, 1, {1, 3, 1}},
            {3, 2, {1, 1, 1}},
            {4, 1, {1, 1, 3, 3}},
            {4, 4, {1, 3, 5, 13}},
            {5, 2, {1, 1, 5, 5, 17}},
            {5, 4, {1, 1, 5, 5, 5}},
            {5, 7, {1, 1, 7, 11, 19}},
            {5, 11, {1, 1, 5, 1, 1}},
            {5, 13, {1, 1, 1, 3, 11}},
            {5, 14, {1, 3, 5, 5, 31}},
            {6, 1, {1, 3, 3, 9, 7, 49}},
            {6, 13, {1, 1, 1, 15, 21, 21}},
            {6, 16, {1, 3, 1, 13, 27, 49}},
        }};
    return table;
}

}  // namespace lowdisc::gen
