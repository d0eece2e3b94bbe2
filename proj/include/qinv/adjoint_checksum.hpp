// Frozen per-row coefficient multisets of the adjoint block tables:
// counts of {+1/3, -1/3, +2/3, -2/3, +1, -1} in each block row.

#pragma once

#include <array>
#include <cstdint>

namespace qinv::detail {

inline constexpr std::array<std::array<std::uint8_t, 6>, 24> k02_row_multisets = {{
    {{9, 9, 5, 4, 0, 0}},
    {{9, 9, 4, 5, 0, 0}},
    {{9, 9, 5, 4, 0, 0}},
    {{9, 9, 4, 5, 0, 0}},
    {{9, 9, 5, 4, 0, 0}},
    {{9, 9, 4, 5, 0, 0}},
    {{0, 0, 0, 0, 4, 5}},
    {{0, 0, 0, 0, 5, 4}},
    {{0, 0, 0, 0, 5, 4}},
    {{0, 0, 0, 0, 4, 5}},
    {{0, 0, 0, 0, 5, 4}},
    {{0, 0, 0, 0, 5, 4}},
    {{0, 0, 0, 0, 4, 5}},
    {{0, 0, 0, 0, 5, 4}},
    {{0, 0, 0, 0, 5, 4}},
    {{0, 0, 0, 0, 5, 4}},
    {{0, 0, 0, 0, 5, 4}},
    {{0, 0, 0, 0, 4, 5}},
    {{0, 0, 0, 0, 5, 4}},
    {{0, 0, 0, 0, 5, 4}},
    {{0, 0, 0, 0, 4, 5}},
    {{0, 0, 0, 0, 5, 4}},
    {{0, 0, 0, 0, 5, 4}},
    {{0, 0, 0, 0, 4, 5}},
}};

inline constexpr std::array<std::array<std::uint8_t, 6>, 27> k10_row_multisets = {{
    {{0, 0, 0, 0, 0, 9}},
    {{0, 0, 0, 0, 1, 9}},
    {{0, 0, 0, 0, 1, 8}},
    {{0, 0, 0, 0, 1, 9}},
    {{0, 0, 0, 0, 2, 9}},
    {{0, 0, 0, 0, 2, 8}},
    {{0, 0, 0, 0, 1, 8}},
    {{0, 0, 0, 0, 2, 8}},
    {{0, 0, 0, 0, 2, 7}},
    {{0, 0, 0, 0, 1, 9}},
    {{0, 0, 0, 0, 2, 9}},
    {{0, 0, 0, 0, 2, 8}},
    {{0, 0, 0, 0, 2, 9}},
    {{0, 0, 0, 0, 3, 9}},
    {{0, 0, 0, 0, 3, 8}},
    {{0, 0, 0, 0, 2, 8}},
    {{0, 0, 0, 0, 3, 8}},
    {{0, 0, 0, 0, 3, 7}},
    {{0, 0, 0, 0, 1, 8}},
    {{0, 0, 0, 0, 2, 8}},
    {{0, 0, 0, 0, 2, 7}},
    {{0, 0, 0, 0, 2, 8}},
    {{0, 0, 0, 0, 3, 8}},
    {{0, 0, 0, 0, 3, 7}},
    {{0, 0, 0, 0, 2, 7}},
    {{0, 0, 0, 0, 3, 7}},
    {{0, 0, 0, 0, 3, 6}},
}};

inline constexpr std::array<std::array<std::uint8_t, 6>, 27> k21_row_multisets = {{
    {{0, 0, 0, 0, 4, 4}},
    {{0, 0, 0, 0, 4, 4}},
    {{0, 0, 0, 0, 4, 4}},
    {{0, 0, 0, 0, 4, 4}},
    {{0, 0, 0, 0, 4, 4}},
    {{0, 0, 0, 0, 4, 4}},
    {{0, 0, 0, 0, 4, 4}},
    {{0, 0, 0, 0, 4, 4}},
    {{0, 0, 0, 0, 4, 4}},
    {{0, 0, 0, 0, 4, 4}},
    {{0, 0, 0, 0, 4, 4}},
    {{0, 0, 0, 0, 4, 4}},
    {{0, 0, 0, 0, 4, 4}},
    {{0, 0, 0, 0, 4, 4}},
    {{0, 0, 0, 0, 4, 4}},
    {{0, 0, 0, 0, 4, 4}},
    {{0, 0, 0, 0, 4, 4}},
    {{0, 0, 0, 0, 4, 4}},
    {{0, 0, 0, 0, 4, 4}},
    {{0, 0, 0, 0, 4, 4}},
    {{0, 0, 0, 0, 4, 4}},
    {{0, 0, 0, 0, 4, 4}},
    {{0, 0, 0, 0, 4, 4}},
    {{0, 0, 0, 0, 4, 4}},
    {{0, 0, 0, 0, 4, 4}},
    {{0, 0, 0, 0, 4, 4}},
    {{0, 0, 0, 0, 4, 4}},
}};

inline constexpr std::array<std::array<std::uint8_t, 6>, 9> strassen_row_multisets = {{
    {{0, 0, 0, 0, 3, 3}},
    {{0, 0, 0, 0, 3, 3}},
    {{0, 0, 0, 0, 3, 3}},
    {{0, 0, 0, 0, 3, 3}},
    {{0, 0, 0, 0, 3, 3}},
    {{0, 0, 0, 0, 3, 3}},
    {{0, 0, 0, 0, 3, 3}},
    {{0, 0, 0, 0, 3, 3}},
    {{0, 0, 0, 0, 3, 3}},
}};

}  // namespace qinv::detail
