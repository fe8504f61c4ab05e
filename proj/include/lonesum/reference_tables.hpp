#ifndef LONESUM_REFERENCE_TABLES_HPP
#define LONESUM_REFERENCE_TABLES_HPP

#include <array>
#include <cstdint>

namespace lonesum::reference {

// Published values for 0 <= m, n <= 5, indexed [m][n]. Kept verbatim,
// including the D(5, 4) entry, which breaks the m <-> n symmetry.
using Table = std::array<std::array<std::uint64_t, 6>, 6>;

inline constexpr Table kD1 = {{
    {0, 0, 0, 0, 0, 0},
    {0, 1, 3, 7, 15, 31},
    {0, 3, 13, 45, 145, 453},
    {0, 7, 45, 229, 1065, 4717},
    {0, 15, 145, 1065, 6901, 41505},
    {0, 31, 453, 4717, 41505, 329461},
}};

inline constexpr Table kD2 = {{
    {0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0},
    {0, 0, 2, 12, 50, 180},
    {0, 0, 12, 108, 660, 3420},
    {0, 0, 50, 660, 5714, 40860},
    {0, 0, 180, 3420, 40860, 391500},
}};

inline constexpr Table kD = {{
    {1, 1, 1, 1, 1, 1},
    {1, 2, 4, 8, 16, 32},
    {1, 4, 16, 58, 196, 634},
    {1, 8, 58, 344, 1786, 8528},
    {1, 16, 196, 1786, 13528, 90946},
    {1, 32, 634, 8528, 90446, 833432},
}};

}  // namespace lonesum::reference

#endif  // LONESUM_REFERENCE_TABLES_HPP
