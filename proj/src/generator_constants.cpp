#include "spinel/generators.hpp"

// Base generator constants. This translation unit is replaceable through the
// SPINEL_GENERATOR_CONSTANTS CMake variable; alternative constants must pass
// the same startup self-check (unit determinant, exact inverses, and
// distinctness of all non-backtracking words of length <= 6).
//
// Atilde and Btilde are the images of the free pair [[1,2],[0,1]],
// [[1,0],[2,1]] under the symmetric-cube embedding SL2(Z) -> SL4(Z); the
// walk generators are their 10th powers mod p.

namespace spinel::detail {

const std::array<std::array<std::int64_t, 16>, 4> kBaseGenerators = {{
    // Atilde
    {1, 6, 12, 8,
     0, 1, 4, 4,
     0, 0, 1, 2,
     0, 0, 0, 1},
    // Atilde^-1
    {1, -6, 12, -8,
     0, 1, -4, 4,
     0, 0, 1, -2,
     0, 0, 0, 1},
    // Btilde
    {1, 0, 0, 0,
     2, 1, 0, 0,
     4, 4, 1, 0,
     8, 12, 6, 1},
    // Btilde^-1
    {1, 0, 0, 0,
     -2, 1, 0, 0,
     4, -4, 1, 0,
     -8, 12, -6, 1},
}};

const unsigned kGeneratorPower = 10;

}  // namespace spinel::detail
