#pragma once

#include <cstddef>
#include <vector>

namespace lrb {

/// sigma as a 0-based list: perm[i] = sigma(i+1) - 1.
struct Shuffle {
  std::vector<std::size_t> perm;
  int sign;
};

int permutation_sign(const std::vector<std::size_t>& perm);

/// All (i_1,...,i_k)-shuffles: ascending inside each block. Ordered by the
/// block label of each value, lexicographically. Empty blocks are allowed.
const std::vector<Shuffle>& shuffles(const std::vector<std::size_t>& profile);

/// Multinomial coefficient (sum profile)! / prod(i_j!).
std::size_t multinomial(const std::vector<std::size_t>& profile);

}  // namespace lrb
