#include "lrb/shuffles.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace lrb {

int permutation_sign(const std::vector<std::size_t>& perm) {
  std::size_t inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

namespace {

std::vector<Shuffle> generate(const std::vector<std::size_t>& profile) {
  std::vector<std::size_t> labels;
  for (std::size_t b = 0; b < profile.size(); ++b) labels.insert(labels.end(), profile[b], b);
  std::vector<Shuffle> out;
  // labels[v] = block receiving value v; sorted labels is the identity.
  do {
    Shuffle s;
    for (std::size_t b = 0; b < profile.size(); ++b)
      for (std::size_t v = 0; v < labels.size(); ++v)
        if (labels[v] == b) s.perm.push_back(v);
    s.sign = permutation_sign(s.perm);
    out.push_back(std::move(s));
  } while (std::next_permutation(labels.begin(), labels.end()));
  return out;
}

}  // namespace

const std::vector<Shuffle>& shuffles(const std::vector<std::size_t>& profile) {
  static std::mutex mutex;
  static std::map<std::vector<std::size_t>, std::vector<Shuffle>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(profile);
  if (it == cache.end()) it = cache.emplace(profile, generate(profile)).first;
  return it->second;
}

std::size_t multinomial(const std::vector<std::size_t>& profile) {
  std::size_t result = 1, n = 0;
  for (std::size_t k : profile)
    for (std::size_t i = 1; i <= k; ++i) {
      ++n;
      result = result * n / i;
    }
  return result;
}

}  // namespace lrb
