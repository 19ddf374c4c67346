#include "midpath/seeding.hpp"

#include <algorithm>
#include <string_view>
#include <unordered_map>

namespace midpath {

std::vector<SeedHit> find_word_hits(const Sequence& query, const Sequence& target,
                                    const SeedingParams& params) {
  const std::size_t w = params.word_length;
  if (w < 1 || w > 32)
    throw InvalidParamsError("word length must be in 1..32");
  if (w > query.length()) throw WordTooLongError(w, query.length());
  if (w > target.length()) throw WordTooLongError(w, target.length());

  std::unordered_map<std::string_view, std::vector<long long>> index;
  index.reserve(query.length());
  std::string_view q(query.residues);
  for (std::size_t i = 0; i + w <= q.size(); ++i)
    index[q.substr(i, w)].push_back(static_cast<long long>(i) + 1);

  std::vector<SeedHit> hits;
  std::string_view t(target.residues);
  for (std::size_t j = 0; j + w <= t.size(); ++j) {
    auto it = index.find(t.substr(j, w));
    if (it == index.end()) continue;
    long long t_pos = static_cast<long long>(j) + 1;
    for (long long q_pos : it->second)
      hits.push_back({q_pos, t_pos, t_pos - q_pos});
  }

  std::sort(hits.begin(), hits.end(), [](const SeedHit& a, const SeedHit& b) {
    if (a.diagonal != b.diagonal) return a.diagonal < b.diagonal;
    return a.q_pos < b.q_pos;
  });
  return hits;
}

std::vector<SeedPair> pair_two_hits(const std::vector<SeedHit>& hits,
                                    const SeedingParams& params) {
  if (params.two_hit_window < 1)
    throw InvalidParamsError("two-hit window must be >= 1");
  std::vector<SeedPair> pairs;
  std::size_t i = 0;
  while (i < hits.size()) {
    if (i + 1 < hits.size() && hits[i + 1].diagonal == hits[i].diagonal) {
      long long gap = hits[i + 1].q_pos - hits[i].q_pos;
      if (gap > 0 && gap < params.two_hit_window) {
        pairs.push_back({hits[i], hits[i + 1]});
        i += 2;  // the second hit is consumed
        continue;
      }
    }
    ++i;
  }
  return pairs;
}

}  // namespace midpath
