#pragma once

#include <cstddef>
#include <vector>

#include "midpath/errors.hpp"
#include "midpath/seqio.hpp"

namespace midpath {

struct SeedingParams {
  std::size_t word_length = 11;   // 1..32
  long long two_hit_window = 40;  // A: max q-distance between paired hits
};

// Exact W-mer match.  Positions are 1-based; diagonal = t_pos - q_pos.
struct SeedHit {
  long long q_pos = 0;
  long long t_pos = 0;
  long long diagonal = 0;
};

struct SeedPair {
  SeedHit first;
  SeedHit second;  // same diagonal, 0 < second.q_pos - first.q_pos < A
};

// All exact word matches between query and target, found through a hash
// index of query words, sorted by (diagonal, q_pos).  Throws WordTooLongError
// when the word does not fit in either sequence.
std::vector<SeedHit> find_word_hits(const Sequence& query, const Sequence& target,
                                    const SeedingParams& params);

// Left-to-right scan per diagonal: a hit pairs with its nearest following
// hit at q-distance in (0, A); a hit consumed as `second` is out of play.
// Expects the sort order produced by find_word_hits.
std::vector<SeedPair> pair_two_hits(const std::vector<SeedHit>& hits,
                                    const SeedingParams& params);

}  // namespace midpath
