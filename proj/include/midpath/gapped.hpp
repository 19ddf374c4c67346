#pragma once

#include <vector>

#include "midpath/op_counters.hpp"
#include "midpath/scoring.hpp"
#include "midpath/seqio.hpp"

namespace midpath {

// Scores below this are unreachable; lane arithmetic saturates at it so the
// sentinel can never wrap into a plausible score.
inline constexpr long long kNegInf = -(1LL << 40);

inline long long sat_sub(long long value, long long cost) {
  return value <= kNegInf ? kNegInf : value - cost;
}

struct ScoreResult {
  long long score = 0;
  OpCounters counters;
};

enum class Step : int { Match = 0, InsertT = 1, InsertQ = 2 };

struct GappedAlignment {
  long long score = 0;
  long long q_start = 0, q_end = 0;
  long long t_start = 0, t_end = 0;
  std::vector<Step> edit_path;
};

// Global affine-gap score over the full sequences, computed with the
// textbook three-matrix recurrence (match lane plus one insertion lane per
// sequence).  Kept deliberately independent of the restricted DP: the two
// must agree when the restriction is off, and this one is the reference.
// Counters charge flat (5, 5, 1) per cell.
ScoreResult full_affine_score(const Sequence& query, const Sequence& target,
                              const ScoringScheme& scheme);

// Same DP with full matrices and a deterministic traceback; ties prefer
// Match, then InsertT, then InsertQ.
GappedAlignment full_affine_align(const Sequence& query, const Sequence& target,
                                  const ScoringScheme& scheme);

}  // namespace midpath
