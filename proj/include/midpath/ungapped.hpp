#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "midpath/scoring.hpp"
#include "midpath/seeding.hpp"
#include "midpath/seqio.hpp"

namespace midpath {

struct ExtensionParams {
  long long x_drop_ungapped = 20;  // > 0; pass a huge value for no drop-off
  long long s1 = 20;               // minimum HSP score worth keeping
};

// Gap-free local alignment segment, 1-based inclusive coordinates.
// q_end - q_start == t_end - t_start, and score is the plain sum of
// substitution scores over the paired residues.
struct Hsp {
  long long q_start = 0, q_end = 0;
  long long t_start = 0, t_end = 0;
  long long score = 0;

  long long diagonal() const { return t_start - q_start; }
  long long length() const { return q_end - q_start + 1; }

  bool operator==(const Hsp&) const = default;
};

// Extends the span covering both hits of the pair (word_length is the W the
// hits were found with) first left, then right, along the diagonal.  A
// direction stops once best - current > x_drop or the sequences run out; the
// result is trimmed back to the best-scoring extension, ties keeping the
// shortest.  The span itself is never trimmed.  Returns nothing when the
// best score stays below s1.
std::optional<Hsp> extend_ungapped(const SeedPair& pair, std::size_t word_length,
                                   const Sequence& query, const Sequence& target,
                                   const ScoringScheme& scheme,
                                   const ExtensionParams& params);

// Collapses exact duplicates, drops HSPs contained in a same-diagonal HSP of
// higher score, and sorts by descending score (ties by q_start, t_start).
std::vector<Hsp> dedupe_hsps(std::vector<Hsp> hsps);

}  // namespace midpath
