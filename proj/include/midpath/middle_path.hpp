#pragma once

#include "midpath/gapped.hpp"
#include "midpath/op_counters.hpp"
#include "midpath/scoring.hpp"
#include "midpath/seqio.hpp"
#include "midpath/ungapped.hpp"

namespace midpath {

enum class BelowCutoffPolicy { Reject, DisplayUngapped };

struct MiddlePathParams {
  int n_step = 10;  // N: insertion points come every N residues; 1 = unrestricted
  long long s2 = 40;
  BelowCutoffPolicy below_cutoff_policy = BelowCutoffPolicy::Reject;
};

enum class TriageDecision { AcceptDirect, FullGapped, BelowCutoff };

// Cell class at 1-based (a, b): a % N == 0 opens the query-insertion lane
// (a gap inserted into the query, running along row a and consuming target
// residues), b % N == 0 opens the target-insertion lane (running down
// column b, consuming query residues).
CellCase classify_cell(long long a, long long b, int n_step);

// Global affine score where gap runs are confined to the insertion-eligible
// rows and columns above; row 0 and column 0 (leading gaps) are always
// eligible.  n_step == 1 permits every cell and must match
// full_affine_score exactly.  Counters follow the per-case cost model.
ScoreResult middle_path_score(const Sequence& query, const Sequence& target,
                              const ScoringScheme& scheme, int n_step);

// Score of the single alignment with no interior gap: a leading gap of
// ||q| - |t|| followed by one diagonal run.  Lower bound for
// middle_path_score at every n_step, and its exact value once n_step
// exceeds both lengths.
long long diagonal_score(const Sequence& query, const Sequence& target,
                         const ScoringScheme& scheme);

// floor((s1 + s2) / 2), floor toward -inf.  Requires s1 < s2, else
// InvalidCutoffsError.
long long derive_cutoff_mp(long long s1, long long s2);

// score >= s2: AcceptDirect; cutoff_mp <= score < s2: FullGapped;
// otherwise BelowCutoff.
TriageDecision triage(long long score, long long s1, long long s2);

struct MiddlePathOutcome {
  long long score = 0;
  OpCounters counters;
  TriageDecision decision = TriageDecision::BelowCutoff;
  long long window_q_start = 0, window_q_end = 0;  // the scored window
  long long window_t_start = 0, window_t_end = 0;
};

// Scores the HSP's window (HSP extent plus margin on each side, clamped to
// the sequences) with the restricted DP and triages the result.
MiddlePathOutcome run_middle_path(const Hsp& hsp, const Sequence& query,
                                  const Sequence& target, const ScoringScheme& scheme,
                                  const MiddlePathParams& mp_params, long long s1,
                                  long long window_margin);

}  // namespace midpath
