#include "midpath/middle_path.hpp"

#include <algorithm>
#include <vector>

namespace midpath {

CellCase classify_cell(long long a, long long b, int n_step) {
  if (n_step < 1) throw InvalidParamsError("n_step must be >= 1");
  bool q_open = (a % n_step) == 0;
  bool t_open = (b % n_step) == 0;
  if (q_open && t_open) return CellCase::Case4;
  if (q_open) return CellCase::Case3;
  if (t_open) return CellCase::Case2;
  return CellCase::Case1;
}

ScoreResult middle_path_score(const Sequence& query, const Sequence& target,
                              const ScoringScheme& scheme, int n_step) {
  if (n_step < 1) throw InvalidParamsError("n_step must be >= 1");
  if (query.length() == 0 || target.length() == 0)
    throw InvalidParamsError("alignment needs non-empty sequences");

  const std::string& q = query.residues;
  const std::string& t = target.residues;
  const std::size_t m = q.size(), n = t.size();
  const long long ins = scheme.insertion_cost;
  const long long ext = scheme.gap_extension;

  // best = tempBest of the previous/current row.  col_lane[b] carries the
  // target-insertion lane down column b; it is touched only when column b
  // is eligible, so ineligible columns never influence a score.  The
  // query-insertion lane lives in row_lane and restarts with each row; it
  // is touched only on eligible rows.  Row 0 and column 0 stay eligible for
  // every n_step, which yields the ordinary leading-gap boundary.
  std::vector<long long> best_prev(n + 1), best_cur(n + 1);
  std::vector<long long> col_lane(n + 1, kNegInf);
  std::vector<char> col_open(n + 1);
  for (std::size_t b = 1; b <= n; ++b)
    col_open[b] = (b % static_cast<std::size_t>(n_step)) == 0;

  best_prev[0] = 0;
  for (std::size_t b = 1; b <= n; ++b)
    best_prev[b] = -ins - static_cast<long long>(b - 1) * ext;

  std::array<std::uint64_t, 4> cases = {};
  for (std::size_t a = 1; a <= m; ++a) {
    const bool row_open = (a % static_cast<std::size_t>(n_step)) == 0;
    const char qa = q[a - 1];
    long long row_lane = kNegInf;
    best_cur[0] = -ins - static_cast<long long>(a - 1) * ext;
    for (std::size_t b = 1; b <= n; ++b) {
      long long best = best_prev[b - 1] + scheme.score(qa, t[b - 1]);
      long long v = best;
      if (col_open[b]) {
        long long lane = std::max(sat_sub(col_lane[b], ext), best_prev[b] - ins);
        col_lane[b] = lane;
        v = std::max(v, lane);
      }
      if (row_open) {
        row_lane = std::max(sat_sub(row_lane, ext), best_cur[b - 1] - ins);
        v = std::max(v, row_lane);
      }
      best_cur[b] = v;
      ++cases[static_cast<int>(row_open) * 2 + static_cast<int>(col_open[b])];
    }
    std::swap(best_prev, best_cur);
  }

  ScoreResult result;
  result.score = best_prev[n];
  result.counters = counters_from_cases(cases);
  return result;
}

long long diagonal_score(const Sequence& query, const Sequence& target,
                         const ScoringScheme& scheme) {
  if (query.length() == 0 || target.length() == 0)
    throw InvalidParamsError("alignment needs non-empty sequences");
  const std::string& q = query.residues;
  const std::string& t = target.residues;
  const long long m = static_cast<long long>(q.size());
  const long long n = static_cast<long long>(t.size());
  long long lead = std::max(m, n) - std::min(m, n);
  long long score = 0;
  if (lead > 0)
    score -= scheme.insertion_cost + (lead - 1) * scheme.gap_extension;
  long long q_off = m > n ? lead : 0;
  long long t_off = n > m ? lead : 0;
  for (long long i = 0; i < std::min(m, n); ++i)
    score += scheme.score(q[q_off + i], t[t_off + i]);
  return score;
}

long long derive_cutoff_mp(long long s1, long long s2) {
  if (s1 >= s2) throw InvalidCutoffsError(s1, s2);
  long long sum = s1 + s2;
  long long half = sum / 2;
  if (sum < 0 && sum % 2 != 0) --half;  // floor toward -inf
  return half;
}

TriageDecision triage(long long score, long long s1, long long s2) {
  long long cutoff = derive_cutoff_mp(s1, s2);
  if (score >= s2) return TriageDecision::AcceptDirect;
  if (score >= cutoff) return TriageDecision::FullGapped;
  return TriageDecision::BelowCutoff;
}

MiddlePathOutcome run_middle_path(const Hsp& hsp, const Sequence& query,
                                  const Sequence& target, const ScoringScheme& scheme,
                                  const MiddlePathParams& mp_params, long long s1,
                                  long long window_margin) {
  if (window_margin < 0) throw InvalidParamsError("window margin must be >= 0");
  MiddlePathOutcome out;
  out.window_q_start = std::max<long long>(1, hsp.q_start - window_margin);
  out.window_q_end = std::min<long long>(query.length(), hsp.q_end + window_margin);
  out.window_t_start = std::max<long long>(1, hsp.t_start - window_margin);
  out.window_t_end = std::min<long long>(target.length(), hsp.t_end + window_margin);

  Sequence qw = subsequence(query, out.window_q_start, out.window_q_end);
  Sequence tw = subsequence(target, out.window_t_start, out.window_t_end);
  ScoreResult scored = middle_path_score(qw, tw, scheme, mp_params.n_step);
  out.score = scored.score;
  out.counters = scored.counters;
  out.decision = triage(scored.score, s1, mp_params.s2);
  return out;
}

}  // namespace midpath
