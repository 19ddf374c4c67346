#include "midpath/ungapped.hpp"

#include <algorithm>

namespace midpath {

std::optional<Hsp> extend_ungapped(const SeedPair& pair, std::size_t word_length,
                                   const Sequence& query, const Sequence& target,
                                   const ScoringScheme& scheme,
                                   const ExtensionParams& params) {
  if (params.x_drop_ungapped <= 0)
    throw InvalidParamsError("x_drop must be > 0");
  if (word_length < 1) throw InvalidParamsError("word length must be >= 1");
  if (pair.first.diagonal != pair.second.diagonal ||
      pair.second.q_pos <= pair.first.q_pos)
    throw InvalidParamsError("malformed seed pair");

  const std::string& q = query.residues;
  const std::string& t = target.residues;
  const long long m = static_cast<long long>(q.size());
  const long long n = static_cast<long long>(t.size());
  const long long w = static_cast<long long>(word_length);

  Hsp hsp;
  hsp.q_start = pair.first.q_pos;
  hsp.t_start = pair.first.t_pos;
  hsp.q_end = pair.second.q_pos + w - 1;
  hsp.t_end = pair.second.t_pos + w - 1;
  if (hsp.q_end > m || hsp.t_end > n)
    throw OutOfRangeError("seed pair span outside the sequences");

  long long span_score = 0;
  for (long long i = 0; i < hsp.q_end - hsp.q_start + 1; ++i)
    span_score += scheme.score(q[hsp.q_start - 1 + i], t[hsp.t_start - 1 + i]);

  // One direction: walk outward, remember the best running total and stop
  // once it falls more than x_drop behind.  Strict improvement keeps ties on
  // the shorter extension.
  auto extend = [&](long long q0, long long t0, long long step) {
    long long cur = 0, best = 0, best_steps = 0, taken = 0;
    long long qi = q0 + step, ti = t0 + step;
    while (qi >= 1 && qi <= m && ti >= 1 && ti <= n) {
      cur += scheme.score(q[qi - 1], t[ti - 1]);
      ++taken;
      if (cur > best) {
        best = cur;
        best_steps = taken;
      } else if (best - cur > params.x_drop_ungapped) {
        break;
      }
      qi += step;
      ti += step;
    }
    return std::pair<long long, long long>(best, best_steps);
  };

  auto [left_gain, left_steps] = extend(hsp.q_start, hsp.t_start, -1);
  auto [right_gain, right_steps] = extend(hsp.q_end, hsp.t_end, +1);

  hsp.q_start -= left_steps;
  hsp.t_start -= left_steps;
  hsp.q_end += right_steps;
  hsp.t_end += right_steps;
  hsp.score = span_score + left_gain + right_gain;

  if (hsp.score < params.s1) return std::nullopt;
  return hsp;
}

std::vector<Hsp> dedupe_hsps(std::vector<Hsp> hsps) {
  std::sort(hsps.begin(), hsps.end(), [](const Hsp& a, const Hsp& b) {
    if (a.score != b.score) return a.score > b.score;
    if (a.q_start != b.q_start) return a.q_start < b.q_start;
    return a.t_start < b.t_start;
  });
  std::vector<Hsp> out;
  for (const Hsp& h : hsps) {
    bool keep = true;
    for (const Hsp& kept : out) {
      if (kept == h) {
        keep = false;
        break;
      }
      bool contained = kept.diagonal() == h.diagonal() &&
                       kept.q_start <= h.q_start && h.q_end <= kept.q_end;
      if (contained && h.score < kept.score) {
        keep = false;
        break;
      }
    }
    if (keep) out.push_back(h);
  }
  return out;
}

}  // namespace midpath
