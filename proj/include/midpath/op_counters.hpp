#pragma once

#include <array>
#include <cstdint>

namespace midpath {

// Cell classes of the restricted DP.  Per cell (a, b), 1-based:
//   Case1: neither gap lane open (a % N != 0, b % N != 0)
//   Case2: only the target-insertion lane open (b % N == 0)
//   Case3: only the query-insertion lane open  (a % N == 0)
//   Case4: both lanes open
enum class CellCase : int { Case1 = 0, Case2 = 1, Case3 = 2, Case4 = 3 };

// Abstract per-cell cost model: (comparisons, arithmetic) charged per case,
// plus one overhead operation per cell regardless of case.  These are model
// charges, not executed-instruction counts.
struct CaseCharge {
  std::uint64_t comparisons;
  std::uint64_t arithmetic;
};

inline constexpr std::array<CaseCharge, 4> kCaseCharges = {{
    {0, 1},  // Case1
    {1, 3},  // Case2
    {1, 3},  // Case3
    {3, 4},  // Case4
}};

// The full-gapped baseline charges a flat 5 comparisons + 5 arithmetic
// + 1 overhead per cell, 11 in total.
inline constexpr CaseCharge kBaselineCharge = {5, 5};

struct OpCounters {
  std::uint64_t comparisons = 0;
  std::uint64_t arithmetic = 0;
  std::uint64_t overhead = 0;
  std::uint64_t cells = 0;
  std::array<std::uint64_t, 4> case_counts = {};  // zero for baseline counters

  std::uint64_t total() const { return comparisons + arithmetic + overhead; }

  OpCounters& operator+=(const OpCounters& other) {
    comparisons += other.comparisons;
    arithmetic += other.arithmetic;
    overhead += other.overhead;
    cells += other.cells;
    for (std::size_t i = 0; i < case_counts.size(); ++i)
      case_counts[i] += other.case_counts[i];
    return *this;
  }
};

// Charges derived from per-case cell counts (restricted DP).
inline OpCounters counters_from_cases(const std::array<std::uint64_t, 4>& cases) {
  OpCounters c;
  c.case_counts = cases;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    c.comparisons += cases[i] * kCaseCharges[i].comparisons;
    c.arithmetic += cases[i] * kCaseCharges[i].arithmetic;
    c.cells += cases[i];
  }
  c.overhead = c.cells;
  return c;
}

// Flat (5, 5, 1) charges for a full affine DP over `cells` cells.
inline OpCounters baseline_counters(std::uint64_t cells) {
  OpCounters c;
  c.comparisons = kBaselineCharge.comparisons * cells;
  c.arithmetic = kBaselineCharge.arithmetic * cells;
  c.overhead = cells;
  c.cells = cells;
  return c;
}

}  // namespace midpath
