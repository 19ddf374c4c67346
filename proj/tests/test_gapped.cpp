#include <doctest.h>

#include <random>
#include <string>

#include "midpath/gapped.hpp"
#include "midpath/synth.hpp"
#include "oracle.hpp"

using namespace midpath;

namespace {

Sequence seq(const std::string& residues) { return Sequence{"s", "", residues}; }

// Every string over {A, C} of the given length.
std::vector<std::string> all_strings(std::size_t length) {
  std::vector<std::string> out{""};
  for (std::size_t i = 0; i < length; ++i) {
    std::vector<std::string> next;
    for (const auto& s : out) {
      next.push_back(s + "A");
      next.push_back(s + "C");
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace

TEST_CASE("full_affine_score on worked examples") {
  auto scheme = make_dna_scheme(1, -3, 2, 1);
  // Identity: every residue matches.
  CHECK(full_affine_score(seq("ACGT"), seq("ACGT"), scheme).score == 4);
  // Deleting one residue costs one gap open: 3 matches - (2 + 1).
  CHECK(full_affine_score(seq("ACGT"), seq("AGT"), scheme).score == 0);
  // Single residues.
  CHECK(full_affine_score(seq("A"), seq("A"), scheme).score == 1);
  CHECK(full_affine_score(seq("A"), seq("C"), scheme).score == -3);
  // Empty sequences are rejected, not silently scored.
  CHECK_THROWS_AS(full_affine_score(seq(""), seq("A"), scheme), InvalidParamsError);
  CHECK_THROWS_AS(full_affine_align(seq("A"), seq(""), scheme), InvalidParamsError);
  // One long gap beats two short ones when extension is cheap.
  auto cheap_ext = make_dna_scheme(1, -3, 10, 1);
  CHECK(full_affine_score(seq("AACC"), seq("AAGGGGCC"), cheap_ext).score ==
        4 - (10 + 4));
}

TEST_CASE("full_affine_score counters charge flat per cell") {
  auto scheme = make_dna_scheme(1, -3, 5, 2);
  auto r = full_affine_score(seq("ACGTAC"), seq("ACG"), scheme);
  CHECK(r.counters.cells == 18);
  CHECK(r.counters.comparisons == 18 * 5);
  CHECK(r.counters.arithmetic == 18 * 5);
  CHECK(r.counters.overhead == 18);
  CHECK(r.counters.total() == 18 * 11);
}

TEST_CASE("full_affine_score is symmetric under swapping the sequences") {
  std::mt19937_64 rng(42);
  auto scheme = make_dna_scheme(2, -1, 4, 1);
  for (int trial = 0; trial < 30; ++trial) {
    auto a = seq(synth::random_dna(1 + trial % 17, rng));
    auto b = seq(synth::random_dna(1 + (trial * 5) % 23, rng));
    CHECK(full_affine_score(a, b, scheme).score ==
          full_affine_score(b, a, scheme).score);
  }
}

TEST_CASE("full_affine_score matches exhaustive path enumeration") {
  auto scheme = make_dna_scheme(1, -3, 2, 1);
  std::vector<std::string> strings;
  for (std::size_t len = 1; len <= 4; ++len) {
    auto more = all_strings(len);
    strings.insert(strings.end(), more.begin(), more.end());
  }
  for (const auto& q : strings) {
    for (const auto& t : strings) {
      long long want = oracle::enumerate_affine_best(q, t, scheme);
      CHECK(full_affine_score(seq(q), seq(t), scheme).score == want);
    }
  }
}

TEST_CASE("full_affine_score matches enumeration on random dna") {
  std::mt19937_64 rng(9917);
  auto scheme = make_dna_scheme(2, -2, 3, 1);
  for (int trial = 0; trial < 50; ++trial) {
    auto q = synth::random_dna(1 + trial % 6, rng);
    auto t = synth::random_dna(1 + (trial * 3) % 6, rng);
    CHECK(full_affine_score(seq(q), seq(t), scheme).score ==
          oracle::enumerate_affine_best(q, t, scheme));
  }
}

TEST_CASE("full_affine_align returns a consistent optimal path") {
  auto scheme = make_dna_scheme(1, -3, 2, 1);
  auto aln = full_affine_align(seq("ACGT"), seq("AGT"), scheme);
  CHECK(aln.score == 0);
  REQUIRE(aln.edit_path.size() == 4);
  CHECK(aln.edit_path[0] == Step::Match);
  CHECK(aln.edit_path[1] == Step::InsertQ);
  CHECK(aln.edit_path[2] == Step::Match);
  CHECK(aln.edit_path[3] == Step::Match);
  CHECK(aln.q_start == 1);
  CHECK(aln.q_end == 4);
  CHECK(aln.t_start == 1);
  CHECK(aln.t_end == 3);
}

TEST_CASE("full_affine_align path replays to the reported score") {
  std::mt19937_64 rng(31337);
  auto scheme = make_dna_scheme(1, -3, 5, 2);
  for (int trial = 0; trial < 60; ++trial) {
    auto q = synth::random_dna(1 + trial % 12, rng);
    auto t = synth::random_dna(1 + (trial * 7) % 12, rng);
    auto aln = full_affine_align(seq(q), seq(t), scheme);
    std::vector<int> steps;
    for (Step s : aln.edit_path) steps.push_back(static_cast<int>(s));
    CHECK(oracle::replay_path_score(q, t, steps, scheme) == aln.score);
    CHECK(full_affine_score(seq(q), seq(t), scheme).score == aln.score);
  }
}

TEST_CASE("sat_sub never wraps below the sentinel") {
  CHECK(sat_sub(kNegInf, 100) == kNegInf);
  CHECK(sat_sub(kNegInf - 5, 100) == kNegInf);
  CHECK(sat_sub(0, 7) == -7);
}
