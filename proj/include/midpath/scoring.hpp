#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "midpath/errors.hpp"
#include "midpath/seqio.hpp"

namespace midpath {

// Dense residue-pair score table over A..Z and '*'.
class SubstitutionTable {
 public:
  int score(char x, char y) const {
    return cells_[index(x)][index(y)];
  }
  bool defined(char x, char y) const {
    int ix = index_or_neg(x), iy = index_or_neg(y);
    return ix >= 0 && iy >= 0 && defined_[ix][iy];
  }
  void set(char x, char y, int value);

  // Maps a residue to its table slot; throws InvalidParamsError for
  // characters outside A..Z / '*'.  Case-insensitive.
  static int index(char c);

 private:
  static int index_or_neg(char c);

  static constexpr int kSlots = 27;  // 'A'..'Z' then '*'
  std::array<std::array<int, kSlots>, kSlots> cells_ = {};
  std::array<std::array<bool, kSlots>, kSlots> defined_ = {};
};

struct ScoringScheme {
  SubstitutionTable substitution;
  int gap_open = 0;        // >= 0
  int gap_extension = 1;   // >= 1
  int insertion_cost = 1;  // always gap_open + gap_extension

  int score(char x, char y) const { return substitution.score(x, y); }
};

ScoringScheme make_dna_scheme(int match, int mismatch, int gap_open, int gap_extension);

// Match/mismatch table over an arbitrary alphabet (used for protein runs
// without a matrix file).
ScoringScheme make_uniform_scheme(const Alphabet& alphabet, int match, int mismatch,
                                  int gap_open, int gap_extension);

// Reads a whitespace-separated square matrix: first non-comment line lists
// the column residues, each following line is a row residue plus integer
// scores.  '#' starts a comment.  Every alphabet residue must be covered.
// Throws MalformedMatrixError or MissingResidueError.
SubstitutionTable load_matrix(std::istream& in, const Alphabet& alphabet);
SubstitutionTable load_matrix_file(const std::string& path, const Alphabet& alphabet);

ScoringScheme scheme_from_table(SubstitutionTable table, int gap_open, int gap_extension);

struct EvalueParams {
  double lambda = 0.693147;  // natural-log scale of the score distribution
  double k = 1.0;            // search-space correction
  double e_max = 10.0;       // display threshold
  std::size_t max_display = 500;
};

struct EvalueReport {
  long long raw_score = 0;
  double normalized_score = 0.0;  // (lambda * raw - ln k) / ln 2
  double q = 0.0;                 // search space, query_len * target_len
  double evalue = 0.0;            // q / 2^normalized_score
};

// normalized = (lambda * raw_score - ln k) / ln 2;  evalue = q / 2^normalized.
// Overflow for absurd inputs follows IEEE semantics (0 or +inf).
EvalueReport evalue(long long raw_score, std::uint64_t query_len,
                    std::uint64_t target_len, const EvalueParams& params);

}  // namespace midpath
