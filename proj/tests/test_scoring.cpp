#include <doctest.h>

#include <cmath>
#include <sstream>

#include "midpath/scoring.hpp"

using namespace midpath;

TEST_CASE("uniform and dna schemes") {
  auto dna = make_dna_scheme(1, -3, 5, 2);
  CHECK(dna.score('A', 'A') == 1);
  CHECK(dna.score('a', 'A') == 1);
  CHECK(dna.score('A', 'C') == -3);
  CHECK(dna.score('N', 'N') == 1);
  CHECK(dna.gap_open == 5);
  CHECK(dna.gap_extension == 2);
  CHECK(dna.insertion_cost == 7);

  auto prot = make_uniform_scheme(Alphabet::protein(), 2, -1, 3, 1);
  CHECK(prot.score('W', 'W') == 2);
  CHECK(prot.score('W', 'Y') == -1);
  CHECK(prot.insertion_cost == 4);
}

TEST_CASE("scheme parameter validation") {
  CHECK_THROWS_AS(make_dna_scheme(1, -3, -1, 2), InvalidParamsError);
  CHECK_THROWS_AS(make_dna_scheme(1, -3, 5, 0), InvalidParamsError);
}

TEST_CASE("substitution table is case-insensitive and rejects junk residues") {
  SubstitutionTable t;
  t.set('a', 'B', 7);
  CHECK(t.score('A', 'b') == 7);
  CHECK(t.defined('A', 'B'));
  CHECK_FALSE(t.defined('A', 'C'));
  CHECK_FALSE(t.defined('!', 'A'));
  CHECK_THROWS_AS(t.set('!', 'A', 1), InvalidParamsError);
}

TEST_CASE("load_matrix parses a small labelled table") {
  std::istringstream in(
      "# toy matrix\n"
      "   A  C  G  T  N\n"
      "A  1 -3 -3 -3  0\n"
      "C -3  1 -3 -3  0\n"
      "G -3 -3  1 -3  0\n"
      "T -3 -3 -3  1  0\n"
      "N  0  0  0  0  0\n");
  auto table = load_matrix(in, Alphabet::dna());
  CHECK(table.score('A', 'A') == 1);
  CHECK(table.score('G', 'T') == -3);
  CHECK(table.score('N', 'A') == 0);
}

TEST_CASE("load_matrix rejects malformed input") {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return load_matrix(in, Alphabet::dna());
  };
  // Ragged row.
  CHECK_THROWS_AS(parse("  A C\nA 1\nC 1 2\n"), MalformedMatrixError);
  // Extra trailing score.
  CHECK_THROWS_AS(parse("  A C\nA 1 2 3\nC 1 2\n"), MalformedMatrixError);
  // Non-numeric cell.
  CHECK_THROWS_AS(parse("  A C\nA 1 x\nC 1 2\n"), MalformedMatrixError);
  // Multi-character residue label.
  CHECK_THROWS_AS(parse("  AB C\nAB 1 2\nC 1 2\n"), MalformedMatrixError);
  // Empty input.
  CHECK_THROWS_AS(parse(""), MalformedMatrixError);
  // Valid table that misses alphabet residues.
  try {
    parse("  A C\nA 1 -1\nC -1 1\n");
    FAIL("expected MissingResidueError");
  } catch (const MissingResidueError& e) {
    CHECK(e.residue == 'G');
  }
}

TEST_CASE("blosum62 fixture loads over the protein alphabet") {
  auto table = load_matrix_file(std::string(MIDPATH_TEST_DATA_DIR) + "/blosum62.txt",
                                Alphabet::protein());
  CHECK(table.score('W', 'W') == 11);
  CHECK(table.score('A', 'A') == 4);
  CHECK(table.score('A', 'R') == -1);
  CHECK(table.score('R', 'A') == -1);
  CHECK(table.score('*', '*') == 1);
  CHECK(table.score('C', '*') == -4);

  auto scheme = scheme_from_table(table, 11, 1);
  CHECK(scheme.insertion_cost == 12);
}

TEST_CASE("evalue matches hand-checked references") {
  // Protein-style parameters, checked against a high-precision evaluation
  // of q / 2^((lambda*s - ln k) / ln 2).
  EvalueParams params;
  params.lambda = 0.267;
  params.k = 0.041;
  auto rep = evalue(38, 250, 1000, params);
  CHECK(rep.raw_score == 38);
  CHECK(rep.q == doctest::Approx(250000.0));
  CHECK(rep.normalized_score == doctest::Approx(19.2458161649034261).epsilon(1e-13));
  CHECK(rep.evalue == doctest::Approx(0.40213516504000338).epsilon(1e-13));

  // lambda = ln 2, k = 1 makes the normalized score equal the raw score.
  EvalueParams unit;
  unit.lambda = std::log(2.0);
  unit.k = 1.0;
  auto simple = evalue(10, 100, 100, unit);
  CHECK(simple.normalized_score == doctest::Approx(10.0).epsilon(1e-13));
  CHECK(simple.evalue == doctest::Approx(9.765625).epsilon(1e-13));

  // Normalized score 0 collapses to E = Q, exactly.
  auto zero = evalue(0, 30, 70, unit);
  CHECK(zero.normalized_score == 0.0);
  CHECK(zero.evalue == 2100.0);
}

TEST_CASE("doubling the search space doubles the evalue") {
  EvalueParams params;
  for (long long s : {-3LL, 0LL, 17LL, 38LL}) {
    auto one = evalue(s, 100, 100, params);
    auto two = evalue(s, 100, 200, params);
    CHECK(two.evalue == 2.0 * one.evalue);
  }
}

TEST_CASE("evalue is monotone decreasing in the raw score") {
  EvalueParams params;  // defaults
  double prev = evalue(-5, 500, 500, params).evalue;
  for (long long s = -4; s <= 60; ++s) {
    double cur = evalue(s, 500, 500, params).evalue;
    CHECK(cur < prev);
    prev = cur;
  }
}

TEST_CASE("evalue validates its parameters") {
  EvalueParams bad;
  bad.lambda = 0.0;
  CHECK_THROWS_AS(evalue(10, 100, 100, bad), InvalidParamsError);
  bad.lambda = 0.5;
  bad.k = -1.0;
  CHECK_THROWS_AS(evalue(10, 100, 100, bad), InvalidParamsError);
  bad.k = 1.0;
  CHECK_THROWS_AS(evalue(10, 0, 100, bad), InvalidParamsError);
  CHECK_THROWS_AS(evalue(10, 100, 0, bad), InvalidParamsError);
}
