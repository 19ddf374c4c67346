#include "midpath/scoring.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>
#include <vector>

namespace midpath {

int SubstitutionTable::index(char c) {
  int i = index_or_neg(c);
  if (i < 0)
    throw InvalidParamsError("character '" + std::string(1, c) +
                             "' is not a residue");
  return i;
}

int SubstitutionTable::index_or_neg(char c) {
  unsigned char u = static_cast<unsigned char>(
      std::toupper(static_cast<unsigned char>(c)));
  if (u >= 'A' && u <= 'Z') return u - 'A';
  if (u == '*') return 26;
  return -1;
}

void SubstitutionTable::set(char x, char y, int value) {
  int ix = index(x), iy = index(y);
  cells_[ix][iy] = value;
  defined_[ix][iy] = true;
}

ScoringScheme make_uniform_scheme(const Alphabet& alphabet, int match, int mismatch,
                                  int gap_open, int gap_extension) {
  if (gap_open < 0) throw InvalidParamsError("gap_open must be >= 0");
  if (gap_extension < 1) throw InvalidParamsError("gap_extension must be >= 1");
  ScoringScheme scheme;
  for (char x : alphabet.symbols())
    for (char y : alphabet.symbols())
      scheme.substitution.set(x, y, x == y ? match : mismatch);
  scheme.gap_open = gap_open;
  scheme.gap_extension = gap_extension;
  scheme.insertion_cost = gap_open + gap_extension;
  return scheme;
}

ScoringScheme make_dna_scheme(int match, int mismatch, int gap_open, int gap_extension) {
  return make_uniform_scheme(Alphabet::dna(), match, mismatch, gap_open, gap_extension);
}

ScoringScheme scheme_from_table(SubstitutionTable table, int gap_open, int gap_extension) {
  if (gap_open < 0) throw InvalidParamsError("gap_open must be >= 0");
  if (gap_extension < 1) throw InvalidParamsError("gap_extension must be >= 1");
  ScoringScheme scheme;
  scheme.substitution = std::move(table);
  scheme.gap_open = gap_open;
  scheme.gap_extension = gap_extension;
  scheme.insertion_cost = gap_open + gap_extension;
  return scheme;
}

namespace {

// Strips comments and returns the significant lines.
std::vector<std::string> matrix_lines(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream probe(line);
    std::string tok;
    if (probe >> tok) lines.push_back(line);
  }
  return lines;
}

}  // namespace

SubstitutionTable load_matrix(std::istream& in, const Alphabet& alphabet) {
  std::vector<std::string> lines = matrix_lines(in);
  if (lines.empty()) throw MalformedMatrixError("no content");

  std::vector<char> columns;
  {
    std::istringstream header(lines[0]);
    std::string tok;
    while (header >> tok) {
      if (tok.size() != 1)
        throw MalformedMatrixError("column label '" + tok + "' is not a residue");
      columns.push_back(static_cast<char>(
          std::toupper(static_cast<unsigned char>(tok[0]))));
    }
  }

  SubstitutionTable table;
  std::vector<char> rows;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::istringstream row(lines[i]);
    std::string label;
    row >> label;
    if (label.size() != 1)
      throw MalformedMatrixError("row label '" + label + "' is not a residue");
    char r = static_cast<char>(std::toupper(static_cast<unsigned char>(label[0])));
    rows.push_back(r);
    for (char c : columns) {
      std::string cell;
      if (!(row >> cell))
        throw MalformedMatrixError("row '" + std::string(1, r) + "' has fewer cells than columns");
      std::size_t used = 0;
      int value;
      try {
        value = std::stoi(cell, &used);
      } catch (const std::exception&) {
        throw MalformedMatrixError("cell '" + cell + "' is not an integer");
      }
      if (used != cell.size())
        throw MalformedMatrixError("cell '" + cell + "' is not an integer");
      table.set(r, c, value);
    }
    std::string extra;
    if (row >> extra)
      throw MalformedMatrixError("row '" + std::string(1, r) + "' has more cells than columns");
  }

  for (char needed : alphabet.symbols()) {
    bool in_rows = false, in_cols = false;
    for (char r : rows) in_rows |= (r == needed);
    for (char c : columns) in_cols |= (c == needed);
    if (!in_rows || !in_cols) throw MissingResidueError(needed);
  }
  for (char x : alphabet.symbols())
    for (char y : alphabet.symbols())
      if (!table.defined(x, y)) throw MissingResidueError(x);
  return table;
}

SubstitutionTable load_matrix_file(const std::string& path, const Alphabet& alphabet) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return load_matrix(in, alphabet);
}

EvalueReport evalue(long long raw_score, std::uint64_t query_len,
                    std::uint64_t target_len, const EvalueParams& params) {
  if (params.lambda <= 0.0) throw InvalidParamsError("lambda must be > 0");
  if (params.k <= 0.0) throw InvalidParamsError("k must be > 0");
  if (query_len == 0 || target_len == 0)
    throw InvalidParamsError("evalue needs non-empty sequences");
  EvalueReport report;
  report.raw_score = raw_score;
  report.normalized_score =
      (params.lambda * static_cast<double>(raw_score) - std::log(params.k)) /
      std::log(2.0);
  report.q = static_cast<double>(query_len) * static_cast<double>(target_len);
  report.evalue = report.q / std::exp2(report.normalized_score);
  return report;
}

}  // namespace midpath
