#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "midpath/errors.hpp"

namespace midpath {

// Residue sets.  DNA keeps the ambiguity code N as an ordinary residue; the
// protein set is the 20 standard amino acids plus B, Z, X and the stop '*'.
class Alphabet {
 public:
  enum class Kind { Dna, Protein };

  static const Alphabet& dna();
  static const Alphabet& protein();

  Kind kind() const { return kind_; }
  const std::string& symbols() const { return symbols_; }

  // Case-insensitive membership test.
  bool contains(char c) const;

 private:
  Alphabet(Kind kind, std::string symbols);

  Kind kind_;
  std::string symbols_;  // upper case, fixed order
  bool member_[128] = {};
};

struct Sequence {
  std::string id;           // header token up to the first whitespace
  std::string description;  // remainder of the header, may be empty
  std::string residues;     // validated, stored upper case

  std::size_t length() const { return residues.size(); }
};

// Parses FASTA text.  Residues are validated against the alphabet and
// upper-cased; '>' headers may carry descriptions; blank lines are ignored.
// Throws EmptyFileError, MissingHeaderError, EmptyRecordError or
// IllegalResidueError (with record id and 1-based residue position).
std::vector<Sequence> parse_fasta(std::istream& in, const Alphabet& alphabet);
std::vector<Sequence> parse_fasta(const std::string& text, const Alphabet& alphabet);
std::vector<Sequence> read_fasta_file(const std::string& path, const Alphabet& alphabet);

void write_fasta(const std::vector<Sequence>& sequences, std::ostream& out);
std::string write_fasta(const std::vector<Sequence>& sequences);

// [start, end] is 1-based and inclusive; the id gains a ":start-end" suffix.
// Throws OutOfRangeError unless 1 <= start <= end <= length.
Sequence subsequence(const Sequence& seq, std::size_t start, std::size_t end);

}  // namespace midpath
