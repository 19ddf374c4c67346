#include "midpath/seqio.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace midpath {

Alphabet::Alphabet(Kind kind, std::string symbols)
    : kind_(kind), symbols_(std::move(symbols)) {
  for (char c : symbols_) {
    member_[static_cast<unsigned char>(c)] = true;
    member_[static_cast<unsigned char>(std::tolower(static_cast<unsigned char>(c)))] = true;
  }
}

const Alphabet& Alphabet::dna() {
  static const Alphabet a(Kind::Dna, "ACGTN");
  return a;
}

const Alphabet& Alphabet::protein() {
  static const Alphabet a(Kind::Protein, "ACDEFGHIKLMNPQRSTVWYBZX*");
  return a;
}

bool Alphabet::contains(char c) const {
  unsigned char u = static_cast<unsigned char>(c);
  return u < 128 && member_[u];
}

namespace {

void finish_record(std::vector<Sequence>& out, Sequence& cur, bool have_record) {
  if (!have_record) return;
  if (cur.residues.empty()) throw EmptyRecordError(cur.id);
  out.push_back(std::move(cur));
  cur = Sequence{};
}

}  // namespace

std::vector<Sequence> parse_fasta(std::istream& in, const Alphabet& alphabet) {
  std::vector<Sequence> out;
  Sequence cur;
  bool have_record = false;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '>') {
      finish_record(out, cur, have_record);
      have_record = true;
      std::size_t sp = line.find_first_of(" \t", 1);
      if (sp == std::string::npos) {
        cur.id = line.substr(1);
      } else {
        cur.id = line.substr(1, sp - 1);
        std::size_t rest = line.find_first_not_of(" \t", sp);
        if (rest != std::string::npos) cur.description = line.substr(rest);
      }
      continue;
    }
    for (char c : line) {
      if (std::isspace(static_cast<unsigned char>(c))) continue;
      if (!have_record) throw MissingHeaderError();
      if (!alphabet.contains(c))
        throw IllegalResidueError(cur.id, c, cur.residues.size() + 1);
      cur.residues.push_back(
          static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    }
  }
  finish_record(out, cur, have_record);
  if (out.empty()) throw EmptyFileError();
  return out;
}

std::vector<Sequence> parse_fasta(const std::string& text, const Alphabet& alphabet) {
  std::istringstream in(text);
  return parse_fasta(in, alphabet);
}

std::vector<Sequence> read_fasta_file(const std::string& path, const Alphabet& alphabet) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return parse_fasta(in, alphabet);
}

void write_fasta(const std::vector<Sequence>& sequences, std::ostream& out) {
  constexpr std::size_t kWrap = 60;
  for (const Sequence& s : sequences) {
    out << '>' << s.id;
    if (!s.description.empty()) out << ' ' << s.description;
    out << '\n';
    for (std::size_t i = 0; i < s.residues.size(); i += kWrap)
      out << s.residues.substr(i, kWrap) << '\n';
  }
}

std::string write_fasta(const std::vector<Sequence>& sequences) {
  std::ostringstream out;
  write_fasta(sequences, out);
  return out.str();
}

Sequence subsequence(const Sequence& seq, std::size_t start, std::size_t end) {
  if (start < 1 || end < start || end > seq.length())
    throw OutOfRangeError("subsequence [" + std::to_string(start) + ", " +
                          std::to_string(end) + "] outside '" + seq.id +
                          "' of length " + std::to_string(seq.length()));
  Sequence out;
  out.id = seq.id + ":" + std::to_string(start) + "-" + std::to_string(end);
  out.description = seq.description;
  out.residues = seq.residues.substr(start - 1, end - start + 1);
  return out;
}

}  // namespace midpath
