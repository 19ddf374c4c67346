#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace midpath {

// Base class for all data and usage errors raised by the library.  The CLI
// maps these to exit code 1; anything else is a bug.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class EmptyFileError : public Error {
 public:
  EmptyFileError() : Error("input contains no sequence records") {}
};

class MissingHeaderError : public Error {
 public:
  MissingHeaderError() : Error("residue data before the first '>' header") {}
};

class EmptyRecordError : public Error {
 public:
  explicit EmptyRecordError(const std::string& id)
      : Error("record '" + id + "' has no residues") {}
};

class IllegalResidueError : public Error {
 public:
  IllegalResidueError(const std::string& id, char residue, std::size_t position)
      : Error("record '" + id + "': illegal residue '" + std::string(1, residue) +
              "' at position " + std::to_string(position)),
        record_id(id), residue(residue), position(position) {}

  std::string record_id;
  char residue;
  std::size_t position;  // 1-based within the record's residues
};

class OutOfRangeError : public Error {
 public:
  explicit OutOfRangeError(const std::string& msg) : Error(msg) {}
};

class MalformedMatrixError : public Error {
 public:
  explicit MalformedMatrixError(const std::string& msg)
      : Error("malformed substitution matrix: " + msg) {}
};

class MissingResidueError : public Error {
 public:
  explicit MissingResidueError(char residue)
      : Error("substitution matrix lacks alphabet residue '" +
              std::string(1, residue) + "'"),
        residue(residue) {}

  char residue;
};

class InvalidParamsError : public Error {
 public:
  explicit InvalidParamsError(const std::string& msg) : Error(msg) {}
};

class WordTooLongError : public Error {
 public:
  WordTooLongError(std::size_t word, std::size_t seq_len)
      : Error("word length " + std::to_string(word) +
              " exceeds sequence length " + std::to_string(seq_len)) {}
};

class InvalidCutoffsError : public Error {
 public:
  InvalidCutoffsError(long long s1, long long s2)
      : Error("threshold s1 (" + std::to_string(s1) +
              ") must be below s2 (" + std::to_string(s2) + ")") {}
};

class DimensionMismatchError : public Error {
 public:
  explicit DimensionMismatchError(const std::string& msg) : Error(msg) {}
};

}  // namespace midpath
