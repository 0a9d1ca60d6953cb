#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace conatus {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Formula/scenario text could not be parsed. Positions are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, std::string found, std::vector<std::string> expected);

  std::size_t position() const { return position_; }
  const std::string& found() const { return found_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t position_;
  std::string found_;
  std::vector<std::string> expected_;
};

/// An evaluation touched an atom that is not part of the circumstance universe.
class UnknownAtomError : public Error {
 public:
  explicit UnknownAtomError(const std::string& atom)
      : Error("unknown atom '" + atom + "'"), atom_(atom) {}

  const std::string& atom() const { return atom_; }

 private:
  std::string atom_;
};

/// An entailment query would enumerate more atoms than the configured cap allows.
class CapExceededError : public Error {
 public:
  CapExceededError(std::size_t atom_count, std::size_t cap)
      : Error("enumeration over " + std::to_string(atom_count) +
              " atoms exceeds cap " + std::to_string(cap)),
        atom_count_(atom_count),
        cap_(cap) {}

  std::size_t atom_count() const { return atom_count_; }
  std::size_t cap() const { return cap_; }

 private:
  std::size_t atom_count_;
  std::size_t cap_;
};

/// Construction-time contract violation: bad identifier, bad threshold order,
/// unresolved scenario reference, and the like.
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what) : Error(what) {}
};

}  // namespace conatus
