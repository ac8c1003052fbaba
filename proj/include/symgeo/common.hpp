#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace symgeo {

using Int = std::int64_t;

// Error hierarchy. Each subclass maps to a distinct CLI exit code.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class OverflowError : public Error {
 public:
  explicit OverflowError(const std::string& what) : Error(what) {}
};

// Invalid argument for a partial operation (undefined chi_h, bad genus, ...).
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(what) {}
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what, std::size_t position = 0)
      : Error(what), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class RegistryError : public Error {
 public:
  explicit RegistryError(const std::string& what, int line = 0)
      : Error(what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

class UnknownBlockError : public Error {
 public:
  explicit UnknownBlockError(const std::string& what) : Error(what) {}
};

// Recipe evaluation failure (dimension discipline, missing locus, ...).
class RecipeError : public Error {
 public:
  explicit RecipeError(const std::string& what, int node = -1)
      : Error(what), node_(node) {}
  int node() const { return node_; }

 private:
  int node_;
};

// Target violates a required congruence; message names the congruence.
class AdmissibilityError : public Error {
 public:
  explicit AdmissibilityError(const std::string& what) : Error(what) {}
};

// Bounded search failed; message reports the bounds that were scanned.
class SearchExhaustedError : public Error {
 public:
  explicit SearchExhaustedError(const std::string& what) : Error(what) {}
};

// Enumeration bound exceeded (hom counting).
class BoundError : public Error {
 public:
  explicit BoundError(const std::string& what) : Error(what) {}
};

Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);
Int checked_neg(Int a);

}  // namespace symgeo
