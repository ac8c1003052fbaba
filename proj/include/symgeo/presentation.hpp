#pragma once

#include <string>
#include <vector>

#include "symgeo/word.hpp"

namespace symgeo {

// A finitely presented group: named generators plus relator words. Relators
// are stored freely and cyclically reduced; empty relators are dropped.
// Generator names are display metadata only; words address generators by
// index.
struct Presentation {
  std::vector<std::string> generator_names;
  std::vector<Word> relators;

  Presentation() = default;
  explicit Presentation(std::vector<std::string> names)
      : generator_names(std::move(names)) {}

  int ngens() const { return static_cast<int>(generator_names.size()); }
  int nrelators() const { return static_cast<int>(relators.size()); }

  // Reduces, validates and stores; silently drops words that reduce to the
  // identity.
  void add_relator(Word w);
  bool word_valid(const Word& w) const;
  void require_word_valid(const Word& w) const;

  // Index of a named generator, -1 if absent.
  int find_generator(const std::string& name) const;
  // Appends a generator, renaming on collision ("t" -> "t2" -> "t3" ...).
  // Returns the index of the new generator.
  int add_generator(const std::string& preferred_name);

  Int total_relator_length() const;

  friend bool operator==(const Presentation&, const Presentation&) = default;
};

// Text format: "<gen>,<gen>,... | <word>; <word>; ..." with words as
// space-separated generator names, trailing ' for inverse. The empty string
// is the trivial presentation; the "|" and relator list may be omitted.
Presentation parse_presentation(const std::string& text);
std::string print_presentation(const Presentation& p);

// Parses one word over p's generator names.
Word parse_word(const std::string& text, const Presentation& p);
std::string print_word(const Word& w, const Presentation& p);

}  // namespace symgeo
