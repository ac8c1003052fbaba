#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "symgeo/common.hpp"

namespace symgeo {

// A word in a free group. Letters are signed 1-based generator indices:
// +i is generator i, -i its inverse. Letters are never zero.
struct Word {
  std::vector<int> letters;

  Word() = default;
  explicit Word(std::vector<int> ls);

  bool empty() const { return letters.empty(); }
  std::size_t size() const { return letters.size(); }
  // Largest generator index referenced, 0 for the empty word.
  int max_index() const;

  Word inverse() const;
  // Offsets every generator index by `offset` (used for disjoint unions).
  Word shifted(int offset) const;
  Int exponent_sum(int generator) const;

  friend bool operator==(const Word&, const Word&) = default;
};

Word concat(const Word& a, const Word& b);
// Commutator [a, b] = a b a^-1 b^-1, freely reduced.
Word commutator(const Word& a, const Word& b);
Word power(const Word& a, Int n);

// Cancels adjacent g g^-1 pairs.
Word free_reduce(const Word& w);
// Free reduction plus cancellation across the ends of the cyclic word.
Word cyclic_reduce(const Word& w);

// Canonical representative of the cyclic word class {rotations of w and of
// w^-1}, lexicographically least. Used for syntactic relator comparison.
Word cyclic_normal_form(const Word& w);

std::ostream& operator<<(std::ostream& os, const Word& w);

}  // namespace symgeo
