#include "symgeo/word.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>

namespace symgeo {

Word::Word(std::vector<int> ls) : letters(std::move(ls)) {
  for (int l : letters)
    if (l == 0) throw DomainError("word letter must be non-zero");
}

int Word::max_index() const {
  int m = 0;
  for (int l : letters) m = std::max(m, std::abs(l));
  return m;
}

Word Word::inverse() const {
  Word r;
  r.letters.reserve(letters.size());
  for (auto it = letters.rbegin(); it != letters.rend(); ++it)
    r.letters.push_back(-*it);
  return r;
}

Word Word::shifted(int offset) const {
  Word r;
  r.letters.reserve(letters.size());
  for (int l : letters) r.letters.push_back(l > 0 ? l + offset : l - offset);
  return r;
}

Int Word::exponent_sum(int generator) const {
  Int s = 0;
  for (int l : letters) {
    if (l == generator) ++s;
    if (l == -generator) --s;
  }
  return s;
}

Word concat(const Word& a, const Word& b) {
  Word r = a;
  r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
  return free_reduce(r);
}

Word commutator(const Word& a, const Word& b) {
  return concat(concat(a, b), concat(a.inverse(), b.inverse()));
}

Word power(const Word& a, Int n) {
  Word base = n < 0 ? a.inverse() : a;
  Word r;
  for (Int i = 0; i < (n < 0 ? -n : n); ++i) r = concat(r, base);
  return r;
}

Word free_reduce(const Word& w) {
  Word r;
  r.letters.reserve(w.letters.size());
  for (int l : w.letters) {
    if (!r.letters.empty() && r.letters.back() == -l)
      r.letters.pop_back();
    else
      r.letters.push_back(l);
  }
  return r;
}

Word cyclic_reduce(const Word& w) {
  Word r = free_reduce(w);
  std::size_t lo = 0, hi = r.letters.size();
  while (hi - lo >= 2 && r.letters[lo] == -r.letters[hi - 1]) {
    ++lo;
    --hi;
  }
  return Word(std::vector<int>(r.letters.begin() + lo, r.letters.begin() + hi));
}

Word cyclic_normal_form(const Word& w) {
  Word c = cyclic_reduce(w);
  if (c.letters.size() <= 1) {
    if (c.letters.size() == 1 && c.letters[0] < 0) c.letters[0] = -c.letters[0];
    return c;
  }
  Word best = c;
  for (const Word& base : {c, c.inverse()}) {
    std::vector<int> rot = base.letters;
    for (std::size_t i = 0; i < rot.size(); ++i) {
      std::rotate(rot.begin(), rot.begin() + 1, rot.end());
      if (rot < best.letters) best.letters = rot;
    }
  }
  return best;
}

std::ostream& operator<<(std::ostream& os, const Word& w) {
  bool first = true;
  for (int l : w.letters) {
    if (!first) os << " ";
    os << "g" << std::abs(l);
    if (l < 0) os << "'";
    first = false;
  }
  return os;
}

}  // namespace symgeo
