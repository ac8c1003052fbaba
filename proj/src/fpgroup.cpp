#include "symgeo/fpgroup.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <map>
#include <numeric>
#include <sstream>

namespace symgeo {

std::string AbelianInvariants::str() const {
  std::ostringstream os;
  os << "Z^" << free_rank;
  for (Int t : torsion) os << " + Z/" << t;
  return os.str();
}

Presentation free_product(const Presentation& p, const Presentation& q) {
  Presentation r = p;
  int offset = p.ngens();
  for (const std::string& name : q.generator_names) r.add_generator(name);
  for (const Word& w : q.relators) r.add_relator(w.shifted(offset));
  return r;
}

Presentation direct_product_free_abelian(const Presentation& p, Int k) {
  if (k < 0) throw DomainError("free abelian rank must be non-negative");
  Presentation r = p;
  int old = p.ngens();
  std::vector<int> fresh;
  for (Int i = 0; i < k; ++i)
    fresh.push_back(r.add_generator("t" + std::to_string(i + 1)));
  for (std::size_t i = 0; i < fresh.size(); ++i) {
    for (int j = 0; j < old; ++j)
      r.add_relator(commutator(Word({fresh[i] + 1}), Word({j + 1})));
    for (std::size_t j = 0; j < i; ++j)
      r.add_relator(commutator(Word({fresh[i] + 1}), Word({fresh[j] + 1})));
  }
  return r;
}

Presentation direct_product_with_surface_group(const Presentation& p, Int g) {
  if (g < 0) throw DomainError("surface genus must be non-negative");
  if (g == 0) return p;
  Presentation r = p;
  int old = p.ngens();
  std::vector<int> fresh;
  for (Int i = 0; i < g; ++i) {
    fresh.push_back(r.add_generator("u" + std::to_string(i + 1)));
    fresh.push_back(r.add_generator("v" + std::to_string(i + 1)));
  }
  Word surface;
  for (Int i = 0; i < g; ++i)
    surface = concat(surface, commutator(Word({fresh[2 * i] + 1}),
                                         Word({fresh[2 * i + 1] + 1})));
  r.add_relator(surface);
  for (int f : fresh)
    for (int j = 0; j < old; ++j)
      r.add_relator(commutator(Word({f + 1}), Word({j + 1})));
  return r;
}

Presentation quotient_by_words(const Presentation& p,
                               const std::vector<Word>& killed) {
  Presentation r = p;
  for (const Word& w : killed) {
    p.require_word_valid(w);
    r.add_relator(w);
  }
  return r;
}

Presentation van_kampen_sum(const Presentation& pc1, const Presentation& pc2,
                            const GluingMap& glue) {
  for (const auto& [u, v] : glue.identifications) {
    pc1.require_word_valid(u);
    pc2.require_word_valid(v);
  }
  pc1.require_word_valid(glue.meridian1);
  pc2.require_word_valid(glue.meridian2);

  Presentation r = free_product(pc1, pc2);
  int offset = pc1.ngens();
  for (const auto& [u, v] : glue.identifications)
    r.add_relator(concat(u, v.shifted(offset).inverse()));
  r.add_relator(concat(glue.meridian1, glue.meridian2.shifted(offset)));
  return r;
}

namespace {

// Removes generator `gen` (0-based); every relator must already be free of
// it. Letters above shift down.
void drop_generator(Presentation& p, int gen) {
  p.generator_names.erase(p.generator_names.begin() + gen);
  for (Word& w : p.relators)
    for (int& l : w.letters) {
      int idx = std::abs(l) - 1;
      if (idx > gen) l = l > 0 ? l - 1 : l + 1;
    }
}

void erase_letter_everywhere(Presentation& p, int gen) {
  for (Word& w : p.relators) {
    std::vector<int> kept;
    kept.reserve(w.letters.size());
    for (int l : w.letters)
      if (std::abs(l) - 1 != gen) kept.push_back(l);
    w = cyclic_reduce(Word(std::move(kept)));
  }
}

void drop_empty_relators(Presentation& p) {
  p.relators.erase(std::remove_if(p.relators.begin(), p.relators.end(),
                                  [](const Word& w) { return w.empty(); }),
                   p.relators.end());
}

}  // namespace

Presentation tietze_simplify(const Presentation& p, int budget) {
  Presentation cur = p;
  for (Word& w : cur.relators) w = cyclic_reduce(w);
  drop_empty_relators(cur);

  for (int pass = 0; pass < budget; ++pass) {
    bool changed = false;

    // Length-1 relators: the generator is trivial everywhere.
    for (std::size_t i = 0; i < cur.relators.size();) {
      if (cur.relators[i].size() == 1) {
        int gen = std::abs(cur.relators[i].letters[0]) - 1;
        cur.relators.erase(cur.relators.begin() + i);
        erase_letter_everywhere(cur, gen);
        drop_generator(cur, gen);
        drop_empty_relators(cur);
        changed = true;
        i = 0;
      } else {
        ++i;
      }
    }

    // A generator occurring exactly once in exactly one relator can be
    // solved for and eliminated together with that relator.
    for (int gen = 0; gen < cur.ngens();) {
      int occurrences = 0;
      int host = -1;
      for (std::size_t i = 0; i < cur.relators.size(); ++i)
        for (int l : cur.relators[i].letters)
          if (std::abs(l) - 1 == gen) {
            ++occurrences;
            host = static_cast<int>(i);
          }
      if (occurrences == 1) {
        cur.relators.erase(cur.relators.begin() + host);
        drop_generator(cur, gen);
        changed = true;
        gen = 0;
      } else {
        ++gen;
      }
    }

    if (!changed) break;
  }
  return cur;
}

IntMatrix exponent_matrix(const Presentation& p) {
  IntMatrix m(p.nrelators(), p.ngens());
  for (int i = 0; i < p.nrelators(); ++i)
    for (int j = 0; j < p.ngens(); ++j)
      m.at(i, j) = p.relators[i].exponent_sum(j + 1);
  return m;
}

AbelianInvariants abelianization(const Presentation& p) {
  SnfResult snf = smith_normal_form(exponent_matrix(p));
  AbelianInvariants inv;
  std::vector<BigInt> diag = snf.diagonal();
  int nonzero = 0;
  for (const BigInt& d : diag) {
    if (d == 0) continue;
    ++nonzero;
    if (d >= 2) {
      if (d > BigInt(std::numeric_limits<Int>::max()))
        throw OverflowError("torsion coefficient exceeds 64 bits");
      inv.torsion.push_back(static_cast<Int>(d));
    }
  }
  inv.free_rank = p.ngens() - nonzero;
  std::sort(inv.torsion.begin(), inv.torsion.end());
  return inv;
}

namespace {

// Symmetric group S_n as composition tables over element indices.
struct SymTable {
  int n = 0;
  int order = 0;
  std::vector<int> mul;  // mul[a * order + b] = a o b
  std::vector<int> inv;

  explicit SymTable(int n_in) : n(n_in) {
    std::vector<std::array<int, 5>> perms;
    std::array<int, 5> p{0, 1, 2, 3, 4};
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    do {
      std::array<int, 5> q{0, 1, 2, 3, 4};
      for (int i = 0; i < n; ++i) q[i] = idx[i];
      perms.push_back(q);
    } while (std::next_permutation(idx.begin(), idx.end()));
    (void)p;
    order = static_cast<int>(perms.size());

    std::map<std::array<int, 5>, int> lookup;
    for (int i = 0; i < order; ++i) lookup[perms[i]] = i;

    mul.assign(std::size_t(order) * order, 0);
    inv.assign(order, 0);
    for (int a = 0; a < order; ++a) {
      for (int b = 0; b < order; ++b) {
        std::array<int, 5> c{0, 1, 2, 3, 4};
        for (int i = 0; i < n; ++i) c[i] = perms[a][perms[b][i]];
        mul[std::size_t(a) * order + b] = lookup[c];
      }
      std::array<int, 5> c{0, 1, 2, 3, 4};
      for (int i = 0; i < n; ++i) c[perms[a][i]] = i;
      inv[a] = lookup[c];
    }
  }

  int compose(int a, int b) const { return mul[std::size_t(a) * order + b]; }
};

const SymTable& sym_table(int n) {
  static const SymTable s2(2), s3(3), s4(4), s5(5);
  switch (n) {
    case 2: return s2;
    case 3: return s3;
    case 4: return s4;
    default: return s5;
  }
}

Int ipow(Int base, int exp) {
  Int r = 1;
  for (int i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

}  // namespace

double hom_count_work_estimate(const Presentation& p, int n) {
  double order = 1;
  for (int i = 2; i <= n; ++i) order *= i;
  double work = 1;
  Int len = std::max<Int>(p.total_relator_length(), 1);
  for (int i = 0; i < p.ngens(); ++i) work *= order;
  return work * static_cast<double>(len);
}

Int count_homs_to_sym(const Presentation& p, int n) {
  if (n < 2 || n > 5)
    throw BoundError("hom counting supports S_n for 2 <= n <= 5, got n = " +
                     std::to_string(n));
  if (p.ngens() > 6)
    throw BoundError("hom counting bounded at 6 generators, presentation has " +
                     std::to_string(p.ngens()));

  const SymTable& sym = sym_table(n);
  const int order = sym.order;
  const int ngens = p.ngens();

  // Relators become checkable once every generator they mention is assigned.
  std::vector<std::vector<const Word*>> ready(ngens + 1);
  for (const Word& w : p.relators) {
    int m = w.max_index();
    ready[m].push_back(&w);
  }
  // A relator over no generators is the identity and was dropped on reduce.

  // Depth beyond which no relator mentions any further generator: the
  // remaining assignments are free.
  int last_constrained = 0;
  for (int d = 1; d <= ngens; ++d)
    if (!ready[d].empty()) last_constrained = d;

  std::vector<int> assign(ngens, 0);
  Int count = 0;

  auto word_is_identity = [&](const Word& w) {
    int acc = 0;  // identity index: identity permutation sorts first
    for (int l : w.letters) {
      int g = assign[std::abs(l) - 1];
      if (l < 0) g = sym.inv[g];
      acc = sym.compose(acc, g);
    }
    return acc == 0;
  };

  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == last_constrained) {
      count = checked_add(count, ipow(order, ngens - depth));
      return;
    }
    for (int g = 0; g < order; ++g) {
      assign[depth] = g;
      bool ok = true;
      for (const Word* w : ready[depth + 1])
        if (!word_is_identity(*w)) {
          ok = false;
          break;
        }
      if (ok) self(self, depth + 1);
    }
  };
  rec(rec, 0);
  return count;
}

bool syntactically_equal(const Presentation& a, const Presentation& b) {
  if (a.ngens() != b.ngens()) return false;
  auto normal = [](const Presentation& p) {
    std::vector<Word> ws;
    for (const Word& w : p.relators) {
      Word n = cyclic_normal_form(w);
      if (!n.empty()) ws.push_back(n);
    }
    std::sort(ws.begin(), ws.end(),
              [](const Word& x, const Word& y) { return x.letters < y.letters; });
    return ws;
  };
  return normal(a) == normal(b);
}

OracleComparison compare_by_oracles(const Presentation& a,
                                    const Presentation& b, double work_limit) {
  OracleComparison out;
  if (abelianization(a) != abelianization(b)) {
    out.match = false;
    out.first_failure = "abelianization";
    return out;
  }
  for (int n = 2; n <= 5; ++n) {
    if (a.ngens() > 6 || b.ngens() > 6) continue;
    if (hom_count_work_estimate(a, n) > work_limit ||
        hom_count_work_estimate(b, n) > work_limit)
      continue;
    out.hom_degrees_checked.push_back(n);
    if (count_homs_to_sym(a, n) != count_homs_to_sym(b, n)) {
      out.match = false;
      out.first_failure = "hom-count S" + std::to_string(n);
      return out;
    }
  }
  return out;
}

}  // namespace symgeo
