#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symgeo/presentation.hpp"
#include "symgeo/snf.hpp"

namespace symgeo {

// H1 in Smith normal form: free rank plus a divisibility chain of torsion
// orders d1 | d2 | ... with every d >= 2.
struct AbelianInvariants {
  Int free_rank = 0;
  std::vector<Int> torsion;

  std::string str() const;
  friend bool operator==(const AbelianInvariants&,
                         const AbelianInvariants&) = default;
};

// Disjoint union of generators, union of relators. Colliding names on the
// right side are renamed; indices of q's generators shift by p.ngens().
Presentation free_product(const Presentation& p, const Presentation& q);

// Adjoins k new central generators (direct product with Z^k).
Presentation direct_product_free_abelian(const Presentation& p, Int k);

// Direct product with the genus-g surface group: adjoins 2g generators
// u1,v1,...,ug,vg, the surface relator, and commuting relators with every
// old generator. g = 0 returns p unchanged.
Presentation direct_product_with_surface_group(const Presentation& p, Int g);

// Quotient by the normal closure of the given words.
Presentation quotient_by_words(const Presentation& p,
                               const std::vector<Word>& killed);

// Gluing data for a fiber sum: each pair identifies a push-off word on side 1
// with its image word on side 2; the meridians are identified by the relator
// meridian1 * meridian2.
struct GluingMap {
  std::vector<std::pair<Word, Word>> identifications;
  Word meridian1;
  Word meridian2;
};

// Seifert-van Kampen presentation of a fiber sum: free product of the two
// complement groups, one relator u * v^-1 per identification, plus the
// meridian relator.
Presentation van_kampen_sum(const Presentation& pc1, const Presentation& pc2,
                            const GluingMap& glue);

// Bounded simplification: free/cyclic reduction, dropping empty relators,
// substituting length-1 relators (the generator is trivial), and eliminating
// a generator that occurs exactly once in exactly one relator. Never grows
// the total relator length. `budget` bounds the number of passes.
Presentation tietze_simplify(const Presentation& p, int budget = 64);

// Exponent-sum matrix of p (rows = relators, columns = generators).
IntMatrix exponent_matrix(const Presentation& p);

AbelianInvariants abelianization(const Presentation& p);

// Exact number of homomorphisms into the symmetric group S_n, by bounded
// enumeration of generator assignments. Requires ngens <= 6 and 2 <= n <= 5.
Int count_homs_to_sym(const Presentation& p, int n);

// Estimated enumeration work for count_homs_to_sym; used to skip infeasible
// hom counts deterministically.
double hom_count_work_estimate(const Presentation& p, int n);

// True when the two presentations are identical up to generator naming:
// same generator count and the same multiset of relators in cyclic normal
// form.
bool syntactically_equal(const Presentation& a, const Presentation& b);

// Group-identification oracle: abelianization plus hom counts into S_2..S_5.
// Counts whose work estimate exceeds `work_limit` are skipped on both sides.
struct OracleComparison {
  bool match = true;
  // Name of the first failing oracle ("abelianization", "hom-count S3", ...)
  // when match is false.
  std::string first_failure;
  // S_n indices actually compared.
  std::vector<int> hom_degrees_checked;
};

OracleComparison compare_by_oracles(const Presentation& a,
                                    const Presentation& b,
                                    double work_limit = 5e9);

}  // namespace symgeo
