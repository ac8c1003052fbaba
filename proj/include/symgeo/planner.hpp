#pragma once

#include <string>
#include <vector>

#include "symgeo/calculus.hpp"

namespace symgeo {

// A 6-dimensional realization target: Chern triple plus fundamental group.
struct Target6 {
  Int c13 = 0;
  Int c1c2 = 0;
  Int c3 = 0;
  Presentation group;
};

// Throws AdmissibilityError naming the first violated congruence
// (c13 mod 2, c3 mod 2, c1c2 mod 24).
void require_admissible(Int c13, Int c1c2, Int c3);

struct BlowUpBudget {
  Int p = 0;    // point blow-ups           (c13 -8, c3 +2)
  Int r_e = 0;  // exceptional lines, a = 1 (c13 -4, c3 +2)
  Int z = 0;    // genus-2 surfaces         (c13 +6, c3 -2)

  Int total() const { return p + r_e + z; }
  friend bool operator==(const BlowUpBudget&, const BlowUpBudget&) = default;
};

// Smallest-total budget realizing the even delta pair, found by scanning
// totals upward; at a fixed total the solution of the linear system is
// unique, so the lexicographic (p, r_e, z) tie-break never fires.
BlowUpBudget solve_budget(Int delta_c13, Int delta_c3);

struct GeographyPoint {
  Int c1sq = 0;   // of the constructed manifold (c2/sigma coordinates)
  Int chi_h = 0;
  // The alternative printed coordinatization, which shifts c1sq by 4(g+r)
  // instead of 8(g+r); equal to c1sq when g = r = 0.
  Int c1sq_printed = 0;
  bool spin = false;
  // Witness: (e, sigma) for the nonspin family, (n, s) for the spin family.
  Int e = 0, sigma = 0;
  Int n = 0, s = 0;
};

// Every point of the chosen family with chi_h in [chi_lo, chi_hi], each with
// its witness parameters.
std::vector<GeographyPoint> enumerate_region_4d(Int chi_lo, Int chi_hi, Int g,
                                                Int r, bool spin);

// Emits a recipe whose evaluation reproduces (c13, c1c2, c3) exactly and
// whose pi1 presentation is consistent with the target group. Throws
// AdmissibilityError or SearchExhaustedError (with the scanned bounds).
Recipe realize(const Target6& target, const Registry& registry);

// 4-dimensional realization: geography or spin block, fiber-summed with the
// group-imposing block when the presentation is non-empty. The requested
// point is interpreted in the constructed manifold's own (c1^2, chi_h)
// coordinates, so the emitted recipe round-trips exactly.
Recipe realize_4d(Int c1sq, Int chi_h, const Presentation& group, bool spin);

}  // namespace symgeo
