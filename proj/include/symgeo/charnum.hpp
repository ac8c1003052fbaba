#pragma once

#include <iosfwd>

#include "symgeo/common.hpp"

namespace symgeo {

// Euler characteristic and signature of a 4-manifold, plus a claimed spin
// flag. The flag is propagated, never verified.
struct CharNum4 {
  Int e = 0;
  Int sigma = 0;
  bool spin = false;

  Int c1_squared() const;  // 2e + 3*sigma
  Int c2() const { return e; }
  bool chi_h_defined() const;
  // (e + sigma) / 4; throws DomainError when e + sigma != 0 mod 4.
  Int chi_h() const;

  friend bool operator==(const CharNum4&, const CharNum4&) = default;
};

// The three Chern numbers (c1^3, c1c2, c3) of a 6-manifold.
struct ChernTriple {
  Int c13 = 0;
  Int c1c2 = 0;
  Int c3 = 0;

  friend bool operator==(const ChernTriple&, const ChernTriple&) = default;
};

struct SurfaceGenus {
  Int g = 0;

  explicit SurfaceGenus(Int genus) : g(genus) {
    if (g < 0) throw DomainError("surface genus must be non-negative");
  }
  Int euler() const { return 2 - 2 * g; }
};

// Characteristic data of the 4-dimensional gluing locus of a 6-dimensional
// symplectic sum.
struct FourFiber {
  Int c1sq = 0;
  Int c2 = 0;

  friend bool operator==(const FourFiber&, const FourFiber&) = default;
};

// Fiber data of a product of surfaces Sigma_a x Sigma_b.
FourFiber surface_product_fiber(SurfaceGenus a, SurfaceGenus b);

// Gompf sum along a genus-g surface: (e1+e2+4g-4, s1+s2, spin1 && spin2).
CharNum4 sum4(const CharNum4& x, const CharNum4& y, SurfaceGenus locus);

// Luttinger surgery preserves (e, sigma, spin).
CharNum4 luttinger(const CharNum4& x);

// Chern numbers of Y x Sigma_g.
ChernTriple product_with_surface(const CharNum4& y, SurfaceGenus g);

// Blow-up at a point: (c13 - 8, c1c2, c3 + 2).
ChernTriple blow_up_point(const ChernTriple& x);

// Blow-up along a genus-g surface; normal_pairing carries <c1(N), [Sigma_g]>.
ChernTriple blow_up_surface(const ChernTriple& x, SurfaceGenus g,
                            Int normal_pairing);

// Symplectic sum of two 6-manifolds along a common 4-dimensional fiber.
ChernTriple sum6(const ChernTriple& x, const ChernTriple& y,
                 const FourFiber& fiber);

std::ostream& operator<<(std::ostream& os, const CharNum4& c);
std::ostream& operator<<(std::ostream& os, const ChernTriple& c);

}  // namespace symgeo
