#include "symgeo/charnum.hpp"

#include <ostream>

namespace symgeo {

Int CharNum4::c1_squared() const {
  return checked_add(checked_mul(2, e), checked_mul(3, sigma));
}

bool CharNum4::chi_h_defined() const {
  Int sum = checked_add(e, sigma);
  return sum % 4 == 0;
}

Int CharNum4::chi_h() const {
  Int sum = checked_add(e, sigma);
  if (sum % 4 != 0)
    throw DomainError("chi_h undefined: e + sigma = " + std::to_string(sum) +
                      " is not divisible by 4");
  return sum / 4;
}

FourFiber surface_product_fiber(SurfaceGenus a, SurfaceGenus b) {
  Int prod = checked_mul(a.euler(), b.euler());
  return FourFiber{checked_mul(2, prod), prod};
}

CharNum4 sum4(const CharNum4& x, const CharNum4& y, SurfaceGenus locus) {
  Int e = checked_add(checked_add(x.e, y.e),
                      checked_sub(checked_mul(4, locus.g), 4));
  Int sigma = checked_add(x.sigma, y.sigma);
  return CharNum4{e, sigma, x.spin && y.spin};
}

CharNum4 luttinger(const CharNum4& x) { return x; }

ChernTriple product_with_surface(const CharNum4& y, SurfaceGenus g) {
  Int chi3 = checked_mul(3, g.euler());  // 6 - 6g
  return ChernTriple{
      checked_mul(y.c1_squared(), chi3),
      checked_mul(checked_add(y.e, y.sigma), chi3),
      checked_mul(y.e, g.euler()),
  };
}

ChernTriple blow_up_point(const ChernTriple& x) {
  return ChernTriple{checked_sub(x.c13, 8), x.c1c2, checked_add(x.c3, 2)};
}

ChernTriple blow_up_surface(const ChernTriple& x, SurfaceGenus g,
                            Int normal_pairing) {
  Int gm1 = checked_sub(g.g, 1);
  Int c13 = checked_sub(checked_add(x.c13, checked_mul(6, gm1)),
                        checked_mul(2, normal_pairing));
  Int c3 = checked_sub(x.c3, checked_mul(2, gm1));
  return ChernTriple{c13, x.c1c2, c3};
}

ChernTriple sum6(const ChernTriple& x, const ChernTriple& y,
                 const FourFiber& fiber) {
  Int c13 = checked_sub(checked_add(x.c13, y.c13), checked_mul(6, fiber.c1sq));
  Int c1c2 = checked_sub(checked_add(x.c1c2, y.c1c2),
                         checked_mul(2, checked_add(fiber.c1sq, fiber.c2)));
  Int c3 = checked_sub(checked_add(x.c3, y.c3), checked_mul(2, fiber.c2));
  return ChernTriple{c13, c1c2, c3};
}

std::ostream& operator<<(std::ostream& os, const CharNum4& c) {
  os << "(e=" << c.e << ", sigma=" << c.sigma;
  if (c.spin) os << ", spin";
  return os << ")";
}

std::ostream& operator<<(std::ostream& os, const ChernTriple& c) {
  return os << "(" << c.c13 << ", " << c.c1c2 << ", " << c.c3 << ")";
}

}  // namespace symgeo
