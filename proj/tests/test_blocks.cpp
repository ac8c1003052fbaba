#include <doctest.h>

#include "symgeo/blocks.hpp"

using namespace symgeo;

TEST_CASE("default registry loads and satisfies block invariants") {
  const Registry& reg = default_registry();
  CHECK(reg.all().size() >= 25);
  for (const BlockDescriptor& b : reg.all()) {
    // Every registered block sits on an integral chi_h lattice point.
    CHECK(b.char4.chi_h_defined());
    CHECK(b.char4.c1_squared() == 2 * b.char4.e + 3 * b.char4.sigma);
    if (b.char4.spin) CHECK(b.char4.sigma % 16 == 0);
    for (const SubmanifoldData& s : b.submanifolds) {
      CHECK(static_cast<int>(s.fiber_generator_pushoffs.size()) ==
            pushoff_count(s.kind));
      const Presentation& comp = complement_presentation(b, s);
      CHECK(comp.word_valid(s.meridian));
      for (const Word& w : s.fiber_generator_pushoffs)
        CHECK(comp.word_valid(w));
    }
  }
}

TEST_CASE("registry lookups match the printed table") {
  const Registry& reg = default_registry();

  const BlockDescriptor& t2s2 = reg.lookup("T2xSigma2");
  CHECK(t2s2.char4 == CharNum4{0, 0, false});
  CHECK(t2s2.pi1.ngens() == 6);
  CHECK(t2s2.submanifolds.size() == 6);

  const BlockDescriptor& x35 = reg.lookup("X_3_5");
  CHECK(x35.char4.e == 10);
  CHECK(x35.char4.sigma == -2);
  CHECK(x35.char4.c1_squared() == 14);
  CHECK(x35.char4.chi_h() == 2);

  const BlockDescriptor& row19 = reg.lookup("E1_T4_E1");
  CHECK(row19.char4.e == 24);
  CHECK(row19.char4.sigma == -16);
  CHECK(row19.char4.c1_squared() == 0);

  CHECK_THROWS_AS(reg.lookup("no_such_block"), UnknownBlockError);
}

TEST_CASE("registry loader reports line numbers") {
  CHECK_THROWS_AS(load_registry_text("[block]\nid = a\ne = 0\nsigma = 0\n"
                                     "[block]\nid = a\ne = 0\nsigma = 0\n"),
                  RegistryError);
  try {
    load_registry_text("[block]\nid = x\ne = 1\nbogus = 3\n");
    FAIL("expected RegistryError");
  } catch (const RegistryError& e) {
    CHECK(e.line() == 4);
  }
  try {
    load_registry_text("[block]\nid = s\ne = 4\nsigma = -4\nspin = true\n");
    FAIL("expected RegistryError");
  } catch (const RegistryError& e) {
    CHECK(e.line() == 1);  // spin/sigma mismatch reported at the block
  }
  // Push-off arity is enforced per kind.
  CHECK_THROWS_AS(
      load_registry_text("[block]\nid = x\ne = 0\nsigma = 0\npi1 = a\n"
                         "[sub]\nkind = torus\nmeridian =\npushoffs = a\n"),
      RegistryError);
  // Words must parse over the block's generators.
  CHECK_THROWS_AS(
      load_registry_text("[block]\nid = x\ne = 0\nsigma = 0\npi1 = a\n"
                         "[sub]\nkind = torus\nmeridian = q\npushoffs = a ; a\n"),
      RegistryError);
}

TEST_CASE("bk block arithmetic") {
  Presentation z = parse_presentation("a");
  BlockDescriptor b = bk_block(1, 0, z);
  CHECK(b.char4 == CharNum4{4, 0, false});
  CHECK(b.pi1 == z);
  CHECK(b.submanifolds.size() == 1);
  CHECK(b.submanifolds[0].complement_pi1_equals_ambient);

  CHECK(bk_block(0, 0, Presentation()).char4.e == 0);
  CHECK(bk_block(2, 1, parse_presentation("a,b | a b a' b'")).char4.e == 12);
  CHECK_THROWS_AS(bk_block(2, 0, z), DomainError);
}

TEST_CASE("bk raw presentation collapses back to the target") {
  Presentation target = parse_presentation("a,b | a b a' b'");
  Presentation raw = bk_raw_presentation(target);
  // n = 1 + 4, g = 2: 2*g*n + 2 generators.
  CHECK(raw.ngens() == 2 * 2 * 5 + 2);

  BkMachineryWords words = bk_machinery_words(target, raw);
  Presentation q = quotient_by_words(raw, words.kill_s_t);
  q = quotient_by_words(q, words.kill_xy);
  q = quotient_by_words(q, words.rewritten_relators);
  CHECK(abelianization(q) == abelianization(target));
}

TEST_CASE("telescoping blocks") {
  CHECK(telescoping(TelescopingId::A).char4 == CharNum4{5, -1, false});
  CHECK(telescoping(TelescopingId::B, 0).char4 == CharNum4{6, -2, false});
  CHECK(telescoping(TelescopingId::B, 3).char4 == CharNum4{18, -2, false});
  CHECK(telescoping(TelescopingId::C).char4 == CharNum4{7, -3, false});
  CHECK(telescoping(TelescopingId::D).char4 == CharNum4{8, -4, false});
  CHECK(telescoping(TelescopingId::F).char4 == CharNum4{10, -6, false});

  BlockDescriptor a = telescoping(TelescopingId::A);
  CHECK(abelianization(a.pi1).free_rank == 2);
  CHECK(a.submanifolds.size() == 2);
}

TEST_CASE("geography blocks enforce the admissible region") {
  BlockDescriptor z11 = geography_block(9, -1, GeographyVariant::Z11);
  CHECK(z11.char4.c1_squared() == 15);
  CHECK(z11.char4.chi_h() == 2);
  CHECK(z11.pi1.ngens() == 0);
  CHECK(z11.claims.count(Claim::minimal) == 1);
  CHECK(z11.claims.count(Claim::odd_form) == 1);

  BlockDescriptor z12 = geography_block(12, -4, GeographyVariant::Z12);
  CHECK(z12.char4.c1_squared() == 12);
  CHECK(z12.char4.chi_h() == 2);
  CHECK(z12.submanifolds[1].kind == SubmanifoldKind::genus2_surface);

  CHECK_THROWS_WITH_AS(geography_block(8, -1, GeographyVariant::Z11),
                       doctest::Contains("divisible by 4"), DomainError);
  CHECK_THROWS_WITH_AS(geography_block(8, 0, GeographyVariant::Z11),
                       doctest::Contains("sigma"), DomainError);
  CHECK_THROWS_WITH_AS(geography_block(5, -1, GeographyVariant::Z11),
                       doctest::Contains("< 8"), DomainError);
  CHECK_THROWS_WITH_AS(geography_block(1, -1, GeographyVariant::Z11),
                       doctest::Contains("2e+3sigma"), DomainError);
}

TEST_CASE("geography region rejection over a lattice window") {
  for (Int e = -2; e <= 20; ++e)
    for (Int sigma = -20; sigma <= 2; ++sigma) {
      bool admissible = 2 * e + 3 * sigma >= 0 &&
                        ((e + sigma) % 4 + 4) % 4 == 0 && e + sigma >= 8 &&
                        sigma <= -1;
      bool ok = true;
      try {
        geography_block(e, sigma, GeographyVariant::Z11);
      } catch (const DomainError&) {
        ok = false;
      }
      CHECK(ok == admissible);
    }
}

TEST_CASE("spin blocks") {
  BlockDescriptor s11 = spin_block(1, 1);
  CHECK(s11.char4 == CharNum4{24, -16, true});
  CHECK(s11.char4.c1_squared() == 0);
  CHECK(s11.char4.chi_h() == 2);

  CHECK(spin_block(2, 1).char4 == CharNum4{28, -16, true});
  CHECK(spin_block(1, 2).char4 == CharNum4{48, -32, true});

  for (Int n = 1; n <= 5; ++n)
    for (Int s = 1; s <= 4; ++s) {
      BlockDescriptor b = spin_block(n, s);
      CHECK(b.char4.sigma % 16 == 0);
      CHECK(b.char4.sigma == -16 * s);
      CHECK(b.char4.c1_squared() == 8 * n - 8);
      CHECK(b.char4.chi_h() == 2 * s + n - 1);
    }
  CHECK_THROWS_AS(spin_block(0, 1), DomainError);
  CHECK_THROWS_AS(spin_block(1, 0), DomainError);
}

TEST_CASE("group-imposing sums land on the known minimal points") {
  // Summing the group-imposing block onto the (14, 2, -2) block gives
  // c2 = 10 + 4(g+r), sigma = -2 and c1^2 = 14 + 8(g+r).
  const CharNum4 base = default_registry().lookup("X_3_5").char4;
  for (Int g = 0; g <= 4; ++g)
    for (Int r = 0; r <= 4; ++r) {
      if (g == 0 && r > 0) continue;
      Presentation target;
      for (Int i = 0; i < g; ++i)
        target.add_generator("x" + std::to_string(i + 1));
      for (Int i = 0; i < r; ++i)
        target.add_relator(power(Word({static_cast<int>(i % g) + 1}), 2));
      CharNum4 got =
          sum4(bk_block(g, r, target).char4, base, SurfaceGenus(1));
      CHECK(got.e == 10 + 4 * (g + r));
      CHECK(got.sigma == -2);
      CHECK(got.c1_squared() == 14 + 8 * (g + r));
      CHECK(got.chi_h() == 2 + (g + r));
    }
}

TEST_CASE("parametric product and mapping torus blocks") {
  BlockDescriptor t2s3 = t2_x_sigma_block(3);
  CHECK(t2s3.char4 == CharNum4{0, 0, false});
  CHECK(abelianization(t2s3.pi1).free_rank == 8);
  CHECK(t2s3.submanifolds.size() == 1);

  BlockDescriptor t2s2 = t2_x_sigma_block(2);
  CHECK(t2s2.submanifolds.size() == 2);

  BlockDescriptor mt = mapping_torus_block(2);
  CHECK(mt.char4 == CharNum4{0, 0, false});
  CHECK(mt.pi1.ngens() == 6);
  // H1 of the mapping torus: y_i survive free, x_i are killed by the
  // monodromy relations... in homology t y t^-1 = y x forces x = 0.
  AbelianInvariants inv = abelianization(mt.pi1);
  CHECK(inv.free_rank == 4);  // y1, y2, t, s
  CHECK(inv.torsion.empty());
}
