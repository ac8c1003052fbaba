// Acceptance suite: one pass/fail line per criterion, exit 1 on any failure.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "oracles.hpp"
#include "symgeo/planner.hpp"

using namespace symgeo;

namespace {

struct Checker {
  int failures = 0;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      ++failures;
      if (failures <= 5) detail << "    failed: " << what << "\n";
    }
  }
};

const Registry& reg() { return default_registry(); }

long long run_ms(const std::function<void()>& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

Presentation surface_presentation(Int g) {
  Presentation p;
  for (Int i = 0; i < g; ++i) {
    p.add_generator("a" + std::to_string(i + 1));
    p.add_generator("b" + std::to_string(i + 1));
  }
  Word w;
  for (Int i = 0; i < g; ++i)
    w = concat(w, commutator(Word({static_cast<int>(2 * i) + 1}),
                             Word({static_cast<int>(2 * i) + 2})));
  p.add_relator(w);
  return p;
}

Presentation free_presentation(Int n) {
  Presentation p;
  for (Int i = 0; i < n; ++i) p.add_generator("f" + std::to_string(i + 1));
  return p;
}

// --- criterion 1: Table reproduction ----------------------------------------

bool criterion_table(Checker& c) {
  struct Row {
    int bminus;
    const char* left;
    const char* right;
    Int genus;
    Int c1sq, chi, sigma;
  };
  // Rows whose construction is a printed sum; 12/13 use telescoping blocks.
  const std::vector<Row> rows = {
      {4, "X_1_2", "T2xSigma2", 2, 15, 2, -1},
      {6, "X_1_2", "T4_2", 2, 13, 2, -3},
      {8, "X_1_5", "T4_1", 2, 11, 2, -5},
      {9, "X_1_5", "T4_2", 2, 10, 2, -6},
      {10, "X_1_6", "T4_2", 2, 9, 2, -7},
      {11, "E1", "S_ABBKP", 1, 8, 2, -8},
      {14, "CP2_12", "T2xSigma2", 2, 5, 2, -11},
      {15, "CP2_13", "T2xSigma2", 2, 4, 2, -12},
      {16, "CP2_12", "T4_2", 2, 3, 2, -13},
      {17, "CP2_13", "T4_2", 2, 2, 2, -14},
  };
  for (const Row& row : rows) {
    CharNum4 got = sum4(reg().lookup(row.left).char4,
                        reg().lookup(row.right).char4, SurfaceGenus(row.genus));
    c.require(got.c1_squared() == row.c1sq && got.chi_h() == row.chi &&
                  got.sigma == row.sigma,
              "row b-=" + std::to_string(row.bminus));
    const BlockDescriptor& reg_row =
        reg().lookup("X_3_" + std::to_string(row.bminus));
    c.require(reg_row.char4.e == got.e && reg_row.char4.sigma == got.sigma,
              "registry entry for row b-=" + std::to_string(row.bminus));
  }

  // Rows 12 and 13: E(1) summed with the telescoping blocks A and B_0.
  CharNum4 r12 = sum4(reg().lookup("E1").char4,
                      telescoping(TelescopingId::A).char4, SurfaceGenus(1));
  c.require(r12.c1_squared() == 7 && r12.chi_h() == 2 && r12.sigma == -9,
            "row b-=12");
  CharNum4 r13 = sum4(reg().lookup("E1").char4,
                      telescoping(TelescopingId::B, 0).char4, SurfaceGenus(1));
  c.require(r13.c1_squared() == 6 && r13.chi_h() == 2 && r13.sigma == -10,
            "row b-=13");

  // Row 19: the double torus sum E(1) # T^4 # E(1).
  CharNum4 inner = sum4(reg().lookup("E1").char4, reg().lookup("T4").char4,
                        SurfaceGenus(1));
  CharNum4 r19 = sum4(inner, reg().lookup("E1").char4, SurfaceGenus(1));
  c.require(r19.c1_squared() == 0 && r19.chi_h() == 2 && r19.sigma == -16,
            "row b-=19");
  c.require(reg().lookup("E1_T4_E1").char4.e == r19.e, "row 19 registry entry");
  return c.failures == 0;
}

// --- criterion 2: closed forms vs pipelines ---------------------------------

bool criterion_closed_forms(Checker& c) {
  std::mt19937 rng(101);
  std::uniform_int_distribution<Int> md(2, 9), nd(1, 6), sd(1, 4);
  Presentation group = parse_presentation("a,b | a a; b b b");
  const Int g = group.ngens(), r = group.nrelators();

  for (int trial = 0; trial < 500; ++trial) {
    Int m1 = md(rng), m2 = md(rng);
    Int cp1 = std::uniform_int_distribution<Int>(0, 8 * m1 - 1)(rng);
    Int cp2 = std::uniform_int_distribution<Int>(0, 8 * m2 - 1)(rng);
    Int e1 = 12 * m1 - cp1, s1 = cp1 - 8 * m1;
    Int e2 = 12 * m2 - cp2, s2 = cp2 - 8 * m2;
    Int n1 = nd(rng), sp1 = sd(rng), n2 = nd(rng), sp2 = sd(rng);

    for (WFamily f : {WFamily::W0, WFamily::W1, WFamily::W2}) {
      ChernTriple plain = *evaluate(make_w_pipeline(f, e1, s1, e2, s2), reg(), 0)
                               .chern;
      c.require(plain == closed_form_w(f, e1, s1, e2, s2), "W plain pipeline");
      ChernTriple grp =
          *evaluate(make_w_pipeline(f, e1, s1, e2, s2, group), reg(), 0).chern;
      c.require(grp == closed_form_w_groups(f, e1, s1, e2, s2, g, r,
                                            C3Variant::with_minus8),
                "W group pipeline (pipeline variant)");
      ChernTriple other = closed_form_w_groups(f, e1, s1, e2, s2, g, r,
                                               C3Variant::without_minus8);
      if (f == WFamily::W2)
        c.require(other.c3 == grp.c3 + 8 && other.c13 == grp.c13 &&
                      other.c1c2 == grp.c1c2,
                  "W2 c3 discrepancy is exactly the trailing -8");
      else
        c.require(other == grp, "flag only affects W2");
    }
    for (YFamily f : {YFamily::Y0, YFamily::Y1, YFamily::Y2}) {
      ChernTriple plain =
          *evaluate(make_y_pipeline(f, n1, sp1, n2, sp2), reg(), 0).chern;
      c.require(plain == closed_form_y(f, n1, sp1, n2, sp2),
                "Y plain pipeline");
      ChernTriple grp =
          *evaluate(make_y_pipeline(f, n1, sp1, n2, sp2, group), reg(), 0)
               .chern;
      c.require(grp == closed_form_y_groups(f, n1, sp1, n2, sp2, g, r),
                "Y group pipeline");
    }
  }
  return c.failures == 0;
}

// --- criterion 3: congruence necessity over random recipes -------------------

// Conservative mirror of the evaluator's locus bookkeeping, enough to build
// valid recipes: available torus/genus-2 counts and the product factor.
struct NodeInfo {
  int dim = 4;
  int tori = 0;
  int genus2 = 0;
  Int factor = -1;
};

bool criterion_congruences(Checker& c) {
  std::mt19937 rng(424242);
  auto pick = [&](Int lo, Int hi) {
    return std::uniform_int_distribution<Int>(lo, hi)(rng);
  };

  int checked6 = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    Recipe rec;
    std::vector<NodeInfo> info;

    auto add_leaf = [&]() {
      LeafStep leaf;
      NodeInfo ni;
      switch (pick(0, 7)) {
        case 0: leaf.block = "T2xSigma2"; ni = {4, 5, 1, -1}; break;
        case 1: leaf.block = "T4"; ni = {4, 2, 0, -1}; break;
        case 2: leaf.block = "E1"; ni = {4, 1, 0, -1}; break;
        case 3: leaf.block = "X_1_2"; ni = {4, 0, 1, -1}; break;
        case 4: {
          leaf.block = "Z11";
          Int m = pick(2, 6);
          Int cp = pick(0, 8 * m - 1);
          leaf.e = 12 * m - cp;
          leaf.sigma = cp - 8 * m;
          ni = {4, 2, 0, -1};
          break;
        }
        case 5: {
          leaf.block = "Z12";
          Int m = pick(2, 6);
          Int cp = pick(0, 8 * m - 1);
          leaf.e = 12 * m - cp;
          leaf.sigma = cp - 8 * m;
          ni = {4, 1, 1, -1};
          break;
        }
        case 6: {
          leaf.block = "SPIN";
          leaf.n = pick(1, 4);
          leaf.s = pick(1, 3);
          ni = {4, 2, 1, -1};
          break;
        }
        default: {
          leaf.block = "BK";
          Presentation p = pick(0, 1) ? parse_presentation("a | a a")
                                      : parse_presentation("a,b | a b a' b'");
          leaf.group = print_presentation(p);
          ni = {4, 1, 0, -1};
          break;
        }
      }
      rec.add(leaf);
      info.push_back(ni);
      return static_cast<int>(info.size()) - 1;
    };

    add_leaf();
    int depth = static_cast<int>(pick(1, 6));
    for (int step = 0; step < depth; ++step) {
      int op = static_cast<int>(pick(0, 5));
      int cur = static_cast<int>(info.size()) - 1;
      if (op == 0 && info[cur].dim == 4) {
        // Torus or genus-2 sum with a fresh leaf.
        int other = add_leaf();
        Int genus;
        if (info[cur].tori > 0 && info[other].tori > 0 &&
            (info[cur].genus2 == 0 || info[other].genus2 == 0 || pick(0, 1)))
          genus = 1;
        else if (info[cur].genus2 > 0 && info[other].genus2 > 0)
          genus = 2;
        else
          continue;
        Sum4Step s;
        s.left = cur;
        s.right = other;
        s.genus = genus;
        rec.add(s);
        NodeInfo ni{4,
                    info[cur].tori + info[other].tori - (genus == 1 ? 2 : 0),
                    info[cur].genus2 + info[other].genus2 -
                        (genus == 2 ? 2 : 0),
                    -1};
        info.push_back(ni);
      } else if (op == 1 && info[cur].dim == 4) {
        ProductStep p;
        p.child = cur;
        p.genus = pick(0, 2);
        rec.add(p);
        info.push_back({6, info[cur].tori, info[cur].genus2, p.genus});
      } else if (op == 2 && info[cur].dim == 6) {
        // Sum with a freshly built product of matching factor.
        int leaf = add_leaf();
        Int locus;
        if (info[cur].tori > 0 && info[leaf].tori > 0)
          locus = 1;
        else if (info[cur].genus2 > 0 && info[leaf].genus2 > 0)
          locus = 2;
        else
          continue;
        ProductStep p;
        p.child = leaf;
        p.genus = info[cur].factor;
        int pn = rec.add(p);
        info.push_back({6, info[leaf].tori, info[leaf].genus2, p.genus});
        Sum6Step s;
        s.left = cur;
        s.right = pn;
        s.locus_genus = locus;
        s.factor_genus = info[cur].factor;
        rec.add(s);
        info.push_back({6,
                        info[cur].tori + info[leaf].tori -
                            (locus == 1 ? 2 : 0),
                        info[cur].genus2 + info[leaf].genus2 -
                            (locus == 2 ? 2 : 0),
                        info[cur].factor});
      } else if (op == 3 && info[cur].dim == 6) {
        BlowUpPointStep b;
        b.child = cur;
        rec.add(b);
        info.push_back(info[cur]);
      } else if (op == 4 && info[cur].dim == 6) {
        BlowUpSurfaceStep b;
        b.child = cur;
        b.genus = pick(0, 2);
        b.pairing = pick(-2, 2);
        rec.add(b);
        info.push_back(info[cur]);
      } else if (op == 5 && info[cur].dim == 4) {
        LuttingerStep l;
        l.child = cur;
        l.relator = "x";  // not always valid; guarded below
        const Step& leafstep = rec.nodes[cur];
        if (!std::holds_alternative<LeafStep>(leafstep)) continue;
        const auto& ls = std::get<LeafStep>(leafstep);
        if (ls.block != "T4" && ls.block != "T2xSigma2") continue;
        rec.add(l);
        info.push_back(info[cur]);
      }
    }
    rec.root = static_cast<int>(rec.nodes.size()) - 1;

    EvalResult res = evaluate(rec, reg(), 0);
    if (res.dim == 6) {
      ++checked6;
      auto mod = [](Int a, Int m) { return ((a % m) + m) % m; };
      c.require(mod(res.chern->c13, 2) == 0, "c13 parity");
      c.require(mod(res.chern->c3, 2) == 0, "c3 parity");
      c.require(mod(res.chern->c1c2, 24) == 0, "c1c2 mod 24");
    }
  }
  c.require(checked6 >= 400, "enough 6-dimensional samples");
  return c.failures == 0;
}

// --- criterion 4: realization round trip -------------------------------------

bool criterion_realize(Checker& c) {
  std::mt19937 rng(7777);
  auto pick = [&](Int lo, Int hi) {
    return std::uniform_int_distribution<Int>(lo, hi)(rng);
  };

  // Group pool with each group's realizable c1c2/24 residues inside
  // [-20, 20]: the genus-2 family floor excludes a few small negatives and
  // the group-imposing route needs q >= g + r (see the ledgered analysis);
  // the excluded residues are asserted below as honest errors.
  struct Pick {
    Presentation group;
    Int neg_floor;  // most negative q is anything <= this
    Int pos_floor;  // least positive q
  };
  const std::vector<Pick> pool = {
      {Presentation(), -3, 1},
      {parse_presentation("a"), -4, 1},
      {parse_presentation("a,b | a b a' b'"), -4, 1},
      {parse_presentation("a,b"), -4, 1},
      {surface_presentation(2), -4, 1},
      {parse_presentation("a | a a"), -6, 2},
      {parse_presentation("a | a a a"), -6, 2},
  };

  for (int trial = 0; trial < 200; ++trial) {
    const Pick& pk = pool[trial % pool.size()];
    Int q = 0;
    do {
      q = pick(-20, 20);
    } while (!(q == 0 || q >= pk.pos_floor || q <= pk.neg_floor));

    Target6 t;
    t.c13 = 2 * pick(-500, 500);
    t.c1c2 = 24 * q;
    t.c3 = 2 * pick(-500, 500);
    t.group = pk.group;

    auto t0 = std::chrono::steady_clock::now();
    Recipe rec = realize(t, reg());
    EvalResult res = evaluate(rec, reg());
    long long ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
    c.require(ms < 1000, "solve under one second");
    c.require(res.chern->c13 == t.c13 && res.chern->c1c2 == t.c1c2 &&
                  res.chern->c3 == t.c3,
              "exact Chern round trip");
    c.require(abelianization(res.pi1) == abelianization(t.group),
              "pi1 abelianization consistent");
  }

  // The residues excluded above are genuinely outside the block families'
  // span and must fail loudly, not silently.
  auto expect_exhausted = [&](Int c1c2, const Presentation& g) {
    try {
      realize({0, c1c2, 0, g}, reg());
      return false;
    } catch (const SearchExhaustedError&) {
      return true;
    }
  };
  c.require(expect_exhausted(-24, Presentation()), "q=-1 reported exhausted");
  c.require(expect_exhausted(-48, Presentation()), "q=-2 reported exhausted");
  c.require(expect_exhausted(-72, parse_presentation("a")),
            "q=-3 over Z reported exhausted");
  c.require(expect_exhausted(24, parse_presentation("a | a a")),
            "q=1 below the imposing cost reported exhausted");
  return c.failures == 0;
}

// --- criterion 5: budget completeness ----------------------------------------

bool criterion_budget(Checker& c) {
  for (Int d13 = -200; d13 <= 200; d13 += 2)
    for (Int d3 = -200; d3 <= 200; d3 += 2) {
      BlowUpBudget got = solve_budget(d13, d3);
      if (-8 * got.p - 4 * got.r_e + 6 * got.z != d13 ||
          2 * (got.p + got.r_e - got.z) != d3) {
        c.require(false, "budget equations at (" + std::to_string(d13) + "," +
                             std::to_string(d3) + ")");
        continue;
      }
      auto oracle = symgeo::testing::budget_oracle(d13, d3, 1200);
      if (!oracle || got != *oracle)
        c.require(false, "oracle agreement at (" + std::to_string(d13) + "," +
                             std::to_string(d3) + ")");
    }
  return c.failures == 0;
}

// --- criterion 6: SNF correctness ---------------------------------------------

bool criterion_snf(Checker& c) {
  std::mt19937 rng(31337);
  std::uniform_int_distribution<int> dim(1, 6), entry(-9, 9);
  for (int trial = 0; trial < 300; ++trial) {
    IntMatrix a(dim(rng), dim(rng));
    for (int i = 0; i < a.rows; ++i)
      for (int j = 0; j < a.cols; ++j) a.at(i, j) = entry(rng);
    SnfResult snf = smith_normal_form(a);

    bool cert = multiply(multiply(snf.u, a), snf.v) == snf.d;
    BigInt du = determinant(snf.u), dv = determinant(snf.v);
    cert = cert && (du == 1 || du == -1) && (dv == 1 || dv == -1);
    std::vector<BigInt> diag = snf.diagonal();
    for (std::size_t i = 0; i + 1 < diag.size(); ++i)
      if (diag[i] != 0 && diag[i + 1] % diag[i] != 0) cert = false;
    c.require(cert, "certificate at trial " + std::to_string(trial));
    c.require(diag == symgeo::testing::snf_diagonal_by_minors(a),
              "minor-gcd oracle at trial " + std::to_string(trial));
  }
  return c.failures == 0;
}

// --- criterion 7: pi1 oracle suite ---------------------------------------------

bool criterion_pi1(Checker& c) {
  for (Int g = 1; g <= 5; ++g) {
    AbelianInvariants inv = abelianization(surface_presentation(g));
    c.require(inv.free_rank == 2 * g && inv.torsion.empty(),
              "surface group H1 at genus " + std::to_string(g));
  }
  for (Int p = 2; p <= 12; ++p) {
    Presentation zp = parse_presentation("x");
    zp.add_relator(power(Word({1}), p));
    AbelianInvariants inv = abelianization(zp);
    c.require(inv.free_rank == 0 && inv.torsion == std::vector<Int>{p},
              "Z/p at p = " + std::to_string(p));
  }

  Presentation f2 = free_presentation(2);
  Presentation z2 = parse_presentation("a,b | a b a' b'");
  c.require(count_homs_to_sym(f2, 3) == 36, "F2 into S3");
  c.require(count_homs_to_sym(f2, 3) == symgeo::testing::brute_homs_2gen_s3(f2),
            "F2 brute force");
  c.require(count_homs_to_sym(z2, 3) == 18, "Z^2 into S3");
  c.require(count_homs_to_sym(z2, 3) == symgeo::testing::brute_homs_2gen_s3(z2),
            "Z^2 brute force");

  // Torus sums of a geography block with T^2 x Sigma_g carry the surface
  // group; the gluing data is verification-grade.
  for (Int g : {2, 3}) {
    Recipe rec;
    LeafStep z11;
    z11.block = "Z11";
    z11.e = 9;
    z11.sigma = -1;
    int a = rec.add(z11);
    LeafStep t2s;
    t2s.block = "T2XSIGMA";
    t2s.g = g;
    int b = rec.add(t2s);
    Sum4Step s;
    s.left = a;
    s.right = b;
    s.genus = 1;
    rec.root = rec.add(s);
    EvalResult res = evaluate(rec, reg());
    c.require(res.pi1_verified, "surface sum verified at genus " +
                                    std::to_string(g));
    OracleComparison cmp =
        compare_by_oracles(res.pi1, surface_presentation(g));
    c.require(cmp.match, "surface sum consistent at genus " +
                             std::to_string(g));
  }

  // Mapping-torus sums give free groups.
  for (Int n = 1; n <= 4; ++n) {
    Recipe rec;
    LeafStep mt;
    mt.block = "MT";
    mt.n = n;
    int a = rec.add(mt);
    LeafStep z11;
    z11.block = "Z11";
    z11.e = 9;
    z11.sigma = -1;
    int b = rec.add(z11);
    Sum4Step s;
    s.left = a;
    s.right = b;
    s.genus = 1;
    rec.root = rec.add(s);
    EvalResult res = evaluate(rec, reg());
    OracleComparison cmp = compare_by_oracles(res.pi1, free_presentation(n));
    c.require(cmp.match && res.pi1_verified,
              "free group construction at rank " + std::to_string(n));
    c.require(syntactically_equal(tietze_simplify(res.pi1),
                                  free_presentation(n)),
              "free group simplifies to the free presentation, rank " +
                  std::to_string(n));
  }
  return c.failures == 0;
}

// --- criterion 8: geography enumeration -----------------------------------------

bool criterion_geography(Checker& c) {
  std::vector<GeographyPoint> pts = enumerate_region_4d(2, 2, 0, 0, false);
  c.require(pts.size() == 16, "sixteen points at chi_h = 2");
  for (Int v = 0; v < static_cast<Int>(pts.size()); ++v)
    c.require(pts[v].c1sq == v, "c1sq value " + std::to_string(v));

  std::vector<GeographyPoint> spin = enumerate_region_4d(2, 40, 0, 0, true);
  int seen = 0;
  for (const GeographyPoint& p : spin) {
    if (p.n > 5 || p.s > 3) continue;
    ++seen;
    Int cc = p.c1sq, chi = p.chi_h;
    Int e = 12 * chi - cc, sigma = cc - 8 * chi;
    c.require(2 * e + 3 * sigma == cc, "spin identity c = 2e + 3s");
    c.require(e + sigma == 4 * chi, "spin identity 4chi = e + s");
  }
  c.require(seen == 15, "all (n <= 5, s <= 3) spin points enumerated");
  return c.failures == 0;
}

// --- criterion 9: BK arithmetic ---------------------------------------------------

bool criterion_bk(Checker& c) {
  for (Int g = 0; g <= 10; ++g)
    for (Int r = 0; r <= 10; ++r) {
      if (g == 0 && r > 0) {
        // No presentation with zero generators carries nonempty relators.
        try {
          bk_block(g, r, Presentation());
          c.require(false, "arity mismatch not rejected");
        } catch (const DomainError&) {
        }
        continue;
      }
      Presentation target;
      for (Int i = 0; i < g; ++i)
        target.add_generator("x" + std::to_string(i + 1));
      for (Int i = 0; i < r; ++i) {
        int gen = static_cast<int>(i % g) + 1;
        target.add_relator(power(Word({gen}), 2 + i % 3));
      }
      BlockDescriptor b = bk_block(g, r, target);
      c.require(b.char4.e == 4 * (g + r) && b.char4.sigma == 0,
                "bk characteristic numbers at (" + std::to_string(g) + "," +
                    std::to_string(r) + ")");
    }

  const std::vector<std::string> samples = {
      "a",
      "a | a a",
      "a | a a a",
      "a | a a a a a",
      "a,b",
      "a,b | a b a' b'",
      "a,b | a a; b b b",
      "a,b | a b a b",
      "a,b | a a b' b'",
      "a,b,c",
      "a,b,c | a b c",
      "a,b,c | a a; b b; c c",
      "a,b | a b a' b'; a a a a",
      "a | a a a a a a a",
      "a,b | a a a; b b",
      "a,b | b a b' a'",
      "a,b,c | a b' c",
      "a,b | a b b a",
      "a,b,c | c b a",
      "a,b,c,d | a b a' b' c d c' d'",
  };
  for (const std::string& text : samples) {
    Presentation target = parse_presentation(text);
    Presentation raw = bk_raw_presentation(target);
    BkMachineryWords words = bk_machinery_words(target, raw);
    Presentation q = quotient_by_words(raw, words.kill_s_t);
    q = quotient_by_words(q, words.kill_xy);
    q = quotient_by_words(q, words.rewritten_relators);
    c.require(abelianization(q) == abelianization(target),
              "raw quotient abelianization for <" + text + ">");
  }
  return c.failures == 0;
}

struct Criterion {
  const char* name;
  std::function<bool(Checker&)> run;
  long long budget_ms;  // 0 = no stated bound
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"Table reproduction (printed sum rows)", criterion_table, 1000},
      {"Closed-form/pipeline agreement (500 random tuples)",
       criterion_closed_forms, 5000},
      {"Congruence necessity (1000 random recipes)", criterion_congruences, 0},
      {"Realization round trip (200 random targets)", criterion_realize, 0},
      {"Blow-up budget completeness (even pairs in [-200,200]^2)",
       criterion_budget, 30000},
      {"Smith normal form certificate and oracle (300 matrices)",
       criterion_snf, 0},
      {"Fundamental group oracle suite", criterion_pi1, 0},
      {"Geography enumeration", criterion_geography, 0},
      {"Group-imposing block arithmetic", criterion_bk, 0},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Checker c;
    bool ok = false;
    std::string error;
    long long ms = run_ms([&] {
      try {
        ok = criteria[i].run(c);
      } catch (const std::exception& e) {
        ok = false;
        error = e.what();
      }
    });
    if (ok && criteria[i].budget_ms > 0 && ms > criteria[i].budget_ms) {
      ok = false;
      error = "exceeded the " + std::to_string(criteria[i].budget_ms) +
              " ms budget";
    }
    std::cout << "[" << (i + 1) << "] " << criteria[i].name << ": "
              << (ok ? "PASS" : "FAIL") << " (" << ms << " ms)\n";
    if (!ok) {
      ++failed;
      if (!error.empty()) std::cout << "    exception: " << error << "\n";
      std::cout << c.detail.str();
    }
  }
  return failed == 0 ? 0 : 1;
}
