#include "symgeo/planner.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace symgeo {

void require_admissible(Int c13, Int c1c2, Int c3) {
  auto mod = [](Int a, Int m) { return ((a % m) + m) % m; };
  if (mod(c13, 2) != 0)
    throw AdmissibilityError("c13 must be even, got " + std::to_string(c13));
  if (mod(c3, 2) != 0)
    throw AdmissibilityError("c3 must be even, got " + std::to_string(c3));
  if (mod(c1c2, 24) != 0)
    throw AdmissibilityError("c1c2 must be divisible by 24, got " +
                             std::to_string(c1c2));
}

BlowUpBudget solve_budget(Int delta_c13, Int delta_c3) {
  if (((delta_c13 % 2) + 2) % 2 != 0 || ((delta_c3 % 2) + 2) % 2 != 0)
    throw DomainError("blow-up deltas must be even");
  Int a = delta_c13 / 2;
  Int c = delta_c3 / 2;

  // At a fixed total T the three counts are determined by the linear system,
  // so scanning totals upward finds the unique minimal-total solution.
  Int tmax = 12 * (std::llabs(a) + std::llabs(c)) + 16;
  for (Int t = 0; t <= tmax; ++t) {
    Int z2 = t - c;
    if (z2 < 0 || z2 % 2 != 0) continue;
    Int z = z2 / 2;
    Int s = t - z;  // p + r_e
    if (s < 0) continue;
    Int p2 = 3 * z - a - 2 * s;
    if (p2 < 0 || p2 % 2 != 0) continue;
    Int p = p2 / 2;
    if (p > s) continue;
    Int r_e = s - p;
    BlowUpBudget b{p, r_e, z};
    if (-8 * b.p - 4 * b.r_e + 6 * b.z == delta_c13 &&
        2 * b.p + 2 * b.r_e - 2 * b.z == delta_c3)
      return b;
  }
  throw SearchExhaustedError(
      "no blow-up budget with total <= " + std::to_string(tmax) +
      " for deltas (" + std::to_string(delta_c13) + ", " +
      std::to_string(delta_c3) + ")");
}

std::vector<GeographyPoint> enumerate_region_4d(Int chi_lo, Int chi_hi, Int g,
                                                Int r, bool spin) {
  if (g < 0 || r < 0) throw DomainError("negative presentation arity");
  Int k = g + r;
  std::vector<GeographyPoint> out;
  for (Int chi = chi_lo; chi <= chi_hi; ++chi) {
    if (!spin) {
      Int m = chi - k;  // chi_h of the geography block
      if (m < 2) continue;
      for (Int cp = 0; cp <= 8 * m - 1; ++cp) {
        GeographyPoint pt;
        pt.c1sq = cp + 8 * k;
        pt.c1sq_printed = cp + 4 * k;
        pt.chi_h = chi;
        pt.e = 12 * m - cp;
        pt.sigma = cp - 8 * m;
        out.push_back(pt);
      }
    } else {
      for (Int s = 1; 2 * s <= chi - k; ++s) {
        Int n = chi + 1 - k - 2 * s;
        if (n < 1) continue;
        GeographyPoint pt;
        pt.spin = true;
        pt.c1sq = 8 * n - 8 + 8 * k;
        pt.c1sq_printed = pt.c1sq;
        pt.chi_h = chi;
        pt.n = n;
        pt.s = s;
        out.push_back(pt);
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const GeographyPoint& a,
                                       const GeographyPoint& b) {
    return std::tie(a.chi_h, a.c1sq, a.s) < std::tie(b.chi_h, b.c1sq, b.s);
  });
  return out;
}

// --- realize ----------------------------------------------------------------

namespace {

enum class GroupRoute { trivial, z_rank1, z_rank2, free_group, surface, bk };

struct GroupPlan {
  GroupRoute route = GroupRoute::trivial;
  Int n = 0;        // free rank or surface genus
  Int bk_cost = 0;  // g + r for the bk route
  Presentation simplified;
};

Word surface_word(Int pairs) {
  Word w;
  for (Int i = 0; i < pairs; ++i)
    w = concat(w, commutator(Word({static_cast<int>(2 * i) + 1}),
                             Word({static_cast<int>(2 * i) + 2})));
  return w;
}

GroupPlan classify_group(const Presentation& group) {
  GroupPlan plan;
  plan.simplified = tietze_simplify(group);
  const Presentation& p = plan.simplified;
  if (p.ngens() == 0) {
    plan.route = GroupRoute::trivial;
    return plan;
  }
  if (p.nrelators() == 0) {
    plan.route = p.ngens() == 1 ? GroupRoute::z_rank1 : GroupRoute::free_group;
    plan.n = p.ngens();
    return plan;
  }
  if (p.ngens() % 2 == 0 && p.nrelators() == 1) {
    Int h = p.ngens() / 2;
    if (cyclic_normal_form(p.relators[0]) ==
        cyclic_normal_form(surface_word(h))) {
      plan.route = h == 1 ? GroupRoute::z_rank2 : GroupRoute::surface;
      plan.n = h;
      return plan;
    }
  }
  plan.route = GroupRoute::bk;
  plan.bk_cost = p.ngens() + p.nrelators();
  return plan;
}

LeafStep leaf_named(const std::string& id) {
  LeafStep l;
  l.block = id;
  return l;
}

LeafStep leaf_z(const std::string& variant, Int m) {
  // (e, sigma) = (4m + 1, -1) is the admissible witness with e + sigma = 4m.
  LeafStep l;
  l.block = variant;
  l.e = 4 * m + 1;
  l.sigma = -1;
  return l;
}

// Partner block carrying a torus with (claimed) trivial complement and
// e + sigma = 4m. E(1) covers m = 1, geography blocks the rest.
LeafStep partner_torus(Int m) {
  return m == 1 ? leaf_named("E1") : leaf_z("Z11", m);
}

// Partner block carrying a genus-2 surface with trivial complement data.
LeafStep partner_genus2(Int m) {
  return m == 1 ? leaf_named("X_1_2") : leaf_z("Z12", m);
}

// Appends the 4-manifold with the target group and e + sigma = 4m (plus the
// bk correction); the partner leaf supplies the mass. `genus2_partner`
// selects the Z12/X_1_2 family so a genus-2 locus survives the sum.
// Returns the node index and the index of the surviving designated locus.
struct X1Nodes {
  int node = 0;
  int locus = 0;  // index of the designated leftover locus, -1 when unused
};

X1Nodes build_x1(Recipe& r, const GroupPlan& plan, Int m,
                 bool genus2_partner) {
  auto partner = [&](Int mass) {
    return genus2_partner ? partner_genus2(mass) : partner_torus(mass);
  };
  switch (plan.route) {
    case GroupRoute::trivial: {
      int n = r.add(partner(m));
      // Z11 loci [T1, T2], E1 [Fiber]; Z12 [T1, F], X_1_2 [F].
      int locus = 0;
      if (genus2_partner && m >= 2) locus = 1;
      return {n, locus};
    }
    case GroupRoute::z_rank1:
    case GroupRoute::z_rank2: {
      // Torus sum with the 4-torus, then surgeries killing the extra circle
      // factors of Z^2 down to the requested rank.
      int pn = r.add(partner(m));
      int t4 = r.add(leaf_named("T4"));
      Sum4Step s;
      s.left = pn;
      s.right = t4;
      s.genus = 1;
      int cur = r.add(s);
      if (plan.route == GroupRoute::z_rank1) {
        LuttingerStep lut;
        lut.child = cur;
        lut.relator = "y";
        cur = r.add(lut);
      }
      // First leftover is the partner's tail (Z11 T2 / Z12 F) or, when the
      // partner was spent, the parallel 4-torus copy.
      return {cur, 0};
    }
    case GroupRoute::free_group:
    case GroupRoute::surface: {
      LeafStep base;
      if (plan.route == GroupRoute::free_group) {
        base.block = "MT";
        base.n = plan.n;
      } else {
        base.block = "T2XSIGMA";
        base.g = plan.n;
      }
      int bn = r.add(base);
      int pn = r.add(partner(m));
      Sum4Step s;
      s.left = bn;
      s.right = pn;
      s.genus = 1;
      int cur = r.add(s);
      // Leftovers: base tail (T2XSIGMA(2) keeps its own F) then partner tail.
      int locus = 0;
      if (genus2_partner) {
        bool base_has_f = plan.route == GroupRoute::surface && plan.n == 2;
        locus = base_has_f ? 1 : 0;  // pick the partner's F
      }
      return {cur, locus};
    }
    case GroupRoute::bk: {
      LeafStep bk;
      bk.block = "BK";
      bk.group = print_presentation(plan.simplified);
      int bkn = r.add(bk);
      if (m == 0) return {bkn, 0};  // bare block, own torus intact
      int pn = r.add(partner(m));
      Sum4Step s;
      s.left = bkn;
      s.right = pn;
      s.genus = 1;
      return {r.add(s), 0};
    }
  }
  throw Error("unreachable group route");
}

int add_product(Recipe& r, int child, Int genus) {
  ProductStep p;
  p.child = child;
  p.genus = genus;
  return r.add(p);
}

int add_sum6(Recipe& r, int left, int right, Int locus_genus, Int factor,
             std::optional<int> left_locus = std::nullopt,
             std::optional<int> right_locus = std::nullopt) {
  Sum6Step s;
  s.left = left;
  s.right = right;
  s.locus_genus = locus_genus;
  s.factor_genus = factor;
  s.glue.left_locus = left_locus;
  s.glue.right_locus = right_locus;
  return r.add(s);
}

std::string route_name(GroupRoute r) {
  switch (r) {
    case GroupRoute::trivial: return "trivial";
    case GroupRoute::z_rank1: return "Z";
    case GroupRoute::z_rank2: return "Z^2";
    case GroupRoute::free_group: return "free";
    case GroupRoute::surface: return "surface";
    case GroupRoute::bk: return "group-imposing";
  }
  return "?";
}

}  // namespace

Recipe realize(const Target6& target, const Registry& registry) {
  require_admissible(target.c13, target.c1c2, target.c3);
  GroupPlan plan = classify_group(target.group);
  Int q = target.c1c2 / 24;
  Int cost = plan.bk_cost;

  Recipe r;
  if (q == 0) {
    // Torus-factor family: every Chern number vanishes.
    X1Nodes x1 = build_x1(r, plan, 2, false);
    int x2 = r.add(leaf_z("Z11", 2));
    int p1 = add_product(r, x1.node, 1);
    int p2 = add_product(r, x2, 1);
    r.root = add_sum6(r, p1, p2, 1, 1);
  } else if (q > 0) {
    // Sphere-factor family.
    Int residue = q - cost;
    if (residue < 0)
      throw SearchExhaustedError(
          "c1c2 = " + std::to_string(target.c1c2) +
          " needs mass below the group-imposing block's contribution 24*" +
          std::to_string(cost) + "; scanned masses 0.." + std::to_string(q));
    if (plan.route != GroupRoute::bk && residue < 1)
      throw SearchExhaustedError(
          "c1c2 = " + std::to_string(target.c1c2) +
          " requires partner mass >= 1 for this group; none available");
    if (residue <= 2) {
      X1Nodes x1 = build_x1(r, plan, residue, false);
      r.root = add_product(r, x1.node, 0);
    } else {
      X1Nodes x1 = build_x1(r, plan, 2, false);
      int x2 = r.add(partner_torus(residue - 2));
      int p1 = add_product(r, x1.node, 0);
      int p2 = add_product(r, x2, 0);
      r.root = add_sum6(r, p1, p2, 1, 0);
    }
  } else {
    // Genus-2-factor family; the fiber correction contributes one mass unit.
    Int residue = -q - 1 - cost;  // m1 + m2
    Int m1_min = plan.route == GroupRoute::trivial ? 1 : 2;
    if (residue < m1_min + 1)
      throw SearchExhaustedError(
          "c1c2 = " + std::to_string(target.c1c2) +
          " is below this group's genus-2 family floor; scanned masses " +
          std::to_string(m1_min) + "+1 .. " + std::to_string(residue) +
          " (route " + route_name(plan.route) + ")");
    // Prefer geography blocks on both sides; the mass-1 fillers only appear
    // when the residue forces them.
    Int m2 = residue >= 4 ? 2 : 1;
    Int m1 = residue - m2;
    X1Nodes x1 = build_x1(r, plan, m1, true);
    int x2 = r.add(partner_genus2(m2));
    int p1 = add_product(r, x1.node, 2);
    int p2 = add_product(r, x2, 2);
    // X_1_2 lists only its surface; Z12 lists the torus first.
    r.root = add_sum6(r, p1, p2, 2, 2, x1.locus, m2 == 1 ? 0 : 1);
  }

  EvalResult base = evaluate(r, registry);
  if (base.chern->c1c2 != target.c1c2)
    throw Error("internal: base pipeline missed c1c2");

  Int d13 = checked_sub(target.c13, base.chern->c13);
  Int d3 = checked_sub(target.c3, base.chern->c3);
  if (d13 != 0 || d3 != 0) {
    // Preparatory point blow-up creates the exceptional line the alpha = 1
    // moves act on.
    BlowUpPointStep prep;
    prep.child = r.root;
    r.root = r.add(prep);
    BlowUpBudget budget =
        solve_budget(checked_add(d13, 8), checked_sub(d3, 2));
    for (Int i = 0; i < budget.p; ++i) {
      BlowUpPointStep s;
      s.child = r.root;
      r.root = r.add(s);
    }
    for (Int i = 0; i < budget.r_e; ++i) {
      BlowUpSurfaceStep s;
      s.child = r.root;
      s.genus = 0;
      s.pairing = -1;
      r.root = r.add(s);
    }
    for (Int i = 0; i < budget.z; ++i) {
      BlowUpSurfaceStep s;
      s.child = r.root;
      s.genus = 2;
      s.pairing = 0;
      r.root = r.add(s);
    }
  }

  EvalResult final = evaluate(r, registry);
  if (final.chern->c13 != target.c13 || final.chern->c1c2 != target.c1c2 ||
      final.chern->c3 != target.c3)
    throw Error("internal: realized recipe does not hit the target");
  return r;
}

Recipe realize_4d(Int c1sq, Int chi_h, const Presentation& group, bool spin) {
  GroupPlan plan = classify_group(group);
  const Presentation& p = plan.simplified;
  Int k = p.ngens() + p.nrelators();

  Recipe r;
  LeafStep base;
  if (!spin) {
    Int m = chi_h - k;
    Int cp = c1sq - 8 * k;
    if (m < 2 || cp < 0 || cp > 8 * m - 1)
      throw SearchExhaustedError(
          "point (" + std::to_string(c1sq) + ", " + std::to_string(chi_h) +
          ") is not realizable by this family at g+r = " + std::to_string(k) +
          " (family coverage, not a nonexistence claim)");
    base.block = "Z11";
    base.e = 12 * m - cp;
    base.sigma = cp - 8 * m;
  } else {
    Int cp = c1sq - 8 * k;
    Int n = cp / 8 + 1;
    Int s2 = chi_h - k - n + 1;
    if (cp < 0 || cp % 8 != 0 || n < 1 || s2 < 2 || s2 % 2 != 0)
      throw SearchExhaustedError(
          "spin point (" + std::to_string(c1sq) + ", " +
          std::to_string(chi_h) + ") is not realizable by this family at " +
          "g+r = " + std::to_string(k) +
          " (family coverage, not a nonexistence claim)");
    base.block = "SPIN";
    base.n = n;
    base.s = s2 / 2;
  }
  int bn = r.add(base);
  if (k == 0) {
    r.root = bn;
    return r;
  }
  LeafStep bk;
  bk.block = "BK";
  bk.group = print_presentation(p);
  int bkn = r.add(bk);
  Sum4Step s;
  s.left = bkn;
  s.right = bn;
  s.genus = 1;
  r.root = r.add(s);
  return r;
}

}  // namespace symgeo
