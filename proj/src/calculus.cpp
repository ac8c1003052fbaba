#include "symgeo/calculus.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace symgeo {

namespace {

// --- Internal evaluation states --------------------------------------------

// A gluable submanifold of an intermediate 4-manifold. The complement
// presentation extends the ambient generator index space, so inherited words
// stay valid across sums.
struct Locus4 {
  SubmanifoldKind kind = SubmanifoldKind::torus;
  Presentation complement;
  Word meridian;
  std::vector<Word> pushoffs;
  bool claimed = false;
};

struct State4 {
  CharNum4 ch;
  Presentation pi1;
  std::vector<Locus4> loci;
  bool verified = true;
};

// A gluable fiber (4-dimensional submanifold x surface factor) of an
// intermediate 6-manifold.
struct Locus6 {
  Int locus_genus = 1;   // 1 = torus, 2 = genus-2 surface
  Int factor_genus = 0;  // genus of the product factor
  Presentation complement;
  Word meridian;
  std::vector<Word> locus_pushoffs;
  std::vector<Word> factor_gens;
  bool claimed = false;
};

struct State6 {
  ChernTriple ch;
  Presentation pi1;
  std::vector<Locus6> loci;
  bool verified = true;
};

struct NodeState {
  int dim = 4;
  State4 s4;
  State6 s6;
};

SubmanifoldKind kind_for_genus(Int genus, int node) {
  switch (genus) {
    case 0: return SubmanifoldKind::sphere;
    case 1: return SubmanifoldKind::torus;
    case 2: return SubmanifoldKind::genus2_surface;
    default:
      throw RecipeError("no gluing locus kind for genus " +
                            std::to_string(genus),
                        node);
  }
}

State4 state_from_block(const BlockDescriptor& block) {
  State4 s;
  s.ch = block.char4;
  s.pi1 = block.pi1;
  for (const SubmanifoldData& sub : block.submanifolds) {
    Locus4 l;
    l.kind = sub.kind;
    l.complement = complement_presentation(block, sub);
    l.meridian = sub.meridian;
    l.pushoffs = sub.fiber_generator_pushoffs;
    l.claimed = !submanifold_verified(sub);
    s.loci.push_back(std::move(l));
  }
  return s;
}

BlockDescriptor resolve_leaf(const LeafStep& leaf, const Registry& registry,
                             int node) {
  try {
    if (leaf.block == "Z11")
      return geography_block(leaf.e, leaf.sigma, GeographyVariant::Z11);
    if (leaf.block == "Z12")
      return geography_block(leaf.e, leaf.sigma, GeographyVariant::Z12);
    if (leaf.block == "SPIN") return spin_block(leaf.n, leaf.s);
    if (leaf.block == "BK") {
      Presentation target = parse_presentation(leaf.group);
      return bk_block(target.ngens(), target.nrelators(), target);
    }
    if (leaf.block == "TEL") {
      TelescopingId id;
      if (leaf.family == "A") id = TelescopingId::A;
      else if (leaf.family == "B") id = TelescopingId::B;
      else if (leaf.family == "C") id = TelescopingId::C;
      else if (leaf.family == "D") id = TelescopingId::D;
      else if (leaf.family == "F") id = TelescopingId::F;
      else
        throw RecipeError("unknown telescoping family '" + leaf.family + "'",
                          node);
      return telescoping(id, leaf.g);
    }
    if (leaf.block == "T2XSIGMA") return t2_x_sigma_block(leaf.g);
    if (leaf.block == "MT") return mapping_torus_block(leaf.n);
    return registry.lookup(leaf.block);
  } catch (const DomainError& e) {
    throw RecipeError(std::string(e.what()), node);
  } catch (const ParseError& e) {
    throw RecipeError(std::string("bad leaf parameters: ") + e.what(), node);
  }
}

int pick_locus4(const State4& s, SubmanifoldKind kind,
                const std::optional<int>& override_idx, int node) {
  if (override_idx) {
    int i = *override_idx;
    if (i < 0 || i >= static_cast<int>(s.loci.size()))
      throw RecipeError("gluing locus index " + std::to_string(i) +
                            " out of range",
                        node);
    if (s.loci[i].kind != kind)
      throw RecipeError("gluing locus " + std::to_string(i) +
                            " has the wrong kind",
                        node);
    return i;
  }
  for (std::size_t i = 0; i < s.loci.size(); ++i)
    if (s.loci[i].kind == kind) return static_cast<int>(i);
  throw RecipeError(std::string("no ") + kind_name(kind) +
                        " gluing locus available",
                    node);
}

int pick_locus6(const State6& s, Int locus_genus, Int factor_genus,
                const std::optional<int>& override_idx, int node) {
  if (override_idx) {
    int i = *override_idx;
    if (i < 0 || i >= static_cast<int>(s.loci.size()))
      throw RecipeError("gluing locus index " + std::to_string(i) +
                            " out of range",
                        node);
    return i;
  }
  for (std::size_t i = 0; i < s.loci.size(); ++i)
    if (s.loci[i].locus_genus == locus_genus &&
        s.loci[i].factor_genus == factor_genus)
      return static_cast<int>(i);
  throw RecipeError("no fiber of type (genus " + std::to_string(locus_genus) +
                        " surface) x Sigma_" + std::to_string(factor_genus) +
                        " available",
                    node);
}

Presentation extend_by_factor(const Presentation& p, Int genus) {
  if (genus == 0) return p;
  if (genus == 1) return direct_product_free_abelian(p, 2);
  return direct_product_with_surface_group(p, genus);
}

State4 eval_sum4(const State4& l, const State4& r, const Sum4Step& step,
                 int node) {
  SubmanifoldKind kind = kind_for_genus(step.genus, node);
  int li = pick_locus4(l, kind, step.glue.left_locus, node);
  int ri = pick_locus4(r, kind, step.glue.right_locus, node);
  const Locus4& ll = l.loci[li];
  const Locus4& rl = r.loci[ri];

  State4 out;
  out.ch = sum4(l.ch, r.ch, SurfaceGenus(step.genus));

  GluingMap glue;
  std::size_t npairs = std::min(ll.pushoffs.size(), rl.pushoffs.size());
  for (std::size_t i = 0; i < npairs; ++i)
    glue.identifications.emplace_back(ll.pushoffs[i], rl.pushoffs[i]);
  glue.meridian1 = ll.meridian;
  glue.meridian2 = rl.meridian;
  out.pi1 = van_kampen_sum(ll.complement, rl.complement, glue);

  int offset = ll.complement.ngens();
  for (std::size_t i = 0; i < l.loci.size(); ++i) {
    if (static_cast<int>(i) == li) continue;
    Locus4 inh = l.loci[i];
    inh.complement = out.pi1;
    inh.claimed = true;
    out.loci.push_back(std::move(inh));
  }
  for (std::size_t i = 0; i < r.loci.size(); ++i) {
    if (static_cast<int>(i) == ri) continue;
    Locus4 inh;
    inh.kind = r.loci[i].kind;
    inh.complement = out.pi1;
    inh.meridian = r.loci[i].meridian.shifted(offset);
    for (const Word& w : r.loci[i].pushoffs)
      inh.pushoffs.push_back(w.shifted(offset));
    inh.claimed = true;
    out.loci.push_back(std::move(inh));
  }
  out.verified = l.verified && r.verified && !ll.claimed && !rl.claimed;
  return out;
}

State4 eval_luttinger(const State4& child, const LuttingerStep& step,
                      int node) {
  Word relator;
  try {
    relator = parse_word(step.relator, child.pi1);
  } catch (const ParseError& e) {
    throw RecipeError(std::string("bad surgery relator: ") + e.what(), node);
  }
  if (free_reduce(relator).empty())
    throw RecipeError("surgery relator reduces to the identity", node);

  State4 out = child;
  out.ch = luttinger(child.ch);
  out.pi1.add_relator(relator);
  // The surgery relation holds in every complement disjoint from the torus.
  for (Locus4& l : out.loci)
    if (l.complement.word_valid(relator)) l.complement.add_relator(relator);
  return out;
}

State6 eval_product(const State4& child, const ProductStep& step, int node) {
  if (step.genus < 0)
    throw RecipeError("product factor genus must be non-negative", node);
  State6 out;
  out.ch = product_with_surface(child.ch, SurfaceGenus(step.genus));
  out.pi1 = extend_by_factor(child.pi1, step.genus);
  out.verified = child.verified;
  for (const Locus4& l : child.loci) {
    if (l.kind == SubmanifoldKind::sphere) continue;
    Locus6 f;
    f.locus_genus = l.kind == SubmanifoldKind::torus ? 1 : 2;
    f.factor_genus = step.genus;
    f.complement = extend_by_factor(l.complement, step.genus);
    f.meridian = l.meridian;
    f.locus_pushoffs = l.pushoffs;
    for (int i = l.complement.ngens(); i < f.complement.ngens(); ++i)
      f.factor_gens.push_back(Word({i + 1}));
    f.claimed = l.claimed;
    out.loci.push_back(std::move(f));
  }
  return out;
}

State6 eval_sum6(const State6& l, const State6& r, const Sum6Step& step,
                 int node) {
  if (step.locus_genus != 1 && step.locus_genus != 2)
    throw RecipeError("sum6 locus genus must be 1 or 2", node);
  int li = pick_locus6(l, step.locus_genus, step.factor_genus,
                       step.glue.left_locus, node);
  int ri = pick_locus6(r, step.locus_genus, step.factor_genus,
                       step.glue.right_locus, node);
  const Locus6& ll = l.loci[li];
  const Locus6& rl = r.loci[ri];
  if (ll.locus_genus != rl.locus_genus || ll.factor_genus != rl.factor_genus)
    throw RecipeError("sum6 fibers do not match", node);
  if (ll.locus_genus != step.locus_genus ||
      ll.factor_genus != step.factor_genus)
    throw RecipeError("selected loci disagree with the declared fiber", node);

  State6 out;
  FourFiber fiber = surface_product_fiber(SurfaceGenus(ll.locus_genus),
                                          SurfaceGenus(ll.factor_genus));
  out.ch = sum6(l.ch, r.ch, fiber);

  // Default gluing: when the locus surface and the factor surface agree, the
  // fiber factors swap sides and the extra generators die against the other
  // side; otherwise generators are identified in order.
  bool crossed = ll.locus_genus == ll.factor_genus;
  if (step.glue.style) {
    if (*step.glue.style == "straight") crossed = false;
    else if (*step.glue.style == "crossed") crossed = true;
    else
      throw RecipeError("unknown glue style '" + *step.glue.style + "'", node);
  }
  if (crossed && (ll.locus_pushoffs.size() != rl.factor_gens.size() ||
                  ll.factor_gens.size() != rl.locus_pushoffs.size()))
    throw RecipeError("crossed gluing requires matching fiber factors", node);

  GluingMap glue;
  if (crossed) {
    for (std::size_t i = 0; i < ll.locus_pushoffs.size(); ++i)
      glue.identifications.emplace_back(ll.locus_pushoffs[i],
                                        rl.factor_gens[i]);
    for (std::size_t i = 0; i < ll.factor_gens.size(); ++i)
      glue.identifications.emplace_back(ll.factor_gens[i],
                                        rl.locus_pushoffs[i]);
  } else {
    std::size_t n1 = std::min(ll.locus_pushoffs.size(), rl.locus_pushoffs.size());
    for (std::size_t i = 0; i < n1; ++i)
      glue.identifications.emplace_back(ll.locus_pushoffs[i],
                                        rl.locus_pushoffs[i]);
    std::size_t n2 = std::min(ll.factor_gens.size(), rl.factor_gens.size());
    for (std::size_t i = 0; i < n2; ++i)
      glue.identifications.emplace_back(ll.factor_gens[i], rl.factor_gens[i]);
  }
  glue.meridian1 = ll.meridian;
  glue.meridian2 = rl.meridian;
  out.pi1 = van_kampen_sum(ll.complement, rl.complement, glue);

  int offset = ll.complement.ngens();
  for (std::size_t i = 0; i < l.loci.size(); ++i) {
    if (static_cast<int>(i) == li) continue;
    Locus6 inh = l.loci[i];
    inh.complement = out.pi1;
    inh.claimed = true;
    out.loci.push_back(std::move(inh));
  }
  for (std::size_t i = 0; i < r.loci.size(); ++i) {
    if (static_cast<int>(i) == ri) continue;
    Locus6 inh;
    inh.locus_genus = r.loci[i].locus_genus;
    inh.factor_genus = r.loci[i].factor_genus;
    inh.complement = out.pi1;
    inh.meridian = r.loci[i].meridian.shifted(offset);
    for (const Word& w : r.loci[i].locus_pushoffs)
      inh.locus_pushoffs.push_back(w.shifted(offset));
    for (const Word& w : r.loci[i].factor_gens)
      inh.factor_gens.push_back(w.shifted(offset));
    inh.claimed = true;
    out.loci.push_back(std::move(inh));
  }
  out.verified = l.verified && r.verified && !ll.claimed && !rl.claimed;
  return out;
}

class Evaluator {
 public:
  Evaluator(const Recipe& recipe, const Registry& registry)
      : recipe_(recipe), registry_(registry), memo_(recipe.nodes.size()),
        on_stack_(recipe.nodes.size(), false) {}

  const NodeState& eval(int node) {
    if (node < 0 || node >= static_cast<int>(recipe_.nodes.size()))
      throw RecipeError("node index " + std::to_string(node) +
                            " out of range",
                        node);
    if (memo_[node]) return *memo_[node];
    if (on_stack_[node])
      throw RecipeError("recipe contains a cycle", node);
    on_stack_[node] = true;
    NodeState state = compute(node);
    on_stack_[node] = false;
    memo_[node] = std::make_unique<NodeState>(std::move(state));
    return *memo_[node];
  }

 private:
  const State4& child4(int node, int child) {
    const NodeState& s = eval(child);
    if (s.dim != 4)
      throw RecipeError("operand must be 4-dimensional", node);
    return s.s4;
  }
  const State6& child6(int node, int child) {
    const NodeState& s = eval(child);
    if (s.dim != 6)
      throw RecipeError("operand must be 6-dimensional", node);
    return s.s6;
  }

  NodeState compute(int node) {
    const Step& step = recipe_.nodes[node];
    NodeState out;
    if (const auto* leaf = std::get_if<LeafStep>(&step)) {
      out.dim = 4;
      out.s4 = state_from_block(resolve_leaf(*leaf, registry_, node));
    } else if (const auto* s = std::get_if<Sum4Step>(&step)) {
      out.dim = 4;
      out.s4 = eval_sum4(child4(node, s->left), child4(node, s->right), *s,
                         node);
    } else if (const auto* s = std::get_if<LuttingerStep>(&step)) {
      out.dim = 4;
      out.s4 = eval_luttinger(child4(node, s->child), *s, node);
    } else if (const auto* s = std::get_if<ProductStep>(&step)) {
      out.dim = 6;
      out.s6 = eval_product(child4(node, s->child), *s, node);
    } else if (const auto* s = std::get_if<Sum6Step>(&step)) {
      out.dim = 6;
      out.s6 = eval_sum6(child6(node, s->left), child6(node, s->right), *s,
                         node);
    } else if (const auto* s = std::get_if<BlowUpPointStep>(&step)) {
      out.dim = 6;
      out.s6 = child6(node, s->child);
      out.s6.ch = blow_up_point(out.s6.ch);
    } else if (const auto* s = std::get_if<BlowUpSurfaceStep>(&step)) {
      out.dim = 6;
      out.s6 = child6(node, s->child);
      out.s6.ch =
          blow_up_surface(out.s6.ch, SurfaceGenus(s->genus), s->pairing);
    }
    return out;
  }

  const Recipe& recipe_;
  const Registry& registry_;
  std::vector<std::unique_ptr<NodeState>> memo_;
  std::vector<bool> on_stack_;
};

}  // namespace

EvalResult evaluate(const Recipe& recipe, const Registry& registry,
                    int tietze_budget) {
  if (recipe.nodes.empty()) throw RecipeError("empty recipe");
  Evaluator ev(recipe, registry);
  const NodeState& root = ev.eval(recipe.root);
  EvalResult out;
  out.dim = root.dim;
  if (root.dim == 4) {
    out.char4 = root.s4.ch;
    out.pi1 = tietze_simplify(root.s4.pi1, tietze_budget);
    out.pi1_verified = root.s4.verified;
  } else {
    out.chern = root.s6.ch;
    out.pi1 = tietze_simplify(root.s6.pi1, tietze_budget);
    out.pi1_verified = root.s6.verified;
  }
  return out;
}

// --- Closed forms -----------------------------------------------------------

namespace {

void require_theorem_region(Int e, Int sigma) {
  Int c = 2 * e + 3 * sigma;
  if (c < 0)
    throw DomainError("block out of region: 2e+3sigma = " + std::to_string(c));
  Int sum = e + sigma;
  if (((sum % 4) + 4) % 4 != 0)
    throw DomainError("block out of region: e+sigma not divisible by 4");
  if (sum < 8)
    throw DomainError("block out of region: e+sigma = " + std::to_string(sum) +
                      " < 8");
  if (sigma > -1)
    throw DomainError("block out of region: sigma > -1");
}

}  // namespace

ChernTriple closed_form_w(WFamily family, Int e1, Int s1, Int e2, Int s2) {
  return closed_form_w_groups(family, e1, s1, e2, s2, 0, 0);
}

ChernTriple closed_form_w_groups(WFamily family, Int e1, Int s1, Int e2,
                                 Int s2, Int g, Int r, C3Variant variant) {
  require_theorem_region(e1, s1);
  require_theorem_region(e2, s2);
  if (g < 0 || r < 0) throw DomainError("negative presentation arity");
  Int k = checked_add(g, r);
  Int ee1 = checked_add(e1, checked_mul(4, k));  // BK correction
  switch (family) {
    case WFamily::W0:
      return ChernTriple{
          checked_add(checked_mul(18, checked_add(s1, s2)),
                      checked_mul(12, checked_add(ee1, e2))),
          checked_mul(6, checked_add(checked_add(ee1, s1),
                                     checked_add(e2, s2))),
          checked_mul(2, checked_add(ee1, e2)),
      };
    case WFamily::W1:
      return ChernTriple{0, 0, 0};
    case WFamily::W2: {
      Int c13 = checked_sub(
          checked_neg(checked_add(checked_mul(18, checked_add(s1, s2)),
                                  checked_mul(12, checked_add(ee1, e2)))),
          48);
      Int c1c2 = checked_sub(
          checked_mul(-6, checked_add(checked_add(ee1, s1),
                                      checked_add(e2, s2))),
          24);
      Int c3 = checked_mul(-2, checked_add(ee1, e2));
      if (variant == C3Variant::with_minus8) c3 = checked_sub(c3, 8);
      return ChernTriple{c13, c1c2, c3};
    }
  }
  throw DomainError("unknown W family");
}

ChernTriple closed_form_y(YFamily family, Int n1, Int s1, Int n2, Int s2) {
  return closed_form_y_groups(family, n1, s1, n2, s2, 0, 0);
}

ChernTriple closed_form_y_groups(YFamily family, Int n1, Int s1, Int n2,
                                 Int s2, Int g, Int r) {
  if (n1 < 1 || n2 < 1 || s1 < 1 || s2 < 1)
    throw DomainError("spin family requires n >= 1 and s >= 1");
  if (g < 0 || r < 0) throw DomainError("negative presentation arity");
  Int k = g + r;
  Int nsum = checked_sub(checked_add(n1, n2), 2);
  Int ssum = checked_add(s1, s2);
  switch (family) {
    case YFamily::Y0:
      return ChernTriple{
          checked_mul(48, checked_add(nsum, k)),
          checked_add(checked_mul(48, ssum),
                      checked_mul(24, checked_add(nsum, k))),
          checked_add(checked_mul(48, ssum),
                      checked_mul(8, checked_add(nsum, k))),
      };
    case YFamily::Y1:
      return ChernTriple{0, 0, 0};
    case YFamily::Y2:
      return ChernTriple{
          checked_sub(checked_mul(-48, checked_add(nsum, k)), 48),
          checked_sub(checked_sub(checked_mul(-24, checked_add(nsum, k)),
                                  checked_mul(48, ssum)),
                      24),
          checked_sub(checked_sub(checked_mul(-8, checked_add(nsum, k)),
                                  checked_mul(48, ssum)),
                      8),
      };
  }
  throw DomainError("unknown Y family");
}

// --- Pipeline builders ------------------------------------------------------

namespace {

Int family_factor_genus(WFamily f) {
  switch (f) {
    case WFamily::W0: return 0;
    case WFamily::W1: return 1;
    case WFamily::W2: return 2;
  }
  return 0;
}

Recipe make_pipeline(bool spin, int family_index, Int p1a, Int p1b, Int p2a,
                     Int p2b, const Presentation& group) {
  Int factor = family_index;  // 0 -> S^2, 1 -> T^2, 2 -> Sigma_2
  Int locus_genus = family_index == 2 ? 2 : 1;

  auto block_leaf = [&](Int a, Int b) {
    LeafStep leaf;
    if (spin) {
      leaf.block = "SPIN";
      leaf.n = a;
      leaf.s = b;
    } else {
      leaf.block = family_index == 2 ? "Z12" : "Z11";
      leaf.e = a;
      leaf.sigma = b;
    }
    return leaf;
  };

  Recipe r;
  int x1 = r.add(block_leaf(p1a, p1b));
  if (group.ngens() > 0 || group.nrelators() > 0) {
    LeafStep bk;
    bk.block = "BK";
    bk.group = print_presentation(group);
    int bknode = r.add(bk);
    Sum4Step s;
    s.left = bknode;
    s.right = x1;
    s.genus = 1;
    x1 = r.add(s);
  }
  int x2 = r.add(block_leaf(p2a, p2b));
  ProductStep pr1;
  pr1.child = x1;
  pr1.genus = factor;
  int p1 = r.add(pr1);
  ProductStep pr2;
  pr2.child = x2;
  pr2.genus = factor;
  int p2 = r.add(pr2);
  Sum6Step s6;
  s6.left = p1;
  s6.right = p2;
  s6.locus_genus = locus_genus;
  s6.factor_genus = factor;
  r.root = r.add(s6);
  return r;
}

}  // namespace

Recipe make_w_pipeline(WFamily family, Int e1, Int s1, Int e2, Int s2,
                       const Presentation& group) {
  return make_pipeline(false, static_cast<int>(family_factor_genus(family)),
                       e1, s1, e2, s2, group);
}

Recipe make_y_pipeline(YFamily family, Int n1, Int s1, Int n2, Int s2,
                       const Presentation& group) {
  return make_pipeline(true, static_cast<int>(family), n1, s1, n2, s2, group);
}

}  // namespace symgeo
