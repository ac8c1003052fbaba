#include "symgeo/blocks.hpp"

#include <algorithm>
#include <sstream>

namespace symgeo {

int pushoff_count(SubmanifoldKind kind) {
  switch (kind) {
    case SubmanifoldKind::torus: return 2;
    case SubmanifoldKind::genus2_surface: return 4;
    case SubmanifoldKind::sphere: return 0;
  }
  return 0;
}

const char* kind_name(SubmanifoldKind kind) {
  switch (kind) {
    case SubmanifoldKind::torus: return "torus";
    case SubmanifoldKind::genus2_surface: return "genus2";
    case SubmanifoldKind::sphere: return "sphere";
  }
  return "?";
}

const Presentation& complement_presentation(const BlockDescriptor& block,
                                            const SubmanifoldData& sub) {
  if (sub.complement_pi1) return *sub.complement_pi1;
  return block.pi1;
}

bool submanifold_verified(const SubmanifoldData& sub) {
  if (sub.claimed_only) return false;
  return sub.complement_pi1.has_value() || sub.complement_pi1_equals_ambient;
}

void Registry::add(BlockDescriptor block) {
  if (index_.count(block.id))
    throw RegistryError("duplicate block id '" + block.id + "'");
  index_[block.id] = blocks_.size();
  blocks_.push_back(std::move(block));
}

bool Registry::contains(const std::string& id) const {
  return index_.count(id) > 0;
}

const BlockDescriptor& Registry::lookup(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end())
    throw UnknownBlockError("unknown block '" + id + "'");
  return blocks_[it->second];
}

// --- Parametric families ---------------------------------------------------

namespace {

Presentation z2_presentation() {
  Presentation p({"a", "b"});
  p.add_relator(commutator(Word({1}), Word({2})));
  return p;
}

SubmanifoldData trivial_torus(const std::string& name, bool claimed) {
  SubmanifoldData s;
  s.name = name;
  s.kind = SubmanifoldKind::torus;
  s.complement_pi1_equals_ambient = true;
  s.fiber_generator_pushoffs = {Word(), Word()};
  s.homologically_essential = true;
  s.lagrangian = true;
  s.claimed_only = claimed;
  return s;
}

SubmanifoldData trivial_genus2(const std::string& name, bool claimed) {
  SubmanifoldData s;
  s.name = name;
  s.kind = SubmanifoldKind::genus2_surface;
  s.complement_pi1_equals_ambient = true;
  s.fiber_generator_pushoffs = {Word(), Word(), Word(), Word()};
  s.homologically_essential = true;
  s.claimed_only = claimed;
  return s;
}

}  // namespace

BlockDescriptor bk_block(Int g, Int r, const Presentation& target) {
  if (g != target.ngens() || r != target.nrelators())
    throw DomainError("arity mismatch: block parameters (" + std::to_string(g) +
                      ", " + std::to_string(r) + ") vs presentation with " +
                      std::to_string(target.ngens()) + " generators, " +
                      std::to_string(target.nrelators()) + " relators");
  if (g < 0 || r < 0) throw DomainError("negative arity");
  BlockDescriptor b;
  b.id = "BK(" + std::to_string(g) + "," + std::to_string(r) + ")";
  b.char4 = CharNum4{4 * (g + r), 0, false};
  b.pi1 = target;
  SubmanifoldData t = trivial_torus("T0", false);
  t.lagrangian = false;
  b.submanifolds.push_back(std::move(t));
  b.claims = {Claim::minimal};
  b.provenance = "group-imposing block, mapping-torus product fiber-summed "
                 "with one spin filler per generator and relation";
  return b;
}

Presentation bk_raw_presentation(const Presentation& target) {
  Int g = target.ngens();
  Int n = 1;
  for (const Word& w : target.relators) n += static_cast<Int>(w.size());

  Presentation raw;
  if (g == 0) {
    // Degenerate fiber: only the section and circle directions remain.
    raw.generator_names = {"t", "s"};
    raw.add_relator(commutator(Word({2}), Word({1})));
    return raw;
  }

  // x_{k,l}, y_{k,l} laid out column-major in l: index(x,k,l) = 2(l*g + k).
  for (Int l = 0; l < n; ++l)
    for (Int k = 0; k < g; ++k) {
      raw.generator_names.push_back("x" + std::to_string(k + 1) + "_" +
                                    std::to_string(l + 1));
      raw.generator_names.push_back("y" + std::to_string(k + 1) + "_" +
                                    std::to_string(l + 1));
    }
  int t = raw.add_generator("t");
  int s = raw.add_generator("s");

  auto x = [&](Int k, Int l) {
    return static_cast<int>(2 * ((l % n) * g + k)) + 1;
  };
  auto y = [&](Int k, Int l) {
    return static_cast<int>(2 * ((l % n) * g + k)) + 2;
  };

  Word surface;
  for (Int l = 0; l < n; ++l)
    for (Int k = 0; k < g; ++k)
      surface = concat(surface, commutator(Word({x(k, l)}), Word({y(k, l)})));
  raw.add_relator(surface);

  // Monodromy: R(x_{k,l}) = x_{k,l+1} = t x_{k,l} t^-1.
  for (Int l = 0; l < n; ++l)
    for (Int k = 0; k < g; ++k) {
      raw.add_relator(Word({x(k, l + 1), t + 1, -x(k, l), -(t + 1)}));
      raw.add_relator(Word({y(k, l + 1), t + 1, -y(k, l), -(t + 1)}));
    }

  for (Int l = 0; l < n; ++l)
    for (Int k = 0; k < g; ++k) {
      raw.add_relator(commutator(Word({s + 1}), Word({x(k, l)})));
      raw.add_relator(commutator(Word({s + 1}), Word({y(k, l)})));
    }
  raw.add_relator(commutator(Word({s + 1}), Word({t + 1})));
  return raw;
}

BkMachineryWords bk_machinery_words(const Presentation& target,
                                    const Presentation& raw) {
  Int g = target.ngens();
  BkMachineryWords out;
  int t = raw.find_generator("t");
  int s = raw.find_generator("s");
  out.kill_s_t = {Word({s + 1}), Word({t + 1})};
  if (g == 0) return out;

  auto x1 = [&](Int k) { return static_cast<int>(2 * k) + 1; };
  auto y1 = [&](Int k) { return static_cast<int>(2 * k) + 2; };

  for (Int k = 0; k < g; ++k)
    out.kill_xy.push_back(Word({x1(k), y1(k)}));

  // w~_i: each x_k^-1 occurrence becomes the paired y_k, so the word is a
  // product of positive letters.
  for (const Word& w : target.relators) {
    Word wt;
    for (int l : w.letters)
      wt.letters.push_back(l > 0 ? x1(l - 1) : y1(-l - 1));
    out.rewritten_relators.push_back(wt);
  }
  return out;
}

BlockDescriptor telescoping(TelescopingId id, Int g_param) {
  if (g_param < 0) throw DomainError("telescoping genus must be non-negative");
  BlockDescriptor b;
  switch (id) {
    case TelescopingId::A:
      b.id = "A";
      b.char4 = {5, -1, false};
      break;
    case TelescopingId::B:
      b.id = "B_" + std::to_string(g_param);
      b.char4 = {6 + 4 * g_param, -2, false};
      break;
    case TelescopingId::C:
      b.id = "C";
      b.char4 = {7, -3, false};
      break;
    case TelescopingId::D:
      b.id = "D";
      b.char4 = {8, -4, false};
      break;
    case TelescopingId::F:
      b.id = "F";
      b.char4 = {10, -6, false};
      break;
  }
  b.pi1 = z2_presentation();

  // T1 includes as a Z summand, T2 as all of Z^2; meridians are trivial and
  // the complement group is the ambient one. The particular push-off words
  // are not printed, so the data is flagged as claimed.
  SubmanifoldData t1 = trivial_torus("T1", true);
  t1.fiber_generator_pushoffs = {Word({1}), Word()};
  SubmanifoldData t2 = trivial_torus("T2", true);
  t2.fiber_generator_pushoffs = {Word({1}), Word({2})};
  b.submanifolds = {std::move(t1), std::move(t2)};
  b.claims = {Claim::minimal};
  b.provenance = "telescoping triple";
  return b;
}

namespace {

void require_geography_region(Int e, Int sigma) {
  Int c1sq = 2 * e + 3 * sigma;
  if (c1sq < 0)
    throw DomainError("inadmissible point: 2e+3sigma = " +
                      std::to_string(c1sq) + " < 0");
  Int sum = e + sigma;
  if (((sum % 4) + 4) % 4 != 0)
    throw DomainError("inadmissible point: e+sigma = " + std::to_string(sum) +
                      " is not divisible by 4");
  if (sum < 8)
    throw DomainError("inadmissible point: e+sigma = " + std::to_string(sum) +
                      " < 8");
  if (sigma > -1)
    throw DomainError("inadmissible point: sigma = " + std::to_string(sigma) +
                      " > -1");
}

}  // namespace

BlockDescriptor geography_block(Int e, Int sigma, GeographyVariant variant) {
  require_geography_region(e, sigma);
  BlockDescriptor b;
  b.char4 = {e, sigma, false};
  b.claims = {Claim::minimal, Claim::odd_form};
  if (variant == GeographyVariant::Z11) {
    b.id = "Z11(" + std::to_string(e) + "," + std::to_string(sigma) + ")";
    b.submanifolds = {trivial_torus("T1", false), trivial_torus("T2", false)};
    b.provenance = "simply connected minimal block with two Lagrangian tori";
  } else {
    b.id = "Z12(" + std::to_string(e) + "," + std::to_string(sigma) + ")";
    SubmanifoldData f = trivial_genus2("F", false);
    b.submanifolds = {trivial_torus("T1", false), std::move(f)};
    b.provenance =
        "simply connected minimal block with a Lagrangian torus and a "
        "genus-2 surface";
  }
  return b;
}

BlockDescriptor spin_block(Int n, Int s) {
  if (n < 1 || s < 1)
    throw DomainError("spin block requires n >= 1 and s >= 1");
  Int c = 8 * n - 8;
  Int chi = 2 * s + n - 1;
  BlockDescriptor b;
  b.id = "SPIN(" + std::to_string(n) + "," + std::to_string(s) + ")";
  b.char4 = {12 * chi - c, c - 8 * chi, true};
  SubmanifoldData t = trivial_torus("T", false);
  t.lagrangian = false;
  b.submanifolds.push_back(std::move(t));
  // Parallel nucleus copy and the genus-2 surface used by the
  // Sigma_2-fiber sums; citation data only.
  SubmanifoldData t2 = trivial_torus("T2", true);
  t2.lagrangian = false;
  b.submanifolds.push_back(std::move(t2));
  b.submanifolds.push_back(trivial_genus2("F", true));
  b.claims = {Claim::minimal, Claim::spin};
  b.provenance = "simply connected spin block with nucleus torus";
  return b;
}

BlockDescriptor t2_x_sigma_block(Int g) {
  if (g < 1) throw DomainError("t2_x_sigma_block requires genus >= 1");
  BlockDescriptor b;
  b.id = "T2xSigma(" + std::to_string(g) + ")";
  b.char4 = {0, 0, false};  // chi(T^2) = 0 kills the product Euler number

  Presentation ambient({"x", "y"});
  std::vector<int> a, bb;
  for (Int i = 0; i < g; ++i) {
    a.push_back(ambient.add_generator("a" + std::to_string(i + 1)));
    bb.push_back(ambient.add_generator("b" + std::to_string(i + 1)));
  }
  Word surface;
  for (Int i = 0; i < g; ++i)
    surface =
        concat(surface, commutator(Word({a[i] + 1}), Word({bb[i] + 1})));

  Presentation no_surface = ambient;  // torus factor free of the puncture
  no_surface.add_relator(commutator(Word({1}), Word({2})));
  Presentation no_torus_rel = ambient;
  for (Int i = 0; i < g; ++i) {
    for (int xy : {1, 2}) {
      no_surface.add_relator(commutator(Word({xy}), Word({a[i] + 1})));
      no_surface.add_relator(commutator(Word({xy}), Word({bb[i] + 1})));
      no_torus_rel.add_relator(commutator(Word({xy}), Word({a[i] + 1})));
      no_torus_rel.add_relator(commutator(Word({xy}), Word({bb[i] + 1})));
    }
  }
  no_torus_rel.add_relator(surface);

  b.pi1 = no_surface;
  b.pi1.add_relator(surface);

  SubmanifoldData tsym;
  tsym.name = "Tsym";
  tsym.kind = SubmanifoldKind::torus;
  tsym.complement_pi1 = no_surface;
  tsym.meridian = surface;
  tsym.fiber_generator_pushoffs = {Word({1}), Word({2})};
  tsym.homologically_essential = true;
  b.submanifolds.push_back(std::move(tsym));

  if (g == 2) {
    SubmanifoldData f;
    f.name = "F";
    f.kind = SubmanifoldKind::genus2_surface;
    f.complement_pi1 = no_torus_rel;
    f.meridian = commutator(Word({1}), Word({2}));
    f.fiber_generator_pushoffs = {Word({a[0] + 1}), Word({bb[0] + 1}),
                                  Word({a[1] + 1}), Word({bb[1] + 1})};
    f.homologically_essential = true;
    b.submanifolds.push_back(std::move(f));
  }
  b.claims = {Claim::minimal};
  b.provenance = "product of the torus with a genus-" + std::to_string(g) +
                 " surface";
  return b;
}

BlockDescriptor mapping_torus_block(Int n) {
  if (n < 1) throw DomainError("mapping_torus_block requires n >= 1");
  BlockDescriptor b;
  b.id = "MT(" + std::to_string(n) + ")";
  b.char4 = {0, 0, false};

  Presentation ambient;
  for (Int i = 0; i < n; ++i) {
    ambient.add_generator("x" + std::to_string(i + 1));
    ambient.add_generator("y" + std::to_string(i + 1));
  }
  int t = ambient.add_generator("t");
  int s = ambient.add_generator("s");
  auto x = [&](Int i) { return static_cast<int>(2 * i) + 1; };
  auto y = [&](Int i) { return static_cast<int>(2 * i) + 2; };

  Word surface;
  for (Int i = 0; i < n; ++i)
    surface = concat(surface, commutator(Word({x(i)}), Word({y(i)})));

  Presentation complement = ambient;
  for (Int i = 0; i < n; ++i) {
    // t x_i t^-1 = x_i and t y_i t^-1 = y_i x_i
    complement.add_relator(Word({t + 1, x(i), -(t + 1), -x(i)}));
    complement.add_relator(Word({t + 1, y(i), -(t + 1), -x(i), -y(i)}));
  }
  for (Int i = 0; i < n; ++i) {
    complement.add_relator(commutator(Word({s + 1}), Word({x(i)})));
    complement.add_relator(commutator(Word({s + 1}), Word({y(i)})));
  }
  complement.add_relator(commutator(Word({s + 1}), Word({t + 1})));

  b.pi1 = complement;
  b.pi1.add_relator(surface);

  SubmanifoldData sec;
  sec.name = "Tsec";
  sec.kind = SubmanifoldKind::torus;
  sec.complement_pi1 = complement;
  sec.meridian = surface;
  sec.fiber_generator_pushoffs = {Word({t + 1}), Word({s + 1})};
  sec.homologically_essential = true;
  b.submanifolds.push_back(std::move(sec));
  b.provenance = "mapping torus of Dehn twists, times the circle";
  return b;
}

}  // namespace symgeo
