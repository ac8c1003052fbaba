#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "symgeo/charnum.hpp"
#include "symgeo/fpgroup.hpp"

namespace symgeo {

enum class SubmanifoldKind { torus, genus2_surface, sphere };

int pushoff_count(SubmanifoldKind kind);  // 2 / 4 / 0
const char* kind_name(SubmanifoldKind kind);

// An embedded surface of a block together with the complement data a fiber
// sum needs. Words are over the complement presentation's generators; every
// complement presentation shares the ambient generator index space.
struct SubmanifoldData {
  std::string name;
  SubmanifoldKind kind = SubmanifoldKind::torus;
  Int self_intersection = 0;
  bool complement_pi1_equals_ambient = false;
  // Explicit complement presentation when it differs from the ambient group.
  std::optional<Presentation> complement_pi1;
  Word meridian;
  std::vector<Word> fiber_generator_pushoffs;
  bool homologically_essential = false;
  bool lagrangian = false;
  // Data asserted by citation rather than printed words; makes pi1_verified
  // sticky-false in any evaluation that glues along this submanifold.
  bool claimed_only = false;
};

enum class Claim { minimal, odd_form, spin };

struct BlockDescriptor {
  std::string id;
  CharNum4 char4;
  Presentation pi1;
  std::vector<SubmanifoldData> submanifolds;
  std::set<Claim> claims;
  std::string provenance;
};

// Complement presentation of one submanifold (ambient when flagged equal or
// when no explicit presentation is recorded).
const Presentation& complement_presentation(const BlockDescriptor& block,
                                            const SubmanifoldData& sub);

// True when gluing along this submanifold is verification-grade: either the
// complement words are printed data or the flagged ambient identification
// holds and nothing is merely claimed.
bool submanifold_verified(const SubmanifoldData& sub);

class Registry {
 public:
  void add(BlockDescriptor block);
  bool contains(const std::string& id) const;
  const BlockDescriptor& lookup(const std::string& id) const;
  const std::vector<BlockDescriptor>& all() const { return blocks_; }

 private:
  std::vector<BlockDescriptor> blocks_;
  std::map<std::string, std::size_t> index_;
};

// Parses the registry text format. One [block] section per block with
// key = value lines, [sub] sections for its submanifolds. Rejects duplicate
// ids and invariant violations, reporting line numbers.
Registry load_registry_text(const std::string& text);

// Registry bundled with the library (also shipped as data/blocks.txt).
const Registry& default_registry();
const std::string& default_registry_text();

// --- Parametric families -------------------------------------------------

// Block imposing an arbitrary finitely presented group: e = 4(g+r),
// sigma = 0, pi1 = target, one torus with trivial meridian and complement
// equal to the ambient group. (g, r) must match the target's arity.
BlockDescriptor bk_block(Int g, Int r, const Presentation& target);

// Presentation of the underlying mapping-torus product before any fiber
// sums: generators x_{k,l}, y_{k,l} (k <= g, l <= n), t, s with the surface
// relator, the monodromy conjugation relators and central s, where
// n = 1 + total length of the target's relators.
Presentation bk_raw_presentation(const Presentation& target);

// The words whose successive quotients collapse the raw presentation back to
// the target group: {s, t}, then {x_k y_k}, then the rewritten relators
// w~_i (negative generator occurrences replaced by the paired y).
struct BkMachineryWords {
  std::vector<Word> kill_s_t;
  std::vector<Word> kill_xy;
  std::vector<Word> rewritten_relators;
};
BkMachineryWords bk_machinery_words(const Presentation& target,
                                    const Presentation& raw);

enum class TelescopingId { A, B, C, D, F };

// Telescoping triples: pi1 = Z^2, two ordered tori with trivial meridians.
BlockDescriptor telescoping(TelescopingId id, Int g_param = 0);

enum class GeographyVariant { Z11, Z12 };

// Simply connected minimal blocks over the admissible region
// 2e+3s >= 0, e+s = 0 mod 4, e+s >= 8, s <= -1. Z11 carries two tori, Z12 a
// torus and a genus-2 surface, all with trivial complement data.
BlockDescriptor geography_block(Int e, Int sigma, GeographyVariant variant);

// Simply connected spin blocks with (c1^2, chi_h) = (8n-8, 2s+n-1), realized
// by the exact inverse e = 12*chi - c, sigma = c - 8*chi.
BlockDescriptor spin_block(Int n, Int s);

// T^2 x Sigma_g for g >= 1 with the symplectic torus factor (and, for g >= 2,
// the dual surface) as submanifolds.
BlockDescriptor t2_x_sigma_block(Int g);

// Mapping-torus block whose fiber sum along the section torus yields the
// free group F_n: pi1 = <x_i, y_i, t, s | surface, t x_i t^-1 = x_i,
// t y_i t^-1 = y_i x_i, s central>.
BlockDescriptor mapping_torus_block(Int n);

}  // namespace symgeo
