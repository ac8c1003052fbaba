#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "symgeo/blocks.hpp"
#include "symgeo/charnum.hpp"
#include "symgeo/fpgroup.hpp"

namespace symgeo {

// --- Recipe ---------------------------------------------------------------

// Leaf referencing either a registry id or a parametric block call.
struct LeafStep {
  std::string block;            // registry id, or Z11/Z12/SPIN/BK/TEL/T2XSIGMA/MT
  Int e = 0, sigma = 0;         // Z11, Z12
  Int n = 0, s = 0;             // SPIN, MT (n), T2XSIGMA and TEL use g
  Int g = 0;
  std::string family;           // TEL: A, B, C, D, F
  std::string group;            // BK: presentation text
};

// Optional override of the default gluing: which submanifold on each side,
// and whether fiber generators map straight or crosswise.
struct GlueSpec {
  std::optional<int> left_locus;
  std::optional<int> right_locus;
  std::optional<std::string> style;  // "straight" | "crossed"
};

struct Sum4Step {
  int left = 0, right = 0;
  Int genus = 1;  // genus of the gluing surface
  GlueSpec glue;
};

struct LuttingerStep {
  int child = 0;
  std::string relator;  // surgery relator over the child's pi1 generators
};

struct ProductStep {
  int child = 0;
  Int genus = 0;  // genus of the surface factor
};

struct Sum6Step {
  int left = 0, right = 0;
  Int locus_genus = 1;   // 1 = torus, 2 = genus-2 surface
  Int factor_genus = 0;  // must match both children's product factor
  GlueSpec glue;
};

struct BlowUpPointStep {
  int child = 0;
};

struct BlowUpSurfaceStep {
  int child = 0;
  Int genus = 0;
  Int pairing = 0;  // <c1(N), [Sigma_g]>
};

using Step = std::variant<LeafStep, Sum4Step, LuttingerStep, ProductStep,
                          Sum6Step, BlowUpPointStep, BlowUpSurfaceStep>;

// A directed acyclic construction plan. Nodes reference earlier nodes by
// index; `root` names the result node.
struct Recipe {
  std::vector<Step> nodes;
  int root = 0;

  int add(Step step) {
    nodes.push_back(std::move(step));
    return static_cast<int>(nodes.size()) - 1;
  }
};

struct EvalResult {
  int dim = 4;
  std::optional<CharNum4> char4;
  std::optional<ChernTriple> chern;
  Presentation pi1;
  bool pi1_verified = true;
};

// Deterministic fold of charnum arithmetic and fpgroup combinators over the
// DAG. Throws RecipeError (with the node index) on dimension-discipline
// violations, missing gluing loci or unknown blocks.
EvalResult evaluate(const Recipe& recipe, const Registry& registry,
                    int tietze_budget = 64);

// --- Closed forms ---------------------------------------------------------

enum class WFamily { W0, W1, W2 };
enum class YFamily { Y0, Y1, Y2 };

// The printed c3(W2) formulas of the two group-variant statements disagree by
// a trailing -8; both are implemented. with_minus8 matches the pipeline
// arithmetic and is the default.
enum class C3Variant { with_minus8, without_minus8 };

ChernTriple closed_form_w(WFamily family, Int e1, Int s1, Int e2, Int s2);
ChernTriple closed_form_y(YFamily family, Int n1, Int s1, Int n2, Int s2);
ChernTriple closed_form_w_groups(WFamily family, Int e1, Int s1, Int e2,
                                 Int s2, Int g, Int r,
                                 C3Variant variant = C3Variant::with_minus8);
ChernTriple closed_form_y_groups(YFamily family, Int n1, Int s1, Int n2,
                                 Int s2, Int g, Int r);

// --- Pipeline builders ----------------------------------------------------

// W-family pipeline over two geography blocks, with an optional group
// imposed on the first factor (empty presentation = none).
Recipe make_w_pipeline(WFamily family, Int e1, Int s1, Int e2, Int s2,
                       const Presentation& group = Presentation());
Recipe make_y_pipeline(YFamily family, Int n1, Int s1, Int n2, Int s2,
                       const Presentation& group = Presentation());

// --- Serialization --------------------------------------------------------

// Lossless JSON round trip with stable field names (op, block, genus,
// pairing, children, glue, ...).
std::string recipe_to_json(const Recipe& recipe);
Recipe recipe_from_json(const std::string& text);

// Deterministic DOT graph, nodes labeled with op kind and evaluated
// invariants.
std::string to_dot(const Recipe& recipe, const Registry& registry);

}  // namespace symgeo
