#include <json.hpp>
#include <sstream>

#include "symgeo/calculus.hpp"

namespace symgeo {

namespace {

using Json = nlohmann::ordered_json;

Json glue_to_json(const GlueSpec& g) {
  Json j = Json::object();
  if (g.left_locus) j["left_locus"] = *g.left_locus;
  if (g.right_locus) j["right_locus"] = *g.right_locus;
  if (g.style) j["style"] = *g.style;
  return j;
}

bool glue_set(const GlueSpec& g) {
  return g.left_locus || g.right_locus || g.style;
}

GlueSpec glue_from_json(const Json& j) {
  GlueSpec g;
  if (j.contains("left_locus")) g.left_locus = j.at("left_locus").get<int>();
  if (j.contains("right_locus")) g.right_locus = j.at("right_locus").get<int>();
  if (j.contains("style")) g.style = j.at("style").get<std::string>();
  return g;
}

Json step_to_json(const Step& step) {
  Json j = Json::object();
  if (const auto* s = std::get_if<LeafStep>(&step)) {
    j["op"] = "leaf";
    j["block"] = s->block;
    Json params = Json::object();
    if (s->block == "Z11" || s->block == "Z12") {
      params["e"] = s->e;
      params["sigma"] = s->sigma;
    } else if (s->block == "SPIN") {
      params["n"] = s->n;
      params["s"] = s->s;
    } else if (s->block == "BK") {
      params["group"] = s->group;
    } else if (s->block == "TEL") {
      params["family"] = s->family;
      if (s->family == "B") params["g"] = s->g;
    } else if (s->block == "T2XSIGMA") {
      params["g"] = s->g;
    } else if (s->block == "MT") {
      params["n"] = s->n;
    }
    if (!params.empty()) j["params"] = params;
  } else if (const auto* s = std::get_if<Sum4Step>(&step)) {
    j["op"] = "sum4";
    j["children"] = {s->left, s->right};
    j["genus"] = s->genus;
    if (glue_set(s->glue)) j["glue"] = glue_to_json(s->glue);
  } else if (const auto* s = std::get_if<LuttingerStep>(&step)) {
    j["op"] = "luttinger";
    j["children"] = {s->child};
    j["relator"] = s->relator;
  } else if (const auto* s = std::get_if<ProductStep>(&step)) {
    j["op"] = "product";
    j["children"] = {s->child};
    j["genus"] = s->genus;
  } else if (const auto* s = std::get_if<Sum6Step>(&step)) {
    j["op"] = "sum6";
    j["children"] = {s->left, s->right};
    j["fiber"] = Json{{"locus", s->locus_genus}, {"factor", s->factor_genus}};
    if (glue_set(s->glue)) j["glue"] = glue_to_json(s->glue);
  } else if (const auto* s = std::get_if<BlowUpPointStep>(&step)) {
    j["op"] = "blow_up_point";
    j["children"] = {s->child};
  } else if (const auto* s = std::get_if<BlowUpSurfaceStep>(&step)) {
    j["op"] = "blow_up_surface";
    j["children"] = {s->child};
    j["genus"] = s->genus;
    j["pairing"] = s->pairing;
  }
  return j;
}

int one_child(const Json& j) {
  const Json& c = j.at("children");
  if (!c.is_array() || c.size() != 1)
    throw ParseError("expected exactly one child");
  return c.at(0).get<int>();
}

std::pair<int, int> two_children(const Json& j) {
  const Json& c = j.at("children");
  if (!c.is_array() || c.size() != 2)
    throw ParseError("expected exactly two children");
  return {c.at(0).get<int>(), c.at(1).get<int>()};
}

Step step_from_json(const Json& j) {
  std::string op = j.at("op").get<std::string>();
  if (op == "leaf") {
    LeafStep s;
    s.block = j.at("block").get<std::string>();
    if (j.contains("params")) {
      const Json& p = j.at("params");
      if (p.contains("e")) s.e = p.at("e").get<Int>();
      if (p.contains("sigma")) s.sigma = p.at("sigma").get<Int>();
      if (p.contains("n")) s.n = p.at("n").get<Int>();
      if (p.contains("s")) s.s = p.at("s").get<Int>();
      if (p.contains("g")) s.g = p.at("g").get<Int>();
      if (p.contains("family")) s.family = p.at("family").get<std::string>();
      if (p.contains("group")) s.group = p.at("group").get<std::string>();
    }
    return s;
  }
  if (op == "sum4") {
    Sum4Step s;
    std::tie(s.left, s.right) = two_children(j);
    s.genus = j.at("genus").get<Int>();
    if (j.contains("glue")) s.glue = glue_from_json(j.at("glue"));
    return s;
  }
  if (op == "luttinger") {
    LuttingerStep s;
    s.child = one_child(j);
    s.relator = j.at("relator").get<std::string>();
    return s;
  }
  if (op == "product") {
    ProductStep s;
    s.child = one_child(j);
    s.genus = j.at("genus").get<Int>();
    return s;
  }
  if (op == "sum6") {
    Sum6Step s;
    std::tie(s.left, s.right) = two_children(j);
    s.locus_genus = j.at("fiber").at("locus").get<Int>();
    s.factor_genus = j.at("fiber").at("factor").get<Int>();
    if (j.contains("glue")) s.glue = glue_from_json(j.at("glue"));
    return s;
  }
  if (op == "blow_up_point") {
    BlowUpPointStep s;
    s.child = one_child(j);
    return s;
  }
  if (op == "blow_up_surface") {
    BlowUpSurfaceStep s;
    s.child = one_child(j);
    s.genus = j.at("genus").get<Int>();
    s.pairing = j.at("pairing").get<Int>();
    return s;
  }
  throw ParseError("unknown recipe op '" + op + "'");
}

}  // namespace

std::string recipe_to_json(const Recipe& recipe) {
  Json j;
  j["nodes"] = Json::array();
  for (const Step& s : recipe.nodes) j["nodes"].push_back(step_to_json(s));
  j["root"] = recipe.root;
  return j.dump(2) + "\n";
}

Recipe recipe_from_json(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("recipe JSON: ") + e.what(), e.byte);
  }
  try {
    Recipe r;
    for (const Json& n : j.at("nodes")) r.nodes.push_back(step_from_json(n));
    r.root = j.at("root").get<int>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("recipe JSON: ") + e.what());
  }
}

namespace {

std::string leaf_label(const LeafStep& s) {
  std::string label = s.block;
  if (s.block == "Z11" || s.block == "Z12")
    label += "(" + std::to_string(s.e) + "," + std::to_string(s.sigma) + ")";
  else if (s.block == "SPIN")
    label += "(" + std::to_string(s.n) + "," + std::to_string(s.s) + ")";
  else if (s.block == "TEL")
    label += " " + s.family + (s.family == "B" ? "_" + std::to_string(s.g) : "");
  else if (s.block == "T2XSIGMA")
    label += "(" + std::to_string(s.g) + ")";
  else if (s.block == "MT")
    label += "(" + std::to_string(s.n) + ")";
  else if (s.block == "BK")
    label += "<" + s.group + ">";
  return label;
}

}  // namespace

std::string to_dot(const Recipe& recipe, const Registry& registry) {
  // Evaluate every node so labels carry the computed invariants.
  std::ostringstream os;
  os << "digraph recipe {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < recipe.nodes.size(); ++i) {
    Recipe sub = recipe;
    sub.root = static_cast<int>(i);
    EvalResult res = evaluate(sub, registry, 8);
    std::ostringstream inv;
    if (res.dim == 4)
      inv << "e=" << res.char4->e << ", sigma=" << res.char4->sigma;
    else
      inv << "c13=" << res.chern->c13 << ", c1c2=" << res.chern->c1c2
          << ", c3=" << res.chern->c3;

    std::string kind;
    std::vector<int> children;
    const Step& step = recipe.nodes[i];
    if (const auto* s = std::get_if<LeafStep>(&step)) {
      kind = "leaf " + leaf_label(*s);
    } else if (const auto* s = std::get_if<Sum4Step>(&step)) {
      kind = "sum4 g=" + std::to_string(s->genus);
      children = {s->left, s->right};
    } else if (const auto* s = std::get_if<LuttingerStep>(&step)) {
      kind = "luttinger [" + s->relator + "]";
      children = {s->child};
    } else if (const auto* s = std::get_if<ProductStep>(&step)) {
      kind = "product x Sigma_" + std::to_string(s->genus);
      children = {s->child};
    } else if (const auto* s = std::get_if<Sum6Step>(&step)) {
      kind = "sum6 fiber (" + std::to_string(s->locus_genus) + "," +
             std::to_string(s->factor_genus) + ")";
      children = {s->left, s->right};
    } else if (const auto* s = std::get_if<BlowUpPointStep>(&step)) {
      kind = "blow_up_point";
      children = {s->child};
    } else if (const auto* s = std::get_if<BlowUpSurfaceStep>(&step)) {
      kind = "blow_up_surface g=" + std::to_string(s->genus) +
             " pairing=" + std::to_string(s->pairing);
      children = {s->child};
    }
    os << "  n" << i << " [label=\"" << kind << "\\n" << inv.str() << "\"];\n";
    for (int c : children) os << "  n" << c << " -> n" << i << ";\n";
  }
  os << "  n" << recipe.root << " [penwidth=2];\n}\n";
  return os.str();
}

}  // namespace symgeo
