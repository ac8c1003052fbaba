#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "symgeo/planner.hpp"

using namespace symgeo;
using Json = nlohmann::ordered_json;

namespace {

// Exit codes: 0 ok, 1 registry failure, 2 parse error, 3 evaluation error,
// 4 inadmissible target, 5 search exhausted, 6 pi1 mismatch,
// 7 pi1 unverifiable.
constexpr int kExitRegistry = 1;
constexpr int kExitParse = 2;
constexpr int kExitEval = 3;
constexpr int kExitInadmissible = 4;
constexpr int kExitExhausted = 5;
constexpr int kExitMismatch = 6;
constexpr int kExitUnverifiable = 7;

struct Options {
  std::string registry_path;
  bool json = false;
  bool timing = false;
};

Registry load_registry(const Options& opt) {
  if (opt.registry_path.empty()) return default_registry();
  std::ifstream in(opt.registry_path);
  if (!in)
    throw RegistryError("cannot open registry file '" + opt.registry_path +
                        "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_registry_text(buf.str());
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string claims_text(const BlockDescriptor& b) {
  std::string out;
  for (Claim c : b.claims) {
    if (!out.empty()) out += ",";
    out += c == Claim::minimal ? "minimal"
           : c == Claim::odd_form ? "odd_form"
                                  : "spin";
  }
  return out;
}

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  long long ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

void emit_timing(const Options& opt, const Timer& t) {
  if (opt.timing) std::cout << "timing_ms: " << t.ms() << "\n";
}

// --- blocks -----------------------------------------------------------------

const std::vector<std::pair<const char*, const char*>> kParametricFamilies = {
    {"Z11(e,sigma)", "simply connected geography block, two Lagrangian tori"},
    {"Z12(e,sigma)", "simply connected geography block, torus + genus-2"},
    {"SPIN(n,s)", "spin block with (c1sq, chi_h) = (8n-8, 2s+n-1)"},
    {"BK(group)", "group-imposing block, e = 4(g+r), sigma = 0"},
    {"TEL(A|B_g|C|D|F)", "telescoping triples, pi1 = Z^2"},
    {"T2XSIGMA(g)", "torus times genus-g surface"},
    {"MT(n)", "mapping-torus block summing to the free group F_n"},
};

int cmd_blocks(const Options& opt, const std::string& filter) {
  Timer timer;
  Registry reg = load_registry(opt);
  std::vector<const BlockDescriptor*> rows;
  for (const BlockDescriptor& b : reg.all())
    if (filter.empty() || b.id.find(filter) != std::string::npos)
      rows.push_back(&b);

  if (opt.json) {
    Json out;
    out["blocks"] = Json::array();
    for (const BlockDescriptor* b : rows) {
      Json j;
      j["id"] = b->id;
      j["e"] = b->char4.e;
      j["sigma"] = b->char4.sigma;
      j["c1sq"] = b->char4.c1_squared();
      j["chi_h"] = b->char4.chi_h();
      j["spin"] = b->char4.spin;
      j["claims"] = claims_text(*b);
      j["provenance"] = b->provenance;
      out["blocks"].push_back(j);
    }
    out["parametric"] = Json::array();
    for (const auto& [name, what] : kParametricFamilies)
      if (filter.empty() ||
          std::string(name).find(filter) != std::string::npos)
        out["parametric"].push_back(Json{{"family", name}, {"what", what}});
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << std::left << std::setw(12) << "id" << std::right
              << std::setw(5) << "e" << std::setw(7) << "sigma"
              << std::setw(6) << "c1sq" << std::setw(7) << "chi_h"
              << "  " << std::left << std::setw(18) << "claims"
              << "provenance\n";
    for (const BlockDescriptor* b : rows) {
      std::cout << std::left << std::setw(12) << b->id << std::right
                << std::setw(5) << b->char4.e << std::setw(7)
                << b->char4.sigma << std::setw(6) << b->char4.c1_squared()
                << std::setw(7) << b->char4.chi_h() << "  " << std::left
                << std::setw(18) << claims_text(*b) << b->provenance << "\n";
    }
    bool header = false;
    for (const auto& [name, what] : kParametricFamilies) {
      if (!filter.empty() &&
          std::string(name).find(filter) == std::string::npos)
        continue;
      if (!header) {
        std::cout << "\nparametric families:\n";
        header = true;
      }
      std::cout << "  " << std::left << std::setw(20) << name << what << "\n";
    }
  }
  emit_timing(opt, timer);
  return 0;
}

// --- eval -------------------------------------------------------------------

void print_result(const Options& opt, const EvalResult& res) {
  if (opt.json) {
    Json j;
    j["dim"] = res.dim;
    if (res.char4) {
      j["e"] = res.char4->e;
      j["sigma"] = res.char4->sigma;
      j["c1sq"] = res.char4->c1_squared();
      if (res.char4->chi_h_defined()) j["chi_h"] = res.char4->chi_h();
      j["spin"] = res.char4->spin;
    }
    if (res.chern) {
      j["c13"] = res.chern->c13;
      j["c1c2"] = res.chern->c1c2;
      j["c3"] = res.chern->c3;
    }
    j["pi1"] = print_presentation(res.pi1);
    j["pi1_abelianization"] = abelianization(res.pi1).str();
    j["pi1_status"] = res.pi1_verified ? "verified" : "unverifiable";
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::cout << "dim: " << res.dim << "\n";
  if (res.char4) {
    std::cout << "char: e=" << res.char4->e << " sigma=" << res.char4->sigma
              << " c1sq=" << res.char4->c1_squared();
    if (res.char4->chi_h_defined())
      std::cout << " chi_h=" << res.char4->chi_h();
    std::cout << " spin=" << (res.char4->spin ? "true" : "false") << "\n";
  }
  if (res.chern)
    std::cout << "chern: c13=" << res.chern->c13
              << " c1c2=" << res.chern->c1c2 << " c3=" << res.chern->c3
              << "\n";
  std::cout << "pi1: <" << print_presentation(res.pi1) << ">\n";
  std::cout << "pi1 abelianization: " << abelianization(res.pi1).str() << "\n";
  std::cout << "pi1 status: " << (res.pi1_verified ? "verified" : "unverifiable")
            << "\n";
}

int cmd_eval(const Options& opt, const std::string& path) {
  Timer timer;
  Registry reg = load_registry(opt);
  Recipe recipe = recipe_from_json(read_file(path));
  EvalResult res = evaluate(recipe, reg);
  print_result(opt, res);
  emit_timing(opt, timer);
  return 0;
}

// --- realize ----------------------------------------------------------------

int cmd_realize(const Options& opt, Int c13, Int c1c2, Int c3,
                const std::string& group_text, const std::string& emit_path,
                const std::string& dot_path) {
  Timer timer;
  Registry reg = load_registry(opt);
  Target6 target{c13, c1c2, c3, parse_presentation(group_text)};
  Recipe recipe = realize(target, reg);
  EvalResult res = evaluate(recipe, reg);
  bool exact = res.chern->c13 == c13 && res.chern->c1c2 == c1c2 &&
               res.chern->c3 == c3;

  if (!emit_path.empty()) {
    std::ofstream out(emit_path);
    out << recipe_to_json(recipe);
  }
  if (!dot_path.empty()) {
    std::ofstream out(dot_path);
    out << to_dot(recipe, reg);
  }

  if (opt.json) {
    Json j;
    j["target"] = Json{{"c13", c13}, {"c1c2", c1c2}, {"c3", c3},
                       {"group", group_text}};
    j["recipe"] = Json::parse(recipe_to_json(recipe));
    j["c13"] = res.chern->c13;
    j["c1c2"] = res.chern->c1c2;
    j["c3"] = res.chern->c3;
    j["verification"] = exact ? "exact match" : "MISMATCH";
    j["pi1"] = print_presentation(res.pi1);
    j["pi1_status"] = res.pi1_verified ? "verified" : "unverifiable";
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "target: c13=" << c13 << " c1c2=" << c1c2 << " c3=" << c3
              << " group=<" << group_text << ">\n";
    std::cout << "recipe: " << recipe.nodes.size() << " nodes, root "
              << recipe.root << "\n";
    std::cout << "chern: c13=" << res.chern->c13
              << " c1c2=" << res.chern->c1c2 << " c3=" << res.chern->c3
              << "\n";
    std::cout << "verification: " << (exact ? "exact match" : "MISMATCH")
              << "\n";
    std::cout << "pi1: <" << print_presentation(res.pi1) << ">\n";
    std::cout << "pi1 status: "
              << (res.pi1_verified ? "verified" : "unverifiable") << "\n";
  }
  emit_timing(opt, timer);
  return exact ? 0 : kExitEval;
}

// --- geography ----------------------------------------------------------------

int cmd_geography(const Options& opt, const std::string& window, bool spin,
                  Int g, Int r, const std::string& csv_path) {
  Timer timer;
  std::size_t dots = window.find("..");
  if (dots == std::string::npos)
    throw ParseError("chi window must have the form a..b");
  Int lo, hi;
  try {
    lo = std::stoll(window.substr(0, dots));
    hi = std::stoll(window.substr(dots + 2));
  } catch (const std::exception&) {
    throw ParseError("chi window must have the form a..b");
  }

  std::vector<GeographyPoint> pts = enumerate_region_4d(lo, hi, g, r, spin);
  const char* family = spin ? "spin" : "nonspin";

  // Witness block data: (e, sigma) directly for the nonspin family, derived
  // from (n, s) via e = 4n + 24s - 4, sigma = -16s for the spin family.
  auto witness_e = [&](const GeographyPoint& p) {
    return spin ? 4 * p.n + 24 * p.s - 4 : p.e;
  };
  auto witness_sigma = [&](const GeographyPoint& p) {
    return spin ? -16 * p.s : p.sigma;
  };

  if (!csv_path.empty()) {
    std::ofstream out(csv_path);
    out << "c1sq,chi_h,e,sigma,family\n";
    for (const GeographyPoint& p : pts)
      out << p.c1sq << "," << p.chi_h << "," << witness_e(p) << ","
          << witness_sigma(p) << "," << family << "\n";
  }

  if (opt.json) {
    Json out = Json::array();
    for (const GeographyPoint& p : pts) {
      Json j;
      j["c1sq"] = p.c1sq;
      j["chi_h"] = p.chi_h;
      if (p.c1sq_printed != p.c1sq) j["c1sq_printed"] = p.c1sq_printed;
      j["e"] = witness_e(p);
      j["sigma"] = witness_sigma(p);
      if (spin) {
        j["n"] = p.n;
        j["s"] = p.s;
      }
      j["family"] = family;
      out.push_back(j);
    }
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "c1sq,chi_h,e,sigma,family\n";
    for (const GeographyPoint& p : pts) {
      std::cout << p.c1sq << "," << p.chi_h << "," << witness_e(p) << ","
                << witness_sigma(p) << "," << family;
      if (p.c1sq_printed != p.c1sq)
        std::cout << "  # printed frame c1sq=" << p.c1sq_printed;
      std::cout << "\n";
    }
  }
  emit_timing(opt, timer);
  return 0;
}

// --- check-pi1 ----------------------------------------------------------------

int cmd_check_pi1(const Options& opt, const std::string& path,
                  const std::string& expect_text) {
  Timer timer;
  Registry reg = load_registry(opt);
  Recipe recipe = recipe_from_json(read_file(path));
  Presentation expected = parse_presentation(expect_text);
  EvalResult res = evaluate(recipe, reg);

  std::string status;
  std::string detail;
  int code = 0;
  if (!res.pi1_verified) {
    status = "unverifiable";
    detail = "recipe glues along claimed submanifold data";
    code = kExitUnverifiable;
  } else {
    Presentation simplified = tietze_simplify(res.pi1);
    Presentation target = tietze_simplify(expected);
    if (syntactically_equal(simplified, target)) {
      status = "verified";
      detail = "simplified presentation is syntactically the target";
    } else {
      OracleComparison cmp = compare_by_oracles(simplified, target);
      if (cmp.match) {
        status = "consistent-with";
        detail = "abelianization and hom counts";
        for (int n : cmp.hom_degrees_checked)
          detail += " S" + std::to_string(n);
        detail += " all match";
      } else {
        status = "mismatch";
        detail = cmp.first_failure;
        code = kExitMismatch;
      }
    }
  }

  if (opt.json) {
    Json j;
    j["pi1"] = print_presentation(res.pi1);
    j["expected"] = expect_text;
    j["status"] = status;
    j["detail"] = detail;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "pi1: <" << print_presentation(res.pi1) << ">\n";
    std::cout << "expected: <" << expect_text << ">\n";
    std::cout << "status: " << status << " (" << detail << ")\n";
  }
  emit_timing(opt, timer);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"symplectic geography calculus"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--registry", opt.registry_path,
                 "registry file (default: bundled data)")
      ->envname("SYMGEO_REGISTRY");
  app.add_flag("--json", opt.json, "machine-readable output");
  app.add_flag("--timing", opt.timing, "append a timing line");

  std::string filter;
  CLI::App* blocks = app.add_subcommand("blocks", "list registry blocks");
  blocks->add_option("filter", filter, "substring filter on block ids");

  std::string eval_path;
  CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate a recipe file");
  eval_cmd->add_option("recipe", eval_path, "recipe JSON file")->required();

  Int c13 = 0, c1c2 = 0, c3 = 0;
  std::string group_text, emit_path, dot_path;
  CLI::App* realize_cmd =
      app.add_subcommand("realize", "find a recipe hitting a Chern triple");
  realize_cmd->add_option("--c13", c13, "target c1^3")->required();
  realize_cmd->add_option("--c1c2", c1c2, "target c1c2")->required();
  realize_cmd->add_option("--c3", c3, "target c3")->required();
  realize_cmd->add_option("--group", group_text,
                          "fundamental group presentation text");
  realize_cmd->add_option("--emit", emit_path, "write the recipe JSON here");
  realize_cmd->add_option("--dot", dot_path, "write a DOT graph here");

  std::string window = "2..2";
  bool spin = false, nonspin = false;
  Int dim = 4, gg = 0, rr = 0;
  std::string csv_path;
  CLI::App* geo = app.add_subcommand("geography", "enumerate lattice points");
  geo->add_option("--dim", dim, "dimension (4)");
  geo->add_option("--chi-window", window, "chi_h range a..b")->required();
  geo->add_flag("--spin", spin, "spin family");
  geo->add_flag("--nonspin", nonspin, "nonspin family");
  geo->add_option("--g", gg, "generator count of the target group");
  geo->add_option("--r", rr, "relation count of the target group");
  geo->add_option("--csv", csv_path, "write CSV here");

  std::string check_path, expect_text;
  CLI::App* check =
      app.add_subcommand("check-pi1", "compare a recipe's pi1 with a target");
  check->add_option("recipe", check_path, "recipe JSON file")->required();
  check->add_option("--expect", expect_text, "target presentation text")
      ->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (blocks->parsed()) return cmd_blocks(opt, filter);
    if (eval_cmd->parsed()) return cmd_eval(opt, eval_path);
    if (realize_cmd->parsed())
      return cmd_realize(opt, c13, c1c2, c3, group_text, emit_path, dot_path);
    if (geo->parsed()) {
      if (dim != 4) throw ParseError("only --dim 4 is supported");
      if (spin == nonspin)
        throw ParseError("pass exactly one of --spin / --nonspin");
      return cmd_geography(opt, window, spin, gg, rr, csv_path);
    }
    if (check->parsed()) return cmd_check_pi1(opt, check_path, expect_text);
  } catch (const RegistryError& e) {
    std::cerr << "registry error";
    if (e.line() > 0) std::cerr << " (line " << e.line() << ")";
    std::cerr << ": " << e.what() << "\n";
    return kExitRegistry;
  } catch (const ParseError& e) {
    std::cerr << "parse error";
    if (e.position() > 0) std::cerr << " (at byte " << e.position() << ")";
    std::cerr << ": " << e.what() << "\n";
    return kExitParse;
  } catch (const AdmissibilityError& e) {
    std::cerr << "inadmissible target: " << e.what() << "\n";
    return kExitInadmissible;
  } catch (const SearchExhaustedError& e) {
    std::cerr << "search exhausted: " << e.what() << "\n";
    return kExitExhausted;
  } catch (const RecipeError& e) {
    std::cerr << "evaluation error";
    if (e.node() >= 0) std::cerr << " (node " << e.node() << ")";
    std::cerr << ": " << e.what() << "\n";
    return kExitEval;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitEval;
  }
  return 0;
}
