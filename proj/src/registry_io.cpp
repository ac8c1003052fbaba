#include <optional>
#include <sstream>

#include "symgeo/blocks.hpp"

namespace symgeo {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

bool parse_bool(const std::string& v, int line) {
  if (v == "true") return true;
  if (v == "false") return false;
  throw RegistryError("expected true/false, got '" + v + "'", line);
}

Int parse_int(const std::string& v, int line) {
  try {
    std::size_t pos = 0;
    long long x = std::stoll(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw RegistryError("expected integer, got '" + v + "'", line);
  }
}

SubmanifoldKind parse_kind(const std::string& v, int line) {
  if (v == "torus") return SubmanifoldKind::torus;
  if (v == "genus2") return SubmanifoldKind::genus2_surface;
  if (v == "sphere") return SubmanifoldKind::sphere;
  throw RegistryError("unknown submanifold kind '" + v + "'", line);
}

Claim parse_claim(const std::string& v, int line) {
  if (v == "minimal") return Claim::minimal;
  if (v == "odd_form") return Claim::odd_form;
  if (v == "spin") return Claim::spin;
  throw RegistryError("unknown claim '" + v + "'", line);
}

// Raw text of one submanifold section; words are resolved against the block's
// presentations once the whole block has been read.
struct RawSub {
  int line = 0;
  std::string name;
  std::optional<SubmanifoldKind> kind;
  Int self_intersection = 0;
  bool equals_ambient = false;
  std::optional<std::string> complement_text;
  std::string meridian_text;
  std::optional<std::string> pushoffs_text;
  bool essential = false;
  bool lagrangian = false;
  bool claimed = false;
};

struct RawBlock {
  int line = 0;
  std::string id;
  std::optional<Int> e, sigma;
  bool spin = false;
  std::set<Claim> claims;
  std::string provenance;
  std::string pi1_text;
  std::vector<RawSub> subs;
};

std::vector<std::string> split_words(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ';') {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

BlockDescriptor finalize(const RawBlock& raw) {
  if (raw.id.empty()) throw RegistryError("block without id", raw.line);
  if (!raw.e || !raw.sigma)
    throw RegistryError("block '" + raw.id + "' missing e or sigma", raw.line);

  BlockDescriptor b;
  b.id = raw.id;
  b.char4 = {*raw.e, *raw.sigma, raw.spin};
  if (raw.spin && ((*raw.sigma % 16) + 16) % 16 != 0)
    throw RegistryError("block '" + raw.id + "' declares spin but sigma = " +
                            std::to_string(*raw.sigma) +
                            " is not divisible by 16",
                        raw.line);
  b.claims = raw.claims;
  b.provenance = raw.provenance;
  try {
    b.pi1 = parse_presentation(raw.pi1_text);
  } catch (const ParseError& e) {
    throw RegistryError("block '" + raw.id + "': " + e.what(), raw.line);
  }

  for (const RawSub& rs : raw.subs) {
    SubmanifoldData s;
    s.name = rs.name;
    if (!rs.kind)
      throw RegistryError("submanifold of '" + raw.id + "' missing kind",
                          rs.line);
    s.kind = *rs.kind;
    s.self_intersection = rs.self_intersection;
    s.complement_pi1_equals_ambient = rs.equals_ambient;
    s.homologically_essential = rs.essential;
    s.lagrangian = rs.lagrangian;
    s.claimed_only = rs.claimed;

    const Presentation* word_space = &b.pi1;
    try {
      if (rs.complement_text) {
        Presentation comp = parse_presentation(*rs.complement_text);
        // Complements must share the ambient generator index space so that
        // words stay valid when submanifolds are inherited across sums.
        if (comp.ngens() != b.pi1.ngens())
          throw RegistryError(
              "complement presentation of '" + raw.id +
                  "' must share the ambient generator index space",
              rs.line);
        s.complement_pi1 = std::move(comp);
        word_space = &*s.complement_pi1;
      }
      s.meridian = parse_word(rs.meridian_text, *word_space);
      if (rs.pushoffs_text)
        for (const std::string& w : split_words(*rs.pushoffs_text))
          s.fiber_generator_pushoffs.push_back(parse_word(w, *word_space));
    } catch (const ParseError& e) {
      throw RegistryError("submanifold of '" + raw.id + "': " + e.what(),
                          rs.line);
    }

    int expected = pushoff_count(s.kind);
    if (static_cast<int>(s.fiber_generator_pushoffs.size()) != expected)
      throw RegistryError(
          "submanifold '" + s.name + "' of '" + raw.id + "' needs " +
              std::to_string(expected) + " push-offs, got " +
              std::to_string(s.fiber_generator_pushoffs.size()),
          rs.line);
    b.submanifolds.push_back(std::move(s));
  }
  return b;
}

}  // namespace

Registry load_registry_text(const std::string& text) {
  Registry reg;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;

  std::optional<RawBlock> block;
  RawSub* sub = nullptr;

  auto flush = [&]() {
    if (block) {
      try {
        reg.add(finalize(*block));
      } catch (const RegistryError& e) {
        if (e.line() > 0) throw;
        throw RegistryError(e.what(), block->line);
      }
    }
    block.reset();
    sub = nullptr;
  };

  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;

    if (t == "[block]") {
      flush();
      block.emplace();
      block->line = lineno;
      continue;
    }
    if (t == "[sub]") {
      if (!block)
        throw RegistryError("[sub] section outside of a [block]", lineno);
      block->subs.emplace_back();
      sub = &block->subs.back();
      sub->line = lineno;
      continue;
    }

    std::size_t eq = t.find('=');
    if (eq == std::string::npos)
      throw RegistryError("expected 'key = value', got '" + t + "'", lineno);
    std::string key = trim(t.substr(0, eq));
    std::string value = trim(t.substr(eq + 1));
    if (!block)
      throw RegistryError("key outside of a [block] section", lineno);

    if (sub == nullptr) {
      if (key == "id") block->id = value;
      else if (key == "e") block->e = parse_int(value, lineno);
      else if (key == "sigma") block->sigma = parse_int(value, lineno);
      else if (key == "spin") block->spin = parse_bool(value, lineno);
      else if (key == "provenance") block->provenance = value;
      else if (key == "pi1") block->pi1_text = value;
      else if (key == "claims") {
        if (!value.empty()) {
          std::istringstream cs(value);
          std::string c;
          while (std::getline(cs, c, ','))
            block->claims.insert(parse_claim(trim(c), lineno));
        }
      } else {
        throw RegistryError("unknown block key '" + key + "'", lineno);
      }
    } else {
      if (key == "name") sub->name = value;
      else if (key == "kind") sub->kind = parse_kind(value, lineno);
      else if (key == "self_intersection")
        sub->self_intersection = parse_int(value, lineno);
      else if (key == "complement_equals_ambient")
        sub->equals_ambient = parse_bool(value, lineno);
      else if (key == "complement") sub->complement_text = value;
      else if (key == "meridian") sub->meridian_text = value;
      else if (key == "pushoffs") sub->pushoffs_text = value;
      else if (key == "essential") sub->essential = parse_bool(value, lineno);
      else if (key == "lagrangian")
        sub->lagrangian = parse_bool(value, lineno);
      else if (key == "claimed") sub->claimed = parse_bool(value, lineno);
      else
        throw RegistryError("unknown submanifold key '" + key + "'", lineno);
    }
  }
  flush();
  return reg;
}

const Registry& default_registry() {
  static const Registry reg = load_registry_text(default_registry_text());
  return reg;
}

}  // namespace symgeo
