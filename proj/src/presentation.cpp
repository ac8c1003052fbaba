#include "symgeo/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace symgeo {

namespace {

bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_')
    return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

void Presentation::add_relator(Word w) {
  w = cyclic_reduce(w);
  if (w.empty()) return;
  require_word_valid(w);
  relators.push_back(std::move(w));
}

bool Presentation::word_valid(const Word& w) const {
  return w.max_index() <= ngens();
}

void Presentation::require_word_valid(const Word& w) const {
  if (!word_valid(w))
    throw DomainError("word references generator index " +
                      std::to_string(w.max_index()) + " but only " +
                      std::to_string(ngens()) + " generators exist");
}

int Presentation::find_generator(const std::string& name) const {
  auto it =
      std::find(generator_names.begin(), generator_names.end(), name);
  if (it == generator_names.end()) return -1;
  return static_cast<int>(it - generator_names.begin());
}

int Presentation::add_generator(const std::string& preferred_name) {
  std::string name = preferred_name;
  int suffix = 2;
  while (find_generator(name) >= 0)
    name = preferred_name + std::to_string(suffix++);
  generator_names.push_back(name);
  return ngens() - 1;
}

Int Presentation::total_relator_length() const {
  Int total = 0;
  for (const Word& w : relators) total += static_cast<Int>(w.size());
  return total;
}

Word parse_word(const std::string& text, const Presentation& p) {
  Word w;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    int exp = 1;
    if (tok.size() > 1 && tok.back() == '\'') {
      exp = -1;
      tok.pop_back();
    }
    if (!valid_name(tok))
      throw ParseError("invalid generator token '" + tok + "' in word");
    int idx = p.find_generator(tok);
    if (idx < 0)
      throw ParseError("unknown generator '" + tok + "' in word");
    w.letters.push_back(exp * (idx + 1));
  }
  return w;
}

std::string print_word(const Word& w, const Presentation& p) {
  std::string out;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    int l = w.letters[i];
    int idx = std::abs(l) - 1;
    if (idx >= p.ngens())
      throw DomainError("word letter out of range for presentation");
    if (i) out += " ";
    out += p.generator_names[idx];
    if (l < 0) out += "'";
  }
  return out;
}

Presentation parse_presentation(const std::string& text) {
  std::string body = trim(text);
  Presentation p;
  if (body.empty()) return p;

  std::string gens_part = body;
  std::string rel_part;
  std::size_t bar = body.find('|');
  if (bar != std::string::npos) {
    if (body.find('|', bar + 1) != std::string::npos)
      throw ParseError("presentation contains more than one '|'", bar);
    gens_part = trim(body.substr(0, bar));
    rel_part = trim(body.substr(bar + 1));
  }

  if (!gens_part.empty()) {
    for (const std::string& raw : split(gens_part, ',')) {
      std::string name = trim(raw);
      if (!valid_name(name))
        throw ParseError("invalid generator name '" + name + "'");
      if (p.find_generator(name) >= 0)
        throw ParseError("duplicate generator name '" + name + "'");
      p.generator_names.push_back(name);
    }
  }

  if (!rel_part.empty()) {
    for (const std::string& raw : split(rel_part, ';')) {
      std::string wtext = trim(raw);
      if (wtext.empty()) continue;
      p.add_relator(parse_word(wtext, p));
    }
  }
  return p;
}

std::string print_presentation(const Presentation& p) {
  std::string out;
  for (int i = 0; i < p.ngens(); ++i) {
    if (i) out += ",";
    out += p.generator_names[i];
  }
  if (!p.relators.empty()) {
    out += " | ";
    for (std::size_t i = 0; i < p.relators.size(); ++i) {
      if (i) out += "; ";
      out += print_word(p.relators[i], p);
    }
  }
  return out;
}

}  // namespace symgeo
