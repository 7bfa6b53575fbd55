#include "plectic/parse.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace plectic {

namespace {

struct Term {
  Rational coeff = Rational(1);
  Monomial mono;            // variable exponents
  IndexWord form_word;      // dx indices (sorted with sign folded into coeff)
  int field_index = -1;     // Dx index, or -1
  bool has_basis = false;   // saw dx...
};

int parse_index(const std::string& tok, size_t pos, size_t* end) {
  if (pos >= tok.size() || !std::isdigit(static_cast<unsigned char>(tok[pos])))
    throw ParseError("expected coordinate index in '" + tok + "'");
  size_t e = pos;
  while (e < tok.size() && std::isdigit(static_cast<unsigned char>(tok[e]))) ++e;
  *end = e;
  return std::stoi(tok.substr(pos, e - pos));
}

bool is_rational_token(const std::string& t) {
  if (t.empty()) return false;
  size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
  if (i >= t.size()) return false;
  for (; i < t.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(t[i])) && t[i] != '/') return false;
  return true;
}

void apply_token(Term& term, const std::string& tok) {
  if (is_rational_token(tok)) {
    term.coeff *= Rational::from_string(tok);
    return;
  }
  if (tok.rfind("dx", 0) == 0) {
    if (term.has_basis || term.field_index >= 0) throw ParseError("two basis words in one term: " + tok);
    term.has_basis = true;
    std::vector<int> raw;
    size_t pos = 0;
    while (pos < tok.size()) {
      if (tok.compare(pos, 2, "dx") != 0) throw ParseError("bad basis word: " + tok);
      size_t end;
      raw.push_back(parse_index(tok, pos + 2, &end));
      pos = end;
      if (pos < tok.size()) {
        if (tok[pos] != '^') throw ParseError("bad basis word: " + tok);
        ++pos;
      }
    }
    // sort with sign; repeated index kills the term
    for (size_t i = 0; i < raw.size(); ++i)
      for (size_t j = i + 1; j < raw.size(); ++j) {
        if (raw[i] == raw[j]) {
          term.coeff = Rational(0);
          break;
        }
        if (raw[i] > raw[j]) {
          std::swap(raw[i], raw[j]);
          term.coeff = -term.coeff;
        }
      }
    term.form_word = raw;
    return;
  }
  if (tok.rfind("Dx", 0) == 0) {
    if (term.has_basis || term.field_index >= 0) throw ParseError("two basis words in one term: " + tok);
    size_t end;
    term.field_index = parse_index(tok, 2, &end);
    if (end != tok.size()) throw ParseError("bad field basis: " + tok);
    return;
  }
  if (tok[0] == 'x') {
    size_t end;
    int idx = parse_index(tok, 1, &end);
    int exp = 1;
    if (end < tok.size()) {
      if (tok[end] != '^') throw ParseError("bad variable factor: " + tok);
      size_t e2;
      exp = parse_index(tok, end + 1, &e2);
      if (e2 != tok.size()) throw ParseError("bad variable factor: " + tok);
    }
    if (static_cast<int>(term.mono.size()) <= idx) term.mono.resize(idx + 1, 0);
    term.mono[idx] += exp;
    return;
  }
  throw ParseError("unrecognized token: " + tok);
}

std::vector<Term> parse_terms(const std::string& text) {
  std::vector<Term> terms;
  Term cur;
  bool cur_started = false;
  int pending_sign = 1;
  std::istringstream in(text);
  std::string tok;
  auto flush = [&] {
    if (!cur_started) return;
    cur.coeff = cur.coeff * Rational(pending_sign);
    terms.push_back(cur);
    cur = Term{};
    cur_started = false;
    pending_sign = 1;
  };
  while (in >> tok) {
    if (tok == "+" || tok == "-") {
      flush();
      pending_sign = tok == "-" ? -1 : 1;
      continue;
    }
    // a leading '-' glued to a token starts a new term
    if ((tok[0] == '-' || tok[0] == '+') && !is_rational_token(tok)) {
      flush();
      pending_sign = tok[0] == '-' ? -1 : 1;
      tok = tok.substr(1);
      if (tok.empty()) continue;
    }
    apply_token(cur, tok);
    cur_started = true;
  }
  flush();
  return terms;
}

std::string mono_text(const Monomial& m) {
  std::string s;
  for (size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += ' ';
    s += 'x' + std::to_string(i);
    if (m[i] > 1) s += '^' + std::to_string(m[i]);
  }
  return s;
}

// one signed term: returns (is_negative, text without the sign)
std::pair<bool, std::string> term_text(const Rational& c, const Monomial& m, const std::string& basis) {
  bool neg = c.is_negative();
  Rational a = neg ? -c : c;
  std::string mono = mono_text(m);
  std::string s;
  if (!(a == Rational(1)) || mono.empty()) s = a.to_string();
  if (!mono.empty()) s += (s.empty() ? "" : " ") + mono;
  if (!basis.empty()) s += (s.empty() ? "" : " ") + basis;
  return {neg, s};
}

std::string join_terms(std::vector<std::pair<bool, std::string>> parts) {
  if (parts.empty()) return "0";
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i == 0) {
      if (parts[i].first) out += "-";
      out += parts[i].second;
    } else {
      out += parts[i].first ? " - " : " + ";
      out += parts[i].second;
    }
  }
  return out;
}

std::string word_text(const IndexWord& w) {
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += '^';
    s += "dx" + std::to_string(w[i]);
  }
  return s;
}

}  // namespace

std::vector<Form> parse_form_parts(const std::string& text) {
  std::map<int, Form> by_degree;
  for (const auto& t : parse_terms(text)) {
    if (t.field_index >= 0) throw ParseError("vector field basis in a form expression");
    if (t.coeff.is_zero()) continue;
    int d = static_cast<int>(t.form_word.size());
    auto it = by_degree.find(d);
    if (it == by_degree.end()) it = by_degree.emplace(d, Form(d)).first;
    it->second.add_term(t.form_word, PolyScalar::monomial(t.mono, t.coeff));
  }
  std::vector<Form> parts;
  for (auto& [d, f] : by_degree)
    if (!f.zero()) parts.push_back(std::move(f));
  return parts;
}

Form parse_form(const std::string& text) {
  auto parts = parse_form_parts(text);
  if (parts.empty()) return Form(0);
  if (parts.size() > 1) throw ParseError("mixed form degrees in one expression");
  return parts[0];
}

VectorField parse_vector_field(const std::string& text) {
  VectorField v;
  for (const auto& t : parse_terms(text)) {
    if (t.coeff.is_zero()) continue;
    if (t.field_index < 0) throw ParseError("vector field term without Dx basis");
    v.add_component(t.field_index, PolyScalar::monomial(t.mono, t.coeff));
  }
  return v;
}

std::string canonical_poly_text(const PolyScalar& p) {
  std::vector<std::pair<bool, std::string>> parts;
  for (const auto& [m, c] : p.terms()) parts.push_back(term_text(c, m, ""));
  return join_terms(std::move(parts));
}

std::string canonical_form_text(const Form& f) {
  std::vector<std::pair<bool, std::string>> parts;
  for (const auto& [w, p] : f.terms())
    for (const auto& [m, c] : p.terms()) parts.push_back(term_text(c, m, word_text(w)));
  return join_terms(std::move(parts));
}

std::string canonical_form_parts_text(const std::vector<Form>& parts) {
  std::vector<std::pair<bool, std::string>> out;
  for (const Form& f : parts)
    for (const auto& [w, p] : f.terms())
      for (const auto& [m, c] : p.terms()) out.push_back(term_text(c, m, word_text(w)));
  return join_terms(std::move(out));
}

std::string canonical_vector_field_text(const VectorField& v) {
  std::vector<std::pair<bool, std::string>> parts;
  for (const auto& [i, p] : v.components())
    for (const auto& [m, c] : p.terms()) parts.push_back(term_text(c, m, "Dx" + std::to_string(i)));
  return join_terms(std::move(parts));
}

}  // namespace plectic
