#include "plectic/scenario.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "plectic/parse.hpp"

namespace plectic {

MultisymplecticModel Scenario::model() const {
  if (!has_model()) throw std::invalid_argument("scenario has no model section");
  MultisymplecticModel m;
  m.dimension = dimension;
  m.n = n;
  m.omega = omega;
  m.basepoints = basepoints;
  m.degenerate_allowed = degenerate_allowed;
  return m;
}

GaugeData Scenario::gauge() const {
  if (!gauge_b) throw std::invalid_argument("scenario has no gauge section");
  return make_gauge(model(), *gauge_b);
}

ComomentMap Scenario::comoment() const {
  if (!has_comoment()) throw std::invalid_argument("scenario has no comoment section");
  ComomentMap f;
  f.model = model();
  f.algebra = LieAlgebra::abelian(comoment_dim);
  for (const auto& [ij, row] : structure_constants) {
    auto [i, j] = ij;
    for (int k = 0; k < comoment_dim; ++k) {
      f.algebra.c[i][j][k] = row[k];
      f.algebra.c[j][i][k] = -row[k];
    }
  }
  f.rho.resize(comoment_dim);
  for (const auto& [i, v] : rho) f.rho[i] = v;
  f.f.resize(f.model.n + 1);
  for (const auto& [key, form] : comoment_f) {
    auto [k, word] = key;
    if (k < 1 || k > f.model.n) throw std::invalid_argument("comoment component out of range");
    f.f[k].emplace(word, form);
  }
  return f;
}

namespace {

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

}  // namespace

Scenario Scenario::parse(const std::string& text) {
  Scenario sc;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::string rhs;
    auto eq = line.find('=');
    if (eq != std::string::npos) {
      rhs = line.substr(eq + 1);
      line = line.substr(0, eq);
    }
    auto toks = split_ws(line);
    if (toks.empty()) continue;
    const std::string& key = toks[0];
    auto want = [&](size_t args) {
      if (toks.size() != args + 1)
        throw ParseError("scenario line " + std::to_string(lineno) + ": bad arity for " + key);
    };
    try {
      if (key == "dimension") {
        want(1);
        sc.dimension = std::stoi(toks[1]);
      } else if (key == "n") {
        want(1);
        sc.n = std::stoi(toks[1]);
      } else if (key == "omega") {
        sc.omega = parse_form(rhs);
      } else if (key == "basepoint") {
        std::vector<Rational> p;
        for (size_t i = 1; i < toks.size(); ++i) p.push_back(Rational::from_string(toks[i]));
        sc.basepoints.push_back(std::move(p));
      } else if (key == "degenerate_allowed") {
        want(1);
        sc.degenerate_allowed = toks[1] == "1" || toks[1] == "true";
      } else if (key == "gauge.B") {
        sc.gauge_b = parse_form(rhs);
      } else if (key == "comoment.dim") {
        want(1);
        sc.comoment_dim = std::stoi(toks[1]);
      } else if (key == "comoment.c") {
        want(2);
        std::vector<Rational> row;
        for (const auto& t : split_ws(rhs)) row.push_back(Rational::from_string(t));
        sc.structure_constants.emplace(std::pair{std::stoi(toks[1]), std::stoi(toks[2])},
                                       std::move(row));
      } else if (key == "comoment.rho") {
        want(1);
        sc.rho.emplace(std::stoi(toks[1]), parse_vector_field(rhs));
      } else if (key == "comoment.f") {
        want(2);
        IndexWord w;
        std::string idx = toks[2];
        for (auto& c : idx)
          if (c == ',') c = ' ';
        for (const auto& t : split_ws(idx)) w.push_back(std::stoi(t));
        sc.comoment_f.emplace(std::pair{std::stoi(toks[1]), std::move(w)}, parse_form(rhs));
      } else if (key == "suite") {
        want(1);
        sc.suites.insert(toks[1]);
      } else if (key == "seed") {
        want(1);
        sc.seed = std::stoull(toks[1]);
      } else if (key == "tuples") {
        want(1);
        sc.tuples = std::stoi(toks[1]);
      } else if (key == "max_arity") {
        want(1);
        sc.max_arity = std::stoi(toks[1]);
      } else if (key == "degree_cap") {
        want(1);
        sc.degree_cap = std::stoi(toks[1]);
      } else {
        throw ParseError("scenario line " + std::to_string(lineno) + ": unknown key " + key);
      }
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      throw ParseError("scenario line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return sc;
}

Scenario Scenario::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open scenario file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

std::string Scenario::canonical_text() const {
  std::ostringstream out;
  if (has_model()) {
    out << "dimension " << dimension << "\n";
    out << "n " << n << "\n";
    out << "omega = " << canonical_form_text(omega) << "\n";
    for (const auto& p : basepoints) {
      out << "basepoint";
      for (const auto& x : p) out << " " << x.to_string();
      out << "\n";
    }
    out << "degenerate_allowed " << (degenerate_allowed ? 1 : 0) << "\n";
  }
  if (gauge_b) out << "gauge.B = " << canonical_form_text(*gauge_b) << "\n";
  if (has_comoment()) {
    out << "comoment.dim " << comoment_dim << "\n";
    for (const auto& [ij, row] : structure_constants) {
      out << "comoment.c " << ij.first << " " << ij.second << " =";
      for (const auto& v : row) out << " " << v.to_string();
      out << "\n";
    }
    for (const auto& [i, v] : rho)
      out << "comoment.rho " << i << " = " << canonical_vector_field_text(v) << "\n";
    for (const auto& [key, form] : comoment_f) {
      out << "comoment.f " << key.first << " ";
      for (size_t t = 0; t < key.second.size(); ++t) out << (t ? "," : "") << key.second[t];
      out << " = " << canonical_form_text(form) << "\n";
    }
  }
  for (const auto& s : suites) out << "suite " << s << "\n";
  out << "seed " << seed << "\n";
  out << "tuples " << tuples << "\n";
  out << "max_arity " << max_arity << "\n";
  out << "degree_cap " << degree_cap << "\n";
  return out.str();
}

SuiteOptions Scenario::options() const {
  SuiteOptions opt;
  opt.seed = seed;
  opt.tuples = tuples;
  opt.max_arity = max_arity;
  opt.degree_cap = degree_cap;
  return opt;
}

std::string report_json(const std::string& suite, uint64_t seed,
                        const std::vector<CheckResult>& results, bool include_timing) {
  nlohmann::json j;
  j["suite"] = suite;
  j["seed"] = seed;
  bool pass = true;
  nlohmann::json records = nlohmann::json::array();
  for (const auto& r : results) {
    nlohmann::json rec;
    rec["name"] = r.name;
    rec["anchor"] = r.anchor;
    rec["status"] = r.pass ? "pass" : "fail";
    if (!r.pass) rec["counterexample"] = r.detail;
    if (include_timing) rec["elapsed_us"] = r.micros;
    records.push_back(std::move(rec));
    pass = pass && r.pass;
  }
  j["checks"] = std::move(records);
  j["status"] = pass ? "pass" : "fail";
  return j.dump(2);
}

std::vector<CheckResult> run_suite(const std::string& suite, const Scenario& scenario) {
  SuiteOptions opt = scenario.options();
  std::vector<MultisymplecticModel> models;
  if (scenario.has_model()) {
    models.push_back(scenario.model());
    require_valid(models.back());
  } else {
    models.push_back(make_volume_model(3));
    models.push_back(make_volume_model(4));
  }

  std::vector<CheckResult> all;
  auto append = [&all](std::vector<CheckResult> rs) {
    for (auto& r : rs) all.push_back(std::move(r));
  };

  if (suite == "tables") {
    append(table_suite());
  } else if (suite == "identities") {
    append(bernoulli_identity_suite(14, 40, 24));
    for (const auto& m : models) {
      append(cartan_suite(m, opt));
      append(appendix_a_suite(m, opt));
    }
  } else if (suite == "structures") {
    for (const auto& m : models) append(nilpotency_suite(m, opt));
  } else if (suite == "embedding") {
    for (const auto& m : models) {
      append(embedding_suite(m, opt));
      append(pushforward_suite(m, opt));
    }
  } else if (suite == "pentagon") {
    if (scenario.has_comoment() && scenario.gauge_b) {
      ComomentMap f = scenario.comoment();
      append(pentagon_suite(f, scenario.gauge(), opt));
    } else {
      append(pentagon_suite(desk_comoment_r3(), desk_gauge_r3(), opt));
      append(pentagon_suite(desk_comoment_r4(), desk_gauge_r4(), opt));
    }
  } else {
    throw std::invalid_argument("unknown suite: " + suite);
  }
  std::sort(all.begin(), all.end(),
            [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
  return all;
}

}  // namespace plectic
