#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "plectic/parse.hpp"
#include "plectic/suites.hpp"

using namespace plectic;

namespace {
const MultisymplecticModel& r3() {
  static MultisymplecticModel m = make_volume_model(3);
  return m;
}
const MultisymplecticModel& r4() {
  static MultisymplecticModel m = make_volume_model(4);
  return m;
}

void report_failures(const std::vector<CheckResult>& rs) {
  for (const auto& r : rs) {
    INFO(r.name, ": ", r.detail);
    CHECK(r.pass);
  }
}
}  // namespace

TEST_CASE("embedding components: displayed examples") {
  // psi_1 on the section (v_alpha, alpha) for alpha = x dy: field is -d/dz
  VinElem a1 = ham_pair(r3(), parse_form("x0 dx1"));
  MultiMap<VinVal> psi1 = embedding_component_map(r3(), 1);
  Graded<VinVal> img = psi1({a1});
  CHECK(img.value.field == parse_vector_field("-1 Dx2"));
  CHECK(img.value.form == parse_form("x0 dx1"));

  // psi_2(x dy, y dz) = y/2
  VinElem a2 = ham_pair(r3(), parse_form("x1 dx2"));
  MultiMap<VinVal> psi2 = embedding_component_map(r3(), 2);
  Graded<VinVal> out = psi2({a1, a2});
  CHECK(out.value.form == parse_form("1/2 x1"));
  CHECK(out.value.field.zero());
  CHECK(out.degree == -1);

  // two negative-degree entries give zero
  VinElem f1 = vin_form(r3(), parse_form("x0"));
  VinElem f2 = vin_form(r3(), parse_form("x1"));
  CHECK(is_zero(psi2({f1, f2}).value));

  // psi_2 = -<,>_- pointwise
  SplitMix64 rng(13);
  Sampler s(r3());
  for (int i = 0; i < 15; ++i) {
    auto w = s.seeded_word(rng, 2, i, true);
    GradedSum<VinVal> diff(psi2(w));
    diff.add_scaled(Rational(1), pairing_minus_map()(w));
    CHECK(diff.zero());
  }
}

TEST_CASE("iterated pairing closed form: displayed examples") {
  // m = 1: <B, X>_- = -iota_X B / 2
  Form b = parse_form("1 dx0^dx1");
  std::vector<VectorField> xs = {parse_vector_field("1 Dx0")};
  CHECK(iterated_pairing_closed(b, xs) == parse_form("-1/2 dx1"));
  // m = 2 on (dx^dy, d/dx, d/dy): -1/2
  std::vector<VectorField> xy = {parse_vector_field("1 Dx0"), parse_vector_field("1 Dx1")};
  CHECK(iterated_pairing_closed(b, xy) == parse_form("-1/2"));
}

TEST_CASE("gauge tau: displayed examples and intertwining") {
  GaugeData g = desk_gauge_r3();
  CHECK(g.twisted.omega == parse_form("2 dx0^dx1^dx2"));
  MultiMap<VinVal> tau = gauge_tau_map(g);

  // B = 0 gives the identity
  GaugeData g0 = make_gauge(r3(), Form(2));
  MultiMap<VinVal> tau0 = gauge_tau_map(g0);
  VinElem e = vin_pair(r3(), parse_vector_field("1 Dx0"), parse_form("3 dx2"));
  GradedSum<VinVal> d0(tau0({e}));
  d0.add_scaled(Rational(-1), e);
  CHECK(d0.zero());

  // (d/dx, 0) -> (d/dx, iota_dx (z dx^dy)) = (d/dx, z dy)
  VinElem ex = vin_pair(r3(), parse_vector_field("1 Dx0"), Form(1));
  Graded<VinVal> img = tau({ex});
  CHECK(img.value.field == parse_vector_field("1 Dx0"));
  CHECK(img.value.form == parse_form("x2 dx1"));

  // intertwining: tau(mu_2^omega(e1,e2)) = mu_2^{omega~}(tau e1, tau e2)
  MultiMap<VinVal> mu2 = vinogradov_mu_map(g.base, 2);
  MultiMap<VinVal> mu2t = vinogradov_mu_map(g.twisted, 2);
  SplitMix64 rng(37);
  Sampler s(r3());
  for (int i = 0; i < 20; ++i) {
    auto w = s.seeded_word(rng, 2, i, false);  // arbitrary sections
    Graded<VinVal> lhs = tau({mu2(w)});
    std::vector<VinElem> tw = {tau({w[0]}), tau({w[1]})};
    Graded<VinVal> rhs = mu2t(tw);
    GradedSum<VinVal> diff(lhs);
    diff.add_scaled(Rational(-1), rhs);
    CHECK(diff.zero());
  }
}

TEST_CASE("desk comoment on the 2-plectic model") {
  ComomentMap f = desk_comoment_r3();
  CHECK(f.algebra.dim == 2);
  CHECK(f.action_compatible());
  // f_2 was solved to a multiple of x2
  REQUIRE(f.f.size() >= 3);
  auto it = f.f[2].find(IndexWord{0, 1});
  REQUIRE(it != f.f[2].end());
  Form f2 = it->second;
  CHECK(f2.degree() == 0);
  PolyScalar coeff = f2.coefficient({});
  PolyScalar expected = PolyScalar::variable(2).scaled(coeff.terms().begin()->second);
  CHECK(coeff == expected);  // exactly c * x2

  // twisting by B = z dx^dy: b_1(xi) = varsigma(2) iota_rho B = iota_rho B
  GaugeData g = desk_gauge_r3();
  ComomentMap ft = twist_comoment(f, g);
  Form b1_0 = twist_term(f, g.b, std::vector<int>{0});
  CHECK(b1_0 == contract(f.rho[0], g.b));
  auto f1t = ft.f[1].find(IndexWord{0});
  REQUIRE(f1t != ft.f[1].end());
  CHECK(f1t->second == f.f[1].at(IndexWord{0}) + b1_0);
  CHECK(ft.action_compatible());

  // B = 0 twist changes nothing
  ComomentMap same = twist_comoment(f, make_gauge(r3(), Form(2)));
  CHECK(same.f[1].at(IndexWord{0}) == f.f[1].at(IndexWord{0}));
  CHECK(same.f[2].at(IndexWord{0, 1}) == f.f[2].at(IndexWord{0, 1}));

  // a non-invariant B is rejected
  CHECK_THROWS_AS(twist_comoment(f, make_gauge(r3(), parse_form("x0 dx0^dx2"))),
                  std::invalid_argument);
}

TEST_CASE("pentagon: desk examples commute strictly") {
  {
    ComomentMap f = desk_comoment_r3();
    GaugeData g = desk_gauge_r3();
    PentagonReport rep = pentagon_check(f, g, 3);
    INFO(rep.detail);
    CHECK(rep.pass);
    SuiteOptions opt;
    opt.seed = 3;
    report_failures(pentagon_suite(f, g, opt));
  }
  {
    ComomentMap f = desk_comoment_r4();
    GaugeData g = desk_gauge_r4();
    PentagonReport rep = pentagon_check(f, g, 4);
    INFO(rep.detail);
    CHECK(rep.pass);
    SuiteOptions opt;
    opt.seed = 3;
    report_failures(pentagon_suite(f, g, opt));
  }
}

TEST_CASE("embedding suite at reduced size") {
  SuiteOptions opt;
  opt.seed = 11;
  opt.tuples = 5;
  report_failures(embedding_suite(r3(), opt));
  report_failures(embedding_suite(r4(), opt));
}

TEST_CASE("pushforward suite at reduced size") {
  SuiteOptions opt;
  opt.seed = 13;
  opt.tuples = 4;
  report_failures(pushforward_suite(r3(), opt));
  report_failures(pushforward_suite(r4(), opt));
}

TEST_CASE("composition with the embedding respects strict identity") {
  // (phi o id)_m = phi_m and (id o phi)_m = phi_m on sampled words
  MorphismComponents<VinVal, VinVal> phi;
  phi.f.resize(4);
  for (int k = 1; k <= 3; ++k) phi.f[k] = embedding_pairing_route_map(k);
  MorphismComponents<VinVal, VinVal> ident;
  ident.f.resize(2);
  ident.f[1] = MultiMap<VinVal>::identity(Convention::unshifted);
  auto left = compose_morphisms(phi, ident, 3);
  auto right = compose_morphisms(ident, phi, 3);
  SplitMix64 rng(41);
  Sampler s(r3());
  for (int m = 1; m <= 3; ++m) {
    for (int i = 0; i < 8; ++i) {
      auto w = s.seeded_word(rng, m, i, true);
      GradedSum<VinVal> d1(left.f[m](w));
      d1.add_scaled(Rational(-1), phi.f[m](w));
      CHECK(d1.zero());
      GradedSum<VinVal> d2(right.f[m](w));
      d2.add_scaled(Rational(-1), phi.f[m](w));
      CHECK(d2.zero());
    }
  }
}

TEST_CASE("pentagon with B = 0 commutes trivially") {
  ComomentMap f = desk_comoment_r3();
  GaugeData g0 = make_gauge(make_volume_model(3), Form(2));
  PentagonReport rep = pentagon_check(f, g0, 3);
  INFO(rep.detail);
  CHECK(rep.pass);
}
