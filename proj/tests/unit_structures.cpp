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

TEST_CASE("rogers brackets: displayed examples") {
  // l_1 of a negative-degree form is its exterior derivative
  MultiMap<VinVal> pi1 = rogers_pi_map(r3(), 1);
  VinElem f = vin_form(r3(), parse_form("x0"));
  Graded<VinVal> out = pi1({f});
  CHECK(out.value.form == parse_form("1 dx0"));
  CHECK(out.degree == 0);

  // l_2(x dy, y dz) = dy on the volume model
  MultiMap<VinVal> pi2 = rogers_pi_map(r3(), 2);
  VinElem a1 = ham_pair(r3(), parse_form("x0 dx1"));
  VinElem a2 = ham_pair(r3(), parse_form("x1 dx2"));
  CHECK(a1.value.field == parse_vector_field("-1 Dx2"));
  CHECK(a2.value.field == parse_vector_field("-1 Dx0"));
  Graded<VinVal> b = pi2({a1, a2});
  CHECK(b.value.form == parse_form("1 dx1"));

  // any bracket with a negative-degree entry vanishes for k >= 2
  Graded<VinVal> z = pi2({a1, f});
  CHECK(is_zero(z.value));

  // pi_2 output is again a Hamiltonian pair
  CHECK(is_hamiltonian_pair(r3(), b.value.field, b.value.form));
}

TEST_CASE("pairings: displayed examples") {
  // <e, e>_- = 0
  VinElem e = vin_pair(r3(), parse_vector_field("1 Dx0"), parse_form("1 dx1"));
  CHECK(pairing_payload(-1, e.value, e.value).zero());
  // <(d/dx, dy), (d/dy, 2dx)>_- = 1/2 (2 - 1) = 1/2
  VinElem e1 = vin_pair(r3(), parse_vector_field("1 Dx0"), parse_form("1 dx1"));
  VinElem e2 = vin_pair(r3(), parse_vector_field("1 Dx1"), parse_form("2 dx0"));
  Form p = pairing_payload(-1, e1.value, e2.value);
  CHECK(p == parse_form("1/2"));
  // zero fields contract nothing
  VinElem f1 = vin_pair(r3(), {}, parse_form("1 dx1"));
  VinElem f2 = vin_pair(r3(), {}, parse_form("1 dx2"));
  CHECK(pairing_payload(-1, f1.value, f2.value).zero());
  CHECK(pairing_payload(+1, e1.value, e2.value) == parse_form("3/2"));
}

TEST_CASE("courant bracket: displayed examples and Ham-pair closure") {
  VinElem ex = vin_pair(r3(), parse_vector_field("1 Dx0"), Form(1));
  VinElem ey = vin_pair(r3(), parse_vector_field("1 Dx1"), Form(1));
  VinVal untw = courant_payload(ex.value, ey.value, nullptr);
  CHECK(untw.field.zero());
  CHECK(untw.form.zero());
  Form om = r3().omega;
  VinVal tw = courant_payload(ex.value, ey.value, &om);
  CHECK(tw.field.zero());
  CHECK(tw.form == parse_form("-1 dx2"));

  // closure: the omega-twisted bracket of Hamiltonian pairs is Hamiltonian
  Sampler s(r3());
  SplitMix64 rng(17);
  for (int i = 0; i < 20; ++i) {
    VinElem h1 = s.random_ham(rng);
    VinElem h2 = s.random_ham(rng);
    VinVal br = courant_payload(h1.value, h2.value, &om);
    CHECK(is_hamiltonian_pair(r3(), br.field, br.form));
  }
}

TEST_CASE("vinogradov mu_2 cases") {
  MultiMap<VinVal> mu2 = vinogradov_mu_map(r3(), 2);
  VinElem ex = vin_pair(r3(), parse_vector_field("1 Dx0"), Form(1));
  VinElem ey = vin_pair(r3(), parse_vector_field("1 Dx1"), Form(1));
  Form om = r3().omega;
  GradedSum<VinVal> diff(mu2({ex, ey}));
  diff.add_scaled(Rational(-1), Graded<VinVal>{0, courant_payload(ex.value, ey.value, &om)});
  CHECK(diff.zero());

  // mu_2(e, f) = L_X f / 2
  VinElem f = vin_form(r3(), parse_form("x0^2"));
  Graded<VinVal> out = mu2({ex, f});
  CHECK(out.value.form == parse_form("x0"));
  // skew counterpart
  Graded<VinVal> out2 = mu2({f, ex});
  CHECK(out2.value.form == parse_form("-1 x0"));

  // mu_4 vanishes identically
  MultiMap<VinVal> mu4 = vinogradov_mu_map(r4(), 4);
  Sampler s(r4());
  SplitMix64 rng(23);
  for (int i = 0; i < 10; ++i) {
    auto w = s.seeded_word(rng, 4, i, true);
    CHECK(is_zero(mu4(w).value));
  }
}

TEST_CASE("bold S: decalage of the pairing") {
  MultiMap<VinVal> S = bold_s_map();
  CHECK(S.arity() == 2);
  CHECK(S.weight() == 0);
  CHECK(S.symmetry() == Symmetry::symmetric);
  CHECK(S.convention() == Convention::shifted);

  // on two shifted-degree -1 Ham pairs, S equals the pairing (decalage sign +1)
  Sampler s(r3());
  SplitMix64 rng(29);
  for (int i = 0; i < 15; ++i) {
    VinElem h1 = s.random_ham(rng);
    VinElem h2 = s.random_ham(rng);
    VinElem sh1{h1.degree - 1, h1.value}, sh2{h2.degree - 1, h2.value};
    Graded<VinVal> out = S({sh1, sh2});
    CHECK(out.value.form == pairing_payload(-1, h1.value, h2.value));
    CHECK(out.value.field.zero());
    // symmetric under the Koszul swap
    std::vector<VinElem> t = {sh1, sh2};
    CHECK(probe_symmetry(S, std::span<const VinElem>(t)));
  }

  // vanishes when both entries have shifted degree <= -2
  VinElem low1 = vin_form(r3(), parse_form("x1"));
  VinElem low2 = vin_form(r3(), parse_form("x0"));
  --low1.degree;
  --low2.degree;
  CHECK(is_zero(S({low1, low2}).value));
}

TEST_CASE("declared symmetries of the structure maps hold under probes") {
  SplitMix64 rng(31);
  Sampler s3(r3());
  for (int i = 0; i < 25; ++i) {
    auto w2 = s3.seeded_word(rng, 2, i, true);
    auto w3 = s3.seeded_word(rng, 3, i, true);
    CHECK(probe_symmetry(rogers_pi_map(r3(), 2), std::span<const VinElem>(w2)));
    CHECK(probe_symmetry(rogers_pi_map(r3(), 3), std::span<const VinElem>(w3)));
    CHECK(probe_symmetry(vinogradov_mu_map(r3(), 2), std::span<const VinElem>(w2)));
    CHECK(probe_symmetry(vinogradov_mu_map(r3(), 3), std::span<const VinElem>(w3)));
    CHECK(probe_symmetry(pairing_minus_map(), std::span<const VinElem>(w2)));
    CHECK(probe_symmetry(pairing_plus_map(), std::span<const VinElem>(w2)));
  }
}

TEST_CASE("nilpotency probes at reduced size") {
  SuiteOptions opt;
  opt.seed = 5;
  opt.tuples = 6;
  report_failures(nilpotency_suite(r3(), opt));
  report_failures(nilpotency_suite(r4(), opt));
}

TEST_CASE("appendix identity suite at reduced size") {
  SuiteOptions opt;
  opt.seed = 7;
  opt.tuples = 4;
  report_failures(appendix_a_suite(r3(), opt));
  report_failures(appendix_a_suite(r4(), opt));
}

TEST_CASE("powers of the pairing are nesting-independent") {
  // associators of S with itself vanish, so any bracketing of S^3 agrees
  MultiMap<VinVal> S = bold_s_map();
  MultiMap<VinVal> left = nr_product(nr_product(S, S), S);
  MultiMap<VinVal> right = nr_product(S, nr_product(S, S));
  Sampler s(r3());
  SplitMix64 rng(61);
  for (int i = 0; i < 20; ++i) {
    auto w = s.seeded_word(rng, 4, i, true);
    for (auto& x : w) --x.degree;
    GradedSum<VinVal> diff(left(w));
    diff.add_scaled(Rational(-1), right(w));
    CHECK(diff.zero());
    CHECK(is_zero(associator(S, S, S)(w).value));
  }
  CHECK(iterated_power(S, 3).arity() == 4);
}

TEST_CASE("S . S matches the hand expansion over the three (2,1)-unshuffles") {
  MultiMap<VinVal> S = bold_s_map();
  MultiMap<VinVal> SS = nr_product(S, S);
  Sampler s(r3());
  SplitMix64 rng(67);
  for (int trial = 0; trial < 10; ++trial) {
    auto w = s.seeded_word(rng, 3, 1, true);  // one negative-degree entry
    for (auto& x : w) --x.degree;
    // sum over Ush(2,1) = {(0,1|2), (0,2|1), (1,2|0)} with Koszul signs
    auto eps = [&](int i, int j) {
      return (w[i].degree & 1) && (w[j].degree & 1) ? -1 : 1;
    };
    GradedSum<VinVal> hand;
    hand.add(S({S({w[0], w[1]}), w[2]}));
    // (0,2|1): moves slot 1 past slot 2
    hand.add_scaled(Rational(eps(1, 2)), S({S({w[0], w[2]}), w[1]}));
    // (1,2|0): moves slot 0 past slots 1 and 2
    hand.add_scaled(Rational(eps(0, 1) * eps(0, 2)), S({S({w[1], w[2]}), w[0]}));
    hand.add_scaled(Rational(-1), SS(w));
    CHECK(hand.zero());
  }
}

TEST_CASE("decalage rejects maps of the wrong kind") {
  CHECK_THROWS_AS(decalage_map(pairing_plus_map()), std::invalid_argument);
  CHECK_THROWS_AS(decalage_map(bold_s_map()), std::invalid_argument);
  CHECK_THROWS_AS(decalage_map_inverse(pairing_minus_map()), std::invalid_argument);
}

TEST_CASE("brackets vanish once two entries sit below the top degree") {
  SplitMix64 rng(71);
  for (const MultisymplecticModel* model : {&r3(), &r4()}) {
    Sampler s(*model);
    for (int k = 2; k <= model->n + 1; ++k) {
      MultiMap<VinVal> mu = vinogradov_mu_map(*model, k);
      MultiMap<VinVal> pi = rogers_pi_map(*model, k);
      for (int t = 0; t < 8; ++t) {
        auto w = s.random_word(rng, k, /*negatives=*/2, true);
        int below = 0;
        for (const auto& x : w) below += x.degree < 0;
        if (below < 2) continue;
        CHECK(is_zero(mu(w).value));
        CHECK(is_zero(pi(w).value));
        // Rogers brackets need every entry at the top degree
        auto w1 = s.random_word(rng, k, 1, true);
        int neg1 = 0;
        for (const auto& x : w1) neg1 += x.degree < 0;
        if (neg1 == 1) CHECK(is_zero(pi(w1).value));
      }
    }
  }
}
