#pragma once

// Built-in verification suites behind `obk verify`.

#include <random>
#include <string>
#include <vector>

#include "obk/braid.hpp"
#include "obk/invariants.hpp"
#include "obk/openbook.hpp"

namespace obk {

inline AbelianGroup free_group(std::size_t r) { return {r, {}}; }
inline AbelianGroup cyclic_group(long long n) {
  if (n < 0) n = -n;
  if (n == 0) return free_group(1);
  if (n == 1) return {};
  return {0, {Integer(n)}};
}

inline Report presets_suite() {
  Report r;
  for (char const* name : {"s3_disc", "s3_hopf_plus", "s3_hopf_minus"}) {
    Expectations e;
    e.h1 = AbelianGroup{};
    r.merge(verify_suite(preset(name), e, std::string("s3/") + name + "/"));
  }

  OpenBook pair = disjoint_union(preset("s3_disc"), preset("s3_disc")).book;
  Expectations sum;
  sum.h1 = free_group(1);
  sum.genera = std::vector<std::size_t>{0};
  sum.boundary_count = 2;
  r.merge(verify_suite(binding_sum(pair, 1, 2, 0), sum, "disc_sum/"));

  for (long long n = 1; n <= 3; ++n) {
    Expectations e;
    e.h1 = free_group(3);
    e.euler = -4 * n;
    r.merge(verify_suite(t3_open_book(n), e, "t3/n=" + std::to_string(n) + "/"));
  }

  for (auto const& name : preset_names()) {
    Expectations e;
    e.navel_identity = true;
    r.merge(verify_suite(preset(name), e, "navel/" + name + "/"));
  }

  for (long long n = -5; n <= 5; ++n) {
    OpenBook ob{make_annulus(), {}, {}};
    ob.monodromy.append("c", n);
    Expectations e;
    e.h1 = cyclic_group(n);
    r.merge(verify_suite(ob, e, "lens/n=" + std::to_string(n) + "/"));
  }

  for (auto const& name : preset_names()) {
    OpenBook ob = preset(name);
    for (int k : ob.page.labels()) {
      Expectations e;
      e.h1 = h1_of_open_book(ob);
      e.boundary_count = ob.page.labels().size() + 4;
      r.merge(verify_suite(lutz_full(ob, k), e, "lutz/" + name + "/k=" + std::to_string(k) + "/"));
    }
  }
  return r;
}

inline Report relations_suite() {
  Report r;
  for (std::size_t n = 2; n <= 4; ++n) {
    Expectations e;
    e.relations.push_back({RelationKind::commute, {chain_a(1), chain_a(2)}});
    e.relations.push_back({RelationKind::braid, {chain_a(1), chain_g(1)}});
    e.relations.push_back({RelationKind::braid, {chain_g(1), chain_a(2)}});
    e.relations.push_back({RelationKind::chain3, {chain_a(1), chain_g(1), chain_a(2), chain_d(1, 2), chain_dp(1, 2)}});
    if (n == 2) r.merge(verify_suite({make_chain_page(n), {}, {}}, e, "chain" + std::to_string(n) + "/"));
    else {
      e.relations.pop_back();
      e.relations.push_back({RelationKind::commute, {chain_a(1), chain_a(n)}});
      e.relations.push_back({RelationKind::braid, {chain_g(n - 1), chain_a(n)}});
      r.merge(verify_suite({make_chain_page(n), {}, {}}, e, "chain" + std::to_string(n) + "/"));
    }
  }

  Page p = make_chain_page(2);
  TwistWord lemma = lemma_word();
  TwistWord theorem = compose(chain_word(2), section_monodromy(standard_negative(2), Side::front, p));
  auto d = action_diff(p, affine_action(p, lemma), affine_action(p, theorem));
  r.add_bool("lemma/psi_vs_chain_word_with_negative_section", d.empty(), d.empty() ? "" : d.entries.front());

  Braid b121 = Braid::parse("s1 s2 s1"), b212 = Braid::parse("s2 s1 s2");
  r.add_bool("artin/braid_relation", braids_equal(b121, b212));
  r.add_bool("artin/distant_commutation", braids_equal(Braid::parse("s1 s3"), Braid::parse("s3 s1")));
  r.add_bool("artin/faithful_on_inverse", !braids_equal(Braid::parse("s1"), Braid::parse("s1^-1", 2)));
  return r;
}

inline Report multisection_suite() {
  Report r;
  for (std::size_t n = 2; n <= 4; ++n) {
    std::string tag = "multisum/n=" + std::to_string(n) + "/";
    Braid sp = standard_positive(n), sm = standard_negative(n);
    OpenBook pp = multi_section_sum(sp, sp);
    r.add(tag + "pp_word", standard_braid_word(BraidCase::pp, n).str(), pp.monodromy.str());
    OpenBook mp = multi_section_sum(sm, sp);
    r.add_bool(tag + "mp_action", actions_equal(mp.page, mp.monodromy, standard_braid_word(BraidCase::mp, n)));
    OpenBook mm = multi_section_sum(sm, sm);
    r.add_bool(tag + "mm_action", actions_equal(mm.page, mm.monodromy, standard_braid_word(BraidCase::mm, n)));
  }

  std::mt19937 rng(20240611);
  std::size_t comb_ok = 0, nf_ok = 0, total = 200;
  for (std::size_t t = 0; t < total; ++t) {
    std::size_t n = std::uniform_int_distribution<std::size_t>(2, 5)(rng);
    std::size_t len = std::uniform_int_distribution<std::size_t>(0, 16)(rng);
    Braid b(n);
    for (std::size_t k = 0; k < len; ++k)
      b.letters.push_back({std::uniform_int_distribution<int>(1, static_cast<int>(n) - 1)(rng),
                           std::uniform_int_distribution<int>(0, 1)(rng) ? 1 : -1});
    Braid p = purified(b);
    if (braids_equal(recompose(comb(p)), p)) ++comb_ok;
    Braid c = p * standard_positive(n);
    NormalForm nf = normal_form(c);
    if (braids_equal(nf.pure * nf.standard, c) && is_pure(nf.pure)) ++nf_ok;
  }
  r.add("braids/comb_round_trip", std::to_string(total), std::to_string(comb_ok));
  r.add("braids/normal_form_round_trip", std::to_string(total), std::to_string(nf_ok));
  return r;
}

inline std::vector<std::string> suite_names() { return {"multisection", "paper", "presets", "relations"}; }

inline Report run_suite(std::string const& name) {
  if (name == "presets") return presets_suite();
  if (name == "relations") return relations_suite();
  if (name == "multisection") return multisection_suite();
  if (name == "paper") {
    Report r = presets_suite();
    r.merge(relations_suite());
    r.merge(multisection_suite());
    return r;
  }
  throw Error("unknown suite '" + name + "'");
}

}  // namespace obk
