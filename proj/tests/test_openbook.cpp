#include <random>

#include <gtest/gtest.h>

#include "obk/invariants.hpp"
#include "obk/openbook.hpp"
#include "oracles.hpp"

using namespace obk;

namespace {

std::string h1(OpenBook const& ob) { return h1_of_open_book(ob).str(); }

std::string oracle_h1(OpenBook const& ob) {
  oracle::Group g = oracle::manifold_h1(ob.page, ob.monodromy);
  return AbelianGroup{g.free_rank, g.torsion}.str();
}

OpenBook disc_pair() { return disjoint_union(preset("s3_disc"), preset("s3_disc")).book; }

}  // namespace

TEST(Preset, Shapes) {
  EXPECT_EQ(preset("s3_disc").page.labels().size(), 1u);
  EXPECT_TRUE(preset("s3_disc").monodromy.empty());
  EXPECT_EQ(preset("s3_hopf_plus").monodromy.str(), "c");
  EXPECT_EQ(preset("s3_hopf_minus").monodromy.str(), "c^-1");
  EXPECT_TRUE(preset("s1s2").monodromy.empty());
  EXPECT_THROW(preset("nosuch"), Error);
  for (auto const& n : preset_names()) preset(n).validate();
}

TEST(Stabilize, DiscGivesHopfAnnuli) {
  OpenBook plus = stabilize(preset("s3_disc"), 1, 1, 1);
  EXPECT_EQ(plus.page.euler_characteristic(), 0);
  EXPECT_EQ(plus.page.labels().size(), 2u);
  EXPECT_EQ(plus.monodromy.str(), "c");
  EXPECT_EQ(h1(plus), "0");
  EXPECT_EQ(stabilize(preset("s3_disc"), 1, 1, -1).monodromy.str(), "c^-1");
  plus.validate();
}

TEST(Stabilize, PreservesH1OnPresets) {
  for (auto const& name : preset_names()) {
    OpenBook ob = preset(name);
    std::string before = h1(ob);
    for (int sign : {1, -1})
      for (int a : ob.page.labels())
        for (int b : ob.page.labels()) {
          OpenBook s = stabilize(ob, a, b, sign);
          EXPECT_EQ(h1(s), before) << name << " " << a << "," << b << " sign " << sign;
          EXPECT_EQ(oracle_h1(s), before);
          s.validate();
        }
  }
}

TEST(Stabilize, ArcBetweenCirclesRaisesGenus) {
  OpenBook s = stabilize(preset("s1s2"), 1, 2, 1);
  EXPECT_EQ(s.page.labels(), std::vector<int>{1});
  EXPECT_EQ(s.page.components().front().genus, 1u);
  EXPECT_EQ(s.monodromy.str(), "c.2");
}

TEST(Stabilize, Errors) {
  EXPECT_THROW(stabilize(preset("s3_disc"), 2, 2, 1), Error);
  EXPECT_THROW(stabilize(preset("s3_disc"), 1, 1, 0), Error);
  EXPECT_THROW(stabilize(disc_pair(), 1, 2, 1), Error);
}

TEST(BindingSum, TwoDiscsGiveS1xS2) {
  OpenBook s = binding_sum(disc_pair(), 1, 2, 0);
  EXPECT_EQ(h1(s), "Z");
  EXPECT_EQ(oracle_h1(s), "Z");
  auto comps = s.page.components();
  ASSERT_EQ(comps.size(), 1u);
  EXPECT_EQ(comps[0].genus, 0u);
  EXPECT_EQ(comps[0].boundary_labels.size(), 2u);
  EXPECT_EQ(s.monodromy.str(), "alpha1_0 beta1_0^-1 alpha1_1 beta1_1^-1 gamma1^-2");
  s.validate();
}

TEST(BindingSum, FramingGivesLensSpaces) {
  // S3 # S3 along unknots with framing m: lens space with |H1| = |m|
  for (long long m = -4; m <= 4; ++m) {
    OpenBook s = binding_sum(disc_pair(), 1, 2, m);
    EXPECT_EQ(h1(s), AbelianGroup(m == 0 ? AbelianGroup{1, {}}
                                         : (std::llabs(m) == 1 ? AbelianGroup{}
                                                               : AbelianGroup{0, {Integer(std::llabs(m))}}))
                         .str());
    EXPECT_EQ(oracle_h1(s), h1(s));
  }
}

TEST(BindingSum, StoredFramingsNormalise) {
  OpenBook ob = disc_pair();
  ob.framings[1] = 2;
  ob.framings[2] = 1;
  EXPECT_EQ(normalize_framings(2, 1), (std::pair<Integer, Integer>{3, 0}));
  EXPECT_EQ(binding_sum(ob, 1, 2).monodromy, binding_sum(disc_pair(), 1, 2, 3).monodromy);
  EXPECT_TRUE(binding_sum(ob, 1, 2).framings.empty());
}

TEST(BindingSum, Errors) {
  EXPECT_THROW(binding_sum(disc_pair(), 1, 1, 0), Error);
  EXPECT_THROW(binding_sum(disc_pair(), 1, 7, 0), Error);
}

TEST(BindingSum, SelfSumOfAnnulus) {
  OpenBook s = binding_sum(preset("s1s2"), 1, 2, 0);
  EXPECT_EQ(h1(s), "Z + Z/2 + Z/2");
  EXPECT_EQ(oracle_h1(s), h1(s));
}

TEST(Navel, IdentityOnEveryPresetBoundary) {
  for (auto const& name : preset_names()) {
    OpenBook ob = preset(name);
    for (int l : ob.page.labels()) {
      Page p = ob.page;
      NavelCurves n = register_navel(p, l);
      for (long long m = -3; m <= 3; ++m)
        EXPECT_TRUE(action_diff(p, affine_action(p, navel_word(m, n)), AffineAction::identity(p)).empty());
      EXPECT_EQ(navel_word(2, n).str(), n.alpha + " " + n.beta + "^-1 " + n.gamma);
    }
  }
}

TEST(T3, HomologyAndPage) {
  for (long long n = 1; n <= 3; ++n) {
    OpenBook t = t3_open_book(n);
    EXPECT_EQ(h1(t), "Z^3");
    EXPECT_EQ(oracle_h1(t), "Z^3");
    EXPECT_EQ(t.page.euler_characteristic(), -4 * n);
    EXPECT_EQ(t.page.component_ids().size(), 1u);
    t.validate();
  }
  EXPECT_THROW(t3_open_book(0), Error);
}

TEST(Lutz, PreservesH1) {
  for (auto const& name : preset_names()) {
    OpenBook ob = preset(name);
    for (int k : ob.page.labels()) {
      OpenBook l = lutz_full(ob, k);
      EXPECT_EQ(h1(l), h1(ob)) << name;
      EXPECT_EQ(l.page.labels().size(), ob.page.labels().size() + 4);
    }
  }
  EXPECT_THROW(lutz_full(preset("s3_disc"), 5), Error);
}

TEST(Giroux, DependsOnParityOfFramings) {
  OpenBook base = preset("s1s2");
  EXPECT_EQ(h1(giroux_gadget(base, 1, 2, 0, 0)), "Z + Z/2 + Z/2");
  EXPECT_EQ(h1(giroux_gadget(base, 1, 2, 1, 0)), "Z + Z/4");
  EXPECT_EQ(oracle_h1(giroux_gadget(base, 1, 2, 1, 2)), h1(giroux_gadget(base, 1, 2, 1, 2)));
  EXPECT_THROW(giroux_gadget(base, 1, 1, 0, 0), Error);
}

TEST(ConvexSum, DiscsAlongOnePair) {
  OpenBook s = convex_bundle_sum(preset("s3_hopf_plus"), preset("s3_hopf_minus"), {{1, 1}, {2, 2}});
  EXPECT_EQ(h1(s), oracle_h1(s));
  EXPECT_EQ(s.page.component_ids().size(), 1u);
  EXPECT_THROW(convex_bundle_sum(preset("s3_disc"), preset("s3_disc"), {}), Error);
  EXPECT_THROW(convex_bundle_sum(preset("s1s2"), preset("s1s2"), {{1, 1}}), Error);
  EXPECT_THROW(convex_bundle_sum(preset("s1s2"), preset("s1s2"), {{1, 1}, {1, 2}}), Error);
}

TEST(MultiSection, PositivePairIsLetterForLetter) {
  EXPECT_EQ(multi_section_sum(standard_positive(2), standard_positive(2)).monodromy.str(), "g1 a1 a2 g1");
  EXPECT_EQ(multi_section_sum(standard_positive(3), standard_positive(3)).monodromy.str(),
            "g1 a1 a2 g1 g2 a2 a3 g2");
}

TEST(MultiSection, NegativeCasesMatchClosedForms) {
  for (std::size_t n = 2; n <= 4; ++n) {
    OpenBook mp = multi_section_sum(standard_negative(n), standard_positive(n));
    EXPECT_TRUE(actions_equal(mp.page, mp.monodromy, standard_braid_word(BraidCase::mp, n)));
    OpenBook mm = multi_section_sum(standard_negative(n), standard_negative(n));
    EXPECT_TRUE(actions_equal(mm.page, mm.monodromy, standard_braid_word(BraidCase::mm, n)));
    EXPECT_EQ(h1(mp), "Z");
    EXPECT_EQ(h1(mm), h1(multi_section_sum(standard_positive(n), standard_positive(n))));
  }
}

TEST(MultiSection, RejectsWrongPermutation) {
  EXPECT_THROW(multi_section_sum(Braid::parse("s1 s1"), standard_positive(2)), Error);
  EXPECT_THROW(multi_section_sum(standard_positive(2), standard_positive(3)), Error);
}

TEST(Lemma, PsiMatchesChainWordWithNegativeSection) {
  Page p = make_chain_page(2);
  EXPECT_EQ(lemma_word().str(), "a1 a2 g1 a1 a2 g1 d1_2^-1");
  TwistWord assembled = compose(chain_word(2), section_monodromy(standard_negative(2), Side::front, p));
  EXPECT_TRUE(actions_equal(p, lemma_word(), assembled));
}

TEST(OpenBook, UnionShiftsFramingsAndRenames) {
  OpenBook a = preset("s3_hopf_plus");
  OpenBook b = preset("s3_hopf_minus");
  b.framings[2] = 5;
  OpenBookUnion u = disjoint_union(a, b);
  EXPECT_EQ(u.book.monodromy.str(), "c c'^-1");
  EXPECT_EQ(u.book.framing(4), 5);
  u.book.validate();
}
