#include <gtest/gtest.h>

#include "obk/page.hpp"

using namespace obk;

namespace {

std::vector<std::size_t> genera(Page const& p) {
  std::vector<std::size_t> g;
  for (auto const& c : p.components()) g.push_back(c.genus);
  return g;
}

}  // namespace

TEST(Page, Disc) {
  Page d = make_disc();
  EXPECT_EQ(d.euler_characteristic(), 1);
  EXPECT_EQ(d.labels(), std::vector<int>{1});
  EXPECT_EQ(d.h1_rank(), 0u);
  EXPECT_EQ(genera(d), std::vector<std::size_t>{0});
  d.validate();
}

TEST(Page, Annulus) {
  Page a = make_annulus();
  EXPECT_EQ(a.euler_characteristic(), 0);
  EXPECT_EQ(a.h1_rank(), 1u);
  EXPECT_EQ(a.curve("c").boundary_parallel_to, 1);
  // the core crosses the arc from the base circle to the other one once
  EXPECT_EQ(abs(a.arc_crossing(2, a.curve_class("c"))), 1);
  EXPECT_EQ(a.arc_crossing(1, a.curve_class("c")), 0);
  a.validate();
}

TEST(Page, TubeBetweenComponentsMerges) {
  UnionResult u = disjoint_union(make_disc(), make_disc());
  Page p = u.page;
  EXPECT_EQ(p.component_ids().size(), 2u);
  p.add_site("x", 1);
  p.add_site("y", 2);
  auto t = p.attach_tube("x", "y");
  EXPECT_FALSE(t.through.has_value());
  EXPECT_EQ(p.component_ids().size(), 1u);
  EXPECT_EQ(p.euler_characteristic(), 0);
  EXPECT_EQ(genera(p), std::vector<std::size_t>{0});
  p.validate();
}

TEST(Page, TubeInsideComponentAddsGenus) {
  Page p = make_chain_page(2);
  EXPECT_EQ(p.euler_characteristic(), -2);
  EXPECT_EQ(genera(p), std::vector<std::size_t>{1});
  EXPECT_EQ(p.labels().size(), 2u);
  EXPECT_EQ(p.h1_rank(), 3u);
  EXPECT_EQ(abs(p.pair(chain_a(1), chain_g(1))), 1);
  EXPECT_EQ(abs(p.pair(chain_a(2), chain_g(1))), 1);
  EXPECT_EQ(p.pair(chain_a(1), chain_a(2)), 0);
  p.validate();
}

TEST(Page, ChainPageGenusGrows) {
  for (std::size_t n = 1; n <= 5; ++n) {
    Page p = make_chain_page(n);
    EXPECT_EQ(p.euler_characteristic(), 2 - 2 * static_cast<long long>(n));
    EXPECT_EQ(p.h1_rank(), p.expected_h1_rank());
    EXPECT_EQ(p.h1_rank(), 2 * n - 1);
    p.validate();
  }
}

TEST(Page, DeltaCurvesAreOpposite) {
  Page p = make_chain_page(3);
  for (auto [i, j] : {std::pair{1, 2}, {1, 3}, {2, 3}})
    EXPECT_TRUE(is_zero(add(p.curve_class(chain_d(i, j)), p.curve_class(chain_dp(i, j)))));
}

TEST(Page, HoleAndMerge) {
  Page a = make_annulus();
  int l = a.add_hole(1);
  EXPECT_EQ(l, 3);
  EXPECT_EQ(a.euler_characteristic(), -1);
  a.validate();

  Page b = make_annulus();
  b.merge_boundaries(1, 2);
  EXPECT_EQ(b.labels(), std::vector<int>{1});
  EXPECT_EQ(genera(b), std::vector<std::size_t>{1});
  EXPECT_FALSE(b.curve("c").boundary_parallel_to.has_value());
  b.validate();
}

TEST(Page, MergeAcrossComponentsRejected) {
  Page p = disjoint_union(make_disc(), make_disc()).page;
  EXPECT_THROW(p.merge_boundaries(1, 2), Error);
  EXPECT_THROW(p.merge_boundaries(1, 1), Error);
}

TEST(Page, SiteErrors) {
  Page p = make_disc();
  EXPECT_THROW(p.add_site("bad name", 1), Error);
  p.add_site("s", 1);
  EXPECT_THROW(p.add_site("s", 1), Error);
  EXPECT_THROW(p.attach_tube("s", "s"), Error);
  EXPECT_THROW(p.attach_tube("s", "missing"), Error);
  EXPECT_THROW(p.boundary(9), Error);
}

TEST(Page, CurveRegistry) {
  Page p = make_annulus();
  EXPECT_THROW(p.register_curve({"c", p.boundary_class(1), 1}), Error);
  EXPECT_THROW(p.register_curve({"9x", {}, std::nullopt}), Error);
  EXPECT_EQ(p.fresh_curve_name("c"), "c.2");
  EXPECT_EQ(p.fresh_curve_name("z"), "z");
}

TEST(Page, UnionRenamesCollidingCurves) {
  UnionResult u = disjoint_union(make_annulus(), make_annulus());
  EXPECT_EQ(u.label_offset, 2);
  EXPECT_EQ(u.renamed.at("c"), "c'");
  EXPECT_EQ(u.page.curve("c'").boundary_parallel_to, 3);
  EXPECT_EQ(u.page.labels(), (std::vector<int>{1, 2, 3, 4}));
  u.page.validate();
}

TEST(Page, ArcsVanishOnRelations) {
  Page p = make_chain_page(3);
  for (auto const& [l, a] : p.arcs())
    for (auto const& r : p.relations()) EXPECT_EQ(dot(a, r), 0);
  EXPECT_TRUE(is_zero(p.arc(p.base_label(p.component_ids().front()))));
}

TEST(Page, EqualityIsStructural) {
  EXPECT_EQ(make_chain_page(2), make_chain_page(2));
  EXPECT_NE(make_chain_page(2), make_chain_page(3));
}
