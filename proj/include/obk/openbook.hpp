#pragma once

// Abstract open books and the constructions on them: presets, stabilisation,
// navels, the binding sum and the composite constructions built from it, and
// the fibre sum along two multi-sections.

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "obk/braid.hpp"
#include "obk/error.hpp"
#include "obk/page.hpp"
#include "obk/twist.hpp"

namespace obk {

struct OpenBook {
  Page page;
  TwistWord monodromy;
  std::map<int, Integer> framings;  // relative to the page framing; absent means 0

  std::vector<int> binding() const { return page.labels(); }

  Integer framing(int label) const {
    auto it = framings.find(label);
    return it == framings.end() ? Integer(0) : it->second;
  }

  void validate() const {
    page.validate();
    check_word(page, monodromy);
    for (auto const& [l, f] : framings)
      if (!page.has_label(l)) throw Error("framing given for unknown binding label " + std::to_string(l));
  }

  friend bool operator==(OpenBook const&, OpenBook const&) = default;
};

inline std::vector<std::string> preset_names() { return {"s1s2", "s3_disc", "s3_hopf_minus", "s3_hopf_plus"}; }

inline OpenBook preset(std::string const& name) {
  if (name == "s3_disc") return {make_disc(), {}, {}};
  if (name == "s3_hopf_plus") return {make_annulus(), TwistWord{{"c", 1}}, {}};
  if (name == "s3_hopf_minus") return {make_annulus(), TwistWord{{"c", -1}}, {}};
  if (name == "s1s2") return {make_annulus(), {}, {}};
  throw Error("unknown preset '" + name + "'");
}

struct OpenBookUnion {
  OpenBook book;
  int label_offset = 0;
};

inline OpenBookUnion disjoint_union(OpenBook const& a, OpenBook const& b) {
  UnionResult u = disjoint_union(a.page, b.page);
  OpenBookUnion out{{std::move(u.page), a.monodromy, a.framings}, u.label_offset};
  out.book.monodromy.append(b.monodromy.renamed(u.renamed));
  for (auto const& [l, f] : b.framings) out.book.framings[l + u.label_offset] = f;
  return out;
}

// Adds a 1-handle along an arc with endpoints on boundary labels a and b
// and composes the monodromy with a twist along the arc closed up through
// the handle. For a == b the arc is boundary parallel and the circle splits;
// otherwise the two circles (of one component) merge into the smaller label.
inline OpenBook stabilize(OpenBook ob, int a, int b, int sign) {
  if (sign != 1 && sign != -1) throw Error("stabilisation sign must be +1 or -1");
  if (!ob.page.has_label(a) || !ob.page.has_label(b))
    throw Error("stabilisation arc ends on unknown label " + std::to_string(ob.page.has_label(a) ? b : a));
  std::string name = ob.page.fresh_curve_name("c");
  if (a == b) {
    int fresh = ob.page.add_hole(a);
    ob.page.register_curve({name, ob.page.boundary_class(fresh), fresh});
  } else {
    if (ob.page.component_of_label(a) != ob.page.component_of_label(b))
      throw Error("stabilisation arc must stay on one page component");
    std::size_t h = ob.page.merge_boundaries(a, b);
    ob.page.register_curve({name, unit_vector(ob.page.generator_count(), h), std::nullopt});
    Integer f = ob.framing(a) + ob.framing(b);
    ob.framings.erase(std::max(a, b));
    if (f != 0) ob.framings[std::min(a, b)] = f;
    else ob.framings.erase(std::min(a, b));
  }
  ob.monodromy = compose(ob.monodromy, TwistWord{{name, sign}});
  return ob;
}

inline std::pair<Integer, Integer> normalize_framings(Integer const& m1, Integer const& m2) { return {m1 + m2, 0}; }

struct NavelCurves {
  std::string alpha, beta, gamma;
};

// Navel at a boundary label before any sum: alpha and beta are both parallel
// to the binding and gamma bounds the disc around the core, so every navel
// word acts trivially.
inline NavelCurves register_navel(Page& page, int label) {
  std::string tag = std::to_string(label);
  NavelCurves n{page.fresh_curve_name("alpha" + tag), "", ""};
  page.register_curve({n.alpha, page.boundary_class(label), label});
  n.beta = page.fresh_curve_name("beta" + tag);
  page.register_curve({n.beta, page.boundary_class(label), label});
  n.gamma = page.fresh_curve_name("gamma" + tag);
  page.register_curve({n.gamma, Vector(page.generator_count(), 0), std::nullopt});
  return n;
}

inline TwistWord navel_word(long long m, NavelCurves const& c) {
  TwistWord w{{c.alpha, 1}, {c.beta, -1}};
  w.append(c.gamma, m - 1);
  return w;
}

// Binding sum along k0 (framing m) and k1 (framing 0). Both navel cores are
// removed and joined by a tube whose meridian is the common gamma; the two
// gamma powers m-1 and -1 merge into m-2.
inline OpenBook binding_sum(OpenBook ob, int k0, int k1, long long m) {
  if (k0 == k1) throw Error("binding sum needs two distinct labels");
  if (!ob.page.has_label(k0)) throw Error("unknown binding label " + std::to_string(k0));
  if (!ob.page.has_label(k1)) throw Error("unknown binding label " + std::to_string(k1));
  Page& p = ob.page;
  std::size_t t = p.tubes().size() + 1;
  std::string tag = std::to_string(t);
  std::string s0 = "navel" + tag + "_0", s1 = "navel" + tag + "_1";
  while (p.sites().count(s0) || p.sites().count(s1)) {
    s0 += "'";
    s1 += "'";
  }
  p.add_site(s0, k0);
  p.add_site(s1, k1);
  std::size_t mu = p.attach_tube(s0, s1).meridian;
  std::size_t n = p.generator_count();
  Vector m0 = unit_vector(n, mu);

  std::string a0 = p.fresh_curve_name("alpha" + tag + "_0");
  p.register_curve({a0, p.boundary_class(k0), k0});
  std::string b0 = p.fresh_curve_name("beta" + tag + "_0");
  p.register_curve({b0, add(p.boundary_class(k0), m0), std::nullopt});
  std::string a1 = p.fresh_curve_name("alpha" + tag + "_1");
  p.register_curve({a1, p.boundary_class(k1), k1});
  std::string b1 = p.fresh_curve_name("beta" + tag + "_1");
  p.register_curve({b1, add(p.boundary_class(k1), m0, -1), std::nullopt});
  std::string g = p.fresh_curve_name("gamma" + tag);
  p.register_curve({g, m0, std::nullopt});

  TwistWord tail{{a0, 1}, {b0, -1}, {a1, 1}, {b1, -1}};
  tail.append(g, m - 2);
  ob.monodromy.append(tail);
  ob.framings.erase(k0);
  ob.framings.erase(k1);
  return ob;
}

// Uses the framings stored on the two labels, normalised onto k0.
inline OpenBook binding_sum(OpenBook const& ob, int k0, int k1) {
  Integer m = normalize_framings(ob.framing(k0), ob.framing(k1)).first;
  return binding_sum(ob, k0, k1, static_cast<long long>(m));
}

// 2n annuli with identity monodromy, summed in a cycle.
inline OpenBook t3_open_book(long long n) {
  if (n < 1) throw Error("t3 needs n >= 1");
  OpenBook ob = preset("s1s2");
  for (long long i = 1; i < 2 * n; ++i) ob = disjoint_union(ob, preset("s1s2")).book;
  for (int i = 1; i < 2 * n; ++i) ob = binding_sum(ob, 2 * i, 2 * i + 1, 0);
  return binding_sum(ob, static_cast<int>(4 * n), 1, 0);
}

// Two annuli attached in a chain at k: k with the first annulus, then the
// far side of the first annulus with the second.
inline OpenBook lutz_full(OpenBook const& ob, int k) {
  if (!ob.page.has_label(k)) throw Error("unknown binding label " + std::to_string(k));
  auto u1 = disjoint_union(ob, preset("s1s2"));
  OpenBook once = binding_sum(u1.book, k, u1.label_offset + 1, 0);
  auto u2 = disjoint_union(once, preset("s1s2"));
  return binding_sum(u2.book, u1.label_offset + 2, u2.label_offset + 1, 0);
}

inline OpenBook convex_bundle_sum(OpenBook const& positive, OpenBook const& negative,
                                  std::vector<std::pair<int, int>> const& pairing) {
  if (pairing.empty()) throw Error("convex sum needs a nonempty dividing set");
  std::set<int> plus, minus;
  for (auto const& [a, b] : pairing) {
    if (!positive.page.has_label(a)) throw Error("unknown positive label " + std::to_string(a));
    if (!negative.page.has_label(b)) throw Error("unknown negative label " + std::to_string(b));
    if (!plus.insert(a).second || !minus.insert(b).second) throw Error("pairing is not a bijection");
  }
  if (plus.size() != positive.page.labels().size() || minus.size() != negative.page.labels().size())
    throw Error("pairing is not a bijection between the binding labels");
  auto u = disjoint_union(positive, negative);
  OpenBook ob = u.book;
  for (auto const& [a, b] : pairing) ob = binding_sum(ob, a, b + u.label_offset, 0);
  return ob;
}

// Two annuli summed once form the gadget; its free labels are then summed
// onto k0 with framing m and onto k1 with framing n.
inline OpenBook giroux_gadget(OpenBook const& ob, int k0, int k1, long long m, long long n) {
  if (k0 == k1) throw Error("giroux gadget needs two distinct labels");
  if (!ob.page.has_label(k0)) throw Error("unknown binding label " + std::to_string(k0));
  if (!ob.page.has_label(k1)) throw Error("unknown binding label " + std::to_string(k1));
  OpenBook gadget = binding_sum(disjoint_union(preset("s1s2"), preset("s1s2")).book, 1, 3, 0);
  auto u = disjoint_union(ob, gadget);
  OpenBook out = binding_sum(u.book, k0, u.label_offset + 2, m);
  return binding_sum(out, k1, u.label_offset + 4, n);
}

// prod_{i<n} g_i a_i a_{i+1} g_i
inline TwistWord chain_word(std::size_t n) {
  TwistWord w;
  for (std::size_t i = 1; i < n; ++i)
    w.append(chain_g(i)).append(chain_a(i)).append(chain_a(i + 1)).append(chain_g(i));
  return w;
}

enum class BraidCase { pp, mp, mm };

inline BraidCase braid_case_from_name(std::string const& s) {
  if (s == "pp") return BraidCase::pp;
  if (s == "mp") return BraidCase::mp;
  if (s == "mm") return BraidCase::mm;
  throw Error("unknown braid case '" + s + "'");
}

// Closed forms for the pairs (S+,S+), (S-,S+) and (S-,S-).
inline TwistWord standard_braid_word(BraidCase c, std::size_t n) {
  if (n < 2) throw Error("standard braid words need n >= 2");
  TwistWord w;
  for (std::size_t i = 1; i < n; ++i) {
    TwistWord gab{{chain_g(i), 1}, {chain_a(i), 1}, {chain_a(i + 1), 1}};
    switch (c) {
      case BraidCase::pp:
        w.append(gab).append(chain_g(i));
        break;
      case BraidCase::mp:
        w.append(power(gab, 2)).append(chain_d(i, i + 1), -1);
        break;
      case BraidCase::mm:
        w.append(chain_a(i)).append(chain_a(i + 1)).append(power(gab, 2));
        w.append(chain_d(i, i + 1), -1).append(chain_dp(i, i + 1), -1);
        break;
    }
  }
  return w;
}

inline TwistWord section_monodromy(Braid const& k, Side side, Page const& page) {
  return pure_braid_to_twists(comb(normal_form(k).pure), side, page);
}

// Fibre sum of two disc open books along the multi-sections k0 and k1.
inline OpenBook multi_section_sum(Braid const& k0, Braid const& k1) {
  if (k0.strands != k1.strands) throw Error("braids have different strand counts");
  std::size_t n = k0.strands;
  Page page = make_chain_page(n);
  TwistWord w = compose(compose(chain_word(n), section_monodromy(k0, Side::front, page)),
                        section_monodromy(k1, Side::back, page));
  return {std::move(page), std::move(w), {}};
}

// The four curves of the genus one, two boundary page: alpha, beta, gamma
// form a 3-chain and delta is parallel to a boundary.
struct LemmaCurves {
  std::string alpha = chain_a(1), beta = chain_a(2), gamma = chain_g(1), delta = chain_d(1, 2);
};

// (t_alpha t_beta t_gamma)^2 t_delta^-1
inline TwistWord lemma_word(LemmaCurves const& c = {}) {
  TwistWord w = power(TwistWord{{c.alpha, 1}, {c.beta, 1}, {c.gamma, 1}}, 2);
  return w.append(c.delta, -1);
}

}  // namespace obk
