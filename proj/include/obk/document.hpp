#pragma once

// JSON documents for open books and verification reports.
//
// Top-level keys: "bindings", "curves", "meta" (optional), "monodromy",
// "pages" (a one-element array). Keys are sorted by the JSON library, so
// printing is canonical and parse(print(x)) == x.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "obk/invariants.hpp"
#include "obk/openbook.hpp"
#include "obk/page.hpp"
#include "obk/twist.hpp"

namespace obk {

using json = nlohmann::json;

// ---- integers ---------------------------------------------------------------

inline json integer_json(Integer const& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return json(static_cast<std::int64_t>(x));
  return json(x.str());
}

inline json vector_json(Vector const& v) {
  json a = json::array();
  for (auto const& x : v) a.push_back(integer_json(x));
  return a;
}

inline json group_json(AbelianGroup const& g) {
  json t = json::array();
  for (auto const& x : g.torsion) t.push_back(integer_json(x));
  return {{"b1", g.free_rank}, {"torsion", t}};
}

// ---- writing ----------------------------------------------------------------

inline json page_json(Page const& p) {
  json j;
  json comps = json::array();
  for (auto const& c : p.components())
    comps.push_back({{"genus", c.genus}, {"boundary_ids", c.boundary_labels}, {"euler", c.euler}});
  j["components"] = comps;

  json gens = json::array();
  for (auto const& g : p.generators()) gens.push_back({{"name", g.name}, {"kind", kind_name(g.kind)}});
  j["generators"] = gens;

  json rels = json::array();
  for (auto const& r : p.relations()) rels.push_back(vector_json(r));
  j["relations"] = rels;

  json pairing = json::array();
  Matrix const& m = p.pairing_matrix();
  for (std::size_t a = 0; a < m.rows(); ++a)
    for (std::size_t b = a + 1; b < m.cols(); ++b)
      if (m(a, b) != 0) pairing.push_back({a, b, integer_json(m(a, b))});
  j["pairing"] = pairing;

  json arcs = json::object();
  for (auto const& [l, a] : p.arcs()) arcs[std::to_string(l)] = vector_json(a);
  j["arcs"] = arcs;

  json pieces = json::array();
  for (auto const& pc : p.pieces())
    pieces.push_back({{"labels", pc.labels}, {"euler", pc.euler}, {"component", pc.component}});
  j["pieces"] = pieces;

  json tubes = json::array();
  for (auto const& t : p.tubes()) {
    json tj = {{"piece0", t.piece0}, {"piece1", t.piece1}, {"meridian", t.meridian}, {"through", nullptr}};
    if (t.through) tj["through"] = *t.through;
    tubes.push_back(tj);
  }
  j["tubes"] = tubes;

  json bounds = json::object();
  for (auto const& [l, b] : p.boundaries())
    bounds[std::to_string(l)] = {{"piece", b.piece}, {"class", vector_json(b.cls)}, {"foot", vector_json(b.foot)}};
  j["boundaries"] = bounds;

  json sites = json::object();
  for (auto const& [name, piece] : p.sites()) sites[name] = piece;
  j["sites"] = sites;
  return j;
}

inline json curves_json(Page const& p) {
  json out = json::object();
  for (auto const& [name, c] : p.curves()) {
    json cross = json::object();
    for (auto const& [l, v] : p.arc_crossings(name)) cross[std::to_string(l)] = integer_json(v);
    json cj = {{"class", vector_json(c.cls)}, {"arc_crossings", cross}, {"boundary_parallel_to", nullptr}};
    if (c.boundary_parallel_to) cj["boundary_parallel_to"] = *c.boundary_parallel_to;
    out[name] = cj;
  }
  return out;
}

inline json document_json(OpenBook const& ob, json const& meta = json()) {
  json j;
  json bindings = json::array();
  for (int l : ob.page.labels()) bindings.push_back({{"label", l}, {"framing", integer_json(ob.framing(l))}});
  j["bindings"] = bindings;
  j["curves"] = curves_json(ob.page);
  if (!meta.is_null()) j["meta"] = meta;
  j["monodromy"] = ob.monodromy.str();
  j["pages"] = json::array({page_json(ob.page)});
  return j;
}

inline std::string print_document(OpenBook const& ob, json const& meta = json()) {
  return document_json(ob, meta).dump(2) + "\n";
}

inline json report_json(Report r) {
  r.sort();
  json checks = json::array();
  for (auto const& c : r.checks)
    checks.push_back({{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
  return {{"checks", checks}, {"pass", r.pass()}};
}

// ---- reading ----------------------------------------------------------------

namespace detail {

class Reader {
 public:
  [[noreturn]] static void fail(std::string const& path, std::string const& what) {
    throw Error("schema error at " + (path.empty() ? std::string("/") : path) + ": " + what);
  }

  static json const& field(json const& obj, std::string const& path, char const* key) {
    if (!obj.is_object()) fail(path, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) fail(path, std::string("missing key \"") + key + "\"");
    return *it;
  }

  static void only_keys(json const& obj, std::string const& path, std::vector<std::string> const& allowed) {
    for (auto const& [k, v] : obj.items())
      if (std::find(allowed.begin(), allowed.end(), k) == allowed.end()) fail(path, "unexpected key \"" + k + "\"");
  }

  static Integer integer(json const& v, std::string const& path) {
    if (v.is_number_integer()) return v.is_number_unsigned() ? Integer(v.get<std::uint64_t>()) : Integer(v.get<std::int64_t>());
    if (v.is_string()) {
      std::string s = v.get<std::string>();
      bool ok = !s.empty() && (std::isdigit(static_cast<unsigned char>(s[0])) || (s[0] == '-' && s.size() > 1));
      for (std::size_t i = 1; i < s.size() && ok; ++i) ok = std::isdigit(static_cast<unsigned char>(s[i]));
      if (ok) return Integer(s);
    }
    fail(path, "expected an integer");
  }

  static long long small(json const& v, std::string const& path) {
    Integer x = integer(v, path);
    if (x < std::numeric_limits<int>::min() || x > std::numeric_limits<int>::max()) fail(path, "integer out of range");
    return static_cast<long long>(x);
  }

  static std::size_t index(json const& v, std::string const& path, std::size_t bound) {
    long long x = small(v, path);
    if (x < 0 || static_cast<std::size_t>(x) >= bound) fail(path, "index out of range");
    return static_cast<std::size_t>(x);
  }

  static int label(std::string const& key, std::string const& path) {
    std::size_t used = 0;
    int l = 0;
    try {
      l = std::stoi(key, &used);
    } catch (...) {
      used = 0;
    }
    if (used != key.size() || key.empty()) fail(path, "\"" + key + "\" is not a boundary label");
    return l;
  }

  static Vector vec(json const& v, std::string const& path, std::size_t n) {
    if (!v.is_array()) fail(path, "expected an array");
    if (v.size() != n) fail(path, "expected " + std::to_string(n) + " entries, got " + std::to_string(v.size()));
    Vector out;
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(integer(v[i], path + "/" + std::to_string(i)));
    return out;
  }

  static json const& array(json const& v, std::string const& path) {
    if (!v.is_array()) fail(path, "expected an array");
    return v;
  }

  static json const& object(json const& v, std::string const& path) {
    if (!v.is_object()) fail(path, "expected an object");
    return v;
  }

  static std::string string(json const& v, std::string const& path) {
    if (!v.is_string()) fail(path, "expected a string");
    return v.get<std::string>();
  }
};

inline std::string line_column(std::string const& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

inline Page read_page(json const& j, std::string const& path, json const& curves) {
  using R = Reader;
  R::object(j, path);
  R::only_keys(j, path, {"arcs", "boundaries", "components", "generators", "pairing", "pieces", "relations", "sites", "tubes"});

  std::vector<Generator> gens;
  json const& gj = R::array(R::field(j, path, "generators"), path + "/generators");
  for (std::size_t i = 0; i < gj.size(); ++i) {
    std::string p = path + "/generators/" + std::to_string(i);
    R::only_keys(gj[i], p, {"kind", "name"});
    std::string kind = R::string(R::field(gj[i], p, "kind"), p + "/kind");
    GeneratorKind k;
    try {
      k = kind_from_name(kind);
    } catch (Error const& e) {
      R::fail(p + "/kind", e.what());
    }
    gens.push_back({R::string(R::field(gj[i], p, "name"), p + "/name"), k});
  }
  std::size_t n = gens.size();

  std::vector<Piece> pieces;
  json const& pj = R::array(R::field(j, path, "pieces"), path + "/pieces");
  for (std::size_t i = 0; i < pj.size(); ++i) {
    std::string p = path + "/pieces/" + std::to_string(i);
    R::only_keys(pj[i], p, {"component", "euler", "labels"});
    Piece piece;
    json const& lj = R::array(R::field(pj[i], p, "labels"), p + "/labels");
    for (std::size_t k = 0; k < lj.size(); ++k)
      piece.labels.push_back(static_cast<int>(R::small(lj[k], p + "/labels/" + std::to_string(k))));
    piece.euler = R::small(R::field(pj[i], p, "euler"), p + "/euler");
    piece.component = R::index(R::field(pj[i], p, "component"), p + "/component", pj.size());
    pieces.push_back(std::move(piece));
  }

  std::vector<Vector> rows;
  json const& rj = R::array(R::field(j, path, "relations"), path + "/relations");
  for (std::size_t i = 0; i < rj.size(); ++i) rows.push_back(R::vec(rj[i], path + "/relations/" + std::to_string(i), n));

  Matrix pairing(n, n);
  json const& pr = R::array(R::field(j, path, "pairing"), path + "/pairing");
  for (std::size_t i = 0; i < pr.size(); ++i) {
    std::string p = path + "/pairing/" + std::to_string(i);
    if (!pr[i].is_array() || pr[i].size() != 3) R::fail(p, "expected [row, column, value]");
    std::size_t a = R::index(pr[i][0], p + "/0", n), b = R::index(pr[i][1], p + "/1", n);
    if (a >= b) R::fail(p, "pairing entries must have row < column");
    Integer v = R::integer(pr[i][2], p + "/2");
    pairing(a, b) = v;
    pairing(b, a) = -v;
  }

  std::map<int, Boundary> bounds;
  json const& bj = R::object(R::field(j, path, "boundaries"), path + "/boundaries");
  for (auto const& [key, v] : bj.items()) {
    std::string p = path + "/boundaries/" + key;
    R::only_keys(v, p, {"class", "foot", "piece"});
    bounds.emplace(R::label(key, p), Boundary{R::index(R::field(v, p, "piece"), p + "/piece", pieces.size()),
                                              R::vec(R::field(v, p, "class"), p + "/class", n),
                                              R::vec(R::field(v, p, "foot"), p + "/foot", n)});
  }

  std::vector<Tube> tubes;
  json const& tj = R::array(R::field(j, path, "tubes"), path + "/tubes");
  for (std::size_t i = 0; i < tj.size(); ++i) {
    std::string p = path + "/tubes/" + std::to_string(i);
    R::only_keys(tj[i], p, {"meridian", "piece0", "piece1", "through"});
    Tube t{R::index(R::field(tj[i], p, "piece0"), p + "/piece0", pieces.size()),
           R::index(R::field(tj[i], p, "piece1"), p + "/piece1", pieces.size()),
           R::index(R::field(tj[i], p, "meridian"), p + "/meridian", n), std::nullopt};
    json const& th = R::field(tj[i], p, "through");
    if (!th.is_null()) t.through = R::index(th, p + "/through", n);
    tubes.push_back(t);
  }

  std::map<std::string, std::size_t> sites;
  json const& sj = R::object(R::field(j, path, "sites"), path + "/sites");
  for (auto const& [key, v] : sj.items()) sites.emplace(key, R::index(v, path + "/sites/" + key, pieces.size()));

  std::map<std::string, Curve> cs;
  for (auto const& [name, v] : curves.items()) {
    std::string p = "/curves/" + name;
    R::only_keys(v, p, {"arc_crossings", "boundary_parallel_to", "class"});
    R::object(R::field(v, p, "arc_crossings"), p + "/arc_crossings");
    if (!is_identifier(name)) R::fail(p, "invalid curve name");
    Curve c{name, R::vec(R::field(v, p, "class"), p + "/class", n), std::nullopt};
    json const& bp = R::field(v, p, "boundary_parallel_to");
    if (!bp.is_null()) c.boundary_parallel_to = static_cast<int>(R::small(bp, p + "/boundary_parallel_to"));
    cs.emplace(name, std::move(c));
  }

  Page page;
  try {
    page = Page::assemble(std::move(gens), std::move(pieces), std::move(rows), std::move(pairing), std::move(bounds),
                          std::move(tubes), std::move(sites), std::move(cs));
  } catch (Error const& e) {
    R::fail(path, std::string("inconsistent page: ") + e.what());
  }

  // Derived fields must agree with the data they are derived from.
  json again = page_json(page);
  for (char const* key : {"components", "arcs"})
    if (R::field(j, path, key) != again[key]) R::fail(path + "/" + key, "does not match the page data");
  json cagain = curves_json(page);
  for (auto const& [name, v] : curves.items())
    if (v["arc_crossings"] != cagain[name]["arc_crossings"])
      R::fail("/curves/" + name + "/arc_crossings", "does not match the page data");
  return page;
}

}  // namespace detail

struct Document {
  OpenBook book;
  json meta;  // null when absent
};

inline Document document_from_json(json const& j) {
  using R = detail::Reader;
  R::object(j, "");
  R::only_keys(j, "", {"bindings", "curves", "meta", "monodromy", "pages"});
  json const& pages = R::array(R::field(j, "", "pages"), "/pages");
  if (pages.size() != 1) R::fail("/pages", "expected exactly one page");
  json const& curves = R::object(R::field(j, "", "curves"), "/curves");
  Document d;
  d.book.page = detail::read_page(pages[0], "/pages/0", curves);

  std::string word = R::string(R::field(j, "", "monodromy"), "/monodromy");
  try {
    d.book.monodromy = TwistWord::parse(word);
    check_word(d.book.page, d.book.monodromy);
  } catch (Error const& e) {
    R::fail("/monodromy", e.what());
  }

  json const& bj = R::array(R::field(j, "", "bindings"), "/bindings");
  std::vector<int> seen;
  for (std::size_t i = 0; i < bj.size(); ++i) {
    std::string p = "/bindings/" + std::to_string(i);
    R::only_keys(bj[i], p, {"framing", "label"});
    int l = static_cast<int>(R::small(R::field(bj[i], p, "label"), p + "/label"));
    Integer f = R::integer(R::field(bj[i], p, "framing"), p + "/framing");
    seen.push_back(l);
    if (f != 0) d.book.framings[l] = f;
  }
  if (seen != d.book.page.labels()) R::fail("/bindings", "binding labels must list the page boundary labels in order");
  if (j.contains("meta")) d.meta = j["meta"];
  return d;
}

inline Document parse_document(std::string const& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (json::parse_error const& e) {
    throw Error("JSON syntax error at " + detail::line_column(text, e.byte) + ": " + e.what());
  }
  return document_from_json(j);
}

}  // namespace obk
