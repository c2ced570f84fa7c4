#pragma once

// Command-line front end. `run` takes the arguments after the program name
// and explicit streams so tests can drive it without a process.
//
// Exit codes: 0 success, 1 input or validation error, 2 verification failure.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "obk/obk.hpp"

namespace obk::cli {

namespace detail {

inline std::string slurp(std::string const& path, std::istream& in) {
  if (path.empty() || path == "-") return {std::istreambuf_iterator<char>(in), {}};
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(f), {}};
}

inline void emit(std::string const& path, std::string const& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write '" + path + "'");
  f << text;
}

inline OpenBook load(std::string const& path, std::istream& in) { return parse_document(slurp(path, in)).book; }

inline json meta(std::string const& operation) { return {{"generator", "obk"}, {"operation", operation}}; }

inline std::pair<int, int> parse_pair(std::string const& s) {
  auto colon = s.find(':');
  try {
    if (colon == std::string::npos) throw Error("");
    std::size_t a = 0, b = 0;
    int x = std::stoi(s.substr(0, colon), &a);
    int y = std::stoi(s.substr(colon + 1), &b);
    if (a != colon || b != s.size() - colon - 1) throw Error("");
    return {x, y};
  } catch (...) {
    throw Error("bad label pair '" + s + "', expected POS:NEG");
  }
}

inline OpenBook build_source(std::string const& source, long long n, std::istream& in, std::string& op) {
  op = "build " + source;
  for (auto const& name : preset_names())
    if (source == name) return preset(name);
  if (source == "disc_pair") return disjoint_union(preset("s3_disc"), preset("s3_disc")).book;
  if (source == "t3") {
    op += " n=" + std::to_string(n);
    return t3_open_book(n);
  }
  if (source == "chain") {
    if (n < 1) throw Error("chain needs --n >= 1");
    op += " n=" + std::to_string(n);
    return {make_chain_page(static_cast<std::size_t>(n)), {}, {}};
  }
  std::ifstream probe(source);
  if (source == "-" || probe) {
    Document d = parse_document(slurp(source, in));
    op.clear();
    if (d.meta.is_object() && d.meta.contains("operation") && d.meta["operation"].is_string())
      op = d.meta["operation"].get<std::string>();
    return d.book;
  }
  throw Error("unknown preset '" + source + "'");
}

}  // namespace detail

inline int run(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Abstract open books: constructions, twist words and homology invariants", "obk"};
  app.require_subcommand(1);
  std::string in_path, out_path;

  auto* build = app.add_subcommand("build", "Emit the document of a preset or re-emit a document canonically");
  std::string source;
  long long build_n = 1;
  build->add_option("source", source,
                    "s3_disc | s3_hopf_plus | s3_hopf_minus | s1s2 | disc_pair | t3 | chain | PATH")
      ->required();
  build->add_option("--n", build_n, "size parameter for t3 and chain");

  auto* bindsum = app.add_subcommand("bindsum", "Binding sum of two binding components");
  int k0 = 0, k1 = 0;
  long long m = 0;
  bindsum->add_option("--k0", k0, "first binding label")->required();
  bindsum->add_option("--k1", k1, "second binding label")->required();
  auto* m_opt = bindsum->add_option("--m", m, "framing (default: stored framings, normalised; 0 if none)");

  auto* multisum = app.add_subcommand("multisum", "Fibre sum of two disc open books along multi-sections");
  std::size_t strands = 0;
  std::string braid0, braid1;
  multisum->add_option("--n", strands, "braid index")->required();
  multisum->add_option("--k0", braid0, "first braid, e.g. \"s1 s2^-1\"")->required();
  multisum->add_option("--k1", braid1, "second braid")->required();

  auto* stab = app.add_subcommand("stabilize", "Add a 1-handle along an arc and twist along its core");
  int arc_a = 0, arc_b = 0, sign = 1;
  stab->add_option("--a", arc_a, "label of the first arc endpoint")->required();
  stab->add_option("--b", arc_b, "label of the second arc endpoint (default: same as --a)");
  stab->add_option("--sign", sign, "+1 or -1")->check(CLI::IsMember({-1, 1}));

  auto* lutz = app.add_subcommand("lutz", "Binding sum with two annuli in a chain at one binding component");
  int lutz_k = 0;
  lutz->add_option("--k", lutz_k, "binding label")->required();

  auto* giroux = app.add_subcommand("giroux", "Sum with the two-annulus gadget along two binding components");
  long long gm = 0, gn = 0;
  giroux->add_option("--k0", k0, "first binding label")->required();
  giroux->add_option("--k1", k1, "second binding label")->required();
  giroux->add_option("--m", gm, "framing at k0");
  giroux->add_option("--n", gn, "framing at k1");

  auto* convex = app.add_subcommand("convexsum", "Binding sum of a positive and a negative open book");
  std::string pos_path, neg_path;
  std::vector<std::string> pairs;
  convex->add_option("--positive", pos_path, "document of the positive part")->required();
  convex->add_option("--negative", neg_path, "document of the negative part")->required();
  convex->add_option("--pair", pairs, "POS:NEG label pair, repeatable")->required();

  auto* inv = app.add_subcommand("invariants", "First homology of the manifold and page data");

  auto* verify = app.add_subcommand("verify", "Run a built-in verification suite");
  std::string suite;
  verify->add_option("--suite", suite, "presets | relations | multisection | paper")->required();

  for (auto* sub : {bindsum, stab, lutz, giroux, inv}) sub->add_option("--in", in_path, "input document (default stdin)");
  for (auto* sub : {build, bindsum, multisum, stab, lutz, giroux, convex, inv, verify})
    sub->add_option("--out", out_path, "output file (default stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (build->parsed()) {
      std::string op;
      OpenBook ob = detail::build_source(source, build_n, in, op);
      detail::emit(out_path, print_document(ob, op.empty() ? json() : detail::meta(op)), out);
    } else if (bindsum->parsed()) {
      OpenBook ob = detail::load(in_path, in);
      if (!m_opt->count()) m = static_cast<long long>(normalize_framings(ob.framing(k0), ob.framing(k1)).first);
      OpenBook r = binding_sum(ob, k0, k1, m);
      detail::emit(out_path,
                   print_document(r, detail::meta("bindsum k0=" + std::to_string(k0) + " k1=" + std::to_string(k1) +
                                                  " m=" + std::to_string(m))),
                   out);
    } else if (multisum->parsed()) {
      Braid b0 = Braid::parse(braid0, strands), b1 = Braid::parse(braid1, strands);
      OpenBook r = multi_section_sum(b0, b1);
      detail::emit(out_path, print_document(r, detail::meta("multisum k0=\"" + b0.str() + "\" k1=\"" + b1.str() + "\"")),
                   out);
    } else if (stab->parsed()) {
      if (stab->count("--b") == 0) arc_b = arc_a;
      OpenBook r = stabilize(detail::load(in_path, in), arc_a, arc_b, sign);
      detail::emit(out_path,
                   print_document(r, detail::meta("stabilize a=" + std::to_string(arc_a) + " b=" + std::to_string(arc_b) +
                                                  " sign=" + std::to_string(sign))),
                   out);
    } else if (lutz->parsed()) {
      OpenBook r = lutz_full(detail::load(in_path, in), lutz_k);
      detail::emit(out_path, print_document(r, detail::meta("lutz k=" + std::to_string(lutz_k))), out);
    } else if (giroux->parsed()) {
      OpenBook r = giroux_gadget(detail::load(in_path, in), k0, k1, gm, gn);
      detail::emit(out_path,
                   print_document(r, detail::meta("giroux k0=" + std::to_string(k0) + " k1=" + std::to_string(k1) +
                                                  " m=" + std::to_string(gm) + " n=" + std::to_string(gn))),
                   out);
    } else if (convex->parsed()) {
      std::vector<std::pair<int, int>> pv;
      std::string op = "convexsum";
      for (auto const& s : pairs) {
        pv.push_back(detail::parse_pair(s));
        op += " " + s;
      }
      OpenBook r = convex_bundle_sum(detail::load(pos_path, in), detail::load(neg_path, in), pv);
      detail::emit(out_path, print_document(r, detail::meta(op)), out);
    } else if (inv->parsed()) {
      OpenBook ob = detail::load(in_path, in);
      AbelianGroup h = h1_of_open_book(ob);
      json j = group_json(h);
      json per = json::array();
      for (auto const& g : h1_by_component(ob)) per.push_back(group_json(g));
      j["components"] = per;
      json comps = json::array();
      for (auto const& c : ob.page.components())
        comps.push_back({{"genus", c.genus}, {"boundary_ids", c.boundary_labels}});
      j["page"] = {{"components", comps}, {"euler", ob.page.euler_characteristic()}, {"h1_rank", ob.page.h1_rank()}};
      detail::emit(out_path, j.dump(2) + "\n", out);
    } else if (verify->parsed()) {
      Report r = run_suite(suite);
      detail::emit(out_path, report_json(r).dump(2) + "\n", out);
      if (!r.pass()) return 2;
    }
  } catch (Error const& e) {
    err << "obk: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace obk::cli
