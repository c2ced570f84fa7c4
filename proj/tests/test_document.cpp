#include <gtest/gtest.h>

#include "obk/document.hpp"

using namespace obk;

namespace {

std::string error_of(std::string const& text) {
  try {
    parse_document(text);
  } catch (Error const& e) {
    return e.what();
  }
  return "";
}

std::vector<OpenBook> samples() {
  std::vector<OpenBook> out;
  for (auto const& n : preset_names()) out.push_back(preset(n));
  out.push_back(t3_open_book(1));
  out.push_back(multi_section_sum(standard_negative(3), standard_positive(3)));
  out.push_back(stabilize(preset("s1s2"), 1, 2, -1));
  OpenBook framed = disjoint_union(preset("s3_disc"), preset("s3_disc")).book;
  framed.framings[2] = -7;
  out.push_back(framed);
  return out;
}

}  // namespace

TEST(Document, RoundTrip) {
  for (auto const& ob : samples()) {
    std::string text = print_document(ob, {{"operation", "test"}});
    Document d = parse_document(text);
    EXPECT_EQ(d.book, ob);
    EXPECT_EQ(d.meta["operation"], "test");
    EXPECT_EQ(print_document(d.book, d.meta), text);
  }
}

TEST(Document, Shape) {
  json j = document_json(preset("s3_hopf_plus"));
  EXPECT_FALSE(j.contains("meta"));
  EXPECT_EQ(j["monodromy"], "c");
  EXPECT_EQ(j["pages"].size(), 1u);
  EXPECT_EQ(j["bindings"][0]["label"], 1);
  EXPECT_EQ(j["curves"]["c"]["boundary_parallel_to"], 1);
  for (char const* key : {"arcs", "components", "generators", "pairing", "relations"})
    EXPECT_TRUE(j["pages"][0].contains(key)) << key;
}

TEST(Document, HugeIntegersAsStrings) {
  Integer big("123456789012345678901234567890");
  EXPECT_TRUE(integer_json(big).is_string());
  EXPECT_TRUE(integer_json(Integer(-5)).is_number_integer());
  OpenBook ob = preset("s3_disc");
  ob.framings[1] = big;
  EXPECT_EQ(parse_document(print_document(ob)).book.framing(1), big);
}

TEST(Document, SyntaxErrorHasPosition) {
  std::string e = error_of("{\n  \"pages\": [,]\n}");
  EXPECT_NE(e.find("line 2"), std::string::npos) << e;
}

TEST(Document, SchemaErrors) {
  json good = document_json(preset("s1s2"));

  json extra = good;
  extra["surprise"] = 1;
  EXPECT_NE(error_of(extra.dump()).find("schema error"), std::string::npos);

  json missing = good;
  missing.erase("monodromy");
  EXPECT_NE(error_of(missing.dump()).find("monodromy"), std::string::npos);

  json bad_word = good;
  bad_word["monodromy"] = "nope";
  EXPECT_NE(error_of(bad_word.dump()).find("/monodromy"), std::string::npos);

  json two_pages = good;
  two_pages["pages"].push_back(two_pages["pages"][0]);
  EXPECT_NE(error_of(two_pages.dump()).find("/pages"), std::string::npos);

  json wrong_arc = good;
  wrong_arc["pages"][0]["arcs"]["2"][0] = 5;
  EXPECT_FALSE(error_of(wrong_arc.dump()).empty());

  json wrong_binding = good;
  wrong_binding["bindings"].erase(1);
  EXPECT_NE(error_of(wrong_binding.dump()).find("/bindings"), std::string::npos);

  json wrong_type = good;
  wrong_type["pages"][0]["relations"] = "x";
  EXPECT_NE(error_of(wrong_type.dump()).find("/pages/0/relations"), std::string::npos);
}

TEST(Document, ReportJsonSorted) {
  Report r;
  r.add("b", "1", "1");
  r.add("a", "1", "2");
  json j = report_json(r);
  EXPECT_EQ(j["checks"][0]["name"], "a");
  EXPECT_FALSE(j["pass"].get<bool>());
  EXPECT_FALSE(j["checks"][0]["pass"].get<bool>());
}
