#include <doctest.h>

#include <random>

#include "fincat/dsl.hpp"
#include "support/oracles.hpp"

using namespace fincat;
using namespace fincat::dsl;

namespace {

int error_code(std::string_view text) {
  try {
    parse_spec(text);
  } catch (const ParseFailure& e) {
    return e.error().code;
  }
  return 0;
}

ParseError error_of(std::string_view text) {
  try {
    parse_spec(text);
  } catch (const ParseFailure& e) {
    return e.error();
  }
  FAIL("parsed: " << text);
  return {};
}

constexpr const char* kDocument = R"(// two sets and a map
category C { object A, B; arrow f : A -> B; }
finset X = { a, b, c }
finset Y = { p, q }
map m : X -> Y { a -> p; b -> q; c -> q; }
)";

}  // namespace

TEST_CASE("identities are implicit") {
  auto doc = parse_spec("category C { object A; }");
  REQUIRE(doc.declarations.size() == 1);
  auto ws = build_workspace(doc);
  const auto& c = *ws.categories.at("C");
  CHECK(c.object_count() == 1);
  CHECK(c.arrow_count() == 1);
  CHECK(c.arrow_label(c.identity(ObjectId{0})) == "id_A");
  CHECK(validate_category(c).ok());
}

TEST_CASE("undeclared composite is a resolution error") {
  auto e = error_of(
      "category C {\n"
      "  object A, B, D;\n"
      "  arrow f : A -> B;\n"
      "  arrow g : B -> D;\n"
      "  compose g . f = h;\n"
      "}\n");
  CHECK(e.kind == ErrorKind::resolution);
  CHECK(e.code == code::undeclared);
  CHECK(e.line == 5);
  CHECK(e.message.find("'h'") != std::string::npos);
}

TEST_CASE("coded errors") {
  CHECK(error_code("category C { object A$; }") == code::unexpected_character);
  CHECK(error_code("category C { object A, B; arrow f : A - B; }") == code::incomplete_arrow);
  CHECK(error_code("category C object A; }") == code::unexpected_token);
  CHECK(error_code("category C { object A;") == code::unexpected_end);
  CHECK(error_code("finset X = { a }\nfinset X = { b }") == code::duplicate);
  CHECK(error_code("category C { object A, A; }") == code::duplicate);
  CHECK(error_code("finset X = { a }\nmap m : X -> X { a -> a; }\nfunctor F : m -> m { }") ==
        code::kind_mismatch);
  CHECK(error_code("finset X = { a, b }\nmap m : X -> X { a -> a; }") == code::incomplete);
  CHECK(error_code("") == 0);
  auto e = error_of("finset X = { a }\n  finset X = { b }");
  CHECK(e.line == 2);
  CHECK(e.column == 10);
  CHECK_FALSE(e.to_string().empty());
}

TEST_CASE("round trip") {
  auto doc = parse_spec(kDocument);
  CHECK(doc.declarations.size() == 4);
  auto text = format_spec(doc);
  auto again = parse_spec(text);
  CHECK(again == doc);
  CHECK(format_spec(again) == text);
  CHECK(format_spec(SpecDocument{}).empty());
}

TEST_CASE("canonical layout keeps declaration order") {
  auto doc = parse_spec(
      "category C{object B;object A;arrow g:A->B;arrow f:A->B;compose id_B.f=f;}"
      "finset E={ }");
  CHECK(format_spec(doc) ==
        "category C {\n"
        "  object B, A;\n"
        "  arrow g : A -> B;\n"
        "  arrow f : A -> B;\n"
        "  compose id_B . f = f;\n"
        "}\n"
        "\n"
        "finset E = { }\n");
}

TEST_CASE("workspace") {
  auto doc = parse_spec(R"(
category C { object A, B; arrow f : A -> B; arrow g : A -> B; }
diagram D : parallel-pair -> C { X -> A; Y -> B; f -> f; g -> g; }
category P { object S, T; arrow u : S -> T; arrow v : S -> T; }
diagram E : P -> C { S -> A; T -> B; u -> g; v -> f; }
functor F : C -> C { A -> A; B -> B; f -> g; g -> f; }
nattrans eta : F => F { A -> id_A; B -> id_B; }
finset X = { a, b }
map m : X -> X { a -> b; b -> a; }
)");
  auto ws = build_workspace(doc);
  CHECK(validate_diagram(ws.diagrams.at("D")).ok());
  CHECK(validate_diagram(ws.diagrams.at("E")).ok());
  CHECK(validate_functor(ws.functors.at("F")).ok());
  CHECK(validate_nat_trans(ws.nattrans.at("eta")).ok());
  CHECK(ws.maps.at("m").table == std::vector<std::size_t>{1, 0});
  CHECK(ws.finsets.at("X").labels == std::vector<std::string>{"a", "b"});
  const auto& c = *ws.categories.at("C");
  CHECK(c.arrow_label(ArrowId{2}) == "f");
}

TEST_CASE("explicit compose lines override identity composites") {
  auto ws = build_workspace(parse_spec(
      "category M { object A; arrow e : A -> A; compose e . e = e; compose id_A . e = e; }"));
  CHECK(validate_category(*ws.categories.at("M")).ok());
  auto bad = build_workspace(parse_spec("category M { object A; arrow e : A -> A; compose e . id_A = id_A; }"));
  CHECK_FALSE(validate_category(*bad.categories.at("M")).ok());
}

TEST_CASE("category export round-trips") {
  for (auto sizes : {std::vector<std::size_t>{1, 2}, std::vector<std::size_t>{0, 1, 2}}) {
    auto c = full_subcategory_of_finset(sizes);
    auto text = export_category("Sets", c, {"exported"});
    auto ws = build_workspace(parse_spec(text));
    const auto& back = *ws.categories.at("Sets");
    CHECK(back.object_count() == c.object_count());
    CHECK(back.arrow_count() == c.arrow_count());
    CHECK(validate_category(back).ok());
    for (auto f : c.arrows())
      for (auto g : c.arrows())
        if (c.cod(f) == c.dom(g))
          CHECK(back.arrow_label(compose(back, *back.find_arrow(c.arrow_label(g)),
                                         *back.find_arrow(c.arrow_label(f)))) ==
                c.arrow_label(compose(c, g, f)));
  }
  CategoryBuilder b;
  b.add_identity(b.add_object("bad name"));
  CHECK_THROWS_AS(export_category("X", b.build()), ContractError);
}

TEST_CASE("identifiers") {
  CHECK(is_identifier("id_A"));
  CHECK(is_identifier("_x1"));
  CHECK(is_identifier("0"));
  CHECK(is_identifier("f'"));
  CHECK(is_identifier("parallel-pair"));
  CHECK_FALSE(is_identifier(""));
  CHECK_FALSE(is_identifier("a-"));
  CHECK_FALSE(is_identifier("a->b"));
  CHECK_FALSE(is_identifier("a b"));
  CHECK_FALSE(is_identifier("'a"));
}

TEST_CASE("short fuzz") {
  std::mt19937_64 rng(kDefaultSeed);
  const std::string base = kDocument;
  for (int i = 0; i < 500; ++i) {
    std::string s = base;
    const int edits = 1 + int(rng() % 4);
    for (int k = 0; k < edits; ++k) {
      const auto pos = rng() % (s.size() + 1);
      switch (rng() % 3) {
        case 0: s.insert(pos, 1, char(rng() % 256)); break;
        case 1: if (pos < s.size()) s.erase(pos, 1); break;
        default: if (pos < s.size()) s[pos] = char(rng() % 256); break;
      }
    }
    try {
      auto doc = parse_spec(s);
      CHECK(parse_spec(format_spec(doc)) == doc);
    } catch (const ParseFailure& e) {
      CHECK(e.error().code >= 101);
      CHECK(e.error().code <= 304);
      CHECK(e.error().line >= 1);
    }
  }
}
