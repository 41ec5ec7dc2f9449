#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dtt/fincat.hpp"
#include "dtt/stdcats.hpp"

using namespace dtt;

TEST_CASE("walking arrow validates") {
  FinCat two = walking_arrow();
  CHECK(validate_category(two).ok());
  CHECK(two.hom_set("a", "b").size() == 1);
  CHECK(two.hom_set("b", "a").empty());
}

TEST_CASE("redirected composite is caught as a source/target violation") {
  FinCat bad = walking_arrow();
  bad.composition[{"id_a", "f"}] = "id_b";
  ValidationReport rep = validate_category(bad);
  CHECK_FALSE(rep.ok());
  bool mentions_endpoints = false;
  for (const auto& v : rep.violations)
    if (v.find("wrong endpoints") != std::string::npos) mentions_endpoints = true;
  CHECK(mentions_endpoints);
}

TEST_CASE("three-chain validates and has exactly one nontrivial composable triple") {
  FinCat three = three_chain();
  CHECK(validate_category(three).ok());
  // independent enumeration of composable triples with no identity member
  int nontrivial = 0;
  for (const auto& f : three.morphisms)
    for (const auto& g : three.morphisms)
      for (const auto& h : three.morphisms) {
        if (f.dst != g.src || g.dst != h.src) continue;
        auto is_id = [&](const Morphism& m) { return m.src == m.dst && three.identity.at(m.src) == m.id; };
        if (!is_id(f) && !is_id(g) && !is_id(h)) ++nontrivial;
      }
  CHECK(nontrivial == 0);  // a->b->c has no composable triple of non-identities
  // with identities allowed, associativity was checked by validate; spot-check the composite
  CHECK(three.then("f", "g") == "fg");
}

TEST_CASE("opposite swaps endpoints and is involutive") {
  FinCat two = walking_arrow();
  FinCat op = opposite(two);
  CHECK(validate_category(op).ok());
  CHECK(op.at("f").src == "b");
  CHECK(op.at("f").dst == "a");
  CHECK(opposite(op) == two);

  FinCat three = three_chain();
  CHECK(opposite(opposite(three)) == three);

  FinCat d3 = discrete_category({"x", "y", "z"});
  CHECK(opposite(d3) == d3);
}

TEST_CASE("groupoid recognition") {
  CHECK(is_groupoid(discrete_category({"x", "y"})));
  auto inv = groupoid_inverses(discrete_category({"x", "y"}));
  REQUIRE(inv.has_value());
  CHECK(inv->at("id_x") == "id_x");

  CHECK_FALSE(is_groupoid(walking_arrow()));

  FinCat z2 = two_element_group();
  CHECK(validate_category(z2).ok());
  auto z2inv = groupoid_inverses(z2);
  REQUIRE(z2inv.has_value());
  CHECK(z2inv->at("g") == "g");
  CHECK(inverse_morphism(z2, "g") == "g");
  CHECK(inverse_morphism(z2, "id_o") == "id_o");
}

TEST_CASE("groupoid property is preserved by opposite") {
  for (const FinCat& c : {discrete_category({"x"}), discrete_category({"x", "y"}), two_element_group()}) {
    CHECK(is_groupoid(c));
    CHECK(is_groupoid(opposite(c)));
  }
}

TEST_CASE("discrete categories") {
  FinCat none = discrete_category({});
  CHECK(validate_category(none).ok());
  CHECK(none.objects.empty());
  CHECK(none.morphisms.empty());

  FinCat one = discrete_category({"x"});
  CHECK(one.morphisms.size() == 1);

  FinCat twoD = discrete_category({"x", "y"});
  CHECK(twoD.objects.size() == 2);
  CHECK(twoD.morphisms.size() == 2);
  CHECK(is_groupoid(twoD));
}

TEST_CASE("total category over the terminal base is the fiber relabelled") {
  FinCat one = terminal_category();
  FamilyOfCats fam = constant_family(one, walking_arrow());
  TotalCategory tc = total_category_pos(one, fam);
  CHECK(validate_category(tc.total).ok());
  CHECK(tc.total.objects.size() == 2);
  CHECK(tc.total.morphisms.size() == 3);
  CHECK(validate_functor(tc.projection).ok());
  CHECK(validate_section(tc.generic).ok());
}

TEST_CASE("total category over a discrete base keeps fibers apart") {
  FinCat base = discrete_category({"0", "1"});
  FamilyOfCats fam = constant_family(base, walking_arrow());
  TotalCategory tc = total_category_pos(base, fam);
  CHECK(validate_category(tc.total).ok());
  CHECK(tc.total.objects.size() == 4);
  // two copies of the walking arrow: 3 morphisms each
  CHECK(tc.total.morphisms.size() == 6);
  for (const auto& m : tc.total.morphisms) {
    auto [pair, src] = tc.mor_data.at(m.id);
    CHECK(base.identity.count(base.at(pair.first).src));
  }
}

TEST_CASE("total category with a non-constant family, counted by hand") {
  // base: walking arrow a->b; fiber(a) = terminal, fiber(b) = discrete {x,y},
  // transport(f)(*) = x.  Objects: (a,*), (b,x), (b,y).  Morphisms: three
  // identities plus exactly one lift of f, ending at (b,x).
  FinCat base = walking_arrow();
  FamilyOfCats fam;
  fam.base = base;
  fam.fiber["a"] = terminal_category();
  fam.fiber["b"] = discrete_category({"x", "y"});
  fam.transport["id_a"] = identity_functor(fam.fiber["a"]);
  fam.transport["id_b"] = identity_functor(fam.fiber["b"]);
  Functor tf;
  tf.dom = fam.fiber["a"];
  tf.cod = fam.fiber["b"];
  tf.obj_map["*"] = "x";
  tf.mor_map["id_*"] = "id_x";
  fam.transport["f"] = tf;
  REQUIRE(validate_family(fam).ok());

  TotalCategory tc = total_category_pos(base, fam);
  CHECK(validate_category(tc.total).ok());
  CHECK(tc.total.objects.size() == 3);
  CHECK(tc.total.morphisms.size() == 4);
  int nonid = 0;
  for (const auto& m : tc.total.morphisms)
    if (m.src != m.dst || tc.total.identity.at(m.src) != m.id) ++nonid;
  CHECK(nonid == 1);
  CHECK(validate_functor(tc.projection).ok());
  CHECK(validate_section(tc.generic).ok());
}

TEST_CASE("section enumeration counts") {
  // base terminal, fiber walking arrow: one object choice free, 2 sections
  FamilyOfCats f1 = constant_family(terminal_category(), walking_arrow());
  CHECK(enumerate_sections(f1).size() == 2);

  // discrete 2-object base, constant walking-arrow fiber: 2x2 object choices
  FamilyOfCats f2 = constant_family(discrete_category({"0", "1"}), walking_arrow());
  CHECK(enumerate_sections(f2).size() == 4);

  // walking-arrow base, constant walking-arrow fiber with identity transport:
  // constant-a, constant-b, and the section tracking f
  FamilyOfCats f3 = constant_family(walking_arrow(), walking_arrow());
  std::vector<Section> secs = enumerate_sections(f3);
  CHECK(secs.size() == 3);
  for (const Section& s : secs) CHECK(validate_section(s).ok());
}

TEST_CASE("sections satisfy the section condition on composites") {
  FamilyOfCats fam = constant_family(three_chain(), walking_arrow());
  for (const Section& s : enumerate_sections(fam)) {
    for (const auto& m1 : fam.base.morphisms)
      for (const auto& m2 : fam.base.morphisms) {
        if (m1.dst != m2.src) continue;
        MorId lhs = s.mor_at(fam.base.then(m1.id, m2.id));
        MorId rhs = fam.fiber_at(m2.dst).then(fam.transport_at(m2.id).on_mor(s.mor_at(m1.id)),
                                              s.mor_at(m2.id));
        CHECK(lhs == rhs);
      }
  }
}

TEST_CASE("negate_section round-trips over a groupoid base") {
  FinCat z2 = two_element_group();
  auto inv = groupoid_inverses(z2);
  REQUIRE(inv.has_value());
  // family over z2 with a nontrivial transport: discrete {x,y} with swap
  FamilyOfCats fam;
  fam.base = z2;
  FinCat d = discrete_category({"x", "y"});
  fam.fiber["o"] = d;
  fam.transport["id_o"] = identity_functor(d);
  Functor swap;
  swap.dom = d;
  swap.cod = d;
  swap.obj_map = {{"x", "y"}, {"y", "x"}};
  swap.mor_map = {{"id_x", "id_y"}, {"id_y", "id_x"}};
  fam.transport["g"] = swap;
  REQUIRE(validate_family(fam).ok());

  for (const Section& s : enumerate_sections(fam)) {
    Section n = negate_section(*inv, s);
    CHECK(validate_section(n).ok());
    Section back = negate_section(*inv, n);
    CHECK(back == s);
  }
}

TEST_CASE("transform enumeration matches componentwise count") {
  // sections of constant walking-arrow family over discrete {0,1}; transforms
  // exist exactly when both components are <= in the arrow order
  FamilyOfCats fam = constant_family(discrete_category({"0", "1"}), walking_arrow());
  std::vector<Section> secs = enumerate_sections(fam);
  REQUIRE(secs.size() == 4);
  int total = 0;
  for (const auto& s : secs)
    for (const auto& t : secs) total += static_cast<int>(enumerate_transforms(s, t).size());
  CHECK(total == 9);
}
