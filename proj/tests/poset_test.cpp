#include <gtest/gtest.h>

#include "coxlab/error.hpp"
#include "coxlab/generators.hpp"
#include "coxlab/linalg.hpp"
#include "coxlab/poset.hpp"
#include "testutil.hpp"

namespace coxlab {
namespace {

using testutil::make_poset;

TEST(FromRelations, ReducesRedundantPairs) {
  Poset p = make_poset({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
  std::vector<std::pair<std::size_t, std::size_t>> expected = {{0, 1}, {1, 2}};
  EXPECT_EQ(p.covers(), expected);
  EXPECT_EQ(p.linext(), (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_TRUE(p.le(0, 2));
}

TEST(FromRelations, Errors) {
  EXPECT_THROW(make_poset({"a", "b"}, {{"a", "b"}, {"b", "a"}}), error);
  try {
    make_poset({"a", "b"}, {{"a", "b"}, {"b", "a"}});
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::cycle_detected);
  }
  EXPECT_THROW(make_poset({"a", "a"}, {}), error);
  EXPECT_THROW(make_poset({"a"}, {{"a", "z"}}), error);
  std::vector<std::string> big(65);
  for (std::size_t i = 0; i < big.size(); ++i) big[i] = std::to_string(i);
  EXPECT_THROW(Poset::from_relations(big, {}), error);
}

TEST(FromRelations, LinextPicksMinimalWithInputTieBreak) {
  // c is minimal alongside a; a appears first in the label list.
  Poset p = make_poset({"b", "a", "c"}, {{"a", "b"}});
  std::vector<std::string> order;
  for (std::size_t x : p.linext()) order.push_back(p.label(x));
  EXPECT_EQ(order, (std::vector<std::string>{"a", "b", "c"}));
}

TEST(PaperFixtures, Poset10Shape) {
  Poset p = paper_poset10();
  EXPECT_EQ(p.size(), 10u);
  EXPECT_EQ(p.covers().size(), 20u);
  ASSERT_TRUE(p.bottom());
  ASSERT_TRUE(p.top());
  EXPECT_EQ(p.label(*p.bottom()), "0");
  EXPECT_EQ(p.label(*p.top()), "9");
  // not a lattice: 1 and 2 have no join
  auto result = lattice_structure(p);
  EXPECT_TRUE(std::holds_alternative<LatticeFailure>(result));
}

TEST(PaperFixtures, Lattice8Shape) {
  Poset p = paper_lattice8();
  EXPECT_EQ(p.size(), 8u);
  EXPECT_EQ(p.covers().size(), 11u);
  auto l = require_lattice(p);
  EXPECT_EQ(p.label(l.bottom), "1");
  EXPECT_EQ(p.label(l.top), "8");
}

TEST(ZetaMobius, SmallPosets) {
  EXPECT_EQ(zeta_matrix(antichain(3)), Matrix::identity(3));
  Matrix z = zeta_matrix(chain(3));
  EXPECT_EQ(z, (Matrix{{1, 1, 1}, {0, 1, 1}, {0, 0, 1}}));
  EXPECT_EQ(mobius_matrix(chain(3)), (Matrix{{1, -1, 0}, {0, 1, -1}, {0, 0, 1}}));

  // boolean(2): the bottom's zeta row is all ones.
  Poset b2 = boolean_lattice(2);
  Matrix zb = zeta_matrix(b2);
  for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(zb(0, j), Rational(1));
  EXPECT_TRUE(zb.is_unit_upper_triangular());
}

TEST(ZetaMobius, InverseOverCorpus) {
  for (const auto& named : testutil::bounded_poset_corpus()) {
    const Poset& p = named.poset;
    EXPECT_EQ(zeta_matrix(p) * mobius_matrix(p), Matrix::identity(p.size())) << named.name;
  }
}

TEST(Formats, TextAndJsonParseIdentically) {
  Poset p = paper_lattice8();
  Poset from_text = [] {
    std::istringstream in(
        "# the eight-element golden lattice\n"
        "elements 1 2 3 4 5 6 7 8\n"
        "cover 1 2\ncover 1 3\ncover 1 4\ncover 2 5\ncover 2 6\ncover 3 6\n"
        "cover 4 6\ncover 4 7\ncover 5 8\ncover 6 8\ncover 7 8\n");
    return Poset::parse_text(in);
  }();
  Poset from_json = Poset::parse_json(p.to_json());
  EXPECT_EQ(from_text, p);
  EXPECT_EQ(from_json, p);
  EXPECT_EQ(from_text.to_json(), p.to_json());
  // canonical: stable across re-parse
  EXPECT_EQ(Poset::parse_json(p.to_json()).to_json(), p.to_json());
}

TEST(Formats, ParseErrorsCarryLineNumbers) {
  std::istringstream bad("elements a b\nfrobnicate a b\n");
  try {
    Poset::parse_text(bad);
    FAIL() << "expected parse error";
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::parse_error);
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
  EXPECT_THROW(Poset::parse_json("{\"elements\":[\"a\"]}"), error);
}

TEST(Generators, Families) {
  EXPECT_EQ(boolean_lattice(0).size(), 1u);
  EXPECT_EQ(boolean_lattice(3).size(), 8u);
  EXPECT_EQ(chain(6).covers().size(), 5u);
  EXPECT_EQ(antichain(4).covers().size(), 0u);
  EXPECT_EQ(m3().size(), 5u);
  EXPECT_EQ(n5().size(), 5u);
  EXPECT_EQ(product(chain(2), chain(3)).size(), 6u);
  EXPECT_THROW(generate("boolean", 0), error);
  EXPECT_THROW(generate("nosuch:3", 0), error);
  EXPECT_THROW(generate("chain:x", 0), error);
}

TEST(Generators, RandomPosetDeterministic) {
  Poset a = random_poset(6, 123);
  Poset b = random_poset(6, 123);
  Poset c = random_poset(6, 124);
  EXPECT_EQ(a, b);
  EXPECT_NE(a, c);
  EXPECT_EQ(generate("jrandom:4", 7).to_json(), generate("jrandom:4", 7).to_json());
}

TEST(Generators, AllPosetsUpToIso) {
  auto posets = all_posets_up_to_iso(4);
  std::size_t count3 = 0, count4 = 0;
  for (const Poset& p : posets) {
    if (p.size() == 3) ++count3;
    if (p.size() == 4) ++count4;
  }
  EXPECT_EQ(count3, 5u);   // classical counts of unlabelled posets
  EXPECT_EQ(count4, 16u);
  for (std::size_t i = 0; i < posets.size(); ++i)
    for (std::size_t j = i + 1; j < posets.size(); ++j)
      EXPECT_FALSE(is_isomorphic(posets[i], posets[j]));
}

TEST(Poset, LinextIsALinearExtension) {
  for (const auto& named : testutil::bounded_poset_corpus()) {
    const Poset& p = named.poset;
    for (std::size_t x = 0; x < p.size(); ++x)
      for (std::size_t y = 0; y < p.size(); ++y)
        if (p.le(x, y)) EXPECT_LE(p.position(x), p.position(y)) << named.name;
  }
}

TEST(Poset, UpDownSetsAndBounds) {
  Poset p = paper_poset10();
  EXPECT_EQ(p.up_set(p.index("0")).size(), 10u);
  EXPECT_EQ(p.down_set(p.index("0")).size(), 1u);
  EXPECT_EQ(p.upper_covers(p.index("0")).size(), 4u);
  EXPECT_EQ(p.lower_covers(p.index("9")).size(), 4u);
  EXPECT_FALSE(antichain(2).bottom());
  EXPECT_TRUE(chain(3).is_bounded());
}

}  // namespace
}  // namespace coxlab
