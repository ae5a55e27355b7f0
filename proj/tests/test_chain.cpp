#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "lsd/chain.hpp"

using namespace lsd;

TEST_CASE("reflection appends the mirrored block and records the axis") {
  const Chain start = Chain::from_string("ABCDEFG");
  const Chain out = apply_reflection(start, 7);
  CHECK(to_string(out) == "ABCDEFGGFEDCBA");
  REQUIRE(out.axes().size() == 1);
  CHECK(out.axes()[0] == ReflectionAxis{7, 7});
  CHECK(to_string(start) == "ABCDEFG");  // input untouched
  CHECK(start.axes().empty());

  CHECK(to_string(apply_reflection(Chain::from_string("XYZ"), 0)) == "XYZ");
  CHECK(to_string(apply_reflection(Chain::from_string("ABCDEFGGFEDCBA"), 1)) ==
        "ABCDEFGGFEDCBAA");
}

TEST_CASE("reflection larger than the chain is rejected") {
  CHECK_THROWS_AS(apply_reflection(Chain::from_string("AB"), 3), std::invalid_argument);
}

TEST_CASE("mirror property holds at every recorded axis") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> sym(0, 4);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Symbol> seed;
    for (int i = 0; i < 6; ++i) seed.push_back(Symbol{sym(rng)});
    Chain chain{std::move(seed)};
    std::uniform_int_distribution<std::size_t> k_dist(0, 5);
    for (int step = 0; step < 20; ++step) chain.extend_with_reflection(k_dist(rng));

    std::size_t total = 0;
    for (const ReflectionAxis& a : chain.axes()) {
      total += a.size;
      for (std::size_t i = 0; i < a.size; ++i)
        CHECK(chain[a.position - 1 - i] == chain[a.position + i]);
    }
    CHECK(chain.size() == 6 + total);
  }
}

TEST_CASE("rule validation") {
  CHECK_THROWS_AS(validate(LsdRule{3, 3}), std::invalid_argument);
  CHECK_THROWS_AS(validate(LsdRule{3, 5}), std::invalid_argument);
  CHECK_THROWS_AS(validate(LsdRule{2, 0}), std::invalid_argument);
  CHECK_NOTHROW(validate(LsdRule{2, 1}));
}

TEST_CASE("generate alternates major then minor reflections") {
  const Chain seed = Chain::from_string("ABCDEFG");

  SUBCASE("7:3 prefix") {
    const Chain c = generate(seed, LsdRule{7, 3}, 25);
    CHECK(to_string(c).substr(0, 24) == "ABCDEFGGFEDCBAABCCBAABCD");
  }
  SUBCASE("already long enough") {
    CHECK(to_string(generate(seed, LsdRule{7, 1}, 7)) == "ABCDEFG");
  }
  SUBCASE("7:6 tail is constant from symbol 73 on") {
    const Chain c = generate(seed, LsdRule{7, 6}, 80);
    REQUIRE(c.size() >= 80);
    for (std::size_t i = 73; i < c.size(); ++i) CHECK(c[i] == Symbol{0});
  }
  SUBCASE("overshoot stays below one major block") {
    const Chain c = generate(seed, LsdRule{7, 4}, 100);
    CHECK(c.size() >= 100);
    CHECK(c.size() < 107);
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(generate(Chain::from_string("ABC"), LsdRule{7, 1}, 50),
                    std::invalid_argument);
    CHECK_THROWS_AS(generate(seed, LsdRule{7, 7}, 50), std::invalid_argument);
    CHECK_THROWS_AS(generate(seed, LsdRule{7, 1}, 3), std::invalid_argument);
  }
  SUBCASE("deterministic") {
    CHECK(generate(seed, LsdRule{7, 5}, 300) == generate(seed, LsdRule{7, 5}, 300));
  }
}

TEST_CASE("prefix keeps only axes fully inside the cut") {
  const Chain c = generate(Chain::from_string("ABCDEFG"), LsdRule{7, 2}, 40);
  const Chain p = prefix(c, 16);
  CHECK(p.size() == 16);
  CHECK(to_string(p) == to_string(c).substr(0, 16));
  REQUIRE(p.axes().size() == 2);  // 7:7 and 14:2
  CHECK(p.axes()[1] == ReflectionAxis{14, 2});
  CHECK(prefix(c, c.size() + 5) == c);
}

TEST_CASE("chain reassembly validates the axis history") {
  const Chain good = generate(Chain::from_string("ABC"), LsdRule{3, 1}, 10);
  CHECK_NOTHROW(Chain(good.symbols(), good.axes()));
  CHECK_THROWS_AS(Chain(good.symbols(), {ReflectionAxis{2, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(Chain(good.symbols(), {ReflectionAxis{1, 2}}), std::invalid_argument);
}

TEST_CASE("symbol text round trip") {
  CHECK(to_string(Chain::from_string("ABCDEFG")) == "ABCDEFG");
  CHECK(Chain::from_string("AB CD\n").size() == 4);

  // Alphabets beyond Z fall back to decimal ids.
  std::vector<Symbol> wide;
  for (int id = 0; id < 30; ++id) wide.push_back(Symbol{id});
  const Chain c{std::move(wide)};
  const std::string text = to_string(c);
  CHECK(text.substr(0, 8) == "0 1 2 3 ");
  CHECK(Chain::from_string(text) == c);

  CHECK(to_string(Symbol{2}, 7) == "C");
  CHECK(to_string(Symbol{2}, 30) == "2");

  CHECK_THROWS_AS(Chain::from_string("ab!"), std::invalid_argument);
}
