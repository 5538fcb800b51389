#include <doctest.h>

#include <random>

#include "kabelian/error.hpp"
#include "kabelian/morphism.hpp"
#include "oracle.hpp"

using namespace kabelian;
using oracle::to_word;

TEST_CASE("morphism parsing and presets") {
  const Morphism m = parse_morphism("0:01,1:10");
  CHECK(m.images() == thue_morse_morphism().images());
  CHECK(m.source().size() == 2);
  CHECK(m.target().size() == 2);
  CHECK(morphism_preset("cube_free_binary").image(1) == to_word("011"));
  CHECK(morphism_preset("ternary_to_binary").image(2) == to_word("011001"));
  CHECK_THROWS_AS(morphism_preset("nope"), Error);
  CHECK_THROWS_AS(parse_morphism("0:01,2:10"), Error);  // gap in the domain
  CHECK_THROWS_AS(parse_morphism("0:"), Error);
  CHECK_THROWS_AS(parse_morphism("garbage"), Error);
  CHECK_THROWS_AS(m.image(2), Error);
}

TEST_CASE("apply") {
  CHECK(apply(thue_morse_morphism(), to_word("0110")) == to_word("01101001"));
  CHECK(apply(ternary_to_binary_morphism(), to_word("20")) == to_word("011001001011"));
  CHECK(apply(thue_morse_morphism(), Word{}) == Word{});
  CHECK_THROWS_AS(apply(thue_morse_morphism(), to_word("012")), Error);
}

TEST_CASE("prolongability") {
  CHECK(thue_morse_morphism().prolongable(0));
  CHECK(thue_morse_morphism().prolongable(1));
  CHECK(cube_free_binary_morphism().prolongable(0));
  CHECK_FALSE(cube_free_binary_morphism().prolongable(1));
  CHECK_THROWS_AS(prefix(FixedPoint{cube_free_binary_morphism(), 1}, 5), Error);
  CHECK_THROWS_AS(prefix(FixedPoint{ternary_to_binary_morphism(), 0}, 5), Error);
}

TEST_CASE("sequence prefixes") {
  CHECK(prefix(FixedPoint{thue_morse_morphism(), 0}, 16) == to_word("0110100110010110"));
  CHECK(prefix(FixedPoint{thue_morse_morphism(), 1}, 4) == to_word("1001"));
  CHECK(prefix(FixedPoint{cube_free_binary_morphism(), 0}, 9) == to_word("001001011"));
  CHECK(prefix(ZerosMod2{}, 10) == to_word("0010011010"));
  CHECK(prefix(ExplicitWord{to_word("0101")}, 3) == to_word("010"));
  CHECK(prefix(ExplicitWord{to_word("0101")}, 5) == to_word("0101"));
  CHECK(prefix(ZerosMod2{}, 0) == Word{});
}

TEST_CASE("fixed points are fixed") {
  for (const auto& m : {thue_morse_morphism(), cube_free_binary_morphism()}) {
    const Word w = prefix(FixedPoint{m, 0}, 3000);
    const Word image = apply(m, w);
    CHECK(image.factor(0, 3000) == w);
  }
}

TEST_CASE("zeros-mod-2 word agrees with the direct definition") {
  const Word w = prefix(ZerosMod2{}, 10000);
  for (std::size_t i = 0; i < w.size(); ++i) {
    // zeros in the binary expansion of i; i = 0 counts as none
    unsigned zeros = 0;
    for (std::size_t x = i; x > 1; x >>= 1) zeros += (x & 1) == 0;
    REQUIRE(w[i] == zeros % 2);
  }
}

TEST_CASE("images pairwise equivalent") {
  CHECK(images_pairwise_equivalent(ternary_to_binary_morphism(), 2));
  CHECK_FALSE(images_pairwise_equivalent(thue_morse_morphism(), 2));
  CHECK(images_pairwise_equivalent(thue_morse_morphism(), 1));
  CHECK_FALSE(images_pairwise_equivalent(cube_free_binary_morphism(), 1));
}

TEST_CASE("equal-length words have equivalent ternary-to-binary images") {
  const Morphism m = ternary_to_binary_morphism();
  std::mt19937 rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    std::string u, v;
    const std::size_t n = 1 + rng() % 8;
    for (std::size_t i = 0; i < n; ++i) {
      u.push_back(static_cast<char>('0' + rng() % 3));
      v.push_back(static_cast<char>('0' + rng() % 3));
    }
    const Word iu = apply(m, to_word(u));
    const Word iv = apply(m, to_word(v));
    CHECK(equivalent(iu, iv, 2));
  }
}

TEST_CASE("earliest 2-abelian cubes in morphic words") {
  const PowerSpec cube{2, 3};
  // Values from the naive oracle on the first 200 letters.
  for (const auto& [seq, name] :
       {std::pair<Sequence, const char*>{FixedPoint{thue_morse_morphism(), 0}, "tm"},
        {ZerosMod2{}, "z2"},
        {FixedPoint{cube_free_binary_morphism(), 0}, "cf"}}) {
    INFO(name);
    const auto occ = scan_earliest_power(seq, cube, 200);
    const auto ref = oracle::find_power(oracle::to_string(prefix(seq, 200)), 2, 3);
    REQUIRE(occ);
    REQUIRE(ref);
    CHECK(occ->start == ref->first);
    CHECK(occ->total_length == ref->second);
  }
  CHECK(scan_earliest_power(FixedPoint{thue_morse_morphism(), 0}, cube, 1000) ==
        Occurrence{1, 18});
  CHECK(scan_earliest_power(ZerosMod2{}, cube, 1000) == Occurrence{3, 18});
  CHECK(scan_earliest_power(FixedPoint{cube_free_binary_morphism(), 0}, cube, 1000) ==
        Occurrence{6, 18});
}

TEST_CASE("later cube occurrences in Thue-Morse and zeros-mod-2") {
  // Length-18 cubes also start one letter later in both words.
  const Word tm = prefix(FixedPoint{thue_morse_morphism(), 0}, 40);
  CHECK(is_power(tm.factor(2, 20), PowerSpec{2, 3}));
  const Word z2 = prefix(ZerosMod2{}, 40);
  CHECK(is_power(z2.factor(4, 22), PowerSpec{2, 3}));
}

TEST_CASE("scan limits") {
  CHECK_FALSE(scan_earliest_power(FixedPoint{thue_morse_morphism(), 0}, PowerSpec{2, 3}, 18));
  CHECK(scan_earliest_power(FixedPoint{thue_morse_morphism(), 0}, PowerSpec{2, 3}, 19));
  CHECK_THROWS_AS(
      scan_earliest_power(ZerosMod2{}, PowerSpec{2, 3}, kMaxScanLimit + 1), Error);
  CHECK_FALSE(scan_earliest_power(ExplicitWord{to_word("0120")}, PowerSpec{2, 2}, 4));
}

TEST_CASE("Thue-Morse contains no ordinary cube but a 2-abelian cube") {
  const Word tm = prefix(FixedPoint{thue_morse_morphism(), 0}, 10000);
  CHECK_FALSE(oracle::contains_ordinary_power(oracle::to_string(tm), 3));
  CHECK_FALSE(is_power_free(tm, PowerSpec{2, 3}));
}
