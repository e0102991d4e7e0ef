#include <doctest.h>

#include <algorithm>
#include <map>

#include "test_support.hpp"
#include "wocycle/core.hpp"
#include "wocycle/families.hpp"

using namespace wocycle;

namespace {

HeightWord hw(Word w) { return HeightWord::validate(std::move(w)); }

errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const domain_error& e) {
    return e.code();
  }
  FAIL("expected a domain_error");
  return errc::parameter;
}

}  // namespace

TEST_CASE("validate accepts weak orders and rejects gapped words") {
  CHECK(hw({0, 0, 1}).symbols() == Word{0, 0, 1});
  CHECK(hw({0}).symbols() == Word{0});
  CHECK(hw({0, 2, 1}).height() == 2);

  CHECK(code_of([] { hw({0, 0, 2}); }) == errc::gap);
  CHECK(code_of([] { hw({1, 1}); }) == errc::missing_zero);
  CHECK(code_of([] { hw({0, 3}); }) == errc::out_of_range);
  CHECK(code_of([] { hw({0, -1}); }) == errc::out_of_range);
  CHECK(code_of([] { hw({}); }) == errc::parameter);

  CHECK(HeightWord::is_valid({0, 1, 0, 2}));
  CHECK_FALSE(HeightWord::is_valid({0, 0, 2}));
  CHECK_FALSE(HeightWord::is_valid({}));
}

TEST_CASE("validate agrees with the brute-force contiguity predicate") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& w : testsupport::all_words(n, n - 1))
      CHECK(HeightWord::is_valid(w) == testsupport::contiguous_word(w));
}

TEST_CASE("height, weight, rotation, windows") {
  CHECK(hw({0, 0, 0}).height() == 0);
  CHECK(hw({0, 2, 1}).height() == 2);
  CHECK(hw({0, 1, 0, 2}).height() == 2);

  CHECK(hw({0, 0, 0}).weight() == 0);
  CHECK(hw({0, 2, 1}).weight() == 3);
  CHECK(weight_of({0, 0, 0, 1, 1, 2}) == 4);

  CHECK(hw({0, 1, 2}).rotated().symbols() == Word{1, 2, 0});
  CHECK(hw({0, 0, 0}).rotated().symbols() == Word{0, 0, 0});
  CHECK(hw({1, 0, 1}).rotated().symbols() == Word{0, 1, 1});

  CHECK(take_prefix({0, 2, 1}, 2) == Word{0, 2});
  CHECK(take_suffix({0, 2, 1}, 2) == Word{2, 1});
  CHECK(take_prefix({0, 2, 1}, 3) == Word{0, 2, 1});
  CHECK(take_prefix({0, 2, 1}, 0) == Word{});
  CHECK_THROWS_AS(take_prefix({0, 1}, 3), domain_error);
}

TEST_CASE("rotation preserves weight, height and multiset") {
  for (int n = 2; n <= 5; ++n) {
    for (const auto& w : testsupport::brute_weak_orders(n)) {
      HeightWord cur = hw(w);
      for (int r = 0; r < n; ++r) {
        HeightWord next = cur.rotated();
        CHECK(next.weight() == cur.weight());
        CHECK(next.height() == cur.height());
        CHECK(next.multiset() == cur.multiset());
        cur = next;
      }
      CHECK(cur.symbols() == w);  // n rotations come back around
    }
  }
}

TEST_CASE("permutation closure: shuffled weak orders stay weak orders") {
  auto rng = testsupport::seeded_rng();
  for (int n = 2; n <= 6; ++n) {
    const auto words = testsupport::brute_weak_orders(n);
    for (int trial = 0; trial < 50; ++trial) {
      Word w = words[rng() % words.size()];
      std::shuffle(w.begin(), w.end(), rng);
      CHECK(HeightWord::is_valid(w));
    }
  }
}

TEST_CASE("relation notation round-trips on the listed pairs") {
  const std::map<std::string, Word> pairs = {
      {"1=2=3", {0, 0, 0}}, {"1=2<3", {0, 0, 1}}, {"1<2=3", {0, 1, 1}},
      {"1=3<2", {0, 1, 0}}, {"2=3<1", {1, 0, 0}}, {"2<1=3", {1, 0, 1}},
      {"3<1=2", {1, 1, 0}}, {"1<3<2", {0, 2, 1}}, {"2<1<3", {1, 0, 2}},
      {"1<2<3", {0, 1, 2}}, {"3<1<2", {1, 2, 0}}, {"2<3<1", {2, 0, 1}},
      {"3<2<1", {2, 1, 0}},
  };
  for (const auto& [text, word] : pairs) {
    CHECK(parse_relation(text).symbols() == word);
    CHECK(format_relation(hw(word)) == text);
  }
}

TEST_CASE("relation parsing details") {
  CHECK(parse_relation(" 2 < 1 = 3 ").symbols() == Word{1, 0, 1});
  CHECK(parse_relation("3<2=1").symbols() == Word{1, 1, 0});  // ties commute

  // Multi-digit labels: operators separate labels, so n >= 10 needs no commas.
  {
    Word w(10, 0);
    std::string text = "10";
    for (int e = 1; e <= 9; ++e) text += "=" + std::to_string(e);
    CHECK(parse_relation(text).symbols() == w);
  }

  CHECK_THROWS_AS(parse_relation(""), domain_error);
  CHECK_THROWS_AS(parse_relation("1<"), domain_error);
  CHECK_THROWS_AS(parse_relation("<1"), domain_error);
  CHECK_THROWS_AS(parse_relation("1<<2"), domain_error);
  CHECK_THROWS_AS(parse_relation("1<1"), domain_error);    // repeated element
  CHECK_THROWS_AS(parse_relation("1<3"), domain_error);    // not a permutation of 1..2
  CHECK_THROWS_AS(parse_relation("0<1"), domain_error);    // labels start at 1
  CHECK_THROWS_AS(parse_relation("1;2"), domain_error);
}

TEST_CASE("relation round-trip across whole families") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& w : testsupport::brute_weak_orders(n)) {
      const HeightWord word = hw(w);
      const std::string canonical = format_relation(word);
      CHECK(parse_relation(canonical) == word);
      CHECK(format_relation(parse_relation(canonical)) == canonical);
    }
  }
}

TEST_CASE("ordered partition fixtures") {
  CHECK(format_partition(to_ordered_partition(hw({0, 0, 0}))) == "123");
  CHECK(format_partition(to_ordered_partition(hw({0, 2, 1}))) == "1|3|2");
  CHECK(format_partition(to_ordered_partition(hw({1, 0, 1}))) == "2|13");

  CHECK(from_ordered_partition(parse_partition("1|3|2")).symbols() == Word{0, 2, 1});
  CHECK(from_ordered_partition(parse_partition("123")).symbols() == Word{0, 0, 0});
  CHECK(from_ordered_partition(parse_partition("3|12")).symbols() == Word{1, 1, 0});
}

TEST_CASE("ordered partition validation") {
  CHECK_THROWS_AS(from_ordered_partition({{{1, 2}, {}}}), domain_error);       // empty block
  CHECK_THROWS_AS(from_ordered_partition({{{1, 2}, {2}}}), domain_error);      // overlap
  CHECK_THROWS_AS(from_ordered_partition({{{1}, {3}}}), domain_error);         // union misses 2
  CHECK_THROWS_AS(from_ordered_partition({{{0, 1}}}), domain_error);           // labels start at 1
  CHECK_THROWS_AS(parse_partition("1||2"), domain_error);
  CHECK_THROWS_AS(parse_partition("1|x"), domain_error);
}

TEST_CASE("partition bijection round-trips over W(n)") {
  for (int n = 1; n <= 6; ++n) {
    const auto words = testsupport::brute_weak_orders(n);
    std::set<std::string> images;
    for (const auto& w : words) {
      const HeightWord word = hw(w);
      const OrderedPartition p = to_ordered_partition(word);
      for (const auto& block : p.blocks) CHECK_FALSE(block.empty());
      CHECK(from_ordered_partition(p) == word);
      images.insert(format_partition(p));
      if (n < 10) CHECK(from_ordered_partition(parse_partition(format_partition(p))) == word);
    }
    CHECK(images.size() == words.size());  // injective, hence bijective onto its image
  }
}

TEST_CASE("partition rendering uses commas once labels reach two digits") {
  Word w(11, 0);
  w[10] = 1;
  const auto p = to_ordered_partition(hw(w));
  CHECK(format_partition(p) == "1,2,3,4,5,6,7,8,9,10|11");
  CHECK(from_ordered_partition(parse_partition("1,2,3,4,5,6,7,8,9,10|11")).symbols() == w);
}
