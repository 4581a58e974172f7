#include <doctest.h>

#include "mfact/action.hpp"
#include "mfact/error.hpp"
#include "mfact/text_io.hpp"
#include "support/oracles.hpp"

using namespace mfact;
namespace mt = mfact::testing;

namespace {

Chain ch(int n, const char* text) { return parse_chain(n, text); }

}  // namespace

TEST_CASE("braid_step") {
  CHECK(braid_step(ch(3, "(1 2)(2 3)"), 1, false) == ch(3, "(2 3)(1 3)"));
  CHECK(braid_step(ch(3, "(2 3)(1 3)"), 1, true) == ch(3, "(1 2)(2 3)"));
  CHECK_THROWS_AS(braid_step(ch(3, "(1 2)"), 1, false), Error);
  CHECK_THROWS_AS(braid_step(ch(3, "(1 2)(2 3)"), 0, false), Error);
  CHECK_THROWS_AS(braid_step(ch(3, "(1 2)(1 2)"), 1, false), Error);
}

TEST_CASE("apply_generator") {
  CHECK(apply_generator(ch(3, "(1 3)(1 2)"), 1) == ch(3, "(1 3)(1 2)"));
  CHECK(apply_generator(ch(3, "(1 2)(2 3)"), 1) == ch(3, "(2 3)(1 3)"));
  CHECK(apply_generator(ch(3, "(2 3)(1 3)"), 1) == ch(3, "(1 2)(2 3)"));
  CHECK_THROWS_AS(apply_generator(ch(3, "(2 3)(1 3)"), 2), Error);
}

TEST_CASE("projection") {
  CHECK(projection(ch(8, "(3 8)(5 7)(1 8)(3 7)")) == std::vector<int>{3, 5, 1, 3});
  CHECK(projection(ch(8, "(1 3)(3 8)(3 5)(5 7)")) == std::vector<int>{1, 3, 3, 5});
  CHECK(projection(Chain(4, {})).empty());
}

TEST_CASE("adjacent_word realizes the permutation") {
  for (int k = 1; k <= 5; ++k)
    for (const auto& p : mt::all_permutations(k))
      REQUIRE(mt::word_product(k, adjacent_word(p)) == p);
}

TEST_CASE("apply_permutation reproduces the worked example") {
  const Chain sorted = ch(8, "(1 3)(3 8)(3 5)(5 7)");
  const Permutation p = parse_permutation(4, "(1 3)(2 4)");
  CHECK(apply_permutation(sorted, p) == ch(8, "(3 8)(5 7)(1 8)(3 7)"));
  // the decomposition written out step by step: (2 3), then (3 4), then (1 2), then (2 3)
  CHECK(apply_word(sorted, {2}) == sorted);
  CHECK(apply_word(sorted, {2, 3}) == ch(8, "(1 3)(3 8)(5 7)(3 7)"));
  CHECK(apply_word(sorted, {2, 3, 1}) == ch(8, "(3 8)(1 8)(5 7)(3 7)"));
  CHECK(apply_word(sorted, {2, 3, 1, 2}) == ch(8, "(3 8)(5 7)(1 8)(3 7)"));

  CHECK(apply_permutation(sorted, Permutation::identity(4)) == sorted);
  CHECK(apply_permutation(ch(3, "(1 3)(1 2)"), Permutation::long_cycle(2)) == ch(3, "(1 3)(1 2)"));
  CHECK_THROWS_AS(apply_permutation(sorted, Permutation::identity(3)), Error);
  CHECK(apply_permutation(Chain(3, {}), Permutation::identity(1)) == Chain(3, {}));
}

TEST_CASE("act_on_sequence and stable sorting") {
  const Permutation p = parse_permutation(4, "(1 3)(2 4)");
  CHECK(act_on_sequence(p, {1, 3, 3, 5}) == std::vector<int>{3, 5, 1, 3});
  CHECK(act_on_sequence(p, {3, 5, 1, 3}) == std::vector<int>{1, 3, 3, 5});
  const Permutation s = stable_sorting_permutation({3, 5, 1, 3});
  CHECK(act_on_sequence(s, {3, 5, 1, 3}) == std::vector<int>{1, 3, 3, 5});
  CHECK(s.inverse() == Permutation(std::vector<int>{3, 1, 4, 2}));
  CHECK(stable_sorting_permutation({}).is_identity());
}

TEST_CASE("sort_chain") {
  auto [p, d] = sort_chain(ch(8, "(3 8)(5 7)(1 8)(3 7)"));
  CHECK(d == ch(8, "(1 3)(3 8)(3 5)(5 7)"));
  CHECK(act_on_sequence(p, {3, 5, 1, 3}) == std::vector<int>{1, 3, 3, 5});
  // same coset as (1 3)(2 4): they differ by a stabilizer of (1,3,3,5)
  CHECK(apply_permutation(ch(8, "(3 8)(5 7)(1 8)(3 7)"), parse_permutation(4, "(1 3)(2 4)")) == d);

  auto [q, e] = sort_chain(ch(6, "(1 2)(2 3)(4 5)"));
  CHECK(q.is_identity());
  CHECK(e == ch(6, "(1 2)(2 3)(4 5)"));

  auto [r, f] = sort_chain(ch(3, "(2 3)(1 3)"));
  CHECK(r == Permutation::long_cycle(2));
  CHECK(f == ch(3, "(1 2)(2 3)"));
}

TEST_CASE("action laws over all members, n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    for (int k = 0; k < n; ++k) {
      const auto perms = mt::all_permutations(std::max(k, 1));
      for (const auto& c : enumerate_sigma(n, k)) {
        const Permutation product = intermediate(c, k);
        for (int l = 1; l < k; ++l) {
          const Chain once = apply_generator(c, l);
          REQUIRE(apply_generator(once, l) == c);
          REQUIRE(intermediate(once, k) == product);
          for (int m = l + 2; m < k; ++m)
            REQUIRE(apply_generator(apply_generator(c, m), l) == apply_generator(once, m));
          if (l + 1 < k) {
            Chain x = c;
            for (int rep = 0; rep < 3; ++rep)
              x = apply_generator(apply_generator(x, l + 1), l);
            REQUIRE(x == c);
          }
        }
        const auto heads = projection(c);
        for (const auto& p : perms) {
          const Chain moved = apply_permutation(c, p);
          REQUIRE(validate(moved).is_member);
          REQUIRE(intermediate(moved, k) == product);
          REQUIRE(projection(moved) == act_on_sequence(p, heads));
          REQUIRE((act_on_sequence(p, heads) == heads) == (moved == c));
        }
      }
    }
  }
}

TEST_CASE("composition: (pq).c = p.(q.c)") {
  for (const auto& c : enumerate_sigma(5, 4)) {
    const auto perms = mt::all_permutations(4);
    for (std::size_t a = 0; a < perms.size(); a += 5)
      for (std::size_t b = 0; b < perms.size(); b += 3)
        REQUIRE(apply_permutation(c, perms[a] * perms[b]) ==
                apply_permutation(apply_permutation(c, perms[b]), perms[a]));
  }
}

TEST_CASE("orbits: one sorted chain each, projection injective on orbits") {
  for (int n = 2; n <= 5; ++n) {
    for (int k = 1; k < n; ++k) {
      const auto perms = mt::all_permutations(k);
      for (const auto& c : enumerate_sigma(n, k)) {
        std::set<Chain> orbit;
        std::set<std::vector<int>> images;
        int sorted = 0;
        for (const auto& p : perms) {
          const Chain d = apply_permutation(c, p);
          if (orbit.insert(d).second) {
            REQUIRE(images.insert(projection(d)).second);
            sorted += validate(d).is_nondecreasing;
          }
        }
        REQUIRE(sorted == 1);
      }
    }
  }
}
