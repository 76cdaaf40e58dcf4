#include <doctest.h>

#include "fsg/errors.hpp"
#include "fsg/perm.hpp"

using namespace fsg;

TEST_CASE("rank and unrank invert each other") {
  for (int n : {1, 2, 3, 4, 5, 6}) {
    for (uint64_t r = 0; r < factorial(n); ++r) {
      CHECK(perm_rank(perm_unrank(n, r)) == r);
    }
  }
  CHECK(perm_rank(Permutation::identity(8)) == 0);
  CHECK(perm_unrank(3, 5) == Permutation::from_one_line({3, 2, 1}));
}

TEST_CASE("permutation construction and errors") {
  CHECK_THROWS_AS(Permutation::from_one_line({1, 1, 3}), parameter_error);
  CHECK_THROWS_AS(Permutation::from_one_line({0, 1}), parameter_error);
  CHECK_THROWS_AS(perm_unrank(3, 6), parameter_error);

  Permutation p = Permutation::from_one_line({2, 3, 1});
  CHECK(p.inverse() == Permutation::from_one_line({3, 1, 2}));
  CHECK(p.swapped_positions(1, 3) == Permutation::from_one_line({1, 3, 2}));
  CHECK(to_one_line(p) == "2,3,1");
}

TEST_CASE("sign matches inversion parity") {
  for (uint64_t r = 0; r < factorial(5); ++r) {
    Permutation p = perm_unrank(5, r);
    int inversions = 0;
    for (int i = 1; i <= 5; ++i) {
      for (int j = i + 1; j <= 5; ++j) {
        if (p.of(i) > p.of(j)) ++inversions;
      }
    }
    CHECK(perm_sign(p) == (inversions % 2 == 0 ? 1 : -1));
  }
}
