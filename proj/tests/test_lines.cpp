#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <gw/lines.hpp>
#include <gw/multisets.hpp>

#include <algorithm>

using namespace gw;

TEST_CASE("line count examples") {
  CHECK(count_lines(2, {2, 2}) == 1);
  CHECK(count_lines(3, {2, 2, 2, 2}) == 2);
  CHECK(count_lines(3, {3, 2, 2}) == 1);
  CHECK(count_lines(3, {3, 3}) == 1);
  CHECK(count_lines(4, {3, 3, 2, 2}) == 2);
  CHECK(count_lines(5, {2, 2, 2, 2, 2, 2, 2, 2}) == 14);
  // n points on two general linear spaces: exactly one line
  for (int n = 2; n <= 10; ++n) CHECK(count_lines(n, {n, n}) == 1);
}

TEST_CASE("line count vanishes by convention") {
  CHECK(count_lines(3, {2, 2, 2}) == 0);       // dimension condition fails
  CHECK(count_lines(3, {4, 2}) == 0);          // codim out of range
  CHECK(count_lines(4, {2, 2, 2, 2, 2}) == 0);
  CHECK(count_lines(3, {3, 3, 1}) == 1);       // hyperplane dropped
}

TEST_CASE("closed form C(n,l)") {
  CHECK(closed_form_cnl(3, 2) == 2);
  CHECK(closed_form_cnl(4, 2) == 5);
  CHECK(closed_form_cnl(4, 3) == 3);
  for (int n = 2; n <= 12; ++n) CHECK(closed_form_cnl(n, n) == 1);
  CHECK_THROWS_AS(closed_form_cnl(3, 1), std::invalid_argument);
  CHECK_THROWS_AS(closed_form_cnl(3, 4), std::invalid_argument);
  CHECK_THROWS_AS(closed_form_cnl(1, 2), std::invalid_argument);
}

TEST_CASE("closed form N(k,l,2..2)") {
  CHECK(closed_form_kl(4, 3, 3) == 2);
  CHECK(closed_form_kl(3, 2, 2) == 2);
  for (int n = 2; n <= 12; ++n) CHECK(closed_form_kl(n, n, n) == 1);
  // k = 2 reduces to C(n,l)
  for (int n = 2; n <= 10; ++n)
    for (int l = 2; l <= n; ++l)
      CHECK(closed_form_kl(n, 2, l) == closed_form_cnl(n, l));
  CHECK_THROWS_AS(closed_form_kl(4, 1, 3), std::invalid_argument);
  CHECK_THROWS_AS(closed_form_kl(4, 3, 5), std::invalid_argument);
}

TEST_CASE("Catalan identity: C(n,2) is the (n-1)st Catalan number") {
  for (int n = 2; n <= 15; ++n) CHECK(closed_form_cnl(n, 2) == catalan(n - 1));
}

TEST_CASE("Pascal-style recurrence C(n,l) = C(n-1,l-1) + C(n,l+1)") {
  for (int n = 3; n <= 15; ++n)
    for (int l = 3; l <= n - 1; ++l)
      CHECK(closed_form_cnl(n, l) ==
            closed_form_cnl(n - 1, l - 1) + closed_form_cnl(n, l + 1));
}

TEST_CASE("recursion agrees with both closed forms") {
  for (int n = 2; n <= 8; ++n) {
    for (int l = 2; l <= n; ++l) {
      std::vector<int> codims{l};
      codims.insert(codims.end(), 2 * n - 1 - l, 2);
      CHECK(count_lines(n, codims) == closed_form_cnl(n, l));
    }
    for (int k = 2; k <= n; ++k) {
      for (int l = 2; l <= n; ++l) {
        std::vector<int> codims{k, l};
        codims.insert(codims.end(), 2 * n - k - l, 2);
        CHECK(count_lines(n, codims) == closed_form_kl(n, k, l));
      }
    }
  }
}

TEST_CASE("line count is permutation invariant, exhaustively for n <= 5") {
  for (int n = 2; n <= 5; ++n) {
    for (auto ms : countable_multisets(1, n)) {
      std::sort(ms.begin(), ms.end());
      const CountValue reference = count_lines(n, ms);
      do {
        CHECK(count_lines(n, ms) == reference);
      } while (std::next_permutation(ms.begin(), ms.end()));
    }
  }
}

TEST_CASE("memoized and memo-free evaluation agree") {
  MemoTable local;
  for (int n = 2; n <= 5; ++n) {
    for (const auto& ms : countable_multisets(1, n)) {
      const CountValue bare = count_lines(n, ms, nullptr);
      CHECK(bare == count_lines(n, ms, &local));
      CHECK(bare == count_lines(n, ms));  // global memo
    }
  }
  CHECK(local.size() > 0);
}
