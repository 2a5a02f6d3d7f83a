#include <doctest.h>

#include <numeric>

#include "support.hpp"
#include "zetaforge/semigroup.hpp"

using namespace zetaforge;

namespace {

std::vector<std::uint32_t> vec(std::span<const std::uint32_t> s) { return {s.begin(), s.end()}; }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an exception");
  return ErrorCode::InvalidInput;
}

}  // namespace

TEST_CASE("semigroup invariants for the tabulated branches") {
  const auto e6 = NumericalSemigroup::make({3, 4});
  CHECK(vec(e6.gaps()) == std::vector<std::uint32_t>{1, 2, 5});
  CHECK(e6.delta() == 3);
  CHECK(e6.conductor() == 6);

  const auto e8 = NumericalSemigroup::make({3, 5});
  CHECK(vec(e8.gaps()) == std::vector<std::uint32_t>{1, 2, 4, 7});
  CHECK(e8.delta() == 4);
  CHECK(e8.conductor() == 8);

  const auto a8 = NumericalSemigroup::make({2, 9});
  CHECK(a8.delta() == 4);
  CHECK(a8.conductor() == 8);

  const auto smooth = NumericalSemigroup::make({1});
  CHECK(smooth.gaps().empty());
  CHECK(smooth.delta() == 0);
  CHECK(smooth.conductor() == 0);
}

TEST_CASE("minimal generators") {
  const auto s = NumericalSemigroup::make({6, 3, 4, 8, 3});
  CHECK(vec(s.generators()) == std::vector<std::uint32_t>{3, 4});
  CHECK(NumericalSemigroup::make({2, 3, 4, 5}) == NumericalSemigroup::make({2, 3}));
  CHECK(vec(NumericalSemigroup::make({5, 6, 7, 8, 9}).generators()).size() == 5);
  CHECK(s.multiplicity() == 3);
  CHECK(s.to_string() == "⟨3,4⟩");
}

TEST_CASE("membership") {
  const auto s = NumericalSemigroup::make({3, 4});
  CHECK_FALSE(s.contains(5));
  CHECK(s.contains(100));
  CHECK(s.contains(0));
  CHECK_FALSE(s.contains(-3));
  CHECK(s.elements_upto(9) == std::vector<std::uint32_t>{0, 3, 4, 6, 7, 8});
  CHECK(NumericalSemigroup::make({2, 3}).elements_upto(6) == std::vector<std::uint32_t>{0, 2, 3, 4, 5});
  CHECK(NumericalSemigroup::make({1}).elements_upto(3) == std::vector<std::uint32_t>{0, 1, 2});
}

TEST_CASE("construction errors") {
  CHECK(code_of([] { NumericalSemigroup::make({4, 6}); }) == ErrorCode::NotNumerical);
  CHECK(code_of([] { NumericalSemigroup::make(std::span<const std::uint32_t>{}); }) == ErrorCode::EmptyGenerators);
  CHECK(code_of([] { NumericalSemigroup::make({0, 3}); }) == ErrorCode::InvalidInput);
  CHECK(code_of([] { NumericalSemigroup::parse("3,x"); }) == ErrorCode::InvalidInput);
  CHECK(code_of([] { NumericalSemigroup::parse(""); }) == ErrorCode::InvalidInput);
  try {
    NumericalSemigroup::make({4, 6});
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("gcd ≠ 1") != std::string::npos);
  }
  CHECK(NumericalSemigroup::parse(" 3, 5 ") == NumericalSemigroup::make({3, 5}));
}

TEST_CASE("property: sieve invariants on random semigroups") {
  testing_support::Rng rng(2024);
  int tested = 0;
  while (tested < 150) {
    std::vector<std::uint32_t> gens(static_cast<std::size_t>(rng.range(1, 4)));
    for (auto& g : gens) g = static_cast<std::uint32_t>(rng.range(2, 17));
    std::uint32_t d = 0;
    for (auto g : gens) d = std::gcd(d, g);
    if (d != 1) continue;
    ++tested;
    const auto s = NumericalSemigroup::make(gens);
    const std::uint32_t c = s.conductor();

    // conductor and gap count from a brute-force reachability sieve
    std::vector<bool> reach(c + 40, false);
    reach[0] = true;
    for (std::size_t n = 1; n < reach.size(); ++n) {
      for (auto g : gens) reach[n] = reach[n] || (n >= g && reach[n - g]);
    }
    std::uint32_t gaps = 0;
    for (std::size_t n = 0; n < reach.size(); ++n) {
      CHECK(reach[n] == s.contains(static_cast<std::int64_t>(n)));
      gaps += reach[n] ? 0 : 1;
    }
    CHECK(gaps == s.delta());
    if (c > 0) CHECK_FALSE(s.contains(c - 1));
    CHECK(c <= 2 * s.delta());
    if (s.generators().size() == 2) CHECK(c == 2 * s.delta());

    for (int k = 0; k < 20; ++k) {
      const long a = rng.range(0, c + 10);
      const long b = rng.range(0, c + 10);
      if (s.contains(a) && s.contains(b)) CHECK(s.contains(a + b));
    }
    CHECK(NumericalSemigroup::make(s.generators()) == s);
  }
}

TEST_CASE("property: no minimal generator is a sum of smaller elements") {
  for (auto gens : std::vector<std::vector<std::uint32_t>>{{3, 4}, {5, 7, 9}, {4, 6, 9}, {6, 7, 8, 9, 10, 11}}) {
    const auto s = NumericalSemigroup::make(gens);
    for (auto g : s.generators()) {
      for (std::uint32_t a = 1; a < g; ++a) {
        CHECK_FALSE((s.contains(a) && s.contains(g - a)));
      }
    }
  }
}
