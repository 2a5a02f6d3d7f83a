#include "zetaforge/semigroup.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "zetaforge/error.hpp"

namespace zetaforge {

namespace {

std::string join(std::span<const std::uint32_t> xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(xs[i]);
  }
  return out;
}

}  // namespace

NumericalSemigroup NumericalSemigroup::make(std::initializer_list<std::uint32_t> gens) {
  return make(std::span<const std::uint32_t>(gens.begin(), gens.size()));
}

NumericalSemigroup NumericalSemigroup::make(std::span<const std::uint32_t> gens) {
  if (gens.empty()) throw Error(ErrorCode::EmptyGenerators, "semigroup needs at least one generator");
  std::vector<std::uint32_t> sorted(gens.begin(), gens.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.front() == 0) throw Error(ErrorCode::InvalidInput, "generators must be positive integers");
  std::uint32_t g = 0;
  for (auto x : sorted) g = std::gcd(g, x);
  if (g != 1) {
    throw Error(ErrorCode::NotNumerical, "generators " + join(sorted) + " have gcd " + std::to_string(g) +
                                             " (gcd ≠ 1): not a numerical semigroup");
  }

  // Sieve until `m` consecutive members appear; from there on every integer
  // is a member because adding m shifts the run forward.
  const std::uint32_t m = sorted.front();
  std::vector<bool> member{true};
  std::uint32_t run = 1;
  std::uint32_t n = 0;
  while (run < m) {
    ++n;
    bool in = false;
    for (auto x : sorted) {
      if (x > n) break;
      if (member[n - x]) {
        in = true;
        break;
      }
    }
    member.push_back(in);
    run = in ? run + 1 : 0;
  }

  NumericalSemigroup s;
  // The run of m members ends at n, so it starts at n - m + 1.
  s.conductor_ = n + 1 - m;
  for (std::uint32_t i = 0; i < s.conductor_; ++i) {
    if (!member[i]) s.gaps_.push_back(i);
  }
  member.resize(s.conductor_);
  s.member_ = std::move(member);

  // A generator is redundant iff it lies in the semigroup spanned by the
  // smaller minimal generators.
  std::vector<bool> spanned{true};
  for (auto x : sorted) {
    while (spanned.size() <= x) {
      const std::uint32_t k = static_cast<std::uint32_t>(spanned.size());
      bool in = false;
      for (auto y : s.generators_) {
        if (y <= k && spanned[k - y]) {
          in = true;
          break;
        }
      }
      spanned.push_back(in);
    }
    if (!spanned[x]) {
      s.generators_.push_back(x);
      spanned.resize(x);  // recompute with the new generator included
    }
  }
  return s;
}

NumericalSemigroup NumericalSemigroup::parse(std::string_view text) {
  std::vector<std::uint32_t> gens;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    std::string_view item = text.substr(pos, comma - pos);
    while (!item.empty() && (item.front() == ' ' || item.front() == '\t')) item.remove_prefix(1);
    while (!item.empty() && (item.back() == ' ' || item.back() == '\t')) item.remove_suffix(1);
    std::uint32_t value = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size()) {
      throw Error(ErrorCode::InvalidInput,
                  "malformed generator list '" + std::string(text) + "': expected comma-separated positive integers");
    }
    gens.push_back(value);
    pos = comma + 1;
  }
  return make(gens);
}

bool NumericalSemigroup::contains(std::int64_t n) const {
  if (n < 0) return false;
  if (n >= static_cast<std::int64_t>(conductor_)) return true;
  return member_[static_cast<std::size_t>(n)];
}

std::vector<std::uint32_t> NumericalSemigroup::elements_upto(std::uint32_t bound) const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; i < bound; ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

std::string NumericalSemigroup::to_string() const { return "⟨" + join(generators_) + "⟩"; }

}  // namespace zetaforge
