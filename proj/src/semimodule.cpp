#include "zetaforge/semimodule.hpp"

#include <algorithm>
#include <string>

#include "zetaforge/error.hpp"

namespace zetaforge {

namespace {

// Depth-first walk over the finite down-sets of (Γ, ⪯). Each down-set is
// built in increasing numeric order, which is a linear extension of ⪯, so
// every down-set is reached exactly once and siblings come out in
// lexicographic order of their sorted complements.
class DownSetWalker {
 public:
  DownSetWalker(const NumericalSemigroup& s, std::uint32_t max_size)
      : s_(s),
        max_size_(max_size),
        max_gen_(s.generators().back()),
        in_(static_cast<std::size_t>(max_size + 1) * (max_gen_ + 1) + 1, false) {}

  template <class Visit>
  void run(Visit&& visit) {
    extend(visit);
  }

 private:
  bool addable(std::uint32_t y) const {
    if (!s_.contains(y)) return false;
    for (auto g : s_.generators()) {
      if (g > y) break;
      if (s_.contains(y - g) && !in_[y - g]) return false;
    }
    return true;
  }

  template <class Visit>
  void extend(Visit& visit) {
    visit(current_);
    if (current_.size() >= max_size_) return;
    const std::uint32_t lo = current_.empty() ? 0 : current_.back() + 1;
    const std::uint32_t hi = current_.empty() ? 0 : current_.back() + max_gen_;
    for (std::uint32_t y = lo; y <= hi; ++y) {
      if (!addable(y)) continue;
      current_.push_back(y);
      in_[y] = true;
      extend(visit);
      in_[y] = false;
      current_.pop_back();
    }
  }

  const NumericalSemigroup& s_;
  std::uint32_t max_size_;
  std::uint32_t max_gen_;
  std::vector<bool> in_;
  std::vector<std::uint32_t> current_;
};

}  // namespace

SemiModule::SemiModule(const NumericalSemigroup& parent, std::vector<std::uint32_t> complement)
    : parent_(parent), complement_(std::move(complement)) {
  std::sort(complement_.begin(), complement_.end());
  complement_.erase(std::unique(complement_.begin(), complement_.end()), complement_.end());
  for (auto b : complement_) {
    if (!parent_.contains(b)) {
      throw Error(ErrorCode::InvalidInput, "complement element " + std::to_string(b) + " is not in the semigroup");
    }
    for (auto g : parent_.generators()) {
      if (g <= b && parent_.contains(b - g) &&
          !std::binary_search(complement_.begin(), complement_.end(), b - g)) {
        throw Error(ErrorCode::InvalidInput, "complement is not closed downward at " + std::to_string(b));
      }
    }
  }
  // Minimal generators lie below max(c, max complement + 1) + multiplicity:
  // past that, x − m is in Γ and above the complement, hence in Δ.
  const std::uint32_t top = std::max<std::uint32_t>(parent_.conductor(),
                                                     complement_.empty() ? 0 : complement_.back() + 1) +
                            parent_.multiplicity();
  for (std::uint32_t x = 0; x < top; ++x) {
    if (!contains(x)) continue;
    bool generator = true;
    for (auto g : parent_.generators()) {
      if (g <= x && contains(x - g)) {
        generator = false;
        break;
      }
    }
    if (generator) generators_.push_back(x);
  }
}

SemiModule SemiModule::generated_by(const NumericalSemigroup& parent, const std::vector<std::uint32_t>& gens) {
  if (gens.empty()) throw Error(ErrorCode::InvalidInput, "a semimodule of finite codimension needs a generator");
  for (auto g : gens) {
    if (!parent.contains(g)) throw Error(ErrorCode::InvalidInput, std::to_string(g) + " is not in the semigroup");
  }
  const std::uint32_t top = *std::min_element(gens.begin(), gens.end()) + parent.conductor();
  std::vector<std::uint32_t> complement;
  for (std::uint32_t x = 0; x < top; ++x) {
    if (!parent.contains(x)) continue;
    const bool covered = std::any_of(gens.begin(), gens.end(), [&](std::uint32_t g) {
      return g <= x && parent.contains(x - g);
    });
    if (!covered) complement.push_back(x);
  }
  return SemiModule(parent, std::move(complement));
}

bool SemiModule::contains(std::int64_t n) const {
  return parent_.contains(n) &&
         !std::binary_search(complement_.begin(), complement_.end(), static_cast<std::uint32_t>(n));
}

std::vector<SemiModule> enumerate_semimodules(const NumericalSemigroup& s, std::uint32_t l) {
  std::vector<SemiModule> out;
  DownSetWalker walker(s, l);
  walker.run([&](const std::vector<std::uint32_t>& downset) {
    if (downset.size() == l) out.emplace_back(s, downset);
  });
  return out;
}

std::vector<std::uint64_t> count_semimodules_upto(const NumericalSemigroup& s, std::uint32_t n) {
  std::vector<std::uint64_t> counts(n, 0);
  if (n == 0) return counts;
  DownSetWalker walker(s, n - 1);
  walker.run([&](const std::vector<std::uint32_t>& downset) { ++counts[downset.size()]; });
  return counts;
}

std::uint64_t count_semimodules(const NumericalSemigroup& s, std::uint32_t l) {
  return count_semimodules_upto(s, l + 1)[l];
}

SemimoduleGenFn igen(const NumericalSemigroup& s, std::uint32_t n) {
  const std::uint32_t c = s.conductor();
  if (n <= c) {
    throw Error(ErrorCode::TruncationTooShort, "igen needs truncation order > conductor (" + std::to_string(c) +
                                                   "), got " + std::to_string(n));
  }
  const auto counts = count_semimodules_upto(s, n);
  std::vector<Rational> series_coeffs;
  series_coeffs.reserve(counts.size());
  for (auto k : counts) series_coeffs.emplace_back(Integer(static_cast<unsigned long>(k)));

  // Counts are constant from codim c on, so (1 − q)·I(Γ;q) is the polynomial
  // of first differences up to degree c.
  std::vector<Integer> f(c + 1);
  f[0] = static_cast<unsigned long>(counts[0]);
  for (std::uint32_t l = 1; l <= c; ++l) {
    f[l] = Integer(static_cast<unsigned long>(counts[l])) - Integer(static_cast<unsigned long>(counts[l - 1]));
  }
  IntPoly numerator(std::move(f));
  RationalFn normal_form(numerator, IntPoly{1, -1});
  return {LaurentSeries::truncated(0, std::move(series_coeffs), n), std::move(numerator), std::move(normal_form)};
}

}  // namespace zetaforge
