#include "asf/root_system.hpp"

#include <algorithm>
#include <stdexcept>

namespace asf {

std::vector<FiniteRoot> positive_roots(int n) {
  if (n < 2) throw std::invalid_argument("positive_roots: need n >= 2");
  std::vector<FiniteRoot> out;
  out.reserve(static_cast<size_t>(n) * (n - 1) / 2);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) out.push_back(FiniteRoot{i, j});
  return out;
}

bool weakly_decreasing(const std::vector<Int>& v) {
  for (size_t k = 1; k < v.size(); ++k)
    if (v[k - 1] < v[k]) return false;
  return true;
}

static void check_dominance_args(const std::vector<Int>& lam, const std::vector<Int>& mu) {
  if (lam.size() != mu.size())
    throw std::invalid_argument("dominance: vectors must have equal length");
  if (lam.empty()) throw std::invalid_argument("dominance: empty vectors");
  if (!weakly_decreasing(lam) || !weakly_decreasing(mu))
    throw std::invalid_argument("dominance: vectors must be weakly decreasing");
}

bool dominance_leq_star(const std::vector<Int>& lam, const std::vector<Int>& mu) {
  check_dominance_args(lam, mu);
  Int pl = 0, pm = 0;
  for (size_t k = 0; k < lam.size(); ++k) {
    pl += lam[k];
    pm += mu[k];
    if (pl > pm) return false;
  }
  return pl == pm;
}

Int tail_count(const std::vector<Int>& v, Int r) {
  Int total = 0;
  for (Int x : v)
    if (x >= r) total += x - r + 1;
  return total;
}

bool dominance_leq_dagger(const std::vector<Int>& lam, const std::vector<Int>& mu) {
  check_dominance_args(lam, mu);
  Int sl = 0, sm = 0;
  for (size_t k = 0; k < lam.size(); ++k) {
    sl += lam[k];
    sm += mu[k];
  }
  if (sl != sm) return false;
  Int lo = std::min(*std::min_element(lam.begin(), lam.end()),
                    *std::min_element(mu.begin(), mu.end()));
  Int hi = std::max(lam.front(), mu.front());
  for (Int r = lo; r <= hi + 1; ++r)
    if (tail_count(lam, r) > tail_count(mu, r)) return false;
  return true;
}

}  // namespace asf
