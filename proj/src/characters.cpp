#include <algorithm>
#include <map>
#include <set>

#include "hookkron/error.hpp"
#include "hookkron/symfunc.hpp"

namespace hookkron {

namespace {

using Key = std::pair<std::vector<int>, std::vector<int>>;

// beta-set of lambda with `len` beads
std::vector<int> beta_set(const std::vector<int>& lambda, int len) {
  std::vector<int> b(len);
  for (int i = 0; i < len; ++i) b[i] = (i < static_cast<int>(lambda.size()) ? lambda[i] : 0) + (len - 1 - i);
  return b;
}

std::vector<int> from_beta(std::vector<int> b) {
  std::sort(b.rbegin(), b.rend());
  int len = static_cast<int>(b.size());
  std::vector<int> p;
  for (int i = 0; i < len; ++i)
    if (int v = b[i] - (len - 1 - i); v > 0) p.push_back(v);
  return p;
}

// rho given as parts, consumed from the back
std::int64_t mn(const std::vector<int>& lambda, std::vector<int>& rho, std::map<Key, std::int64_t>& memo) {
  if (rho.empty()) return lambda.empty() ? 1 : 0;
  Key key{lambda, rho};
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  int r = rho.back();
  rho.pop_back();
  int len = static_cast<int>(lambda.size());
  std::vector<int> b = beta_set(lambda, len);
  std::set<int> beads(b.begin(), b.end());
  std::int64_t total = 0;
  for (int x : b) {
    int y = x - r;
    if (y < 0 || beads.count(y)) continue;
    int between = 0;
    for (int z : b)
      if (z > y && z < x) ++between;
    std::vector<int> nb = b;
    std::replace(nb.begin(), nb.end(), x, y);
    std::int64_t v = mn(from_beta(nb), rho, memo);
    total += (between % 2 ? -v : v);
  }
  rho.push_back(r);
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace

std::int64_t character(const Partition& lambda, const Partition& rho) {
  if (lambda.size() != rho.size()) throw PreconditionError("character: sizes differ");
  thread_local std::map<Key, std::int64_t> memo;
  std::vector<int> r = rho.parts();
  return mn(lambda.parts(), r, memo);
}

std::uint64_t class_size(const Partition& rho) {
  // n!/z_rho with z_rho = prod i^{m_i} m_i!
  std::map<int, int> mult;
  for (int p : rho.parts()) ++mult[p];
  unsigned __int128 z = 1;
  for (auto [i, m] : mult)
    for (int j = 1; j <= m; ++j) z *= static_cast<unsigned>(i) * static_cast<unsigned>(j);
  return static_cast<std::uint64_t>(factorial(rho.size()) / z);
}

std::int64_t kronecker_oracle(const Partition& lambda, const Partition& mu, const Partition& nu) {
  int n = lambda.size();
  if (mu.size() != n || nu.size() != n) return 0;
  __int128 acc = 0;
  for (const Partition& rho : partitions_of(n)) {
    __int128 term = static_cast<__int128>(class_size(rho));
    for (const Partition* p : {&lambda, &mu, &nu}) {
      __int128 next;
      if (__builtin_mul_overflow(term, static_cast<__int128>(character(*p, rho)), &next))
        throw OverflowError("kronecker_oracle: overflow");
      term = next;
    }
    if (__builtin_add_overflow(acc, term, &acc)) throw OverflowError("kronecker_oracle: overflow");
  }
  __int128 nf = factorial(n);
  if (acc % nf != 0) throw OverflowError("kronecker_oracle: inexact division");
  return static_cast<std::int64_t>(acc / nf);
}

std::int64_t kronecker_oracle(const Partition& lambda, const Partition& mu, const SkewShape& nu) {
  if (nu.is_straight()) return kronecker_oracle(lambda, mu, nu.outer);
  std::int64_t g = 0;
  for (const Partition& rho : partitions_of(nu.size())) {
    std::int64_t c = lr_coefficient(rho, nu.inner, nu.outer);
    if (c) g += c * kronecker_oracle(lambda, mu, rho);
  }
  return g;
}

}  // namespace hookkron
