#include "hookkron/lascoux.hpp"

#include <algorithm>
#include <thread>

#include "hookkron/error.hpp"

namespace hookkron {

OrdinaryWord compose(const OrdinaryWord& u, const OrdinaryWord& v, Composition c) {
  if (u.size() != v.size()) throw PreconditionError("compose: lengths differ");
  OrdinaryWord w(u.size());
  for (size_t i = 0; i < u.size(); ++i) w[i] = c == Composition::footnote ? u[v[i] - 1] : v[u[i] - 1];
  return w;
}

std::vector<OrdinaryWord> gamma(const Partition& lambda) {
  StandardTableau z = superstandard_std(lambda);
  std::vector<OrdinaryWord> out;
  for (const StandardTableau& q : syt_enumerate(SkewShape(lambda))) out.push_back(inverse_rsk(z, q));
  return out;
}

PairExperiment experiment(const Partition& lambda, const Partition& mu, Composition c) {
  if (lambda.size() != mu.size()) throw PreconditionError("experiment: sizes differ");
  PairExperiment e{lambda, mu, {}, {}};
  auto gv = gamma(mu);
  for (const OrdinaryWord& u : gamma(lambda))
    for (const OrdinaryWord& v : gv) {
      auto r = schensted(compose(u, v, c));
      ++e.q_mult[r.q];
      ++e.p_mult[r.p];
    }
  return e;
}

static void summarize(TripleRecord& t, const std::vector<std::int64_t>& m) {
  t.f_nu = static_cast<std::int64_t>(m.size());
  t.m_min = m.empty() ? 0 : *std::min_element(m.begin(), m.end());
  t.m_max = m.empty() ? 0 : *std::max_element(m.begin(), m.end());
  t.m_sum = 0;
  t.matches = 0;
  for (auto x : m) {
    t.m_sum += x;
    t.matches += (x == t.g);
  }
}

std::vector<TripleRecord> pair_triples(const Partition& lambda, const Partition& mu, Composition c,
                                       bool keep_multiplicities) {
  PairExperiment e = experiment(lambda, mu, c);
  std::vector<TripleRecord> out;
  for (const Partition& nu : partitions_of(lambda.size())) {
    TripleRecord t{lambda, mu, nu, kronecker_oracle(lambda, mu, nu)};
    std::vector<std::int64_t> m;
    auto tabs = syt_enumerate(SkewShape(nu));
    for (const StandardTableau& b : tabs) {
      auto it = e.q_mult.find(b);
      m.push_back(it == e.q_mult.end() ? 0 : it->second);
    }
    summarize(t, m);
    t.property_a = true;
    for (const StandardTableau& p : tabs) {
      auto it = e.p_mult.find(p);
      std::int64_t k = it == e.p_mult.end() ? 0 : it->second;
      if (k != 0 && k != t.g * t.f_nu) t.property_a = false;
    }
    if (keep_multiplicities) t.multiplicities = std::move(m);
    out.push_back(std::move(t));
  }
  return out;
}

int alpha_bin(std::int64_t matches, std::int64_t f_nu) {
  if (matches == 0) return 0;
  if (matches == f_nu) return 11;
  return 1 + static_cast<int>((10 * matches) / f_nu);
}

namespace {

// Trie over recording-tableau row sequences: SYT of size n -> leaf id.
struct SytIndex {
  int n = 0;
  std::vector<int> child;  // node * n + row
  std::vector<int> leaf;   // node -> leaf id or -1
  std::vector<std::vector<int>> leaves_of_shape;

  int new_node() {
    child.insert(child.end(), n, -1);
    leaf.push_back(-1);
    return static_cast<int>(leaf.size()) - 1;
  }

  explicit SytIndex(const std::vector<Partition>& shapes) {
    n = shapes.empty() ? 0 : shapes.front().size();
    new_node();
    int next_leaf = 0;
    for (const Partition& nu : shapes) {
      leaves_of_shape.emplace_back();
      for (const StandardTableau& b : syt_enumerate(SkewShape(nu))) {
        std::vector<int> row_of(n + 1);
        for (auto& c : b.cells()) row_of[b.at(c)] = c.row;
        int node = 0;
        for (int i = 1; i <= n; ++i) {
          int& ch = child[node * n + row_of[i]];
          if (ch < 0) {
            int fresh = new_node();
            child[node * n + row_of[i]] = fresh;
            node = fresh;
          } else {
            node = ch;
          }
        }
        leaf[node] = next_leaf;
        leaves_of_shape.back().push_back(next_leaf++);
      }
    }
  }
  int leaves() const {
    int k = 0;
    for (auto& v : leaves_of_shape) k += static_cast<int>(v.size());
    return k;
  }
};

// Leaf id of Q(w) for a permutation w.
int recording_leaf(const SytIndex& idx, const int* w, int n) {
  int rows[16][17];
  int len[16];
  int nrows = 0, node = 0;
  for (int i = 0; i < n; ++i) {
    int x = w[i], r = 0;
    while (true) {
      if (r == nrows) {
        rows[r][0] = x;
        len[r] = 1;
        ++nrows;
        break;
      }
      int j = 0;
      while (j < len[r] && rows[r][j] < x) ++j;
      if (j == len[r]) {
        rows[r][len[r]++] = x;
        break;
      }
      std::swap(rows[r][j], x);
      ++r;
    }
    node = idx.child[node * n + r];
  }
  return idx.leaf[node];
}

}  // namespace

AlphaTable alpha_table(int n, int jobs, Composition comp, bool keep_records) {
  if (n < 1 || n > 14) throw PreconditionError("alpha_table: n out of range");
  jobs = std::max(1, jobs);
  auto parts = partitions_of(n);
  int np = static_cast<int>(parts.size());
  SytIndex idx(parts);
  std::vector<std::vector<OrdinaryWord>> gam;
  for (auto& p : parts) gam.push_back(gamma(p));
  std::vector<std::int64_t> g(np * np * np);
  for (int a = 0; a < np; ++a)
    for (int b = 0; b < np; ++b)
      for (int c = 0; c < np; ++c) g[(a * np + b) * np + c] = kronecker_oracle(parts[a], parts[b], parts[c]);

  std::vector<std::vector<TripleRecord>> per_pair(np * np);
  auto work = [&](int tid) {
    std::vector<std::int64_t> counts(idx.leaves());
    std::vector<int> w(n);
    for (int pair = tid; pair < np * np; pair += jobs) {
      int a = pair / np, b = pair % np;
      std::fill(counts.begin(), counts.end(), 0);
      for (const OrdinaryWord& u : gam[a])
        for (const OrdinaryWord& v : gam[b]) {
          for (int i = 0; i < n; ++i) w[i] = comp == Composition::footnote ? u[v[i] - 1] : v[u[i] - 1];
          ++counts[recording_leaf(idx, w.data(), n)];
        }
      auto& out = per_pair[pair];
      for (int c = 0; c < np; ++c) {
        TripleRecord t{parts[a], parts[b], parts[c], g[(a * np + b) * np + c]};
        std::vector<std::int64_t> m;
        for (int l : idx.leaves_of_shape[c]) m.push_back(counts[l]);
        summarize(t, m);
        if (keep_records) t.multiplicities = std::move(m);
        out.push_back(std::move(t));
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < jobs; ++t) pool.emplace_back(work, t);
  work(0);
  for (auto& th : pool) th.join();

  AlphaTable table;
  table.n = n;
  for (auto& recs : per_pair)
    for (auto& t : recs) {
      ++table.total_triples;
      table.max_g = std::max(table.max_g, t.g);
      if (t.g == 0 && t.m_max == 0) continue;
      ++table.counted;
      ++table.bins[alpha_bin(t.matches, t.f_nu)];
      if (keep_records) table.records.push_back(std::move(t));
    }
  return table;
}

std::vector<Word> cwl_set(const StandardTableau& a, int d, bool minus_only, const std::optional<StandardTableau>& b) {
  if (!is_standard(a) || !a.is_straight()) throw PreconditionError("cwl_set: A must be a standard tableau");
  int n = a.size();
  if (d < 0 || d > n) throw PreconditionError("cwl_set: d out of range");
  std::vector<Word> out;
  for (const StandardTableau& q : syt_enumerate(SkewShape(a.outer()))) {
    OrdinaryWord u = inverse_rsk(a, q);
    // u = sub_nobar(w) followed by reversed sub_bar(w)*
    std::vector<int> mask(n, 0);
    std::fill(mask.begin(), mask.begin() + d, 1);
    std::sort(mask.begin(), mask.end());
    do {
      if (minus_only && n > 0 && mask.back()) continue;
      Word w;
      int iu = 0, ib = n - 1;
      for (int m : mask) w.push_back(m ? Letter{u[ib--], true} : Letter{u[iu++], false});
      if (b && schensted(w).q != *b) continue;
      out.push_back(w);
    } while (std::next_permutation(mask.begin(), mask.end()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Word> cw_rev_minus(const StandardTableau& a, int d) {
  std::vector<Word> out;
  for (const Word& w : cw_set(transpose(a), d, std::nullopt, ColorClass::raisable))
    out.push_back(apply_symmetry(w, Symmetry::rev));
  std::sort(out.begin(), out.end());
  return out;
}

bool erasure_identity(const Partition& lambda, int d) {
  int n = lambda.size();
  std::vector<OrdinaryWord> lhs, rhs;
  auto gm = gamma(Partition::hook(n, d));
  for (auto& u : gamma(lambda))
    for (auto& v : gm) lhs.push_back(compose(u, v));
  for (const Word& w : cwl_set(superstandard_std(lambda), d, true)) rhs.push_back(erase_bars(w));
  std::sort(lhs.begin(), lhs.end());
  std::sort(rhs.begin(), rhs.end());
  return lhs == rhs;
}

CheckReport check_lascoux_conjecture(int n) {
  CheckReport r{"lascoux conjecture (lambda_2 <= 2, hook mu)"};
  for (int k = 1; k <= n; ++k)
    for (const Partition& lambda : partitions_of(k)) {
      if (lambda[1] > 2) continue;
      for (int d = 0; d < k; ++d)
        for (auto& t : pair_triples(lambda, Partition::hook(k, d))) {
          ++r.cases;
          if (!t.property_b())
            r.fail(lambda.str() + " x " + t.mu.str() + " -> " + t.nu.str());
        }
    }
  return r;
}

CheckReport check_problem(int n, bool hooks_only) {
  CheckReport r{hooks_only ? "P(CWL-) = P_m(CW rev-) for hook lambda" : "P(CWL-) = P_m(CW rev-) for all lambda"};
  for (int k = 1; k <= n; ++k)
    for (const Partition& lambda : partitions_of(k)) {
      if (hooks_only && !lambda.is_hook()) continue;
      StandardTableau z = superstandard_std(lambda);
      for (int d = 0; d < k; ++d) {
        std::vector<StandardTableau> lhs, rhs;
        for (const Word& w : cwl_set(z, d, true)) lhs.push_back(erase_bars(schensted(w).p));
        for (const Word& w : cw_rev_minus(z, d)) rhs.push_back(erase_bars(mixed_insert(w).p));
        std::sort(lhs.begin(), lhs.end());
        std::sort(rhs.begin(), rhs.end());
        ++r.cases;
        if (lhs != rhs) r.fail(lambda.str() + " d=" + std::to_string(d));
      }
    }
  return r;
}

}  // namespace hookkron
