#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hookkron/hook_rules.hpp"
#include "hookkron/report.hpp"

namespace hookkron {

// footnote: (u o v)_i = u_{v_i}, so u o s_i swaps u_i and u_{i+1}.
enum class Composition { footnote, flipped };

OrdinaryWord compose(const OrdinaryWord& u, const OrdinaryWord& v, Composition c = Composition::footnote);
// Gamma_lambda = { w : P(w) = Z_lambda^std }
std::vector<OrdinaryWord> gamma(const Partition& lambda);

struct PairExperiment {
  Partition lambda, mu;
  std::map<StandardTableau, std::int64_t> q_mult;  // multiplicity of Q(u o v)
  std::map<StandardTableau, std::int64_t> p_mult;  // multiplicity of P(u o v)
};
PairExperiment experiment(const Partition& lambda, const Partition& mu, Composition c = Composition::footnote);

// (A): every T of shape nu occurs in P(Gamma_lambda o Gamma_mu) g f^nu times or not at all.
// (B): every B of shape nu occurs in Q(Gamma_lambda o Gamma_mu) exactly g times.
struct TripleRecord {
  Partition lambda, mu, nu;
  std::int64_t g = 0;
  std::int64_t f_nu = 0;
  std::int64_t matches = 0;  // #{B : m_B = g}
  std::int64_t m_min = 0, m_max = 0, m_sum = 0;
  bool property_a = false;  // only filled by pair_triples
  std::vector<std::int64_t> multiplicities;  // kept on request, in syt_enumerate order
  bool property_b() const { return matches == f_nu; }
};

// Triples (lambda, mu, nu) for one pair, all nu.
std::vector<TripleRecord> pair_triples(const Partition& lambda, const Partition& mu,
                                       Composition c = Composition::footnote, bool keep_multiplicities = false);

struct AlphaTable {
  int n = 0;
  // {0}, (0,.1), [.1,.2), ..., [.9,1), {1}
  std::array<std::int64_t, 12> bins{};
  std::int64_t counted = 0;  // ordered triples with g or some m nonzero
  std::int64_t total_triples = 0;
  std::int64_t max_g = 0;
  std::vector<TripleRecord> records;  // kept on request
};
int alpha_bin(std::int64_t matches, std::int64_t f_nu);
// Streams every pair (lambda, mu); `jobs` threads, deterministic merge.
AlphaTable alpha_table(int n, int jobs = 1, Composition c = Composition::footnote, bool keep_records = false);

// CWL_{A,d} = { w : P(w^{rev_bar brgt}) = A, tc(w) = d }; minus_only keeps w_n unbarred.
// With B, also Q(w) = B.
std::vector<Word> cwl_set(const StandardTableau& a, int d, bool minus_only,
                          const std::optional<StandardTableau>& b = std::nullopt);
// CW^{rev-}_{A,d} = rev(CW^-_{A^t,d})
std::vector<Word> cw_rev_minus(const StandardTableau& a, int d);


// Gamma_lambda o Gamma_mu(d) equals erase(CWL^-_{Z^std,d}) as multisets, mu = mu(d) hook.
bool erasure_identity(const Partition& lambda, int d);
// Property (B) for lambda_2 <= 2 and hook mu, all sizes <= n.
CheckReport check_lascoux_conjecture(int n);
// Hook lambda: P(CWL^-_{Z^std,d})^0 and P_m(CW^{rev-}_{Z^std,d})^0 agree as multisets.
// With hooks_only false, non-hook lambda are included (expected to fail somewhere).
CheckReport check_problem(int n, bool hooks_only = true);

}  // namespace hookkron
