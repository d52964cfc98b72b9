#include "cusps/decomp.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <utility>

#include "cusps/error.hpp"
#include "cusps/zlinalg.hpp"

namespace cusps {

namespace {

void check_problem(const DecompProblem& problem) {
  if (problem.m < 1)
    fail(errc::bad_input, "the submodule length m must be positive", {{"m", problem.m}});
  if (problem.a.empty())
    fail(errc::bad_input, "the quotient shape needs at least one exponent entry");
  for (std::size_t j = 0; j < problem.a.size(); ++j) {
    if (problem.a[j] < 0)
      fail(errc::bad_input, "quotient multiplicities must be non-negative",
           {{"index", j + 1}, {"value", problem.a[j]}});
  }
}

int a_at(const DecompProblem& problem, int i) {
  return (i >= 1 && i <= static_cast<int>(problem.a.size())) ? problem.a[i - 1] : 0;
}

int total_exponent(const DecompProblem& problem) {
  int e = problem.m;
  for (std::size_t j = 0; j < problem.a.size(); ++j)
    e += static_cast<int>(j + 1) * problem.a[j];
  return e;
}

// Cyclic exponents produced by one admissible tuple: each chain entry i_l > 0
// consumes one quotient factor O/p^{i_l} and contributes O/p^{m_l + i_l}; a
// chain start at exponent 0 contributes the bare O/p^{m_0}; untouched quotient
// factors pass through unchanged.
std::vector<int> structure_of(const DecompProblem& problem, const std::vector<int>& indices,
                              const std::vector<int>& mults) {
  std::vector<int> parts;
  for (std::size_t l = 0; l < indices.size(); ++l) {
    int i = indices[l];
    for (int c = 1; c < a_at(problem, i); ++c) parts.push_back(i);
    parts.push_back(mults[l] + i);
  }
  for (int j = 1; j <= static_cast<int>(problem.a.size()); ++j) {
    if (std::find(indices.begin(), indices.end(), j) != indices.end()) continue;
    for (int c = 0; c < problem.a[j - 1]; ++c) parts.push_back(j);
  }
  std::sort(parts.rbegin(), parts.rend());
  return parts;
}

// Strictly increasing chains drawn from the candidate exponents.  Inner links
// need room for a positive multiplicity, so consecutive entries must differ by
// at least 2, and a chain never has more than m entries.
void collect_chains(const std::vector<int>& candidates, std::size_t pos, int m,
                    std::vector<int>& current, std::vector<std::vector<int>>& out) {
  if (!current.empty()) out.push_back(current);
  if (static_cast<int>(current.size()) >= m) return;
  for (std::size_t t = pos; t < candidates.size(); ++t) {
    if (!current.empty() && candidates[t] - current.back() < 2) continue;
    current.push_back(candidates[t]);
    collect_chains(candidates, t + 1, m, current, out);
    current.pop_back();
  }
}

// Positive multiplicities for one chain: slot l < k is capped by the gap to
// the next index, the last slot absorbs whatever remains of m.
void collect_multiplicities(const DecompProblem& problem, const std::vector<int>& chain,
                            std::size_t l, int remaining, std::vector<int>& current,
                            std::vector<DecompSolution>& out) {
  if (l + 1 == chain.size()) {
    if (remaining < 1) return;
    current.push_back(remaining);
    out.push_back({chain, current, structure_of(problem, chain, current)});
    current.pop_back();
    return;
  }
  int cap = chain[l + 1] - chain[l] - 1;
  int most = remaining - static_cast<int>(chain.size() - l - 1);
  for (int v = 1; v <= std::min(cap, most); ++v) {
    current.push_back(v);
    collect_multiplicities(problem, chain, l + 1, remaining - v, current, out);
    current.pop_back();
  }
}

// Non-increasing partitions of e, sorted lexicographically.
std::vector<std::vector<int>> partitions_of(int e) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  auto rec = [&](auto&& self, int remaining, int maxpart) -> void {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (int v = std::min(remaining, maxpart); v >= 1; --v) {
      current.push_back(v);
      self(self, remaining - v, v);
      current.pop_back();
    }
  };
  rec(rec, e, e);
  std::sort(out.begin(), out.end());
  return out;
}

// Exponents of the number of elements of order dividing p^t in
// prod Z/p^{mu_i}, for t = 0..max(mu).  Two finite abelian p-groups are
// isomorphic exactly when these counts agree for every t.
std::vector<int> order_profile(const std::vector<int>& mu) {
  int top = 0;
  for (int u : mu) top = std::max(top, u);
  std::vector<int> profile(top + 1, 0);
  for (int t = 0; t <= top; ++t)
    for (int u : mu) profile[t] += std::min(u, t);
  return profile;
}

// For one group shape: the quotient order-profiles reachable from elements of
// each exact order.
struct PartitionData {
  std::map<int, std::set<std::vector<int>>> quotients_by_order;
};

using OracleTable = std::vector<std::pair<std::vector<int>, PartitionData>>;

// Exhaustive scan of all abelian p-groups of order p^e: for every partition
// and every group element, record the element's order and the cyclic
// decomposition of the quotient by the subgroup it generates.  The quotient
// decomposition comes from the elementary divisors of the relation matrix
// [diag(p^lambda) | x].
OracleTable build_oracle_table(int p, int e) {
  OracleTable table;
  for (const std::vector<int>& lambda : partitions_of(e)) {
    PartitionData data;
    int r = static_cast<int>(lambda.size());
    std::vector<long long> radix(r, 1);
    for (int i = 0; i < r; ++i)
      for (int t = 0; t < lambda[i]; ++t) radix[i] *= p;
    ZMat rel = ZMat::Zero(r, r + 1);
    for (int i = 0; i < r; ++i) rel(i, i) = Int(radix[i]);
    std::vector<long long> x(r, 0);
    for (;;) {
      // odometer step over the group elements
      int i = 0;
      while (i < r && x[i] + 1 == radix[i]) x[i++] = 0;
      if (i == r) break;
      ++x[i];

      int order = 0;
      for (int j = 0; j < r; ++j) {
        if (x[j] == 0) continue;
        long long v = x[j];
        int val = 0;
        while (v % p == 0) {
          v /= p;
          ++val;
        }
        order = std::max(order, lambda[j] - val);
      }
      for (int j = 0; j < r; ++j) rel(j, r) = Int(x[j]);
      std::vector<int> quotient;
      for (const Int& dv : z_elementary_divisors(rel)) {
        Int v = dv;
        int exp = 0;
        while (v % p == 0) {
          v /= p;
          ++exp;
        }
        if (v != 1)
          fail(errc::internal, "quotient invariant factor is not a power of the prime",
               {{"divisor", dv.str()}, {"p", p}});
        quotient.push_back(exp);
      }
      std::sort(quotient.rbegin(), quotient.rend());
      data.quotients_by_order[order].insert(order_profile(quotient));
    }
    table.emplace_back(lambda, std::move(data));
  }
  return table;
}

const OracleTable& oracle_table(int p, int e) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, OracleTable> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(p, e);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, build_oracle_table(p, e)).first;
  return it->second;
}

}  // namespace

std::vector<DecompSolution> decomp_enumerate(const DecompProblem& problem) {
  check_problem(problem);
  std::vector<int> candidates{0};
  for (int j = 1; j <= static_cast<int>(problem.a.size()); ++j)
    if (problem.a[j - 1] > 0) candidates.push_back(j);

  std::vector<std::vector<int>> chains;
  std::vector<int> scratch;
  collect_chains(candidates, 0, problem.m, scratch, chains);

  std::vector<DecompSolution> out;
  for (const std::vector<int>& chain : chains) {
    std::vector<int> mults;
    collect_multiplicities(problem, chain, 0, problem.m, mults, out);
  }
  std::sort(out.begin(), out.end(), [](const DecompSolution& x, const DecompSolution& y) {
    if (x.indices.size() != y.indices.size()) return x.indices.size() < y.indices.size();
    if (x.indices != y.indices) return x.indices < y.indices;
    return x.multiplicities < y.multiplicities;
  });
  return out;
}

std::vector<std::vector<int>> decomp_oracle(int p, const DecompProblem& problem) {
  check_problem(problem);
  if (p != 2 && p != 3)
    fail(errc::bad_input, "the brute-force verifier only supports p = 2 and p = 3", {{"p", p}});
  int e = total_exponent(problem);
  long long order = 1;
  for (int t = 0; t < e; ++t) {
    order *= p;
    if (order > 2187)
      fail(errc::size_cap, "total group order exceeds the brute-force cap of 3^7",
           {{"p", p}, {"exponent", e}});
  }

  std::vector<int> target;
  for (int j = static_cast<int>(problem.a.size()); j >= 1; --j)
    for (int c = 0; c < problem.a[j - 1]; ++c) target.push_back(j);
  const std::vector<int> wanted = order_profile(target);

  std::vector<std::vector<int>> out;
  for (const auto& [lambda, data] : oracle_table(p, e)) {
    auto it = data.quotients_by_order.find(problem.m);
    if (it != data.quotients_by_order.end() && it->second.count(wanted)) out.push_back(lambda);
  }
  return out;
}

}  // namespace cusps
