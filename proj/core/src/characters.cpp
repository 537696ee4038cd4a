#include "haarwell/characters.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

#include "haarwell/errors.hpp"

namespace haarwell {

namespace {

// First-column beta numbers: beta_i = lambda_i + (rows - i), strictly
// decreasing. Border strip removal is a single beta move beta -> beta - t,
// with sign (-1)^(number of betas jumped over).
std::vector<int> beta_set(const YoungDiagram& lambda) {
  const auto& rows = lambda.parts();
  const int l = static_cast<int>(rows.size());
  std::vector<int> beta(l);
  for (int i = 0; i < l; ++i) beta[i] = rows[i] + (l - 1 - i);
  return beta;
}

YoungDiagram diagram_from_beta(std::vector<int> beta) {
  std::sort(beta.begin(), beta.end(), std::greater<int>());
  const int l = static_cast<int>(beta.size());
  std::vector<int> rows;
  for (int i = 0; i < l; ++i) {
    const int part = beta[i] - (l - 1 - i);
    if (part > 0) rows.push_back(part);
  }
  return YoungDiagram(std::move(rows));
}

BigInt character_rec(const YoungDiagram& lambda, const CycleType& mu,
                     std::map<std::pair<Partition, Partition>, BigInt>& memo) {
  if (mu.empty()) return BigInt(1);
  const auto key = std::make_pair(lambda, mu);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  const int t = mu.part(0);  // largest remaining part
  std::vector<int> rest(mu.parts().begin() + 1, mu.parts().end());
  const CycleType mu_rest{Partition(std::move(rest))};

  const std::vector<int> beta = beta_set(lambda);
  BigInt total(0);
  for (size_t i = 0; i < beta.size(); ++i) {
    const int target = beta[i] - t;
    if (target < 0) continue;
    if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int height = 0;
    for (int b : beta)
      if (b > target && b < beta[i]) ++height;
    std::vector<int> next = beta;
    next[i] = target;
    const BigInt sub = character_rec(diagram_from_beta(std::move(next)), mu_rest, memo);
    total += (height % 2 == 0) ? sub : -sub;
  }
  memo.emplace(key, total);
  return total;
}

}  // namespace

BigInt character(const YoungDiagram& lambda, const CycleType& mu) {
  if (lambda.sum() != mu.sum())
    throw std::domain_error("character: |lambda| != |mu|");
  if (lambda.sum() > 8)
    throw CapError("character: k = " + std::to_string(lambda.sum()) + " exceeds cap 8");
  static std::map<std::pair<Partition, Partition>, BigInt> memo;
  static std::mutex memo_mutex;
  std::lock_guard<std::mutex> lock(memo_mutex);
  return character_rec(lambda, mu, memo);
}

}  // namespace haarwell
