#include "rpbell/stirling.hpp"

#include <map>
#include <memory>
#include <stdexcept>
#include <utility>

namespace rpbell {

StirlingTable::StirlingTable(StirlingKind kind, int r) : kind_(kind), r_(r), max_n_(-1) {
  if (r < 0) throw std::invalid_argument("StirlingTable: negative r");
  bool is_r_kind = kind == StirlingKind::r_second || kind == StirlingKind::r_first_unsigned;
  if (!is_r_kind && r != 0) throw std::invalid_argument("StirlingTable: r only valid for r-kinds");
}

ExactInt StirlingTable::at(int n, int k) {
  if (n < 0) throw std::domain_error("StirlingTable: negative n");
  if (n < r_) throw std::domain_error("StirlingTable: n < r (constrained elements exceed set)");
  if (k < 0 || k > n) return ExactInt(0);
  ensure(n);
  return rows_[static_cast<size_t>(n - r_)][static_cast<size_t>(k)];
}

void StirlingTable::ensure(int n) {
  if (max_n_.load(std::memory_order_acquire) >= n) return;
  std::lock_guard<std::mutex> lock(grow_mutex_);
  int have = max_n_.load(std::memory_order_relaxed);
  if (rows_.empty()) {
    // Base row n = r: delta at k = r.
    std::vector<ExactInt> base(static_cast<size_t>(r_) + 1, ExactInt(0));
    base[static_cast<size_t>(r_)] = ExactInt(1);
    rows_.push_back(std::move(base));
    have = r_;
  }
  bool second_kind = kind_ == StirlingKind::second || kind_ == StirlingKind::r_second;
  while (have < n) {
    int m = have + 1;
    const std::vector<ExactInt>& prev = rows_.back();
    std::vector<ExactInt> row(static_cast<size_t>(m) + 1, ExactInt(0));
    for (int k = 0; k <= m; ++k) {
      // {m,k}_r = k*{m-1,k}_r + {m-1,k-1}_r   (second kind)
      // [m,k]_r = (m-1)*[m-1,k]_r + [m-1,k-1]_r   (unsigned first kind)
      ExactInt mult(second_kind ? static_cast<long>(k) : static_cast<long>(m - 1));
      ExactInt up = (k <= m - 1) ? prev[static_cast<size_t>(k)] : ExactInt(0);
      ExactInt diag = (k >= 1 && k - 1 <= m - 1) ? prev[static_cast<size_t>(k - 1)] : ExactInt(0);
      row[static_cast<size_t>(k)] = mult * up + diag;
    }
    rows_.push_back(std::move(row));
    have = m;
  }
  max_n_.store(have, std::memory_order_release);
}

StirlingTable& shared_stirling_table(StirlingKind kind, int r) {
  static std::mutex registry_mutex;
  static std::map<std::pair<int, int>, std::unique_ptr<StirlingTable>> registry;
  std::lock_guard<std::mutex> lock(registry_mutex);
  auto key = std::make_pair(static_cast<int>(kind), r);
  auto it = registry.find(key);
  if (it == registry.end()) {
    it = registry.emplace(key, std::make_unique<StirlingTable>(kind, r)).first;
  }
  return *it->second;
}

ExactInt stirling2(int n, int k) {
  return shared_stirling_table(StirlingKind::second).at(n, k);
}

ExactInt stirling1_unsigned(int n, int k) {
  return shared_stirling_table(StirlingKind::first_unsigned).at(n, k);
}

ExactInt r_stirling2(int n, int k, int r) {
  return shared_stirling_table(StirlingKind::r_second, r).at(n, k);
}

ExactInt r_stirling1_unsigned(int n, int k, int r) {
  return shared_stirling_table(StirlingKind::r_first_unsigned, r).at(n, k);
}

IntPolynomial r_bell_polynomial(int n, int r) {
  if (n < 0) throw std::domain_error("r_bell_polynomial: negative n");
  std::vector<ExactInt> coeffs(static_cast<size_t>(n) + 1, ExactInt(0));
  for (int k = 0; k <= n; ++k) coeffs[static_cast<size_t>(k)] = r_stirling2(n + r, k + r, r);
  return IntPolynomial(std::move(coeffs));
}

ExactInt r_bell_number(int n, int r) {
  ExactInt total(0);
  for (int k = 0; k <= n; ++k) total += r_stirling2(n + r, k + r, r);
  return total;
}

}  // namespace rpbell
