#include "rpbell/restriction.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "rpbell/stirling.hpp"

namespace rpbell {

RestrictionVector::RestrictionVector(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("RestrictionVector: needs at least one part");
  for (int part : parts_) {
    if (part < 1) throw std::invalid_argument("RestrictionVector: parts must be positive");
  }
  std::sort(parts_.begin(), parts_.end());
  total_ = 0;
  for (int part : parts_) total_ += part;
}

RestrictionVector::RestrictionVector(std::initializer_list<int> parts)
    : RestrictionVector(std::vector<int>(parts)) {}

RestrictionVector RestrictionVector::parse(const std::string& csv) {
  std::vector<int> parts;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t pos = 0;
    int value = std::stoi(item, &pos);
    if (pos != item.size()) throw std::invalid_argument("RestrictionVector: bad part '" + item + "'");
    parts.push_back(value);
  }
  if (parts.empty()) throw std::invalid_argument("RestrictionVector: empty list");
  return RestrictionVector(std::move(parts));
}

std::vector<int> RestrictionVector::prefix() const {
  return std::vector<int>(parts_.begin(), parts_.end() - 1);
}

RestrictionVector RestrictionVector::incremented_last(int j) const {
  if (j < 0) throw std::invalid_argument("incremented_last: negative increment");
  std::vector<int> parts = parts_;
  parts.back() += j;
  return RestrictionVector(std::move(parts));
}

std::string RestrictionVector::str() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << ")";
  return os.str();
}

ACoeffs::ACoeffs(std::vector<ExactInt> values) : values_(std::move(values)) {
  if (values_.empty()) throw std::invalid_argument("ACoeffs: empty");
}

const ExactInt& ACoeffs::at(int k) const {
  static const ExactInt kZero(0);
  if (k < 0 || k >= size()) return kZero;
  return values_[static_cast<size_t>(k)];
}

namespace {

std::vector<int> sorted_prefix(std::vector<int> prefix) {
  for (int part : prefix) {
    if (part < 0) throw std::invalid_argument("a_coeffs: negative part");
  }
  std::sort(prefix.begin(), prefix.end());
  return prefix;
}

std::vector<ExactInt> a_values_by_product(const std::vector<int>& prefix) {
  IntPolynomial prod = IntPolynomial::constant(ExactInt(1));
  for (int part : prefix) prod = prod * falling_factorial_poly(ExactInt(0), part);
  int total = 0;
  for (int part : prefix) total += part;
  std::vector<ExactInt> values(static_cast<size_t>(total) + 1, ExactInt(0));
  for (int k = 0; k <= total; ++k) values[static_cast<size_t>(k)] = prod.coeff(k);
  return values;
}

std::vector<ExactInt> a_values_by_stirling(const std::vector<int>& prefix) {
  // Convolve the unsigned first-kind rows, then apply (-1)^(|prefix| - k).
  std::vector<ExactInt> conv{ExactInt(1)};
  for (int part : prefix) {
    std::vector<ExactInt> next(conv.size() + static_cast<size_t>(part), ExactInt(0));
    for (size_t i = 0; i < conv.size(); ++i) {
      for (int j = 0; j <= part; ++j) {
        next[i + static_cast<size_t>(j)] += conv[i] * stirling1_unsigned(part, j);
      }
    }
    conv = std::move(next);
  }
  int total = static_cast<int>(conv.size()) - 1;
  for (int k = 0; k <= total; ++k) {
    if ((total - k) % 2 != 0) conv[static_cast<size_t>(k)] = -conv[static_cast<size_t>(k)];
  }
  return conv;
}

}  // namespace

ACoeffs a_coeffs_via_stirling(const std::vector<int>& prefix) {
  return ACoeffs(a_values_by_stirling(sorted_prefix(prefix)));
}

ACoeffs a_coeffs(const std::vector<int>& prefix) {
  static std::mutex cache_mutex;
  static std::map<std::vector<int>, ACoeffs> cache;
  std::vector<int> key = sorted_prefix(prefix);
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  std::vector<ExactInt> values = a_values_by_product(key);
  if (values != a_values_by_stirling(key)) {
    throw std::logic_error("a_coeffs: product and Stirling-sum routes disagree");
  }
  ACoeffs result{values};
  std::lock_guard<std::mutex> lock(cache_mutex);
  cache.emplace(std::move(key), result);
  return result;
}

namespace detail {

IntPolynomial restricted_poly_product(int n, const RestrictionVector& r) {
  if (n < 0) throw std::domain_error("restricted_poly_product: negative exponent");
  ExactInt shift(static_cast<long>(r.last()));
  IntPolynomial base({static_cast<long>(r.last()), 1});  // z + r_p
  IntPolynomial prod = IntPolynomial::constant(ExactInt(1));
  for (int i = 0; i < n; ++i) prod = prod * base;
  for (int part : r.prefix()) prod = prod * falling_factorial_poly(shift, part);
  return prod;
}

}  // namespace detail

std::vector<ExactInt> rp_stirling_row(int n, const RestrictionVector& r) {
  if (n < r.total()) {
    throw std::domain_error("rp_stirling: restriction sets exceed ground set (n < |r|)");
  }
  return to_falling_basis(detail::restricted_poly_product(n - r.total(), r));
}

ExactInt rp_stirling2(int n, int k, const RestrictionVector& r) {
  std::vector<ExactInt> row = rp_stirling_row(n, r);
  int idx = k - r.last();
  if (idx < 0 || idx >= static_cast<int>(row.size())) return ExactInt(0);
  return row[static_cast<size_t>(idx)];
}

ExactInt rp_stirling2_via_reduction(int n, int k, const RestrictionVector& r) {
  if (n < r.total()) {
    throw std::domain_error("rp_stirling: restriction sets exceed ground set (n < |r|)");
  }
  // {m + |r| brace k}_r = sum_j a_j(prefix) {m + j + r_p brace k}_{r_p},
  // with m = n - |r| the number of unconstrained elements.
  int m = n - r.total();
  ACoeffs a = a_coeffs(r.prefix());
  ExactInt total(0);
  for (int j = 0; j < a.size(); ++j) {
    if (a.at(j).is_zero()) continue;
    total += a.at(j) * r_stirling2(m + j + r.last(), k, r.last());
  }
  return total;
}

}  // namespace rpbell
