#pragma once

// Dominant integral weights of sp_g in two coordinate systems:
// fundamental-weight coefficients (n_1,...,n_g) and partition form
// alpha_j = sum_{k>=j} n_k.  The partition entries are the coordinates of
// the weight in the standard torus basis e_1,...,e_g.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace torelli {

class Weight {
 public:
  Weight() = default;

  // Construct from fundamental-weight coefficients n_1..n_g.
  Weight(int g, std::vector<int> coeffs) : g_(g), coeffs_(std::move(coeffs)) {
    if (g_ < 1) throw std::invalid_argument("Weight: rank must be positive");
    if (static_cast<int>(coeffs_.size()) != g_)
      throw std::invalid_argument("Weight: coefficient count != rank");
    for (int c : coeffs_)
      if (c < 0) throw std::invalid_argument("Weight: negative coefficient");
  }

  static Weight zero(int g) { return Weight(g, std::vector<int>(g, 0)); }

  // lambda_j, the j-th fundamental weight (1-based).
  static Weight fundamental(int g, int j) {
    if (j < 1 || j > g) throw std::invalid_argument("fundamental: index out of range");
    std::vector<int> c(g, 0);
    c[j - 1] = 1;
    return Weight(g, std::move(c));
  }

  static Weight from_partition(int g, const std::vector<int>& alpha) {
    if (static_cast<int>(alpha.size()) > g)
      throw std::invalid_argument("from_partition: more parts than rank");
    std::vector<int> a(alpha);
    a.resize(g, 0);
    for (int j = 0; j + 1 < g; ++j)
      if (a[j] < a[j + 1])
        throw std::invalid_argument("from_partition: not weakly decreasing");
    if (!a.empty() && a.back() < 0)
      throw std::invalid_argument("from_partition: negative part");
    std::vector<int> c(g);
    for (int j = 0; j < g; ++j) c[j] = a[j] - (j + 1 < g ? a[j + 1] : 0);
    return Weight(g, std::move(c));
  }

  int rank() const { return g_; }
  const std::vector<int>& coeffs() const { return coeffs_; }

  // Partition form = torus coordinates.
  std::vector<int> partition() const {
    std::vector<int> a(g_, 0);
    int acc = 0;
    for (int j = g_ - 1; j >= 0; --j) {
      acc += coeffs_[j];
      a[j] = acc;
    }
    return a;
  }

  // |lambda| = sum of partition entries = sum k*n_k.
  int size() const {
    int s = 0;
    for (int k = 0; k < g_; ++k) s += (k + 1) * coeffs_[k];
    return s;
  }

  // Number of rows of the Young diagram; 0 for the trivial weight.
  int depth() const {
    for (int d = g_ - 1; d >= 0; --d)
      if (coeffs_[d] != 0) return d + 1;
    return 0;
  }

  bool is_zero() const { return depth() == 0; }

  // Transport to a larger rank, keeping the partition.
  Weight stabilized(int h) const {
    if (h < depth())
      throw std::invalid_argument("stabilized: partition has more parts than target rank");
    std::vector<int> a = partition();
    a.resize(h, 0);
    return from_partition(h, a);
  }

  bool operator==(const Weight& o) const { return g_ == o.g_ && coeffs_ == o.coeffs_; }

  // n*l1 + m*l2 style pretty form, e.g. "2L1+L3" / "0".
  std::string str() const {
    std::string s;
    for (int j = 0; j < g_; ++j) {
      if (coeffs_[j] == 0) continue;
      if (!s.empty()) s += "+";
      if (coeffs_[j] != 1) s += std::to_string(coeffs_[j]) + "*";
      s += "L" + std::to_string(j + 1);
    }
    return s.empty() ? "0" : s;
  }

 private:
  int g_ = 1;
  std::vector<int> coeffs_{0};
};

// Peeling / table order: strictly decreasing lexicographic on partition form.
struct WeightPartitionLexGreater {
  bool operator()(const Weight& a, const Weight& b) const {
    if (a.rank() != b.rank()) return a.rank() < b.rank();
    return a.partition() > b.partition();
  }
};

}  // namespace torelli
