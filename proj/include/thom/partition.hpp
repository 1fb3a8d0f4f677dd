#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace thom {

// Weakly decreasing list of positive integers. Indexes characteristic-class
// monomials p_{l1} p_{l2} ... and coefficients of symmetric series.
class Partition {
 public:
  Partition() = default;
  // Sorts the parts; throws InvariantError on a non-positive part.
  explicit Partition(std::vector<int> parts);

  // Sorted nonzero entries of an exponent vector.
  static Partition from_exponents(std::span<const int> exponents);
  // Accepts "[3,1,1]" and "[]".
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int weight() const { return weight_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  int largest_part() const { return parts_.empty() ? 0 : parts_.front(); }

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) {
    if (a.weight_ != b.weight_) return a.weight_ <=> b.weight_;
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

// All partitions of n with every part <= max_part, in increasing order.
std::vector<Partition> partitions_of(int n, int max_part);
inline std::vector<Partition> partitions_of(int n) { return partitions_of(n, n); }

// All partitions with weight 0..max_weight.
std::vector<Partition> partitions_up_to(int max_weight);

}  // namespace thom
