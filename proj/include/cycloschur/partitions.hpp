#ifndef CYCLOSCHUR_PARTITIONS_HPP
#define CYCLOSCHUR_PARTITIONS_HPP

#include <string>
#include <vector>

namespace cycloschur {

// Integer vector with no ordering constraint (Jacobi-Trudi indices,
// exponent vectors).
using IntVector = std::vector<int>;

// Weakly decreasing list of non-negative integers.  Trailing zeros are
// stripped on construction, so length() counts the positive parts.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int weight() const;
  int max_part() const { return parts_.empty() ? 0 : parts_.front(); }

  // Parts padded with zeros to the given length; throws when the
  // partition is longer.
  std::vector<int> padded(int len) const;

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.parts_ == b.parts_;
  }
  friend bool operator<(const Partition& a, const Partition& b) {
    return a.parts_ < b.parts_;
  }

  std::string str() const;  // "[2,1]"

 private:
  std::vector<int> parts_;
};

// All partitions of weight k with parts <= max_part and length <= max_len,
// in decreasing lexicographic order.
std::vector<Partition> partitions_bounded(int k, int max_part, int max_len);

}  // namespace cycloschur

#endif
