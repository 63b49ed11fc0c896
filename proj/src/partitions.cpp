#include "cycloschur/partitions.hpp"

#include <sstream>
#include <stdexcept>

namespace cycloschur {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0)
      throw std::invalid_argument("partition with negative part");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must decrease weakly");
  }
}

int Partition::weight() const {
  int w = 0;
  for (int p : parts_) w += p;
  return w;
}

std::vector<int> Partition::padded(int len) const {
  if (length() > len)
    throw std::invalid_argument("partition longer than requested padding");
  std::vector<int> v = parts_;
  v.resize(len, 0);
  return v;
}

std::string Partition::str() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ",";
    os << parts_[i];
  }
  os << "]";
  return os.str();
}

namespace {

void gen(int remaining, int max_part, int max_len, std::vector<int>& cur,
         std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  if (max_len == 0) return;
  for (int p = std::min(max_part, remaining); p >= 1; --p) {
    cur.push_back(p);
    gen(remaining - p, p, max_len - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_bounded(int k, int max_part, int max_len) {
  std::vector<Partition> out;
  if (k < 0) return out;
  std::vector<int> cur;
  gen(k, max_part, max_len, cur, out);
  return out;
}

}  // namespace cycloschur
