#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace carex {

/// Ordered finite set of global fermionic mode indices. The increasing order
/// fixes the Jordan-Wigner ordering for every operator built over the set.
/// The empty set is allowed and represents the scalar algebra (1x1 matrices).
class ModeSet {
 public:
  ModeSet() = default;

  explicit ModeSet(std::vector<int> indices) : indices_(std::move(indices)) {
    std::sort(indices_.begin(), indices_.end());
    for (std::size_t k = 0; k < indices_.size(); ++k) {
      if (indices_[k] <= 0) {
        throw std::invalid_argument("ModeSet: mode indices must be positive");
      }
      if (k > 0 && indices_[k] == indices_[k - 1]) {
        throw std::invalid_argument("ModeSet: duplicate mode index " +
                                    std::to_string(indices_[k]));
      }
    }
  }

  ModeSet(std::initializer_list<int> indices)
      : ModeSet(std::vector<int>(indices)) {}

  std::size_t size() const { return indices_.size(); }
  bool empty() const { return indices_.empty(); }

  /// Matrix dimension of the algebra over this set: 2^|I|.
  long dim() const { return 1L << indices_.size(); }

  const std::vector<int>& indices() const { return indices_; }
  int operator[](std::size_t k) const { return indices_[k]; }

  auto begin() const { return indices_.begin(); }
  auto end() const { return indices_.end(); }

  bool contains(int mode) const {
    return std::binary_search(indices_.begin(), indices_.end(), mode);
  }

  /// 0-based position of `mode` in the increasing order.
  std::size_t position_of(int mode) const {
    auto it = std::lower_bound(indices_.begin(), indices_.end(), mode);
    if (it == indices_.end() || *it != mode) {
      throw std::invalid_argument("ModeSet: mode " + std::to_string(mode) +
                                  " not in set " + to_string());
    }
    return static_cast<std::size_t>(it - indices_.begin());
  }

  bool subset_of(const ModeSet& other) const {
    return std::includes(other.indices_.begin(), other.indices_.end(),
                         indices_.begin(), indices_.end());
  }

  bool disjoint_from(const ModeSet& other) const {
    std::vector<int> tmp;
    std::set_intersection(indices_.begin(), indices_.end(),
                          other.indices_.begin(), other.indices_.end(),
                          std::back_inserter(tmp));
    return tmp.empty();
  }

  ModeSet union_with(const ModeSet& other) const {
    std::vector<int> tmp;
    std::set_union(indices_.begin(), indices_.end(), other.indices_.begin(),
                   other.indices_.end(), std::back_inserter(tmp));
    ModeSet out;
    out.indices_ = std::move(tmp);  // already sorted and unique
    return out;
  }

  bool operator==(const ModeSet& other) const {
    return indices_ == other.indices_;
  }
  bool operator!=(const ModeSet& other) const { return !(*this == other); }

  std::string to_string() const {
    std::ostringstream os;
    os << '{';
    for (std::size_t k = 0; k < indices_.size(); ++k) {
      if (k) os << ',';
      os << indices_[k];
    }
    os << '}';
    return os.str();
  }

 private:
  std::vector<int> indices_;
};

}  // namespace carex
