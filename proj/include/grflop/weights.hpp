#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "grflop/common.hpp"

namespace grflop {

/// A weakly decreasing sequence of nonnegative integers. Trailing zeros are
/// dropped on construction, so the empty partition is the only size-0 value.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const { return size_; }
  bool empty() const { return parts_.empty(); }

  /// Row i (0-based); rows past the length are 0.
  int operator[](int i) const { return i < length() ? parts_[i] : 0; }

  bool fits_in_box(int rows, int cols) const;
  bool contains(const Partition& other) const;
  Partition conjugate() const;
  /// Complement inside the rows x cols box, rotated by 180 degrees.
  Partition complement(int rows, int cols) const;

  auto operator<=>(const Partition&) const = default;

  /// "2,1"; the empty partition prints as "0".
  std::string to_string() const;
  /// Accepts "2,1", "0" and "".
  static Partition parse(std::string_view text);

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Dominant weight of GL_r: a weakly decreasing integer sequence of fixed
/// length r > 0. Entries may be negative.
class GLWeight {
 public:
  explicit GLWeight(std::vector<int> entries);

  static GLWeight zero(int rank) { return GLWeight(std::vector<int>(rank, 0)); }
  /// Pads with zeros; throws if the partition has more than `rank` rows.
  static GLWeight from_partition(const Partition& p, int rank);

  const std::vector<int>& entries() const { return entries_; }
  int rank() const { return static_cast<int>(entries_.size()); }
  int operator[](int i) const { return entries_[i]; }
  int first() const { return entries_.front(); }
  int last() const { return entries_.back(); }
  int sum() const;
  bool is_constant() const { return first() == last(); }

  GLWeight shifted(int c) const;
  /// Weight of the dual representation: negate and reverse.
  GLWeight dual() const;
  GLWeight scaled(int k) const;
  /// Requires last() >= 0.
  Partition to_partition() const;

  auto operator<=>(const GLWeight&) const = default;

  std::string to_string() const;  // "[1,0,-1]"

 private:
  std::vector<int> entries_;
};

using LrExpansion = std::map<Partition, std::int64_t>;

/// All nu with at most max_rows rows and c^nu_{lambda,mu} != 0.
LrExpansion lr_coefficients(const Partition& lambda, const Partition& mu, int max_rows);
std::int64_t lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

/// Dimension of the GL_n irreducible with highest weight `weight`.
std::int64_t weyl_dimension(const GLWeight& weight, int n);

/// Every (l_1, ..., l_n) with l_i >= 0 summing to l, in lexicographically
/// decreasing order.
std::vector<std::vector<int>> sym_power_compositions(int l, int n);

/// Partitions inside the rows x cols box ordered by size, then
/// lexicographically decreasing within a size. This is the Schubert basis
/// order used throughout.
std::vector<Partition> partitions_in_box(int rows, int cols);

/// Partitions of `size` with at most `max_rows` rows (any width).
std::vector<Partition> partitions_of(int size, int max_rows);

namespace detail {
LrExpansion lr_coefficients_uncached(const Partition& lambda, const Partition& mu, int max_rows);
}

}  // namespace grflop
