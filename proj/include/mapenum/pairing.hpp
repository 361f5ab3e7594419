#pragma once

#include <span>
#include <utility>
#include <vector>

namespace mapenum {

/// A fixed-point-free involution on {0, ..., ground_size-1}.
class Pairing {
 public:
  /// Throws PreconditionError unless `partner` is an involution without
  /// fixed points.
  explicit Pairing(std::vector<int> partner);

  static Pairing from_pairs(int ground_size, std::span<const std::pair<int, int>> pairs);

  int ground_size() const { return static_cast<int>(partner_.size()); }
  int partner(int i) const { return partner_[static_cast<std::size_t>(i)]; }
  std::span<const int> partners() const { return partner_; }

  /// Pairs {a, b} with a < b, sorted by a.
  std::vector<std::pair<int, int>> pairs() const;

  friend bool operator==(const Pairing&, const Pairing&) = default;

 private:
  std::vector<int> partner_;
};

/// Number of disjoint cycles of a permutation given in one-line form.
/// Throws PreconditionError if `perm` is not a bijection of its index range.
int cycle_count(std::span<const int> perm);

/// (outer o inner)(i) = outer[inner[i]].
std::vector<int> compose(std::span<const int> outer, std::span<const int> inner);

std::vector<int> inverse(std::span<const int> perm);

/// The ground set [p1, p2]: row 0 holds elements 0..p1-1 and row 1 holds
/// p1..p1+p2-1, each row in label order.
struct TwoRowGround {
  int p1 = 0;
  int p2 = 0;

  TwoRowGround(int p1, int p2);

  int size() const { return p1 + p2; }
  int row_length(int row) const { return row == 0 ? p1 : p2; }
  int index(int row, int position) const { return row == 0 ? position : p1 + position; }
  int row_of(int index) const { return index < p1 ? 0 : 1; }
  int position_of(int index) const { return index < p1 ? index : index - p1; }
  bool is_mixed(int a, int b) const { return row_of(a) != row_of(b); }

  /// One cycle per row: each element maps to the next label in its row.
  std::vector<int> canonical_cycle() const;
};

/// The single cycle (0, 1, ..., n-1).
std::vector<int> single_cycle(int n);

/// Number of cycles of mu o gamma^{-1}.
int face_count(const Pairing& mu, std::span<const int> gamma);

}  // namespace mapenum
