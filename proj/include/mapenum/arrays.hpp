#pragma once

#include <array>
#include <map>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "mapenum/pairing.hpp"

namespace mapenum {

// Rows are indexed 0 (top, carries the arrows) and 1 (bottom); columns are
// indexed 0..K-1 throughout.

using ColumnSet = std::set<int>;
/// Partial column -> column association (arrows, forest functions).
using ColumnMap = std::map<int, int>;
using Occupancy = std::array<std::vector<int>, 2>;

/// 2 x K array of cells holding ordered vertex slots, per-row marked columns,
/// and a pairing on all slots. Slots are numbered row 0 first, each row in
/// column order and left to right within a cell.
class PairedArray {
 public:
  PairedArray(int columns, Occupancy occupancy, std::array<ColumnSet, 2> marks, Pairing pairing);

  int columns() const { return columns_; }
  int occupancy(int row, int column) const { return occupancy_[row][static_cast<std::size_t>(column)]; }
  const std::vector<int>& row_occupancy(int row) const { return occupancy_[row]; }
  const Occupancy& occupancy() const { return occupancy_; }
  const ColumnSet& marks(int row) const { return marks_[row]; }
  bool is_marked(int row, int column) const { return marks_[row].contains(column); }
  const Pairing& pairing() const { return pairing_; }

  int row_size(int row) const { return row_size_[row]; }
  int slot_count() const { return row_size_[0] + row_size_[1]; }
  /// Linear slot of the `position`-th vertex (from the left) in cell (row, column).
  int slot(int row, int column, int position) const;
  int slot_row(int slot) const { return slot < row_size_[0] ? 0 : 1; }
  int slot_column(int slot) const { return slot_column_[static_cast<std::size_t>(slot)]; }

  bool is_mixed_slot(int slot) const { return slot_row(slot) != slot_row(pairing_.partner(slot)); }
  /// Number of vertices in cell (row, column) whose partner lies in the other row.
  int mixed_count(int row, int column) const;
  /// Number of mixed pairs (s).
  int mixed_pairs() const;
  /// Number of within-row pairs in `row` (q_row).
  int nonmixed_pairs(int row) const;
  bool is_vertical() const { return mixed_pairs() * 2 == slot_count(); }

 private:
  int columns_;
  Occupancy occupancy_;
  std::array<ColumnSet, 2> marks_;
  Pairing pairing_;
  std::array<int, 2> row_size_{};
  std::array<std::vector<int>, 2> cell_start_;
  std::vector<int> slot_column_;
};

/// A vertical paired array together with arrows drawn above row 0.
class ArrowedArray {
 public:
  ArrowedArray(PairedArray array, ColumnMap arrows);

  const PairedArray& array() const { return array_; }
  const ColumnMap& arrows() const { return arrows_; }
  int columns() const { return array_.columns(); }
  bool has_arrow_tail(int column) const { return arrows_.contains(column); }

 private:
  PairedArray array_;
  ColumnMap arrows_;
};

/// Constraint record (w, R_0, R_1, phi): occupancy, marks and arrows fixed,
/// vertex pairing free.
class SubstructureGamma {
 public:
  SubstructureGamma(int columns, Occupancy occupancy, std::array<ColumnSet, 2> marks, ColumnMap arrows = {});

  int columns() const { return columns_; }
  /// Vertices per row.
  int vertices() const { return vertices_; }
  int occupancy(int row, int column) const { return occupancy_[row][static_cast<std::size_t>(column)]; }
  const Occupancy& occupancy() const { return occupancy_; }
  const ColumnSet& marks(int row) const { return marks_[row]; }
  bool is_marked(int row, int column) const { return marks_[row].contains(column); }
  const ColumnMap& arrows() const { return arrows_; }
  bool has_arrow_tail(int column) const { return arrows_.contains(column); }

  friend bool operator==(const SubstructureGamma&, const SubstructureGamma&) = default;

 private:
  int columns_;
  Occupancy occupancy_;
  std::array<ColumnSet, 2> marks_;
  ColumnMap arrows_;
  int vertices_ = 0;
};

/// Balanced occupancy vector w with mark counts; marks and pairings free.
class SubstructureOmega {
 public:
  SubstructureOmega(int columns, int marks_top, int marks_bottom, std::vector<int> occupancy);

  int columns() const { return columns_; }
  int marks_top() const { return marks_top_; }
  int marks_bottom() const { return marks_bottom_; }
  const std::vector<int>& occupancy() const { return occupancy_; }
  int vertices() const { return vertices_; }
  /// Number of columns holding at least one vertex.
  int filled_columns() const;

  friend bool operator==(const SubstructureOmega&, const SubstructureOmega&) = default;

 private:
  int columns_;
  int marks_top_;
  int marks_bottom_;
  std::vector<int> occupancy_;
  int vertices_ = 0;
};

enum class ColumnType { A, ABar, ATilde, B, C, CBar, CTilde, D };
inline constexpr std::size_t kColumnTypeCount = 8;

/// Column-type census of an irreducible substructure.
struct ColumnTally {
  std::array<int, kColumnTypeCount> columns{};
  /// vertices[row][type]: total vertices in that row over columns of that type.
  std::array<std::array<long, kColumnTypeCount>, 2> vertices{};
  std::vector<ColumnType> type_of_column;

  int count(ColumnType t) const { return columns[static_cast<std::size_t>(t)]; }
  long in_row(int row, ColumnType t) const { return vertices[row][static_cast<std::size_t>(t)]; }

  friend bool operator==(const ColumnTally&, const ColumnTally&) = default;
};

// Non-empty: every column holds a vertex, a mark, or (arrowed) an arrow-tail.
bool check_nonempty(const PairedArray& a);
bool check_nonempty(const ArrowedArray& a);
bool check_nonempty(const SubstructureGamma& g);

/// Paired arrays compare mixed vertices per column.
bool mixed_vertex_balance(const PairedArray& a);
/// Arrowed arrays and substructures compare all vertices per column.
bool vertex_balance(const Occupancy& w);

bool check_balance(const PairedArray& a);
bool check_balance(const ArrowedArray& a);
bool check_balance(const SubstructureGamma& g);

/// Forest condition function of `row`: for each unmarked column with a
/// vertex, the column of the partner of its rightmost vertex. For arrowed
/// arrays, arrows override this in row 0.
ColumnMap forest_function(const PairedArray& a, int row);
ColumnMap forest_function(const ArrowedArray& a, int row);

/// True iff iterating `psi` from every column of its domain reaches `roots`
/// without revisiting a column or leaving the domain.
bool is_rooted_forest(const ColumnMap& psi, const ColumnSet& roots);

bool check_forest(const PairedArray& a);
bool check_forest(const ArrowedArray& a);

/// Every cell (not just every column) holds an object.
bool check_full(const ArrowedArray& a);
bool check_full(const SubstructureGamma& g);

/// Cells whose rightmost vertex is critical, as (row, column).
std::set<std::pair<int, int>> critical_vertices(const SubstructureGamma& g);
bool has_critical_vertex(const SubstructureGamma& g, int row, int column);

bool has_arrow_cycle(const SubstructureGamma& g);
bool is_irreducible(const SubstructureGamma& g);

/// Throws PreconditionError unless `g` is irreducible.
ColumnTally classify_columns(const SubstructureGamma& g);

/// Substructure realised by an arrowed array.
SubstructureGamma substructure_of(const ArrowedArray& a);

/// Relabels column j as perm[j].
SubstructureGamma permute_columns(const SubstructureGamma& g, std::span<const int> perm);
PairedArray permute_columns(const PairedArray& a, std::span<const int> perm);

}  // namespace mapenum
