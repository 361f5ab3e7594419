#include "mapenum/arrays.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "mapenum/errors.hpp"

namespace mapenum {

namespace {

void validate_occupancy(int columns, const Occupancy& w, const char* who) {
  for (int row = 0; row < 2; ++row) {
    require(static_cast<int>(w[row].size()) == columns,
            std::string(who) + ": occupancy row " + std::to_string(row) + " must have K entries");
    for (int v : w[row]) require(v >= 0, std::string(who) + ": occupancy must be non-negative");
  }
}

void validate_marks(int columns, const std::array<ColumnSet, 2>& marks, const char* who) {
  for (int row = 0; row < 2; ++row) {
    require(!marks[row].empty(), std::string(who) + ": each row needs at least one marked column");
    for (int c : marks[row]) {
      require(c >= 0 && c < columns, std::string(who) + ": marked column out of range");
    }
  }
}

int row_sum(const std::vector<int>& row) { return std::accumulate(row.begin(), row.end(), 0); }

}  // namespace

PairedArray::PairedArray(int columns, Occupancy occupancy, std::array<ColumnSet, 2> marks, Pairing pairing)
    : columns_(columns), occupancy_(std::move(occupancy)), marks_(std::move(marks)), pairing_(std::move(pairing)) {
  require(columns_ >= 1, "PairedArray: K must be positive");
  validate_occupancy(columns_, occupancy_, "PairedArray");
  validate_marks(columns_, marks_, "PairedArray");
  for (int row = 0; row < 2; ++row) {
    row_size_[row] = row_sum(occupancy_[row]);
    cell_start_[row].resize(static_cast<std::size_t>(columns_));
  }
  require(pairing_.ground_size() == row_size_[0] + row_size_[1],
          "PairedArray: pairing must cover every slot");
  slot_column_.reserve(static_cast<std::size_t>(slot_count()));
  int next = 0;
  for (int row = 0; row < 2; ++row) {
    for (int col = 0; col < columns_; ++col) {
      cell_start_[row][static_cast<std::size_t>(col)] = next;
      for (int pos = 0; pos < this->occupancy(row, col); ++pos) slot_column_.push_back(col);
      next += this->occupancy(row, col);
    }
  }
}

int PairedArray::slot(int row, int column, int position) const {
  require(position >= 0 && position < occupancy(row, column), "PairedArray: slot position out of range");
  return cell_start_[row][static_cast<std::size_t>(column)] + position;
}

int PairedArray::mixed_count(int row, int column) const {
  int count = 0;
  for (int pos = 0; pos < occupancy(row, column); ++pos) count += is_mixed_slot(slot(row, column, pos)) ? 1 : 0;
  return count;
}

int PairedArray::mixed_pairs() const {
  int count = 0;
  for (int i = 0; i < row_size_[0]; ++i) count += is_mixed_slot(i) ? 1 : 0;
  return count;
}

int PairedArray::nonmixed_pairs(int row) const {
  int within = 0;
  for (int i = 0; i < slot_count(); ++i) {
    if (slot_row(i) == row && !is_mixed_slot(i)) ++within;
  }
  return within / 2;
}

ArrowedArray::ArrowedArray(PairedArray array, ColumnMap arrows) : array_(std::move(array)), arrows_(std::move(arrows)) {
  require(array_.is_vertical(), "ArrowedArray: every pair must be mixed");
  for (const auto& [tail, head] : arrows_) {
    require(tail >= 0 && tail < array_.columns() && head >= 0 && head < array_.columns(),
            "ArrowedArray: arrow endpoint out of range");
    require(!array_.is_marked(0, tail), "ArrowedArray: arrow-tail in a row-0 marked column");
  }
}

SubstructureGamma::SubstructureGamma(int columns, Occupancy occupancy, std::array<ColumnSet, 2> marks,
                                     ColumnMap arrows)
    : columns_(columns), occupancy_(std::move(occupancy)), marks_(std::move(marks)), arrows_(std::move(arrows)) {
  require(columns_ >= 1, "SubstructureGamma: K must be positive");
  validate_occupancy(columns_, occupancy_, "SubstructureGamma");
  validate_marks(columns_, marks_, "SubstructureGamma");
  vertices_ = row_sum(occupancy_[0]);
  require(row_sum(occupancy_[1]) == vertices_, "SubstructureGamma: both rows must hold s vertices");
  for (const auto& [tail, head] : arrows_) {
    require(tail >= 0 && tail < columns_ && head >= 0 && head < columns_,
            "SubstructureGamma: arrow endpoint out of range");
    require(!marks_[0].contains(tail), "SubstructureGamma: arrow-tail in a row-0 marked column");
  }
}

SubstructureOmega::SubstructureOmega(int columns, int marks_top, int marks_bottom, std::vector<int> occupancy)
    : columns_(columns), marks_top_(marks_top), marks_bottom_(marks_bottom), occupancy_(std::move(occupancy)) {
  require(columns_ >= 1, "SubstructureOmega: K must be positive");
  require(static_cast<int>(occupancy_.size()) == columns_, "SubstructureOmega: w must have K entries");
  for (int v : occupancy_) require(v >= 0, "SubstructureOmega: occupancy must be non-negative");
  require(marks_top_ >= 1 && marks_top_ <= columns_ && marks_bottom_ >= 1 && marks_bottom_ <= columns_,
          "SubstructureOmega: mark counts must lie in 1..K");
  vertices_ = row_sum(occupancy_);
}

int SubstructureOmega::filled_columns() const {
  return static_cast<int>(std::count_if(occupancy_.begin(), occupancy_.end(), [](int v) { return v > 0; }));
}

bool check_nonempty(const PairedArray& a) {
  for (int col = 0; col < a.columns(); ++col) {
    const bool has_object = a.occupancy(0, col) > 0 || a.occupancy(1, col) > 0 || a.is_marked(0, col) ||
                            a.is_marked(1, col);
    if (!has_object) return false;
  }
  return true;
}

bool check_nonempty(const ArrowedArray& a) { return check_nonempty(substructure_of(a)); }

bool check_nonempty(const SubstructureGamma& g) {
  for (int col = 0; col < g.columns(); ++col) {
    const bool has_object = g.occupancy(0, col) > 0 || g.occupancy(1, col) > 0 || g.is_marked(0, col) ||
                            g.is_marked(1, col) || g.has_arrow_tail(col);
    if (!has_object) return false;
  }
  return true;
}

bool mixed_vertex_balance(const PairedArray& a) {
  for (int col = 0; col < a.columns(); ++col) {
    if (a.mixed_count(0, col) != a.mixed_count(1, col)) return false;
  }
  return true;
}

bool vertex_balance(const Occupancy& w) { return w[0] == w[1]; }

bool check_balance(const PairedArray& a) { return mixed_vertex_balance(a); }
bool check_balance(const ArrowedArray& a) { return vertex_balance(a.array().occupancy()); }
bool check_balance(const SubstructureGamma& g) { return vertex_balance(g.occupancy()); }

ColumnMap forest_function(const PairedArray& a, int row) {
  require(row == 0 || row == 1, "forest_function: row must be 0 or 1");
  ColumnMap psi;
  for (int col = 0; col < a.columns(); ++col) {
    const int w = a.occupancy(row, col);
    if (w == 0 || a.is_marked(row, col)) continue;
    const int rightmost = a.slot(row, col, w - 1);
    psi[col] = a.slot_column(a.pairing().partner(rightmost));
  }
  return psi;
}

ColumnMap forest_function(const ArrowedArray& a, int row) {
  ColumnMap psi = forest_function(a.array(), row);
  if (row == 0) {
    for (const auto& [tail, head] : a.arrows()) psi[tail] = head;
  }
  return psi;
}

bool is_rooted_forest(const ColumnMap& psi, const ColumnSet& roots) {
  const std::size_t limit = psi.size() + 1;
  for (const auto& [start, first] : psi) {
    if (roots.contains(start)) continue;
    int current = first;
    bool rooted = roots.contains(current);
    for (std::size_t step = 1; !rooted && step <= limit; ++step) {
      auto it = psi.find(current);
      if (it == psi.end()) return false;
      current = it->second;
      rooted = roots.contains(current);
    }
    if (!rooted) return false;
  }
  return true;
}

bool check_forest(const PairedArray& a) {
  return is_rooted_forest(forest_function(a, 0), a.marks(0)) && is_rooted_forest(forest_function(a, 1), a.marks(1));
}

bool check_forest(const ArrowedArray& a) {
  return is_rooted_forest(forest_function(a, 0), a.array().marks(0)) &&
         is_rooted_forest(forest_function(a, 1), a.array().marks(1));
}

bool check_full(const ArrowedArray& a) { return check_full(substructure_of(a)); }

bool check_full(const SubstructureGamma& g) {
  for (int col = 0; col < g.columns(); ++col) {
    if (g.occupancy(0, col) == 0 && !g.is_marked(0, col) && !g.has_arrow_tail(col)) return false;
    if (g.occupancy(1, col) == 0 && !g.is_marked(1, col)) return false;
  }
  return true;
}

bool has_critical_vertex(const SubstructureGamma& g, int row, int column) {
  if (g.occupancy(row, column) == 0 || g.is_marked(row, column)) return false;
  return row != 0 || !g.has_arrow_tail(column);
}

std::set<std::pair<int, int>> critical_vertices(const SubstructureGamma& g) {
  std::set<std::pair<int, int>> out;
  for (int row = 0; row < 2; ++row) {
    for (int col = 0; col < g.columns(); ++col) {
      if (has_critical_vertex(g, row, col)) out.emplace(row, col);
    }
  }
  return out;
}

bool has_arrow_cycle(const SubstructureGamma& g) {
  const ColumnMap& phi = g.arrows();
  for (const auto& [start, head] : phi) {
    ColumnSet visited{start};
    int current = head;
    while (true) {
      if (!visited.insert(current).second) return true;
      auto it = phi.find(current);
      if (it == phi.end()) break;
      current = it->second;
    }
  }
  return false;
}

bool is_irreducible(const SubstructureGamma& g) {
  for (const auto& [tail, head] : g.arrows()) {
    if (g.is_marked(0, head) || g.has_arrow_tail(head)) return false;
  }
  return !has_arrow_cycle(g);
}

ColumnTally classify_columns(const SubstructureGamma& g) {
  require(is_irreducible(g), "classify_columns: substructure must be irreducible");
  ColumnTally tally;
  tally.type_of_column.resize(static_cast<std::size_t>(g.columns()));
  auto base_type = [&](int col) {
    const bool top = g.is_marked(0, col);
    const bool bottom = g.is_marked(1, col);
    if (!top && !bottom) return ColumnType::A;
    if (top && !bottom) return ColumnType::B;
    if (!top && bottom) return ColumnType::C;
    return ColumnType::D;
  };
  for (int col = 0; col < g.columns(); ++col) {
    ColumnType type = base_type(col);
    if (auto it = g.arrows().find(col); it != g.arrows().end()) {
      // Heads of an irreducible substructure are unmarked in row 0 and carry
      // no tail, so they are of type A or C.
      const bool head_is_a = base_type(it->second) == ColumnType::A;
      const bool bottom_marked = g.is_marked(1, col);
      if (head_is_a) {
        type = bottom_marked ? ColumnType::ATilde : ColumnType::ABar;
      } else {
        type = bottom_marked ? ColumnType::CTilde : ColumnType::CBar;
      }
    }
    const auto index = static_cast<std::size_t>(type);
    tally.type_of_column[static_cast<std::size_t>(col)] = type;
    ++tally.columns[index];
    for (int row = 0; row < 2; ++row) tally.vertices[row][index] += g.occupancy(row, col);
  }
  return tally;
}

SubstructureGamma substructure_of(const ArrowedArray& a) {
  const PairedArray& p = a.array();
  return SubstructureGamma(p.columns(), p.occupancy(), {p.marks(0), p.marks(1)}, a.arrows());
}

SubstructureGamma permute_columns(const SubstructureGamma& g, std::span<const int> perm) {
  require(static_cast<int>(perm.size()) == g.columns(), "permute_columns: permutation size mismatch");
  (void)cycle_count(perm);
  Occupancy w{std::vector<int>(perm.size()), std::vector<int>(perm.size())};
  std::array<ColumnSet, 2> marks;
  ColumnMap arrows;
  for (int row = 0; row < 2; ++row) {
    for (int col = 0; col < g.columns(); ++col) {
      w[row][static_cast<std::size_t>(perm[static_cast<std::size_t>(col)])] = g.occupancy(row, col);
    }
    for (int col : g.marks(row)) marks[row].insert(perm[static_cast<std::size_t>(col)]);
  }
  for (const auto& [tail, head] : g.arrows()) {
    arrows[perm[static_cast<std::size_t>(tail)]] = perm[static_cast<std::size_t>(head)];
  }
  return SubstructureGamma(g.columns(), std::move(w), std::move(marks), std::move(arrows));
}

PairedArray permute_columns(const PairedArray& a, std::span<const int> perm) {
  require(static_cast<int>(perm.size()) == a.columns(), "permute_columns: permutation size mismatch");
  (void)cycle_count(perm);
  Occupancy w{std::vector<int>(perm.size()), std::vector<int>(perm.size())};
  std::array<ColumnSet, 2> marks;
  for (int row = 0; row < 2; ++row) {
    for (int col = 0; col < a.columns(); ++col) {
      w[row][static_cast<std::size_t>(perm[static_cast<std::size_t>(col)])] = a.occupancy(row, col);
    }
    for (int col : a.marks(row)) marks[row].insert(perm[static_cast<std::size_t>(col)]);
  }
  // Slot numbering of the permuted array, then carry the pairing across.
  std::array<std::vector<int>, 2> start;
  int next = 0;
  for (int row = 0; row < 2; ++row) {
    start[row].resize(perm.size());
    for (std::size_t col = 0; col < perm.size(); ++col) {
      start[row][col] = next;
      next += w[row][col];
    }
  }
  std::vector<int> relabel(static_cast<std::size_t>(a.slot_count()));
  for (int row = 0; row < 2; ++row) {
    for (int col = 0; col < a.columns(); ++col) {
      const int target = perm[static_cast<std::size_t>(col)];
      for (int pos = 0; pos < a.occupancy(row, col); ++pos) {
        relabel[static_cast<std::size_t>(a.slot(row, col, pos))] = start[row][static_cast<std::size_t>(target)] + pos;
      }
    }
  }
  std::vector<int> partner(relabel.size());
  for (std::size_t i = 0; i < relabel.size(); ++i) {
    partner[static_cast<std::size_t>(relabel[i])] = relabel[static_cast<std::size_t>(a.pairing().partner(static_cast<int>(i)))];
  }
  return PairedArray(a.columns(), std::move(w), std::move(marks), Pairing(std::move(partner)));
}

}  // namespace mapenum
