#include "modop/sparse_matrix.hpp"

#include <algorithm>
#include <istream>
#include <limits>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace modop {

SparseRationalMatrix::SparseRationalMatrix(int rows, int cols)
    : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix shape");
}

void SparseRationalMatrix::add(int row, int col, Rational value) {
  if (row < 0 || row >= rows_ || col < 0 || col >= cols_) {
    throw std::out_of_range("matrix index out of range");
  }
  value.canonicalize();
  if (value == 0) return;
  auto [it, fresh] = entries_.emplace(std::make_pair(row, col), value);
  if (!fresh) {
    it->second += value;
    if (it->second == 0) entries_.erase(it);
  }
}

void SparseRationalMatrix::set(int row, int col, Rational value) {
  if (row < 0 || row >= rows_ || col < 0 || col >= cols_) {
    throw std::out_of_range("matrix index out of range");
  }
  value.canonicalize();
  if (value == 0) {
    entries_.erase({row, col});
  } else {
    entries_[{row, col}] = value;
  }
}

Rational SparseRationalMatrix::at(int row, int col) const {
  auto it = entries_.find({row, col});
  return it == entries_.end() ? Rational(0) : it->second;
}

std::vector<Triplet> SparseRationalMatrix::triplets() const {
  std::vector<Triplet> out;
  out.reserve(entries_.size());
  for (const auto& [rc, v] : entries_) out.push_back({rc.first, rc.second, v});
  return out;
}

SparseRationalMatrix SparseRationalMatrix::transpose() const {
  SparseRationalMatrix t(cols_, rows_);
  for (const auto& [rc, v] : entries_) t.entries_[{rc.second, rc.first}] = v;
  return t;
}

SparseRationalMatrix multiply(const SparseRationalMatrix& a,
                              const SparseRationalMatrix& b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("matrix shapes do not compose");
  }
  std::vector<std::vector<std::pair<int, Rational>>> b_rows(b.rows());
  for (const auto& t : b.triplets()) b_rows[t.row].emplace_back(t.col, t.value);
  SparseRationalMatrix c(a.rows(), b.cols());
  for (const auto& t : a.triplets()) {
    for (const auto& [col, v] : b_rows[t.col]) c.add(t.row, col, t.value * v);
  }
  return c;
}

namespace {

using SparseRow = std::vector<std::pair<int, Integer>>;  // sorted by column

// Clears denominators and divides by the content.
SparseRow integer_row(const std::vector<std::pair<int, Rational>>& entries) {
  Integer l = 1;
  for (const auto& [c, v] : entries) l = lcm(l, Integer(v.get_den()));
  SparseRow row;
  Integer g = 0;
  for (const auto& [c, v] : entries) {
    Integer x = Integer(v.get_num()) * (l / v.get_den());
    g = gcd(g, x);
    row.emplace_back(c, std::move(x));
  }
  if (g > 1) {
    for (auto& [c, x] : row) x /= g;
  }
  return row;
}

void reduce_content(SparseRow& row) {
  Integer g = 0;
  for (const auto& [c, x] : row) {
    g = gcd(g, x);
    if (g == 1) return;
  }
  if (g > 1) {
    for (auto& [c, x] : row) x /= g;
  }
}

const Integer* find_entry(const SparseRow& row, int col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const auto& e, int c) { return e.first < c; });
  return (it != row.end() && it->first == col) ? &it->second : nullptr;
}

// row := p * row - r * pivot_row, eliminating the pivot column.
SparseRow eliminate(const SparseRow& row, const Integer& p, const SparseRow& pivot,
                    const Integer& r) {
  SparseRow out;
  out.reserve(row.size() + pivot.size());
  std::size_t i = 0, j = 0;
  while (i < row.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
      out.emplace_back(row[i].first, p * row[i].second);
      ++i;
    } else if (i == row.size() || pivot[j].first < row[i].first) {
      out.emplace_back(pivot[j].first, -r * pivot[j].second);
      ++j;
    } else {
      Integer x = p * row[i].second - r * pivot[j].second;
      if (x != 0) out.emplace_back(row[i].first, std::move(x));
      ++i;
      ++j;
    }
  }
  reduce_content(out);
  return out;
}

}  // namespace

int rank(const SparseRationalMatrix& m) {
  std::vector<std::vector<std::pair<int, Rational>>> raw(m.rows());
  for (const auto& t : m.triplets()) raw[t.row].emplace_back(t.col, t.value);
  std::vector<SparseRow> rows;
  for (auto& r : raw) {
    if (!r.empty()) rows.push_back(integer_row(r));
  }
  // column -> rows holding it
  std::vector<std::set<int>> col_rows(m.cols());
  for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
    for (const auto& [c, x] : rows[i]) col_rows[c].insert(i);
  }
  std::vector<char> active(rows.size(), 1);
  int remaining = static_cast<int>(rows.size());
  int rk = 0;
  while (remaining > 0) {
    // Markowitz: minimize (row count - 1) * (column count - 1), ties by the
    // smaller pivot magnitude.
    long best_cost = std::numeric_limits<long>::max();
    int best_row = -1, best_col = -1;
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (!active[i]) continue;
      if (rows[i].empty()) {
        active[i] = 0;
        --remaining;
        continue;
      }
      const long rc = static_cast<long>(rows[i].size()) - 1;
      for (const auto& [c, x] : rows[i]) {
        const long cost = rc * (static_cast<long>(col_rows[c].size()) - 1);
        if (cost < best_cost ||
            (cost == best_cost && best_row >= 0 &&
             abs(x) < abs(*find_entry(rows[best_row], best_col)))) {
          best_cost = cost;
          best_row = i;
          best_col = c;
        }
      }
    }
    if (best_row < 0) break;
    ++rk;
    const SparseRow pivot = rows[best_row];
    const Integer p = *find_entry(pivot, best_col);
    active[best_row] = 0;
    --remaining;
    for (const auto& [c, x] : pivot) col_rows[c].erase(best_row);
    const std::vector<int> targets(col_rows[best_col].begin(),
                                   col_rows[best_col].end());
    for (int i : targets) {
      const Integer r = *find_entry(rows[i], best_col);
      Integer g = gcd(p, r);
      for (const auto& [c, x] : rows[i]) col_rows[c].erase(i);
      rows[i] = eliminate(rows[i], p / g, pivot, r / g);
      for (const auto& [c, x] : rows[i]) col_rows[c].insert(i);
    }
  }
  return rk;
}

int dense_oracle_rank(const SparseRationalMatrix& m) {
  if (m.rows() > kDenseOracleCap || m.cols() > kDenseOracleCap) {
    throw std::length_error("dense oracle is limited to " +
                            std::to_string(kDenseOracleCap) + " rows and columns");
  }
  const int nr = m.rows();
  const int nc = m.cols();
  // common denominator per row
  std::vector<Integer> den(nr, 1);
  for (const auto& t : m.triplets()) den[t.row] = lcm(den[t.row], Integer(t.value.get_den()));
  std::vector<std::vector<Integer>> a(nr, std::vector<Integer>(nc, 0));
  for (const auto& t : m.triplets()) {
    a[t.row][t.col] = Integer(t.value.get_num()) * (den[t.row] / t.value.get_den());
  }
  Integer prev = 1;
  int r = 0;
  for (; r < std::min(nr, nc); ++r) {
    // full pivoting: largest magnitude in the trailing block
    int pi = -1, pj = -1;
    for (int i = r; i < nr; ++i) {
      for (int j = r; j < nc; ++j) {
        if (a[i][j] != 0 && (pi < 0 || abs(a[i][j]) > abs(a[pi][pj]))) {
          pi = i;
          pj = j;
        }
      }
    }
    if (pi < 0) break;
    std::swap(a[r], a[pi]);
    for (int i = 0; i < nr; ++i) std::swap(a[i][r], a[i][pj]);
    for (int i = r + 1; i < nr; ++i) {
      for (int j = r + 1; j < nc; ++j) {
        a[i][j] = (a[r][r] * a[i][j] - a[i][r] * a[r][j]) / prev;
      }
      a[i][r] = 0;
    }
    prev = a[r][r];
  }
  return r;
}

void write_triplets(std::ostream& out, const SparseRationalMatrix& m) {
  out << "%%MatrixMarket matrix coordinate rational general\n";
  out << m.rows() << " " << m.cols() << " " << m.nonzeros() << "\n";
  for (const auto& t : m.triplets()) {
    out << t.row + 1 << " " << t.col + 1 << " " << to_string(t.value) << "\n";
  }
}

SparseRationalMatrix read_triplets(std::istream& in) {
  std::string line;
  int lineno = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      if (!line.empty() && line[0] != '%') return true;
    }
    return false;
  };
  auto fail = [&](const std::string& what) {
    throw std::invalid_argument("line " + std::to_string(lineno) + ": " + what);
  };
  if (!next_line()) fail("missing size line");
  std::istringstream head(line);
  long rows = -1, cols = -1, nnz = -1;
  if (!(head >> rows >> cols >> nnz) || rows < 0 || cols < 0 || nnz < 0) {
    fail("expected 'rows cols nonzeros'");
  }
  SparseRationalMatrix m(static_cast<int>(rows), static_cast<int>(cols));
  std::set<std::pair<int, int>> seen;
  for (long k = 0; k < nnz; ++k) {
    if (!next_line()) fail("expected " + std::to_string(nnz) + " entries");
    std::istringstream ls(line);
    long r = 0, c = 0;
    std::string value;
    if (!(ls >> r >> c >> value)) fail("expected 'row col p/q'");
    if (r < 1 || r > rows || c < 1 || c > cols) fail("index out of range");
    if (!seen.insert({static_cast<int>(r), static_cast<int>(c)}).second) {
      fail("duplicate entry");
    }
    try {
      m.set(static_cast<int>(r - 1), static_cast<int>(c - 1), parse_rational(value));
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }
  }
  return m;
}

}  // namespace modop
