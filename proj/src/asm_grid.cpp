#include "squareice/asm_grid.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace squareice {

namespace {

std::string check_line(const GridI& m, bool row, int index) {
  const int n = static_cast<int>(m.rows());
  int sum = 0;
  for (int k = 0; k < n; ++k) {
    const int v = row ? m(index, k) : m(k, index);
    if (v < -1 || v > 1)
      return (row ? "row " : "column ") + std::to_string(index + 1) + " holds an entry outside {-1,0,1}";
    sum += v;
    if (sum < 0 || sum > 1)
      return (row ? "row " : "column ") + std::to_string(index + 1) + " violates the alternating sign rule";
  }
  if (sum != 1) return (row ? "row " : "column ") + std::to_string(index + 1) + " does not sum to 1";
  return {};
}

}  // namespace

std::string Asm::check(const GridI& m) {
  if (m.rows() != m.cols()) return "matrix is not square";
  if (m.rows() == 0) return "matrix is empty";
  for (int i = 0; i < m.rows(); ++i)
    if (auto err = check_line(m, true, i); !err.empty()) return err;
  for (int j = 0; j < m.cols(); ++j)
    if (auto err = check_line(m, false, j); !err.empty()) return err;
  return {};
}

Asm::Asm(GridI entries) : n_(static_cast<int>(entries.rows())), a_(std::move(entries)) {
  if (auto err = check(a_); !err.empty()) throw std::invalid_argument("not an alternating sign matrix: " + err);
}

Asm Asm::transposed() const {
  GridI t = a_.transpose();
  return Asm(std::move(t), Unchecked{});
}

Asm Asm::rotated180() const {
  GridI t(n_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) t(i, j) = a_(n_ - 1 - i, n_ - 1 - j);
  return Asm(std::move(t), Unchecked{});
}

VertexGrid to_vertex_grid(const Asm& a) {
  const int n = a.size();
  VertexGrid g;
  g.n = n;
  g.type.resize(n, n);
  std::vector<int> colsum(n, 0);  // column prefix sums above the current row
  for (int i = 0; i < n; ++i) {
    int rowsum = 0;  // row prefix sum left of the current column
    for (int j = 0; j < n; ++j) {
      const int v = a.at(i, j);
      int t;
      if (v == 1) {
        t = 5;
      } else if (v == -1) {
        t = 6;
      } else {
        // Corner-sum rule: the vertical line through this vertex is occupied
        // iff the column prefix sum is 0, the horizontal one iff the row
        // prefix sum is 0.
        const bool vertical = colsum[j] == 0;
        const bool horizontal = rowsum == 0;
        if (vertical && horizontal)
          t = 1;
        else if (!vertical && !horizontal)
          t = 2;
        else if (vertical)
          t = 3;
        else
          t = 4;
      }
      g.type(i, j) = t;
      ++g.counts[t - 1];
      colsum[j] += v;
      rowsum += v;
    }
  }
  return g;
}

AsmStats stats(const Asm& a) {
  const int n = a.size();
  AsmStats s;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (a.at(i, j) == -1) ++s.minus_ones;
  for (int j = 0; j < n; ++j) {
    if (a.at(0, j) == 1) s.top_row_col_from_right = n - j;
    if (a.at(n - 1, j) == 1) s.bottom_row_col_from_right = n - j;
  }
  for (int i = 0; i < n; ++i) {
    if (a.at(i, 0) == 1) s.first_col_row = i + 1;
    if (a.at(i, n - 1) == 1) s.last_col_row = i + 1;
  }
  return s;
}

void enumerate_asms(int n, const std::function<void(const Asm&)>& visit) {
  if (n < 1) throw std::invalid_argument("enumerate_asms: size must be positive");
  // Local type so it shares this friend function's access to Asm internals.
  struct Enumerator {
    int n;
    GridI grid;
    std::vector<int> colsum;
    const std::function<void(const Asm&)>& visit;

    // Extends the current row from column j with row prefix sum `prev`.
    void extend_row(int row, int j, int prev) {
      if (j == n) {
        if (prev != 1) return;
        next_row(row + 1);
        return;
      }
      for (int cur = 0; cur <= 1; ++cur) {
        const int entry = cur - prev;
        const int cs = colsum[j] + entry;
        if (cs < 0 || cs > 1) continue;
        grid(row, j) = entry;
        colsum[j] = cs;
        extend_row(row, j + 1, cur);
        colsum[j] -= entry;
      }
    }

    void next_row(int row) {
      if (row == n) {
        // Column prefix sums are confined to {0,1} throughout and total n
        // here, so every column has closed at exactly 1: the grid is valid.
        visit(Asm(grid, Asm::Unchecked{}));
        return;
      }
      extend_row(row, 0, 0);
    }
  };
  Enumerator e{n, GridI::Zero(n, n), std::vector<int>(n, 0), visit};
  e.next_row(0);
}

std::vector<Asm> all_asms(int n) {
  std::vector<Asm> out;
  enumerate_asms(n, [&](const Asm& a) { out.push_back(a); });
  return out;
}

unsigned long count_asms(int n) {
  unsigned long c = 0;
  enumerate_asms(n, [&](const Asm&) { ++c; });
  return c;
}

std::string to_text(const Asm& a) {
  std::ostringstream out;
  for (int i = 0; i < a.size(); ++i) {
    for (int j = 0; j < a.size(); ++j) {
      if (j) out << ' ';
      out << a.at(i, j);
    }
    out << '\n';
  }
  return out.str();
}

Asm asm_from_text(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::vector<int>> rows;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<int> row;
    int v;
    while (ls >> v) row.push_back(v);
    if (!ls.eof()) throw std::invalid_argument("asm_from_text: malformed entry in line " + std::to_string(rows.size() + 1));
    if (!row.empty()) rows.push_back(std::move(row));
  }
  if (rows.empty()) throw std::invalid_argument("asm_from_text: no rows");
  GridI m(rows.size(), rows[0].size());
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows[0].size()) throw std::invalid_argument("asm_from_text: ragged rows");
    for (size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  }
  return Asm(std::move(m));
}

std::string to_json(const Asm& a) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < a.size(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < a.size(); ++j) row.push_back(a.at(i, j));
    rows.push_back(std::move(row));
  }
  return rows.dump();
}

Asm asm_from_json(const std::string& text) {
  const auto rows = nlohmann::json::parse(text);
  if (!rows.is_array() || rows.empty()) throw std::invalid_argument("asm_from_json: expected an array of arrays");
  GridI m(rows.size(), rows[0].size());
  for (size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i].is_array() || rows[i].size() != rows[0].size())
      throw std::invalid_argument("asm_from_json: ragged rows");
    for (size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j].get<int>();
  }
  return Asm(std::move(m));
}

}  // namespace squareice
