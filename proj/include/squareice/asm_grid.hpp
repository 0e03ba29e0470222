#pragma once

#include <Eigen/Core>

#include <array>
#include <functional>
#include <string>
#include <vector>

namespace squareice {

using GridI = Eigen::MatrixXi;

/// Alternating sign matrix: square over {-1,0,1}, row/column prefix sums in
/// {0,1}, full row/column sums equal to 1.
class Asm {
public:
  /// Throws std::invalid_argument with a diagnostic naming the first violated
  /// row or column.
  explicit Asm(GridI entries);

  /// Empty string if valid, otherwise the diagnostic.
  static std::string check(const GridI& entries);

  int size() const { return n_; }
  int at(int row, int col) const { return a_(row, col); }  // 0-based
  const GridI& entries() const { return a_; }

  Asm transposed() const;
  Asm rotated180() const;

  friend bool operator==(const Asm& x, const Asm& y) { return x.a_ == y.a_; }

private:
  struct Unchecked {};
  Asm(GridI entries, Unchecked) : n_(static_cast<int>(entries.rows())), a_(std::move(entries)) {}
  friend void enumerate_asms(int, const std::function<void(const Asm&)>&);

  int n_;
  GridI a_;
};

/// Vertex-type grid of the corresponding square-ice configuration with domain
/// wall boundary conditions. Types 1,2 carry weight a; 3,4 weight b; 5,6
/// weight c; entry 1 maps to type 5 and entry -1 to type 6.
struct VertexGrid {
  int n = 0;
  GridI type;                       // values 1..6
  std::array<long, 6> counts{};     // counts[t-1] = number of type-t vertices
};

VertexGrid to_vertex_grid(const Asm& a);

/// Boundary statistics; positions are 1-based.
struct AsmStats {
  long minus_ones = 0;             // number of -1 entries
  int top_row_col_from_right = 0;  // position of the 1 in the first row, from the right
  int bottom_row_col_from_right = 0;
  int first_col_row = 0;           // row of the 1 in the first column, from the top
  int last_col_row = 0;
};

AsmStats stats(const Asm& a);

/// Visits every n x n alternating sign matrix exactly once, in a fixed
/// deterministic order (row-by-row backtracking over column prefix sums).
void enumerate_asms(int n, const std::function<void(const Asm&)>& visit);

std::vector<Asm> all_asms(int n);
unsigned long count_asms(int n);

// Text format: n lines of space-separated entries. JSON: array of arrays.
std::string to_text(const Asm& a);
Asm asm_from_text(const std::string& text);
std::string to_json(const Asm& a);
Asm asm_from_json(const std::string& text);

}  // namespace squareice
