#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace iml::gl2 {

// Square matrix over GF(2); bit j of row i is entry (i, j).
class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  explicit Gf2Matrix(int n);
  static Gf2Matrix identity(int n);
  static Gf2Matrix from_key(int n, std::uint64_t key);  // n <= 8, row i in bits [i n, i n + n)

  int size() const { return n_; }
  bool get(int i, int j) const { return (row_word(i, j / 64) >> (j % 64)) & 1U; }
  void set(int i, int j, bool v);
  std::uint64_t row_word(int i, int w) const { return data_[static_cast<std::size_t>(i) * words_ + w]; }
  void add_row(int dst, int src);  // row dst += row src
  std::uint64_t key() const;       // n <= 8

  bool is_identity() const;
  int rank() const;
  bool invertible() const { return rank() == n_; }
  Gf2Matrix transpose() const;
  Gf2Matrix inverse() const;  // Singular if not invertible
  Gf2Matrix operator*(const Gf2Matrix& o) const;
  Gf2Matrix operator+(const Gf2Matrix& o) const;
  bool operator==(const Gf2Matrix& o) const = default;

 private:
  int n_ = 0, words_ = 0;
  std::vector<std::uint64_t> data_;
};

// Rows as hex numbers (bit j = column j) joined by commas.
std::string to_hex(const Gf2Matrix& m);
Gf2Matrix from_hex(const std::string& s);

Gf2Matrix random_invertible(int n, std::mt19937_64& rng);
Gf2Matrix elementary(int n, int i, int j);  // I + e_i e_j^T

// A row operation (i, j) adds row j to row i.
using RowOp = std::pair<int, int>;
// Applies the operations in order; true when the result is the identity.
bool replay_reduces(const Gf2Matrix& m, const std::vector<RowOp>& ops);

struct Distance {
  int distance = 0;
  std::vector<RowOp> word;  // reduces m to the identity
};
// Exact, from a cached breadth-first table of all of GL(n,2). n <= 5.
Distance distance(const Gf2Matrix& m);

struct Reduction {
  int count = 0;
  std::vector<RowOp> ops;
  int block = 0;
};
// Block-column elimination with table lookup on row patterns of width
// max(1, floor(log2 n) - 2): lower phase on m, then the same on the transpose
// of the resulting upper triangular matrix, replayed as transposed operations.
Reduction greedy_reduce(const Gf2Matrix& m);
int block_width(int n);

struct Diameter {
  int diameter = 0;
  long long extremal_count = 0;
  std::vector<Gf2Matrix> extremal;  // at most 1000 listed
  std::vector<long long> layers;    // layers[d] = elements at distance d
};
Diameter diameter(int n);  // n <= 5

struct HardInstance {
  Gf2Matrix matrix;
  std::string family;
  int lower = 0;
  std::string certificate;  // "exact", "rank(m+I)" or "ball radius R"
  int upper = 0;            // greedy_reduce count
};
// Candidates from structured families and random draws; the best certified
// lower bound wins, ties broken by the greedy upper bound. Beyond n = 5 the
// ball around the identity is exhausted up to a radius with at most
// ball_limit elements.
HardInstance hard_instance_search(int n, int budget, std::uint64_t seed, long long ball_limit = 2000000);
int rank_lower_bound(const Gf2Matrix& m);  // rank(m + I)

}  // namespace iml::gl2
