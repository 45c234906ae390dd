#include "iml/gl2/gl2.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <sstream>
#include <unordered_set>

#include "iml/core/error.hpp"
#include "iml/core/random.hpp"

namespace iml::gl2 {

// ---- Matrices ------------------------------------------------------------------

Gf2Matrix::Gf2Matrix(int n) : n_(n), words_((n + 63) / 64), data_(static_cast<std::size_t>(n) * ((n + 63) / 64), 0) {
  if (n < 0) fail(ErrorCode::kInvalidArgument, "negative matrix size");
}

Gf2Matrix Gf2Matrix::identity(int n) {
  Gf2Matrix m(n);
  for (int i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

Gf2Matrix Gf2Matrix::from_key(int n, std::uint64_t key) {
  if (n > 8) fail(ErrorCode::kTooLarge, "packed keys need n <= 8");
  Gf2Matrix m(n);
  const std::uint64_t row_mask = (std::uint64_t{1} << n) - 1;
  for (int i = 0; i < n; ++i) m.data_[i] = (key >> (i * n)) & row_mask;
  return m;
}

void Gf2Matrix::set(int i, int j, bool v) {
  std::uint64_t& w = data_[static_cast<std::size_t>(i) * words_ + j / 64];
  const std::uint64_t b = std::uint64_t{1} << (j % 64);
  w = v ? (w | b) : (w & ~b);
}

void Gf2Matrix::add_row(int dst, int src) {
  for (int w = 0; w < words_; ++w)
    data_[static_cast<std::size_t>(dst) * words_ + w] ^= data_[static_cast<std::size_t>(src) * words_ + w];
}

std::uint64_t Gf2Matrix::key() const {
  if (n_ > 8) fail(ErrorCode::kTooLarge, "packed keys need n <= 8");
  std::uint64_t k = 0;
  for (int i = 0; i < n_; ++i) k |= data_[i] << (i * n_);
  return k;
}

bool Gf2Matrix::is_identity() const { return *this == identity(n_); }

int Gf2Matrix::rank() const {
  Gf2Matrix a = *this;
  int r = 0;
  for (int col = 0; col < n_ && r < n_; ++col) {
    int p = r;
    while (p < n_ && !a.get(p, col)) ++p;
    if (p == n_) continue;
    if (p != r) a.add_row(r, p);
    for (int i = r + 1; i < n_; ++i)
      if (a.get(i, col)) a.add_row(i, r);
    ++r;
  }
  return r;
}

Gf2Matrix Gf2Matrix::transpose() const {
  Gf2Matrix t(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (get(i, j)) t.set(j, i, true);
  return t;
}

Gf2Matrix Gf2Matrix::inverse() const {
  Gf2Matrix a = *this, inv = identity(n_);
  for (int col = 0; col < n_; ++col) {
    int p = col;
    while (p < n_ && !a.get(p, col)) ++p;
    if (p == n_) fail(ErrorCode::kSingular, "matrix is singular");
    if (p != col) {
      a.add_row(col, p);
      inv.add_row(col, p);
    }
    for (int i = 0; i < n_; ++i)
      if (i != col && a.get(i, col)) {
        a.add_row(i, col);
        inv.add_row(i, col);
      }
  }
  return inv;
}

Gf2Matrix Gf2Matrix::operator*(const Gf2Matrix& o) const {
  if (o.n_ != n_) fail(ErrorCode::kInvalidArgument, "size mismatch");
  Gf2Matrix c(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (get(i, j))
        for (int w = 0; w < words_; ++w) c.data_[static_cast<std::size_t>(i) * words_ + w] ^= o.row_word(j, w);
  return c;
}

Gf2Matrix Gf2Matrix::operator+(const Gf2Matrix& o) const {
  if (o.n_ != n_) fail(ErrorCode::kInvalidArgument, "size mismatch");
  Gf2Matrix c = *this;
  for (std::size_t w = 0; w < data_.size(); ++w) c.data_[w] ^= o.data_[w];
  return c;
}

std::string to_hex(const Gf2Matrix& m) {
  const int n = m.size(), digits = std::max(1, (n + 3) / 4);
  std::string out;
  for (int i = 0; i < n; ++i) {
    if (i) out += ',';
    std::string row(digits, '0');
    for (int d = 0; d < digits; ++d) {
      int v = 0;
      for (int b = 0; b < 4; ++b) {
        int j = 4 * d + b;
        if (j < n && m.get(i, j)) v |= 1 << b;
      }
      row[digits - 1 - d] = "0123456789abcdef"[v];
    }
    out += row;
  }
  return out;
}

Gf2Matrix from_hex(const std::string& s) {
  std::vector<std::string> rows;
  std::stringstream in(s);
  std::string part;
  while (std::getline(in, part, ',')) rows.push_back(part);
  const int n = static_cast<int>(rows.size());
  Gf2Matrix m(n);
  for (int i = 0; i < n; ++i) {
    const std::string& r = rows[i];
    for (std::size_t d = 0; d < r.size(); ++d) {
      char c = static_cast<char>(std::tolower(static_cast<unsigned char>(r[r.size() - 1 - d])));
      int v;
      if (c >= '0' && c <= '9') v = c - '0';
      else if (c >= 'a' && c <= 'f') v = c - 'a' + 10;
      else fail(ErrorCode::kParse, "bad hex digit in matrix row");
      for (int b = 0; b < 4; ++b) {
        int j = 4 * static_cast<int>(d) + b;
        if (!((v >> b) & 1)) continue;
        if (j >= n) fail(ErrorCode::kParse, "matrix row wider than the matrix");
        m.set(i, j, true);
      }
    }
  }
  return m;
}

Gf2Matrix random_invertible(int n, std::mt19937_64& rng) {
  while (true) {
    Gf2Matrix m(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (rng() & 1U) m.set(i, j, true);
    if (m.invertible()) return m;
  }
}

Gf2Matrix elementary(int n, int i, int j) {
  if (i == j || i < 0 || j < 0 || i >= n || j >= n) fail(ErrorCode::kInvalidArgument, "need distinct rows");
  Gf2Matrix e = Gf2Matrix::identity(n);
  e.set(i, j, true);
  return e;
}

bool replay_reduces(const Gf2Matrix& m, const std::vector<RowOp>& ops) {
  Gf2Matrix a = m;
  for (auto [i, j] : ops) {
    if (i == j || i < 0 || j < 0 || i >= m.size() || j >= m.size()) return false;
    a.add_row(i, j);
  }
  return a.is_identity();
}

// ---- Exact distances -------------------------------------------------------------

namespace {

constexpr std::uint8_t kUnreached = 255;

std::uint64_t apply_op(std::uint64_t key, int n, int i, int j) {
  const std::uint64_t row_mask = (std::uint64_t{1} << n) - 1;
  return key ^ (((key >> (j * n)) & row_mask) << (i * n));
}

// dist[key] for every key in GL(n,2), from a breadth-first search at the
// identity. Every generator is an involution, so this is also the distance
// from the matrix back to the identity.
const std::vector<std::uint8_t>& distance_table(int n) {
  static std::mutex lock;
  static std::vector<std::uint8_t> tables[6];
  if (n < 1 || n > 5) fail(ErrorCode::kTooLarge, "exact distances need n <= 5");
  std::lock_guard guard(lock);
  auto& t = tables[n];
  if (!t.empty()) return t;
  t.assign(std::size_t{1} << (n * n), kUnreached);
  std::vector<std::uint32_t> frontier{static_cast<std::uint32_t>(Gf2Matrix::identity(n).key())}, next;
  t[frontier[0]] = 0;
  for (std::uint8_t d = 1; !frontier.empty(); ++d) {
    next.clear();
    for (std::uint32_t k : frontier)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          if (i == j) continue;
          std::uint32_t k2 = static_cast<std::uint32_t>(apply_op(k, n, i, j));
          if (t[k2] == kUnreached) {
            t[k2] = d;
            next.push_back(k2);
          }
        }
    frontier.swap(next);
  }
  return t;
}

}  // namespace

Distance distance(const Gf2Matrix& m) {
  const int n = m.size();
  if (n == 0) return {};
  if (n > 5) fail(ErrorCode::kTooLarge, "exact distances need n <= 5");
  if (!m.invertible()) fail(ErrorCode::kSingular, "matrix is singular");
  const auto& t = distance_table(n);
  std::uint64_t k = m.key();
  Distance out;
  out.distance = t[k];
  for (int d = out.distance; d > 0; --d) {
    bool stepped = false;
    for (int i = 0; i < n && !stepped; ++i)
      for (int j = 0; j < n && !stepped; ++j)
        if (i != j && t[apply_op(k, n, i, j)] == d - 1) {
          k = apply_op(k, n, i, j);
          out.word.push_back({i, j});
          stepped = true;
        }
  }
  return out;
}

Diameter diameter(int n) {
  if (n < 1) fail(ErrorCode::kInvalidArgument, "n must be positive");
  const auto& t = distance_table(n);
  Diameter out;
  for (std::uint8_t d : t)
    if (d != kUnreached) out.diameter = std::max<int>(out.diameter, d);
  out.layers.assign(out.diameter + 1, 0);
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (t[k] == kUnreached) continue;
    ++out.layers[t[k]];
    if (t[k] == out.diameter) {
      ++out.extremal_count;
      if (out.extremal.size() < 1000) out.extremal.push_back(Gf2Matrix::from_key(n, k));
    }
  }
  return out;
}

// ---- Greedy reduction --------------------------------------------------------------

int block_width(int n) {
  int lg = n >= 1 ? std::bit_width(static_cast<unsigned>(n)) - 1 : 0;
  return std::max(1, lg - 2);
}

namespace {

// Clears everything below the diagonal, one block of columns at a time. Rows
// with equal patterns inside the block are first cancelled against the first
// row carrying that pattern.
void lower_phase(Gf2Matrix& a, std::vector<RowOp>& ops, int s) {
  const int n = a.size();
  auto op = [&](int i, int j) {
    a.add_row(i, j);
    ops.push_back({i, j});
  };
  std::vector<int> first(std::size_t{1} << s);
  for (int c0 = 0; c0 < n; c0 += s) {
    const int c1 = std::min(n, c0 + s);
    std::fill(first.begin(), first.end(), -1);
    for (int r = c0; r < n; ++r) {
      unsigned pattern = 0;
      for (int c = c0; c < c1; ++c) pattern |= static_cast<unsigned>(a.get(r, c)) << (c - c0);
      if (pattern == 0) continue;
      if (first[pattern] >= 0) op(r, first[pattern]);
      else first[pattern] = r;
    }
    for (int c = c0; c < c1; ++c) {
      bool diagonal = a.get(c, c);
      for (int r = c + 1; r < n; ++r) {
        if (!a.get(r, c)) continue;
        if (!diagonal) {
          op(c, r);
          diagonal = true;
        }
        op(r, c);
      }
      if (!diagonal) fail(ErrorCode::kSingular, "matrix is singular");
    }
  }
}

}  // namespace

Reduction greedy_reduce(const Gf2Matrix& m) {
  if (!m.invertible()) fail(ErrorCode::kSingular, "matrix is singular");
  const int n = m.size();
  Reduction out;
  out.block = block_width(n);
  Gf2Matrix a = m;
  lower_phase(a, out.ops, out.block);
  // a is now upper unitriangular. Reducing its transpose by F gives
  // F a^T = I, so a^{-1} = F^T: the transposed operations in reverse order.
  Gf2Matrix b = a.transpose();
  std::vector<RowOp> second;
  lower_phase(b, second, out.block);
  for (auto it = second.rbegin(); it != second.rend(); ++it) out.ops.push_back({it->second, it->first});
  out.count = static_cast<int>(out.ops.size());
  return out;
}

// ---- Hard instances ------------------------------------------------------------------

int rank_lower_bound(const Gf2Matrix& m) { return (m + Gf2Matrix::identity(m.size())).rank(); }

HardInstance hard_instance_search(int n, int budget, std::uint64_t seed, long long ball_limit) {
  if (n < 1) fail(ErrorCode::kInvalidArgument, "n must be positive");
  if (n > 256) fail(ErrorCode::kTooLarge, "hard-instance search needs n <= 256");
  std::vector<std::pair<std::string, Gf2Matrix>> candidates;
  Gf2Matrix reversal(n), shift(n), upper(n), lower(n);
  for (int i = 0; i < n; ++i) {
    reversal.set(i, n - 1 - i, true);
    shift.set(i, (i + 1) % n, true);
    for (int j = 0; j < n; ++j) {
      if (j >= i) upper.set(i, j, true);
      if (j <= i) lower.set(i, j, true);
    }
  }
  candidates.push_back({"reversal", reversal});
  candidates.push_back({"cyclic-shift", shift});
  candidates.push_back({"upper-ones", upper});
  candidates.push_back({"lower-ones", lower});
  for (int i = 0; i < budget; ++i) {
    auto rng = trial_rng(seed, static_cast<std::uint64_t>(i));
    candidates.push_back({"random", random_invertible(n, rng)});
  }

  // Exhausted ball around the identity (n <= 8 only: keys must fit a word).
  std::vector<std::unordered_set<std::uint64_t>> ball;
  int radius = -1;
  if (n > 5 && n <= 8) {
    ball.push_back({Gf2Matrix::identity(n).key()});
    radius = 0;
    long long total = 1;
    while (true) {
      std::unordered_set<std::uint64_t> next;
      for (std::uint64_t k : ball.back())
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            std::uint64_t k2 = apply_op(k, n, i, j);
            bool old = false;
            for (std::size_t d = ball.size() >= 2 ? ball.size() - 2 : 0; d < ball.size() && !old; ++d)
              old = ball[d].count(k2) > 0;
            if (!old) next.insert(k2);
          }
      if (total + static_cast<long long>(next.size()) > ball_limit || next.empty()) break;
      total += static_cast<long long>(next.size());
      ball.push_back(std::move(next));
      ++radius;
    }
  }

  HardInstance best;
  bool have = false;
  for (auto& [family, m] : candidates) {
    if (!m.invertible()) continue;
    HardInstance h;
    h.matrix = m;
    h.family = family;
    h.upper = greedy_reduce(m).count;
    if (n <= 5) {
      h.lower = distance(m).distance;
      h.certificate = "exact";
    } else {
      h.lower = rank_lower_bound(m);
      h.certificate = "rank(m+I)";
      if (radius >= 0) {
        std::uint64_t k = m.key();
        int depth = -1;
        for (int d = 0; d <= radius && depth < 0; ++d)
          if (ball[d].count(k)) depth = d;
        if (depth >= 0) {
          h.lower = depth;
          h.certificate = "exact";
        } else if (radius + 1 > h.lower) {
          h.lower = radius + 1;
          h.certificate = "ball radius " + std::to_string(radius);
        }
      }
    }
    if (!have || h.lower > best.lower || (h.lower == best.lower && h.upper > best.upper)) {
      best = h;
      have = true;
    }
  }
  return best;
}

}  // namespace iml::gl2
