#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "iml/core/error.hpp"
#include "iml/core/random.hpp"
#include "iml/designs/designs.hpp"

namespace iml::des {

namespace {

int order_of(const Square& a) {
  const int n = static_cast<int>(a.size());
  for (const auto& row : a)
    if (static_cast<int>(row.size()) != n) fail(ErrorCode::kInvalidArgument, "array must be square");
  if (n > 16) fail(ErrorCode::kTooLarge, "Latin squares up to order 16");
  return n;
}

// Symbols are bits 0..n-1 standing for 1..n.
class LatinSolver {
 public:
  explicit LatinSolver(const Square& forbidden) : n_(static_cast<int>(forbidden.size())) {
    full_ = low_mask(n_);
    row_.assign(n_, 0);
    col_.assign(n_, 0);
    ban_.assign(n_ * n_, 0);
    cell_.assign(n_ * n_, 0);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        if (forbidden[i][j] > 0) ban_[i * n_ + j] = bit(forbidden[i][j] - 1);
  }

  std::optional<Square> solve() {
    if (!fill(n_ * n_)) return std::nullopt;
    Square out(n_, std::vector<int>(n_));
    for (int c = 0; c < n_ * n_; ++c) out[c / n_][c % n_] = cell_[c];
    return out;
  }

 private:
  bool fill(int empty) {
    if (empty == 0) return true;
    int best = -1, best_count = n_ + 1;
    Mask best_avail = 0;
    for (int c = 0; c < n_ * n_; ++c) {
      if (cell_[c]) continue;
      Mask avail = full_ & ~row_[c / n_] & ~col_[c % n_] & ~ban_[c];
      int cnt = popcount(avail);
      if (cnt < best_count) {
        best = c;
        best_count = cnt;
        best_avail = avail;
        if (cnt <= 1) break;
      }
    }
    if (best_count == 0) return false;
    const int i = best / n_, j = best % n_;
    for (Mask rest = best_avail; rest; rest &= rest - 1) {
      int s = lowest_bit(rest);
      cell_[best] = s + 1;
      row_[i] |= bit(s);
      col_[j] |= bit(s);
      if (fill(empty - 1)) return true;
      row_[i] &= ~bit(s);
      col_[j] &= ~bit(s);
    }
    cell_[best] = 0;
    return false;
  }

  int n_;
  Mask full_ = 0;
  std::vector<Mask> row_, col_, ban_;
  std::vector<int> cell_;
};

// Least encoding over row and column permutations, symbols relabelled by first
// appearance in row-major order.
class ArrayCanon {
 public:
  explicit ArrayCanon(int n) : n_(n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do perms_.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
  }

  std::uint64_t key(const std::vector<int>& a) const {
    std::vector<int> best(n_ * n_, n_ + 1), cur(n_ * n_);
    for (const auto& rp : perms_)
      for (const auto& cp : perms_) {
        int label[17];
        std::fill(label, label + n_ + 1, -1);
        label[0] = 0;
        int next = 1;
        bool smaller = false, abort = false;
        for (int c = 0; c < n_ * n_ && !abort; ++c) {
          int v = a[rp[c / n_] * n_ + cp[c % n_]];
          if (label[v] < 0) label[v] = next++;
          cur[c] = label[v];
          if (!smaller) {
            if (cur[c] > best[c]) abort = true;
            else if (cur[c] < best[c]) smaller = true;
          }
        }
        if (!abort && smaller) best = cur;
      }
    std::uint64_t k = 0;
    for (int v : best) k = k * static_cast<std::uint64_t>(n_ + 1) + static_cast<std::uint64_t>(v);
    return k;
  }

 private:
  int n_;
  std::vector<std::vector<int>> perms_;
};

Square to_square(const std::vector<int>& a, int n) {
  Square s(n, std::vector<int>(n));
  for (int c = 0; c < n * n; ++c) s[c / n][c % n] = a[c];
  return s;
}

}  // namespace

bool is_latin(const Square& l) {
  const int n = static_cast<int>(l.size());
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(l[i].size()) != n) return false;
    Mask row = 0, col = 0;
    for (int j = 0; j < n; ++j) {
      if (l[i][j] < 1 || l[i][j] > n || l[j][i] < 1 || l[j][i] > n) return false;
      row |= bit(l[i][j] - 1);
      col |= bit(l[j][i] - 1);
    }
    if (row != low_mask(n) || col != low_mask(n)) return false;
  }
  return true;
}

bool within_multiplicity_cap(const Square& a) {
  const int n = static_cast<int>(a.size());
  std::vector<int> count(n + 1, 0);
  for (const auto& row : a)
    for (int v : row)
      if (v > 0 && v <= n && ++count[v] > n - 2) return false;
  return true;
}

std::optional<Square> avoid_latin(const Square& a, bool conjecture_mode) {
  const int n = order_of(a);
  for (const auto& row : a)
    for (int v : row)
      if (v < 0 || v > n) fail(ErrorCode::kInvalidArgument, "array entries must lie in 0..n");
  if (conjecture_mode && !within_multiplicity_cap(a))
    fail(ErrorCode::kPreconditionUnmet, "some symbol appears in more than n - 2 cells");
  return LatinSolver(a).solve();
}

AvoidScan avoidance_scan_exhaustive(int n) {
  if (n < 2) fail(ErrorCode::kInvalidArgument, "n must be at least 2");
  if (n > 4) fail(ErrorCode::kTooLarge, "exhaustive avoidance scan needs n <= 4");
  AvoidScan out;
  const int cells = n * n, per = n - 2;
  ArrayCanon canon(n);
  std::unordered_set<std::uint64_t> seen;
  std::vector<int> a(cells, 0);
  auto decide = [&]() {
    ++out.arrays;
    if (!seen.insert(canon.key(a)).second) return;
    ++out.classes;
    Square sq = to_square(a, n);
    if (!out.counterexample && !avoid_latin(sq)) out.counterexample = sq;
  };
  // Symbol s takes n - 2 free cells; the least cell of each symbol increases
  // with s, which picks one labelling per symbol permutation.
  auto place = [&](auto& self, int s, int prev_min) -> void {
    if (s > n || per == 0) {
      decide();
      return;
    }
    for (int first = prev_min + 1; first < cells; ++first) {
      if (a[first]) continue;
      a[first] = s;
      auto rest = [&](auto& more, int from, int left) -> void {
        if (left == 0) {
          self(self, s + 1, first);
          return;
        }
        for (int c = from; c < cells; ++c)
          if (!a[c]) {
            a[c] = s;
            more(more, c + 1, left - 1);
            a[c] = 0;
          }
      };
      rest(rest, first + 1, per - 1);
      a[first] = 0;
    }
  };
  place(place, 1, -1);
  return out;
}

Square random_saturated_array(int n, std::uint64_t seed, long long index) {
  auto rng = trial_rng(seed, static_cast<std::uint64_t>(index));
  std::vector<int> cells(n * n);
  std::iota(cells.begin(), cells.end(), 0);
  std::shuffle(cells.begin(), cells.end(), rng);
  Square a(n, std::vector<int>(n, 0));
  int c = 0;
  for (int s = 1; s <= n; ++s)
    for (int t = 0; t < n - 2; ++t, ++c) a[cells[c] / n][cells[c] % n] = s;
  return a;
}

AvoidScan avoidance_scan_random(int n, long long budget, std::uint64_t seed) {
  if (n < 2) fail(ErrorCode::kInvalidArgument, "n must be at least 2");
  AvoidScan out;
  for (long long i = 0; i < budget; ++i) {
    Square a = random_saturated_array(n, seed, i);
    ++out.arrays;
    if (!avoid_latin(a)) {
      out.counterexample = a;
      break;
    }
  }
  return out;
}

}  // namespace iml::des
