#include "refeul/engine.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <vector>

#include "refeul/perm.hpp"

namespace refeul {

namespace {

void check_n(std::size_t n, std::size_t cap, const char* what) {
  if (n == 0) throw std::out_of_range(std::string(what) + ": n must be positive");
  if (n > cap) {
    throw std::out_of_range(std::string(what) + ": n=" + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  }
}

// Dense coefficient grid indexed [p-exponent][q-exponent].
class Grid {
 public:
  Grid(std::size_t rows, std::size_t cols) : cols_(cols), cells_(rows * cols) {}

  BigInt& at(std::size_t a, std::size_t b) { return cells_[a * cols_ + b]; }
  const BigInt& at(std::size_t a, std::size_t b) const { return cells_[a * cols_ + b]; }
  std::size_t rows() const { return cells_.size() / cols_; }
  std::size_t cols() const { return cols_; }

  void add_scaled(const Grid& g, const BigInt& c) {
    for (std::size_t i = 0; i < cells_.size(); ++i) {
      if (!g.cells_[i].is_zero()) cells_[i] += g.cells_[i] * c;
    }
  }

  // *this *= (1 - p) or (1 - q), in place. Degrees never overflow the grid
  // because each position contributes to at most one variable once.
  void times_one_minus(Var v) {
    if (v == Var::P) {
      for (std::size_t a = rows(); a-- > 1;) {
        for (std::size_t b = 0; b < cols_; ++b) at(a, b) -= at(a - 1, b);
      }
    } else {
      for (std::size_t a = 0; a < rows(); ++a) {
        for (std::size_t b = cols_; b-- > 1;) at(a, b) -= at(a, b - 1);
      }
    }
  }

  // Multiply by p or q (shift by one).
  Grid times(Var v) const {
    Grid out(rows(), cols_);
    for (std::size_t a = 0; a < rows(); ++a) {
      for (std::size_t b = 0; b < cols_; ++b) {
        if (at(a, b).is_zero()) continue;
        if (v == Var::P) {
          out.at(a + 1, b) = at(a, b);
        } else {
          out.at(a, b + 1) = at(a, b);
        }
      }
    }
    return out;
  }

  BiPoly to_bipoly() const {
    BiPoly f;
    for (std::size_t a = 0; a < rows(); ++a) {
      for (std::size_t b = 0; b < cols_; ++b) {
        f.add_term(static_cast<Exponent>(a), static_cast<Exponent>(b), at(a, b));
      }
    }
    return f;
  }

 private:
  std::size_t cols_;
  std::vector<BigInt> cells_;
};

// Position j in [n-1] is weighted by p when odd, q when even.
Var weight_of(std::size_t j) { return (j % 2 == 1) ? Var::P : Var::Q; }

using Tally = std::vector<std::uint64_t>;

// Tallies (odes, edes) over all permutations of [n] starting with `first`.
Tally tally_first_letter(std::size_t n, Letter first, std::size_t cols) {
  Tally t((n / 2 + 1) * cols, 0);
  std::vector<Letter> w;
  w.reserve(n);
  w.push_back(first);
  for (Letter x = 1; x <= n; ++x) {
    if (x != first) w.push_back(x);
  }
  do {
    const ParityDescents d = parity_descents(w);
    ++t[d.odd * cols + d.even];
  } while (std::next_permutation(w.begin() + 1, w.end()));
  return t;
}

}  // namespace

BigInt factorial(std::size_t n) {
  BigInt f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

BiPoly brute_force(std::size_t n, const BruteOptions& opts) {
  check_n(n, opts.cap, "brute_force");
  const auto [pmax, qmax] = top_monomial(n);
  const std::size_t cols = qmax + 1;

  unsigned threads = opts.threads ? opts.threads : std::max(1U, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(n));

  // One independent tally per first letter; merged by addition, so the
  // result does not depend on scheduling.
  std::vector<Tally> partial(n);
  if (threads <= 1) {
    for (std::size_t f = 1; f <= n; ++f) partial[f - 1] = tally_first_letter(n, static_cast<Letter>(f), cols);
  } else {
    std::vector<std::future<void>> jobs;
    for (unsigned t = 0; t < threads; ++t) {
      jobs.push_back(std::async(std::launch::async, [&, t] {
        for (std::size_t f = t + 1; f <= n; f += threads) {
          partial[f - 1] = tally_first_letter(n, static_cast<Letter>(f), cols);
        }
      }));
    }
    for (auto& j : jobs) j.get();
  }

  BiPoly result;
  for (const Tally& t : partial) {
    for (std::size_t a = 0; a <= pmax; ++a) {
      for (std::size_t b = 0; b < cols; ++b) {
        if (t[a * cols + b]) result.add_term(static_cast<Exponent>(a), static_cast<Exponent>(b), t[a * cols + b]);
      }
    }
  }
  return result;
}

// A_n = sum over T in [n-1] of alpha(T) prod_{j in T} w_j prod_{j notin T} (1 - w_j),
// since p^odes q^edes depends on the descent set only and the exact-set
// indicator expands by inclusion-exclusion into containment counts.
// Ordering T by its elements t_1 < ... < t_r, alpha(T) factors as
// prod C(n - t_{m-1}, t_m - t_{m-1}), which gives the recursion over the
// last breakpoint:
//   f(0) = 1
//   f(j) = w_j sum_{i<j} f(i) C(n-i, j-i) prod_{l=i+1}^{j-1} (1 - w_l)
//   A_n  = sum_{i<n} f(i) prod_{l=i+1}^{n-1} (1 - w_l)
// held[i] carries f(i) times the (1 - w_l) product up to the current j.
BiPoly fast(std::size_t n, std::size_t cap) {
  check_n(n, cap, "fast");
  const auto [pmax, qmax] = top_monomial(n);
  const std::size_t rows = pmax + 1;
  const std::size_t cols = qmax + 1;

  // binom[m][r] for 0 <= r <= m <= n
  std::vector<std::vector<BigInt>> binom(n + 1);
  for (std::size_t m = 0; m <= n; ++m) {
    binom[m].assign(m + 1, 1);
    for (std::size_t r = 1; r < m; ++r) binom[m][r] = binom[m - 1][r - 1] + binom[m - 1][r];
  }

  std::vector<Grid> held;
  held.reserve(n);
  held.emplace_back(rows, cols);
  held[0].at(0, 0) = 1;

  for (std::size_t j = 1; j < n; ++j) {
    Grid sum(rows, cols);
    for (std::size_t i = 0; i < j; ++i) sum.add_scaled(held[i], binom[n - i][j - i]);
    const Var w = weight_of(j);
    Grid fj = sum.times(w);
    for (std::size_t i = 0; i < j; ++i) held[i].times_one_minus(w);
    held.push_back(std::move(fj));
  }

  Grid total(rows, cols);
  for (const Grid& g : held) total.add_scaled(g, 1);
  return total.to_bipoly();
}

BiPoly a_tilde(std::size_t n, const BiPoly& a_n) {
  if (n % 2 == 1) return a_n;
  return (BiPoly::constant(1) + BiPoly::q()) * a_n;
}

BiPoly a_tilde(std::size_t n) { return a_tilde(n, fast(n)); }

namespace {

void check_subset(std::size_t n, const std::set<std::size_t>& s) {
  if (n == 0) throw std::out_of_range("descent sets need n >= 1");
  for (std::size_t x : s) {
    if (x < 1 || x >= n) {
      throw std::out_of_range("position " + std::to_string(x) + " outside [1," + std::to_string(n - 1) + "]");
    }
  }
}

}  // namespace

BigInt alpha(std::size_t n, const std::set<std::size_t>& s) {
  check_subset(n, s);
  BigInt result = factorial(n);
  std::size_t prev = 0;
  for (std::size_t x : s) {
    result /= factorial(x - prev);
    prev = x;
  }
  result /= factorial(n - prev);
  return result;
}

BigInt beta(std::size_t n, const std::set<std::size_t>& s) {
  check_subset(n, s);
  if (n > kDescentSetOracleCap) {
    throw std::out_of_range("beta is an oracle limited to n <= " + std::to_string(kDescentSetOracleCap));
  }
  const std::vector<std::size_t> elems(s.begin(), s.end());
  const std::size_t r = elems.size();
  BigInt total = 0;
  for (std::size_t mask = 0; mask < (std::size_t{1} << r); ++mask) {
    std::set<std::size_t> t;
    for (std::size_t i = 0; i < r; ++i) {
      if (mask >> i & 1U) t.insert(elems[i]);
    }
    const bool negative = ((r - t.size()) % 2) == 1;
    const BigInt a = alpha(n, t);
    total += negative ? BigInt(-a) : a;
  }
  return total;
}

UniPoly closed_form_odes(std::size_t n) {
  if (n == 0) throw std::out_of_range("closed_form_odes: n must be positive");
  const auto k = static_cast<Exponent>(n / 2);
  return UniPoly::one_plus_x_pow(k) * (factorial(n) >> k);
}

UniPoly closed_form_edes(std::size_t n) {
  if (n == 0) throw std::out_of_range("closed_form_edes: n must be positive");
  const auto k = static_cast<Exponent>((n - 1) / 2);
  return UniPoly::one_plus_x_pow(k) * (factorial(n) >> k);
}

UniPoly classical_eulerian(std::size_t n) {
  if (n == 0) throw std::out_of_range("classical_eulerian: n must be positive");
  // row[k] = number of permutations of [m] with k descents
  std::vector<BigInt> row{1};
  for (std::size_t m = 2; m <= n; ++m) {
    std::vector<BigInt> next(m, 0);
    for (std::size_t k = 0; k < m; ++k) {
      if (k < row.size()) next[k] += row[k] * (k + 1);
      if (k >= 1) next[k] += row[k - 1] * (m - k);
    }
    row = std::move(next);
  }
  UniPoly f;
  for (std::size_t k = 0; k < row.size(); ++k) f.add_term(static_cast<Exponent>(k), row[k]);
  return f;
}

}  // namespace refeul
