#pragma once

// Computing A_n(p,q) = sum over S_n of p^odes q^edes, two ways, plus the
// univariate closed forms and the classical Eulerian polynomial used as
// cross-check oracles.

#include <cstddef>
#include <set>

#include "refeul/bipoly.hpp"

namespace refeul {

inline constexpr std::size_t kDefaultBruteCap = 10;
inline constexpr std::size_t kDefaultFastCap = 64;
inline constexpr std::size_t kDescentSetOracleCap = 12;

struct BruteOptions {
  std::size_t cap = kDefaultBruteCap;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// Enumerates S_n. Throws std::out_of_range if n exceeds the cap or n == 0.
BiPoly brute_force(std::size_t n, const BruteOptions& opts = {});

/// Polynomial-time A_n(p,q) via the descent-set breakpoint recursion.
/// Throws std::out_of_range if n == 0 or n > cap.
BiPoly fast(std::size_t n, std::size_t cap = kDefaultFastCap);

/// A_n for odd n, (1+q) A_n for even n.
BiPoly a_tilde(std::size_t n, const BiPoly& a_n);
BiPoly a_tilde(std::size_t n);

/// Number of permutations of [n] whose descent set is contained in S
/// (the multinomial coefficient of the composition cut at S).
BigInt alpha(std::size_t n, const std::set<std::size_t>& s);
/// Number of permutations of [n] whose descent set is exactly S, by
/// inclusion-exclusion over subsets of S. Limited to n <= 12.
BigInt beta(std::size_t n, const std::set<std::size_t>& s);

/// (n! / 2^floor(n/2)) (1+p)^floor(n/2)
UniPoly closed_form_odes(std::size_t n);
/// (n! / 2^floor((n-1)/2)) (1+q)^floor((n-1)/2)
UniPoly closed_form_edes(std::size_t n);

/// Eulerian polynomial by the Eulerian-number recurrence.
UniPoly classical_eulerian(std::size_t n);

BigInt factorial(std::size_t n);

/// Exponent pair of the unique top-degree monomial of A_n.
inline std::pair<Exponent, Exponent> top_monomial(std::size_t n) {
  return {static_cast<Exponent>(n / 2), static_cast<Exponent>((n - 1) / 2)};
}

}  // namespace refeul
