#pragma once

// Gamma-basis expansions of palindromic polynomials.
//
// Bivariate basis of darga k:  (pq)^i (p+q)^j (1+pq)^(k-2i-j),  2i + j <= k.
// Univariate basis of darga n: q^i (1+q)^(n-2i),                0 <= i <= n/2.
//
// Both expansions use triangular extraction: the coefficient of p^(i+j) q^i
// in the residual belongs to basis element (i, j) alone once all elements
// with smaller i are subtracted (resp. q^i for the univariate basis).

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "refeul/bipoly.hpp"
#include "refeul/report.hpp"

namespace refeul {

struct GammaExpansion {
  Exponent k = 0;
  /// c_j for (p+q)^j (1+pq)^(k-j), j = 0..k.
  std::vector<BigInt> line_coeffs;
  /// d_{i,j}; only nonzero entries are stored.
  std::map<std::pair<Exponent, Exponent>, BigInt> full_coeffs;
  /// For expand_line: whether sum c_j basis_j reproduces the input.
  bool residual_is_zero = false;
};

struct UniGammaExpansion {
  Exponent darga = 0;
  std::vector<BigInt> coeffs;
};

/// (pq)^i (p+q)^j (1+pq)^(k-2i-j). Throws std::invalid_argument if 2i+j > k.
BiPoly gamma_basis(Exponent k, Exponent i, Exponent j);
/// q^i (1+q)^(n-2i).
UniPoly uni_gamma_basis(Exponent n, Exponent i);

/// Throws std::invalid_argument if f is not palindromic of darga k, and
/// std::logic_error if the residual fails to vanish.
GammaExpansion expand_full(const BiPoly& f, Exponent k);

/// Reads c_j off the q^0 boundary and reports whether they reconstruct f.
/// Throws std::invalid_argument if f is not palindromic of darga k.
GammaExpansion expand_line(const BiPoly& f, Exponent k);

/// Sum of d_{i,j} basis elements.
BiPoly reconstruct_full(const GammaExpansion& e);
/// Sum of c_j basis elements with i = 0.
BiPoly reconstruct_line(const GammaExpansion& e);

/// Coefficients read the same from both ends of [0, n].
bool is_palindromic(const UniPoly& f, Exponent n);

/// Throws std::invalid_argument if f is not palindromic of darga n.
UniGammaExpansion univariate_gamma(const UniPoly& f, Exponent n);
UniPoly reconstruct(const UniGammaExpansion& e);

struct ConjectureResult {
  VerificationReport report;
  GammaExpansion expansion;
};

/// Expands Atilde_n over the i = 0 line of the darga floor(n/2) basis and
/// checks that every c_j is positive and the expansion is exact. Failure is
/// a reported outcome; the witness names the reason and carries c.
ConjectureResult conjecture_check(std::size_t n);

/// c_j as decimal strings.
nlohmann::json line_coeffs_json(const GammaExpansion& e);

}  // namespace refeul
