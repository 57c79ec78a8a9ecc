#include "doctest.h"

#include <random>
#include <stdexcept>

#include "refeul/engine.hpp"
#include "refeul/gamma.hpp"

using namespace refeul;

namespace {

std::vector<BigInt> big(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

}  // namespace

TEST_CASE("basis elements") {
  CHECK(gamma_basis(2, 1, 0) == BiPoly::monomial(1, 1));
  CHECK(gamma_basis(0, 0, 0) == BiPoly::constant(1));
  CHECK(gamma_basis(1, 0, 1) == BiPoly::p() + BiPoly::q());
  CHECK_THROWS_AS(gamma_basis(2, 1, 1), std::invalid_argument);
  for (Exponent k = 0; k <= 5; ++k) {
    for (Exponent i = 0; 2 * i <= k; ++i) {
      for (Exponent j = 0; 2 * i + j <= k; ++j) CHECK(is_palindromic(gamma_basis(k, i, j), k));
    }
  }
}

TEST_CASE("expand_full on basis elements") {
  const auto e = expand_full(BiPoly::monomial(1, 1), 2);
  CHECK(e.full_coeffs.size() == 1);
  CHECK(e.full_coeffs.at({1, 0}) == 1);
  CHECK_FALSE(e.residual_is_zero);

  const auto b = expand_full(gamma_basis(2, 0, 1), 2);
  CHECK(b.full_coeffs.size() == 1);
  CHECK(b.full_coeffs.at({0, 1}) == 1);
  CHECK(b.residual_is_zero);
}

TEST_CASE("expand_full of Atilde_4") {
  const auto e = expand_full(a_tilde(4), 2);
  CHECK(e.line_coeffs == big({1, 6, 5}));
  CHECK_FALSE(e.full_coeffs.contains({1, 0}));
  CHECK(reconstruct_full(e) == a_tilde(4));
}

TEST_CASE("expanders reject non-palindromic input") {
  CHECK_THROWS_AS(expand_full(fast(4), 2), std::invalid_argument);
  CHECK_THROWS_AS(expand_line(fast(4), 2), std::invalid_argument);
  CHECK_THROWS_AS(expand_line(a_tilde(5), 3), std::invalid_argument);
}

TEST_CASE("expand_line on Atilde_n for the printed cases") {
  CHECK(expand_line(a_tilde(1), 0).line_coeffs == big({1}));
  const auto e5 = expand_line(a_tilde(5), 2);
  CHECK(e5.line_coeffs == big({1, 13, 16}));
  CHECK(e5.residual_is_zero);
  const auto e6 = expand_line(a_tilde(6), 3);
  CHECK(e6.line_coeffs == big({1, 29, 89, 61}));
  CHECK(e6.residual_is_zero);
}

TEST_CASE("expand_line reports non-representable input instead of throwing") {
  const auto e = expand_line(BiPoly::monomial(1, 1), 2);
  CHECK_FALSE(e.residual_is_zero);
  CHECK(e.line_coeffs == big({0, 0, 0}));
}

TEST_CASE("uniqueness: random integer combinations expand back to their coefficients") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> coef(-9, 9);
  for (Exponent k = 0; k <= 6; ++k) {
    for (int trial = 0; trial < 20; ++trial) {
      std::map<std::pair<Exponent, Exponent>, BigInt> want;
      BiPoly f;
      for (Exponent i = 0; 2 * i <= k; ++i) {
        for (Exponent j = 0; 2 * i + j <= k; ++j) {
          const int c = coef(rng);
          if (c == 0) continue;
          want[{i, j}] = c;
          f += scale(gamma_basis(k, i, j), c);
        }
      }
      const auto e = expand_full(f, k);
      REQUIRE(e.full_coeffs == want);
      REQUIRE(reconstruct_full(e) == f);

      bool line_only = true;
      for (const auto& [ij, c] : want) line_only = line_only && ij.first == 0;
      const auto l = expand_line(f, k);
      REQUIRE(l.residual_is_zero == line_only);
      if (line_only) REQUIRE(reconstruct_line(l) == f);
    }
  }
}

TEST_CASE("line and full expansions agree on Atilde_n, n <= 14") {
  for (std::size_t n = 1; n <= 14; ++n) {
    const auto k = static_cast<Exponent>(n / 2);
    const BiPoly t = a_tilde(n);
    const auto full = expand_full(t, k);
    const auto line = expand_line(t, k);
    bool no_interior = true;
    for (const auto& [ij, d] : full.full_coeffs) no_interior = no_interior && ij.first == 0;
    CHECK(line.residual_is_zero == no_interior);
    CHECK(line.line_coeffs == full.line_coeffs);
  }
}

TEST_CASE("univariate gamma expansion") {
  UniPoly f;
  f.add_term(0, 1);
  f.add_term(1, 4);
  f.add_term(2, 1);
  const auto g = univariate_gamma(f, 2);
  CHECK(g.coeffs == big({1, 2}));
  CHECK(reconstruct(g) == f);

  CHECK(univariate_gamma(UniPoly::one_plus_x_pow(3), 3).coeffs == big({1, 0}));

  UniPoly lopsided;
  lopsided.add_term(0, 1);
  lopsided.add_term(1, 2);
  CHECK_THROWS_AS(univariate_gamma(lopsided, 1), std::invalid_argument);
  CHECK_THROWS_AS(univariate_gamma(f, 1), std::invalid_argument);
  // q (1+q)^0 has darga 2 and lives on the basis element i = 1
  CHECK(univariate_gamma(UniPoly::monomial(1), 2).coeffs == big({0, 1}));
}

TEST_CASE("classical Eulerian polynomials are gamma-nonnegative, n <= 10") {
  for (std::size_t n = 1; n <= 10; ++n) {
    const UniPoly a = classical_eulerian(n);
    const auto g = univariate_gamma(a, static_cast<Exponent>(n - 1));
    CHECK(reconstruct(g) == a);
    for (const BigInt& c : g.coeffs) CHECK(c >= 0);
  }
}

TEST_CASE("conjecture check for small n") {
  const auto r4 = conjecture_check(4);
  CHECK(r4.report.passed());
  CHECK(r4.expansion.line_coeffs == big({1, 6, 5}));
  const auto r6 = conjecture_check(6);
  CHECK(r6.report.passed());
  CHECK(r6.expansion.line_coeffs == big({1, 29, 89, 61}));
  CHECK(conjecture_check(2).expansion.line_coeffs == big({1, 1}));
  CHECK(r6.report.n_range() == NRange{6, 6});
  CHECK(line_coeffs_json(r6.expansion).dump() == R"(["1","29","89","61"])");
}
