#include "refeul/gamma.hpp"

#include "refeul/engine.hpp"

#include <chrono>
#include <stdexcept>
#include <string>

namespace refeul {

namespace {

void require_palindromic(const BiPoly& f, Exponent k) {
  if (!is_palindromic(f, k)) {
    throw std::invalid_argument("polynomial is not palindromic of darga " + std::to_string(k) + ": " +
                                f.to_string());
  }
}

}  // namespace

BiPoly gamma_basis(Exponent k, Exponent i, Exponent j) {
  if (2 * i + j > k) {
    throw std::invalid_argument("gamma basis index (" + std::to_string(i) + ", " + std::to_string(j) +
                                ") out of range for darga " + std::to_string(k));
  }
  const BiPoly p_plus_q = BiPoly::p() + BiPoly::q();
  const BiPoly one_plus_pq = BiPoly::constant(1) + BiPoly::monomial(1, 1);
  return BiPoly::monomial(i, i) * pow(p_plus_q, j) * pow(one_plus_pq, k - 2 * i - j);
}

UniPoly uni_gamma_basis(Exponent n, Exponent i) {
  if (2 * i > n) throw std::invalid_argument("gamma basis index out of range");
  return UniPoly::monomial(i) * UniPoly::one_plus_x_pow(n - 2 * i);
}

GammaExpansion expand_full(const BiPoly& f, Exponent k) {
  require_palindromic(f, k);
  GammaExpansion out;
  out.k = k;
  BiPoly residual = f;
  for (Exponent i = 0; 2 * i <= k; ++i) {
    for (Exponent j = 0; 2 * i + j <= k; ++j) {
      const BigInt d = residual.coeff(i + j, i);
      if (d.is_zero()) continue;
      out.full_coeffs[{i, j}] = d;
      residual -= scale(gamma_basis(k, i, j), d);
    }
  }
  if (!residual.is_zero()) {
    throw std::logic_error("gamma extraction left a nonzero residual: " + residual.to_string());
  }
  out.line_coeffs.resize(k + 1);
  for (Exponent j = 0; j <= k; ++j) {
    auto it = out.full_coeffs.find({0, j});
    if (it != out.full_coeffs.end()) out.line_coeffs[j] = it->second;
  }
  out.residual_is_zero = true;
  for (const auto& [ij, d] : out.full_coeffs) {
    if (ij.first >= 1) out.residual_is_zero = false;
  }
  return out;
}

GammaExpansion expand_line(const BiPoly& f, Exponent k) {
  require_palindromic(f, k);
  GammaExpansion out;
  out.k = k;
  out.line_coeffs.resize(k + 1);
  for (Exponent j = 0; j <= k; ++j) {
    out.line_coeffs[j] = f.coeff(j, 0);
    if (!out.line_coeffs[j].is_zero()) out.full_coeffs[{0, j}] = out.line_coeffs[j];
  }
  out.residual_is_zero = reconstruct_line(out) == f;
  return out;
}

BiPoly reconstruct_full(const GammaExpansion& e) {
  BiPoly f;
  for (const auto& [ij, d] : e.full_coeffs) f += scale(gamma_basis(e.k, ij.first, ij.second), d);
  return f;
}

BiPoly reconstruct_line(const GammaExpansion& e) {
  BiPoly f;
  for (Exponent j = 0; j < e.line_coeffs.size(); ++j) {
    if (!e.line_coeffs[j].is_zero()) f += scale(gamma_basis(e.k, 0, j), e.line_coeffs[j]);
  }
  return f;
}

bool is_palindromic(const UniPoly& f, Exponent n) {
  if (f.degree() > n) return false;
  for (const auto& [e, c] : f.coeffs()) {
    if (f.coeff(n - e) != c) return false;
  }
  return true;
}

UniGammaExpansion univariate_gamma(const UniPoly& f, Exponent n) {
  if (!is_palindromic(f, n)) {
    throw std::invalid_argument("polynomial is not palindromic of darga " + std::to_string(n) + ": " +
                                f.to_string());
  }
  UniGammaExpansion out;
  out.darga = n;
  out.coeffs.resize(n / 2 + 1);
  UniPoly residual = f;
  for (Exponent i = 0; 2 * i <= n; ++i) {
    const BigInt g = residual.coeff(i);
    out.coeffs[i] = g;
    if (!g.is_zero()) residual -= uni_gamma_basis(n, i) * g;
  }
  if (!residual.is_zero()) {
    throw std::logic_error("univariate gamma extraction left a nonzero residual: " + residual.to_string());
  }
  return out;
}

UniPoly reconstruct(const UniGammaExpansion& e) {
  UniPoly f;
  for (Exponent i = 0; i < e.coeffs.size(); ++i) {
    if (!e.coeffs[i].is_zero()) f += uni_gamma_basis(e.darga, i) * e.coeffs[i];
  }
  return f;
}

nlohmann::json line_coeffs_json(const GammaExpansion& e) {
  nlohmann::json c = nlohmann::json::array();
  for (const BigInt& x : e.line_coeffs) c.push_back(x.str());
  return c;
}

ConjectureResult conjecture_check(std::size_t n) {
  const auto start = std::chrono::steady_clock::now();
  const auto k = static_cast<Exponent>(n / 2);
  GammaExpansion e = expand_line(a_tilde(n), k);

  nlohmann::json witness;
  if (!e.residual_is_zero) {
    witness = {{"n", n}, {"reason", "not representable on the i=0 line"}, {"c", line_coeffs_json(e)}};
  } else {
    for (Exponent j = 0; j < e.line_coeffs.size(); ++j) {
      if (e.line_coeffs[j] <= 0) {
        witness = {{"n", n}, {"reason", "non-positive coefficient"}, {"j", j}, {"c", line_coeffs_json(e)}};
        break;
      }
    }
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  const NRange range{n, n};
  auto report = witness.is_null() ? VerificationReport::pass("gamma-positivity", range, ms)
                                  : VerificationReport::fail("gamma-positivity", range, std::move(witness), ms);
  return {std::move(report), std::move(e)};
}

}  // namespace refeul
