#pragma once

// Exact sparse polynomials in one variable and in (p, q), with
// arbitrary-precision integer coefficients. Zero coefficients are never
// stored, so equality is structural.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "json.hpp"

namespace refeul {

using BigInt = boost::multiprecision::cpp_int;

using Exponent = std::uint32_t;

enum class Var { P, Q };

class UniPoly {
 public:
  UniPoly() = default;
  /// c * x^e
  static UniPoly monomial(Exponent e, const BigInt& c = 1);
  /// (1 + x)^e
  static UniPoly one_plus_x_pow(Exponent e);

  const std::map<Exponent, BigInt>& coeffs() const { return coeffs_; }
  BigInt coeff(Exponent e) const;
  void add_term(Exponent e, const BigInt& c);
  bool is_zero() const { return coeffs_.empty(); }
  /// Highest exponent; 0 for the zero polynomial.
  Exponent degree() const { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }

  UniPoly& operator+=(const UniPoly& g);
  UniPoly& operator-=(const UniPoly& g);
  friend UniPoly operator+(UniPoly f, const UniPoly& g) { return f += g; }
  friend UniPoly operator-(UniPoly f, const UniPoly& g) { return f -= g; }
  friend UniPoly operator*(const UniPoly& f, const UniPoly& g);
  friend UniPoly operator*(UniPoly f, const BigInt& c);

  bool operator==(const UniPoly&) const = default;

  /// "6 + 12x + 6x^2" with the given variable name.
  std::string to_string(char var = 'q') const;

 private:
  std::map<Exponent, BigInt> coeffs_;
};

class BiPoly {
 public:
  using Key = std::pair<Exponent, Exponent>;  // (p-exponent, q-exponent)
  using TermMap = std::map<Key, BigInt>;

  BiPoly() = default;
  static BiPoly constant(const BigInt& c);
  /// c * p^a q^b
  static BiPoly monomial(Exponent a, Exponent b, const BigInt& c = 1);
  static BiPoly p() { return monomial(1, 0); }
  static BiPoly q() { return monomial(0, 1); }

  const TermMap& terms() const { return terms_; }
  BigInt coeff(Exponent a, Exponent b) const;
  void add_term(Exponent a, Exponent b, const BigInt& c);
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Exponent max_p_degree() const;
  Exponent max_q_degree() const;
  /// Largest a+b over the support; 0 for the zero polynomial.
  Exponent total_degree() const;

  BiPoly& operator+=(const BiPoly& g);
  BiPoly& operator-=(const BiPoly& g);
  friend BiPoly operator+(BiPoly f, const BiPoly& g) { return f += g; }
  friend BiPoly operator-(BiPoly f, const BiPoly& g) { return f -= g; }
  friend BiPoly operator*(const BiPoly& f, const BiPoly& g);

  bool operator==(const BiPoly&) const = default;

  /// "1 + 2p + 2q + pq", terms ordered by (p-exponent, q-exponent).
  std::string to_string() const;

 private:
  TermMap terms_;
};

BiPoly add(const BiPoly& f, const BiPoly& g);
BiPoly mul(const BiPoly& f, const BiPoly& g);
BiPoly scale(const BiPoly& f, const BigInt& c);
BiPoly pow(const BiPoly& f, unsigned e);

/// f(q, p).
BiPoly swap_vars(const BiPoly& f);

/// p^dp q^dq f(1/p, 1/q). Throws std::domain_error if a term would get a
/// negative exponent.
BiPoly reciprocal(const BiPoly& f, Exponent dp, Exponent dq);

/// f(p,q) = f(q,p) and f(p,q) = (pq)^k f(1/p,1/q).
bool is_palindromic(const BiPoly& f, Exponent k);

/// Substitute `which := value`, leaving a polynomial in the other variable.
UniPoly specialize(const BiPoly& f, Var which, const BigInt& value);
BigInt eval(const BiPoly& f, const BigInt& p0, const BigInt& q0);
/// f(x, x).
UniPoly diagonal(const BiPoly& f);

/// {"terms": [[a, b, "coefficient"], ...]} sorted by (a, b).
nlohmann::json to_json(const BiPoly& f);
/// Throws std::invalid_argument on malformed input (bad shape, non-decimal
/// coefficient, duplicate or zero terms).
BiPoly bipoly_from_json(const nlohmann::json& j);

}  // namespace refeul
