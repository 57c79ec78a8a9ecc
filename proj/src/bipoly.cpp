#include "refeul/bipoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace refeul {

namespace {

template <typename Map, typename Key>
void accumulate(Map& m, const Key& k, const BigInt& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = m.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) m.erase(it);
  }
}

std::string monomial_string(const BigInt& c, const std::string& vars, bool first) {
  std::string out;
  const bool neg = c < 0;
  const BigInt mag = neg ? BigInt(-c) : c;
  if (first) {
    if (neg) out += "-";
  } else {
    out += neg ? " - " : " + ";
  }
  if (vars.empty() || mag != 1) out += mag.str();
  out += vars;
  return out;
}

std::string power(char var, Exponent e) {
  if (e == 0) return {};
  std::string s(1, var);
  if (e > 1) s += "^" + std::to_string(e);
  return s;
}

}  // namespace

// ---- UniPoly ----------------------------------------------------------------

UniPoly UniPoly::monomial(Exponent e, const BigInt& c) {
  UniPoly f;
  f.add_term(e, c);
  return f;
}

UniPoly UniPoly::one_plus_x_pow(Exponent e) {
  UniPoly f;
  BigInt c = 1;
  for (Exponent i = 0; i <= e; ++i) {
    f.add_term(i, c);
    c = c * (e - i) / (i + 1);
  }
  return f;
}

BigInt UniPoly::coeff(Exponent e) const {
  auto it = coeffs_.find(e);
  return it == coeffs_.end() ? BigInt(0) : it->second;
}

void UniPoly::add_term(Exponent e, const BigInt& c) { accumulate(coeffs_, e, c); }

UniPoly& UniPoly::operator+=(const UniPoly& g) {
  for (const auto& [e, c] : g.coeffs_) add_term(e, c);
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& g) {
  for (const auto& [e, c] : g.coeffs_) add_term(e, -c);
  return *this;
}

UniPoly operator*(const UniPoly& f, const UniPoly& g) {
  UniPoly h;
  for (const auto& [ef, cf] : f.coeffs_) {
    for (const auto& [eg, cg] : g.coeffs_) h.add_term(ef + eg, cf * cg);
  }
  return h;
}

UniPoly operator*(UniPoly f, const BigInt& c) {
  if (c.is_zero()) return {};
  for (auto& [e, v] : f.coeffs_) v *= c;
  return f;
}

std::string UniPoly::to_string(char var) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : coeffs_) {
    out += monomial_string(c, power(var, e), first);
    first = false;
  }
  return out;
}

// ---- BiPoly -----------------------------------------------------------------

BiPoly BiPoly::constant(const BigInt& c) { return monomial(0, 0, c); }

BiPoly BiPoly::monomial(Exponent a, Exponent b, const BigInt& c) {
  BiPoly f;
  f.add_term(a, b, c);
  return f;
}

BigInt BiPoly::coeff(Exponent a, Exponent b) const {
  auto it = terms_.find({a, b});
  return it == terms_.end() ? BigInt(0) : it->second;
}

void BiPoly::add_term(Exponent a, Exponent b, const BigInt& c) { accumulate(terms_, Key{a, b}, c); }

Exponent BiPoly::max_p_degree() const {
  Exponent d = 0;
  for (const auto& [k, c] : terms_) d = std::max(d, k.first);
  return d;
}

Exponent BiPoly::max_q_degree() const {
  Exponent d = 0;
  for (const auto& [k, c] : terms_) d = std::max(d, k.second);
  return d;
}

Exponent BiPoly::total_degree() const {
  Exponent d = 0;
  for (const auto& [k, c] : terms_) d = std::max(d, k.first + k.second);
  return d;
}

BiPoly& BiPoly::operator+=(const BiPoly& g) {
  for (const auto& [k, c] : g.terms_) add_term(k.first, k.second, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& g) {
  for (const auto& [k, c] : g.terms_) add_term(k.first, k.second, -c);
  return *this;
}

BiPoly operator*(const BiPoly& f, const BiPoly& g) {
  BiPoly h;
  for (const auto& [kf, cf] : f.terms_) {
    for (const auto& [kg, cg] : g.terms_) h.add_term(kf.first + kg.first, kf.second + kg.second, cf * cg);
  }
  return h;
}

std::string BiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    out += monomial_string(c, power('p', k.first) + power('q', k.second), first);
    first = false;
  }
  return out;
}

BiPoly add(const BiPoly& f, const BiPoly& g) { return f + g; }
BiPoly mul(const BiPoly& f, const BiPoly& g) { return f * g; }

BiPoly scale(const BiPoly& f, const BigInt& c) {
  BiPoly h;
  for (const auto& [k, v] : f.terms()) h.add_term(k.first, k.second, v * c);
  return h;
}

BiPoly pow(const BiPoly& f, unsigned e) {
  BiPoly result = BiPoly::constant(1);
  BiPoly base = f;
  while (e) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e) base = base * base;
  }
  return result;
}

BiPoly swap_vars(const BiPoly& f) {
  BiPoly h;
  for (const auto& [k, c] : f.terms()) h.add_term(k.second, k.first, c);
  return h;
}

BiPoly reciprocal(const BiPoly& f, Exponent dp, Exponent dq) {
  BiPoly h;
  for (const auto& [k, c] : f.terms()) {
    if (k.first > dp || k.second > dq) {
      throw std::domain_error("reciprocal: term p^" + std::to_string(k.first) + " q^" + std::to_string(k.second) +
                              " exceeds (" + std::to_string(dp) + ", " + std::to_string(dq) + ")");
    }
    h.add_term(dp - k.first, dq - k.second, c);
  }
  return h;
}

bool is_palindromic(const BiPoly& f, Exponent k) {
  if (f.max_p_degree() > k || f.max_q_degree() > k) return false;
  return swap_vars(f) == f && reciprocal(f, k, k) == f;
}

UniPoly specialize(const BiPoly& f, Var which, const BigInt& value) {
  UniPoly h;
  for (const auto& [k, c] : f.terms()) {
    const Exponent fixed = which == Var::P ? k.first : k.second;
    const Exponent free = which == Var::P ? k.second : k.first;
    h.add_term(free, c * boost::multiprecision::pow(value, fixed));
  }
  return h;
}

BigInt eval(const BiPoly& f, const BigInt& p0, const BigInt& q0) {
  BigInt total = 0;
  for (const auto& [k, c] : f.terms()) {
    total += c * boost::multiprecision::pow(p0, k.first) * boost::multiprecision::pow(q0, k.second);
  }
  return total;
}

UniPoly diagonal(const BiPoly& f) {
  UniPoly h;
  for (const auto& [k, c] : f.terms()) h.add_term(k.first + k.second, c);
  return h;
}

nlohmann::json to_json(const BiPoly& f) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [k, c] : f.terms()) terms.push_back({k.first, k.second, c.str()});
  return {{"terms", std::move(terms)}};
}

namespace {

bool is_decimal_integer(const std::string& s) {
  std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(), [](char ch) { return ch >= '0' && ch <= '9'; });
}

}  // namespace

BiPoly bipoly_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array()) {
    throw std::invalid_argument("polynomial JSON needs a \"terms\" array");
  }
  BiPoly f;
  for (const auto& t : j["terms"]) {
    if (!t.is_array() || t.size() != 3 || !t[0].is_number_unsigned() || !t[1].is_number_unsigned() ||
        !t[2].is_string()) {
      throw std::invalid_argument("term must be [a, b, \"coefficient\"]: " + t.dump());
    }
    const auto a = t[0].get<Exponent>();
    const auto b = t[1].get<Exponent>();
    const auto s = t[2].get<std::string>();
    if (!is_decimal_integer(s)) throw std::invalid_argument("coefficient is not a decimal integer: " + s);
    const BigInt c(s);
    if (c.is_zero()) throw std::invalid_argument("zero coefficient stored for term " + t.dump());
    if (f.terms().contains({a, b})) throw std::invalid_argument("duplicate term " + t.dump());
    f.add_term(a, b, c);
  }
  return f;
}

}  // namespace refeul
