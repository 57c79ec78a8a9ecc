#include "refeul/verify.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <stdexcept>
#include <string>

#include "refeul/bipoly.hpp"
#include "refeul/engine.hpp"
#include "refeul/perm.hpp"

namespace refeul {

namespace {

using nlohmann::json;

// body returns a null json on success, otherwise the witness.
template <typename Body>
VerificationReport timed(std::string name, NRange range, Body body) {
  const auto start = std::chrono::steady_clock::now();
  json witness = body();
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (witness.is_null()) return VerificationReport::pass(std::move(name), range, ms);
  return VerificationReport::fail(std::move(name), range, std::move(witness), ms);
}

// Calls visit(pi) for every pi in S_n until it returns a non-null witness.
template <typename Visit>
json for_each_permutation(std::size_t n, Visit visit) {
  Permutation pi = Permutation::identity(n);
  do {
    json w = visit(pi);
    if (!w.is_null()) return w;
  } while (pi.next());
  return nullptr;
}

std::set<std::size_t> mask_to_set(std::size_t mask, std::size_t bits) {
  std::set<std::size_t> s;
  for (std::size_t i = 0; i < bits; ++i) {
    if (mask >> i & 1U) s.insert(i + 1);
  }
  return s;
}

json set_json(const std::set<std::size_t>& s) { return json(std::vector<std::size_t>(s.begin(), s.end())); }

std::string word_string(const ExtendedWord& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(w.letters()[i]);
  }
  return out;
}

}  // namespace

Suite parse_suite(std::string_view name) {
  if (name == "palindromic") return Suite::Palindromic;
  if (name == "closed-form") return Suite::ClosedForm;
  if (name == "psi") return Suite::Psi;
  if (name == "orbits") return Suite::Orbits;
  if (name == "diagonal") return Suite::Diagonal;
  if (name == "all") return Suite::All;
  throw std::invalid_argument("unknown suite '" + std::string(name) +
                              "' (expected palindromic, closed-form, psi, orbits, diagonal or all)");
}

std::string_view suite_name(Suite s) {
  switch (s) {
    case Suite::Palindromic: return "palindromic";
    case Suite::ClosedForm: return "closed-form";
    case Suite::Psi: return "psi";
    case Suite::Orbits: return "orbits";
    case Suite::Diagonal: return "diagonal";
    case Suite::All: return "all";
  }
  return "?";
}

std::size_t suite_cap(Suite s) {
  switch (s) {
    case Suite::Psi: return 10;
    case Suite::Orbits: return 9;
    case Suite::All: return 9;
    default: return kDefaultFastCap;
  }
}

std::vector<VerificationReport> run_suite(Suite s, std::size_t n_max) {
  if (n_max == 0) throw std::out_of_range("n-max must be positive");
  if (n_max > suite_cap(s)) {
    throw std::out_of_range("suite " + std::string(suite_name(s)) + " accepts n-max <= " +
                            std::to_string(suite_cap(s)));
  }
  std::vector<VerificationReport> out;
  const bool all = s == Suite::All;
  if (all || s == Suite::Palindromic) {
    out.push_back(check_palindromic_fast(n_max));
    out.push_back(check_palindromic_brute(n_max));
    out.push_back(check_reciprocal_identity(n_max));
    out.push_back(check_even_swap_symmetry(n_max));
  }
  if (all || s == Suite::ClosedForm) {
    out.push_back(check_closed_form_odes(n_max));
    out.push_back(check_closed_form_edes(n_max));
  }
  if (all || s == Suite::Psi) {
    out.push_back(check_complement_duality(n_max));
    out.push_back(check_rc_swap(n_max));
    out.push_back(check_boundary_identities(n_max));
    out.push_back(check_psi_bijection(n_max));
  }
  if (all || s == Suite::Orbits) {
    out.push_back(check_orbits(n_max, true));
    out.push_back(check_orbits(n_max, false));
    out.push_back(check_swap_group_laws(n_max));
  }
  if (all || s == Suite::Diagonal) {
    out.push_back(check_diagonal(n_max));
    out.push_back(check_count_and_top_monomial(n_max));
  }
  return out;
}

// ---- palindromicity -----------------------------------------------------------

VerificationReport check_palindromic_fast(std::size_t n_max) {
  return timed("palindromic-fast", {1, n_max}, [&]() -> json {
    for (std::size_t n = 1; n <= n_max; ++n) {
      const BiPoly t = a_tilde(n, fast(n));
      if (!is_palindromic(t, static_cast<Exponent>(n / 2))) {
        return {{"n", n}, {"a_tilde", to_json(t)}};
      }
    }
    return nullptr;
  });
}

VerificationReport check_palindromic_brute(std::size_t n_max) {
  const std::size_t hi = std::min(n_max, kDefaultBruteCap);
  return timed("palindromic-brute", {1, hi}, [&]() -> json {
    for (std::size_t n = 1; n <= hi; ++n) {
      const BiPoly t = a_tilde(n, brute_force(n));
      if (!is_palindromic(t, static_cast<Exponent>(n / 2))) {
        return {{"n", n}, {"a_tilde", to_json(t)}};
      }
    }
    return nullptr;
  });
}

VerificationReport check_reciprocal_identity(std::size_t n_max) {
  return timed("reciprocal-identity", {1, n_max}, [&]() -> json {
    for (std::size_t n = 1; n <= n_max; ++n) {
      const BiPoly a = fast(n);
      const auto [dp, dq] = top_monomial(n);
      if (reciprocal(a, dp, dq) != a) return {{"n", n}, {"a", to_json(a)}};
    }
    return nullptr;
  });
}

VerificationReport check_even_swap_symmetry(std::size_t n_max) {
  return timed("even-swap-symmetry", {1, n_max}, [&]() -> json {
    for (std::size_t n = 2; n <= n_max; n += 2) {
      const BiPoly t = a_tilde(n, fast(n));
      if (swap_vars(t) != t) return {{"n", n}, {"a_tilde", to_json(t)}};
    }
    return nullptr;
  });
}

// ---- closed forms -------------------------------------------------------------

VerificationReport check_closed_form_odes(std::size_t n_max) {
  return timed("closed-form-odes", {1, n_max}, [&]() -> json {
    for (std::size_t n = 1; n <= n_max; ++n) {
      const UniPoly got = specialize(fast(n), Var::Q, 1);
      const UniPoly want = closed_form_odes(n);
      if (got != want) return {{"n", n}, {"specialized", got.to_string('p')}, {"closed_form", want.to_string('p')}};
    }
    return nullptr;
  });
}

VerificationReport check_closed_form_edes(std::size_t n_max) {
  return timed("closed-form-edes", {1, n_max}, [&]() -> json {
    for (std::size_t n = 1; n <= n_max; ++n) {
      const UniPoly got = specialize(fast(n), Var::P, 1);
      const UniPoly want = closed_form_edes(n);
      if (got != want) return {{"n", n}, {"specialized", got.to_string('q')}, {"closed_form", want.to_string('q')}};
    }
    return nullptr;
  });
}

// ---- reversal, complement, psi --------------------------------------------------

VerificationReport check_complement_duality(std::size_t n_max) {
  return timed("complement-duality", {1, n_max}, [&]() -> json {
    for (std::size_t n = 1; n <= n_max; ++n) {
      json w = for_each_permutation(n, [&](const Permutation& pi) -> json {
        const auto d = parity_descents(pi.letters());
        const auto dc = parity_descents(complement(pi).letters());
        if (d.odd + dc.odd != n / 2 || d.even + dc.even != (n - 1) / 2) {
          return {{"n", n}, {"perm", pi.to_string()}};
        }
        return nullptr;
      });
      if (!w.is_null()) return w;
    }
    return nullptr;
  });
}

VerificationReport check_rc_swap(std::size_t n_max) {
  return timed("rc-statistic-swap", {1, n_max}, [&]() -> json {
    for (std::size_t n = 1; n <= n_max; n += 2) {
      json w = for_each_permutation(n, [&](const Permutation& pi) -> json {
        const auto prof = descent_profile(pi);
        const auto rc = descent_profile(reversal_complement(pi));
        // positionwise: i odd descent of pi iff n - i even descent of pi^rc
        for (std::size_t i : prof.odes_set) {
          if (!rc.edes_set.contains(n - i)) return {{"n", n}, {"perm", pi.to_string()}, {"position", i}};
        }
        for (std::size_t i : prof.edes_set) {
          if (!rc.odes_set.contains(n - i)) return {{"n", n}, {"perm", pi.to_string()}, {"position", i}};
        }
        if (rc.odes() != prof.edes() || rc.edes() != prof.odes()) return {{"n", n}, {"perm", pi.to_string()}};
        return nullptr;
      });
      if (!w.is_null()) return w;
    }
    return nullptr;
  });
}

VerificationReport check_boundary_identities(std::size_t n_max) {
  const std::size_t k_max = n_max / 2;
  return timed("boundary-identities", {1, n_max}, [&]() -> json {
    for (std::size_t k = 1; k <= k_max; ++k) {
      const std::size_t n = 2 * k;
      const auto top = static_cast<Letter>(n + 1);
      json w = for_each_permutation(n, [&](const Permutation& pi) -> json {
        const auto s = descent_profile(pi);
        const auto a_top = descent_profile(append_letter(pi, top));
        const auto a_zero = descent_profile(append_letter(pi, 0));
        const auto p_top = descent_profile(prepend_letter(top, pi));
        const auto p_zero = descent_profile(prepend_letter(0, pi));
        const std::pair<const char*, bool> checks[] = {
            {"odes(pi(2k+1)) = odes(pi)", a_top.odes() == s.odes()},
            {"edes(pi(2k+1)) = edes(pi)", a_top.edes() == s.edes()},
            {"odes(pi0) = odes(pi)", a_zero.odes() == s.odes()},
            {"edes(pi0) = edes(pi)+1", a_zero.edes() == s.edes() + 1},
            {"odes((2k+1)pi) = edes(pi)+1", p_top.odes() == s.edes() + 1},
            {"edes((2k+1)pi) = odes(pi)", p_top.edes() == s.odes()},
            {"odes(0pi) = edes(pi)", p_zero.odes() == s.edes()},
            {"edes(0pi) = odes(pi)", p_zero.edes() == s.odes()},
        };
        for (const auto& [what, ok] : checks) {
          if (!ok) return {{"k", k}, {"perm", pi.to_string()}, {"identity", what}};
        }
        return nullptr;
      });
      if (!w.is_null()) return w;
    }
    return nullptr;
  });
}

VerificationReport check_psi_bijection(std::size_t n_max) {
  const std::size_t k_max = n_max / 2;
  return timed("psi-bijection", {1, n_max}, [&]() -> json {
    for (std::size_t k = 1; k <= k_max; ++k) {
      const std::size_t n = 2 * k;
      const auto top = static_cast<Letter>(n + 1);
      std::set<ExtendedWord> image;
      json w = for_each_permutation(n, [&](const Permutation& pi) -> json {
        const Permutation rc = reversal_complement(pi);
        const auto rc_stats = parity_descents(rc.letters());
        for (Letter x : {Letter{0}, top}) {
          const ExtendedWord src = append_letter(pi, x);
          const ExtendedWord dst = psi(src);
          const ExtendedWord expected = prepend_letter(x == 0 ? top : Letter{0}, rc);
          if (dst != expected) {
            return {{"k", k}, {"input", word_string(src)}, {"output", word_string(dst)}, {"reason", "psi(pi x) != y pi^rc"}};
          }
          if (!image.insert(dst).second) {
            return {{"k", k}, {"input", word_string(src)}, {"reason", "psi not injective"}};
          }
          const auto d = parity_descents(dst.letters());
          const unsigned odes_want = rc_stats.even + (x == 0 ? 1U : 0U);
          if (d.odd != odes_want || d.even != rc_stats.odd) {
            return {{"k", k}, {"input", word_string(src)}, {"reason", "statistic transfer"}};
          }
        }
        return nullptr;
      });
      if (!w.is_null()) return w;
      // |S''_2k| = 2 (2k)!, and each image has first letter 0 or 2k+1 followed by
      // a permutation of [2k] (checked above via expected), so the map is onto.
      if (BigInt(image.size()) != 2 * factorial(n)) {
        return {{"k", k}, {"reason", "image size"}, {"size", image.size()}};
      }
    }
    return nullptr;
  });
}

// ---- orbits ---------------------------------------------------------------------

VerificationReport check_orbits(std::size_t n_max, bool odd_pairs) {
  const PairKind kind = odd_pairs ? PairKind::OddPairs : PairKind::EvenPairs;
  return timed(odd_pairs ? "orbits-odd-pairs" : "orbits-even-pairs", {1, n_max}, [&]() -> json {
    for (std::size_t n = 1; n <= n_max; ++n) {
      const std::size_t g = generator_count(n, kind);
      const UniPoly want_sum = UniPoly::one_plus_x_pow(static_cast<Exponent>(g));
      std::size_t representatives = 0;
      json w = for_each_permutation(n, [&](const Permutation& pi) -> json {
        if (canonical_representative(pi, kind) != pi) return nullptr;
        ++representatives;
        const Orbit o = orbit(pi, kind);
        if (o.representative != pi) return {{"n", n}, {"perm", pi.to_string()}, {"reason", "representative"}};
        if (o.members.size() != (std::size_t{1} << g)) {
          return {{"n", n}, {"perm", pi.to_string()}, {"reason", "orbit size"}, {"size", o.members.size()}};
        }
        UniPoly sum;
        for (const Permutation& sigma : o.members) {
          if (canonical_representative(sigma, kind) != pi) {
            return {{"n", n}, {"perm", sigma.to_string()}, {"reason", "representative not unique"}};
          }
          const auto d = parity_descents(sigma.letters());
          sum.add_term(odd_pairs ? d.odd : d.even, 1);
        }
        if (sum != want_sum) {
          return {{"n", n}, {"perm", pi.to_string()}, {"reason", "orbit sum"}, {"sum", sum.to_string()}};
        }
        for (std::size_t mask = 0; mask < (std::size_t{1} << g); ++mask) {
          const auto s = mask_to_set(mask, g);
          const Permutation sigma = odd_pairs ? varphi(pi, s) : phi_even(pi, s);
          const auto d = parity_descents(sigma.letters());
          if ((odd_pairs ? d.odd : d.even) != s.size()) {
            return {{"n", n}, {"perm", pi.to_string()}, {"swaps", set_json(s)}, {"reason", "statistic != |S|"}};
          }
        }
        return nullptr;
      });
      if (!w.is_null()) return w;
      const BigInt want_count = factorial(n) >> g;
      if (BigInt(representatives) != want_count) {
        return {{"n", n}, {"reason", "orbit count"}, {"count", representatives}, {"expected", want_count.str()}};
      }
    }
    return nullptr;
  });
}

VerificationReport check_swap_group_laws(std::size_t n_max) {
  const std::size_t hi = std::min<std::size_t>(n_max, 7);
  return timed("swap-group-laws", {1, hi}, [&]() -> json {
    for (std::size_t n = 1; n <= hi; ++n) {
      for (const PairKind kind : {PairKind::OddPairs, PairKind::EvenPairs}) {
        const std::size_t g = generator_count(n, kind);
        const auto apply = [&](const Permutation& pi, const std::set<std::size_t>& s) {
          return kind == PairKind::OddPairs ? varphi(pi, s) : phi_even(pi, s);
        };
        json w = for_each_permutation(n, [&](const Permutation& pi) -> json {
          for (std::size_t a = 0; a < (std::size_t{1} << g); ++a) {
            const auto s = mask_to_set(a, g);
            const Permutation once = apply(pi, s);
            for (std::size_t b = 0; b < (std::size_t{1} << g); ++b) {
              const auto t = mask_to_set(b, g);
              if (apply(once, t) != apply(pi, mask_to_set(a ^ b, g))) {
                return {{"n", n}, {"perm", pi.to_string()}, {"S", set_json(s)}, {"T", set_json(t)},
                        {"kind", kind == PairKind::OddPairs ? "odd-pairs" : "even-pairs"}};
              }
            }
          }
          return nullptr;
        });
        if (!w.is_null()) return w;
      }
    }
    return nullptr;
  });
}

// ---- diagonal -------------------------------------------------------------------

VerificationReport check_diagonal(std::size_t n_max) {
  return timed("diagonal-eulerian", {1, n_max}, [&]() -> json {
    for (std::size_t n = 1; n <= n_max; ++n) {
      const UniPoly got = diagonal(fast(n));
      const UniPoly want = classical_eulerian(n);
      if (got != want) return {{"n", n}, {"diagonal", got.to_string()}, {"eulerian", want.to_string()}};
    }
    return nullptr;
  });
}

VerificationReport check_count_and_top_monomial(std::size_t n_max) {
  return timed("count-and-top-monomial", {1, n_max}, [&]() -> json {
    for (std::size_t n = 1; n <= n_max; ++n) {
      const BiPoly a = fast(n);
      if (eval(a, 1, 1) != factorial(n)) return {{"n", n}, {"reason", "eval(1,1) != n!"}};
      const auto [tp, tq] = top_monomial(n);
      if (a.coeff(tp, tq) != 1) return {{"n", n}, {"reason", "top coefficient"}};
      for (const auto& [key, c] : a.terms()) {
        if (key.first + key.second >= n - 1 && key != std::make_pair(tp, tq)) {
          return {{"n", n}, {"reason", "extra top-degree monomial"}, {"p", key.first}, {"q", key.second}};
        }
      }
      if (a.total_degree() != n - 1) return {{"n", n}, {"reason", "degree"}};
    }
    return nullptr;
  });
}

}  // namespace refeul
