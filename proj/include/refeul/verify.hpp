#pragma once

// Executable forms of the palindromicity theorem, the univariate closed
// forms, the bijections behind them, and the diagonal cross-check. Each
// check returns a VerificationReport; a failure carries the first witness.

#include <cstddef>
#include <string_view>
#include <vector>

#include "refeul/report.hpp"

namespace refeul {

enum class Suite { Palindromic, ClosedForm, Psi, Orbits, Diagonal, All };

/// Throws std::invalid_argument for an unknown name.
Suite parse_suite(std::string_view name);
std::string_view suite_name(Suite s);

/// Largest n_max accepted for a suite. Exhaustive suites enumerate S_n.
std::size_t suite_cap(Suite s);

/// Runs every check of the suite over n = 1..n_max. Throws
/// std::out_of_range if n_max is 0 or exceeds suite_cap.
std::vector<VerificationReport> run_suite(Suite s, std::size_t n_max);

// Individual checks, each over n (or k) = 1..n_max.

/// is_palindromic(a_tilde(n), n/2) with A_n from the DP.
VerificationReport check_palindromic_fast(std::size_t n_max);
/// Same with A_n by enumeration, n <= min(n_max, brute cap).
VerificationReport check_palindromic_brute(std::size_t n_max);
/// A_n = p^(n/2) q^((n-1)/2) A_n(1/p, 1/q).
VerificationReport check_reciprocal_identity(std::size_t n_max);
/// swap_vars(a_tilde(2k)) = a_tilde(2k).
VerificationReport check_even_swap_symmetry(std::size_t n_max);

VerificationReport check_closed_form_odes(std::size_t n_max);
VerificationReport check_closed_form_edes(std::size_t n_max);

/// odes(pi) + odes(pi^c) = n/2 and edes(pi) + edes(pi^c) = (n-1)/2.
VerificationReport check_complement_duality(std::size_t n_max);
/// odes(pi^rc) = edes(pi), edes(pi^rc) = odes(pi) for odd n.
VerificationReport check_rc_swap(std::size_t n_max);
/// The eight statistic identities for pi(2k+1), pi0, (2k+1)pi, 0pi, 2k <= n_max.
VerificationReport check_boundary_identities(std::size_t n_max);
/// psi maps S'_2k bijectively onto S''_2k and transfers the statistics.
VerificationReport check_psi_bijection(std::size_t n_max);

/// Orbit sizes, sums, per-member statistics and representative counts
/// for the odd-pair or even-pair action.
VerificationReport check_orbits(std::size_t n_max, bool odd_pairs);
/// Involution and composition law phi_S phi_T = phi_{S xor T}.
VerificationReport check_swap_group_laws(std::size_t n_max);

/// diagonal(fast(n)) equals the classical Eulerian polynomial.
VerificationReport check_diagonal(std::size_t n_max);
/// eval(A_n, 1, 1) = n! and the top monomial is p^(n/2) q^((n-1)/2), coefficient 1.
VerificationReport check_count_and_top_monomial(std::size_t n_max);

}  // namespace refeul
