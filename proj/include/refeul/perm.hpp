#pragma once

// Permutations, extended words and the parity-refined descent statistics.
//
// Positions are 1-based throughout: for a word w = w_1 w_2 ... w_m, index i
// in [m-1] is a descent when w_i > w_{i+1}, and it is odd or even by the
// parity of i. The storage is a 0-based vector; only the public index
// arguments (swap sets, descent sets) use the 1-based convention.

#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace refeul {

using Letter = std::uint32_t;

/// A word of pairwise distinct non-negative letters. Used for S_n itself
/// and for the boundary-extended words pi(2k+1), pi0, (2k+1)pi, 0pi.
class ExtendedWord {
 public:
  ExtendedWord() = default;
  /// Throws std::invalid_argument if a letter repeats.
  explicit ExtendedWord(std::vector<Letter> letters);

  std::span<const Letter> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  /// 1-based access.
  Letter at(std::size_t pos) const { return letters_.at(pos - 1); }

  auto operator<=>(const ExtendedWord&) const = default;

 private:
  std::vector<Letter> letters_;
};

/// A bijection [n] -> [n] in one-line notation.
class Permutation {
 public:
  /// Throws std::invalid_argument unless letters is a bijection onto {1..n}, n >= 1.
  explicit Permutation(std::vector<Letter> letters);

  static Permutation identity(std::size_t n);
  /// Parses "3,1,4,2" (whitespace around commas tolerated).
  static Permutation parse(std::string_view text);

  std::size_t size() const { return letters_.size(); }
  std::span<const Letter> letters() const { return letters_; }
  Letter at(std::size_t pos) const { return letters_.at(pos - 1); }

  ExtendedWord as_word() const { return ExtendedWord(letters_); }
  /// Lexicographic successor; returns false (and leaves *this unchanged) at
  /// the last permutation.
  bool next();

  std::string to_string() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  struct Unchecked {};
  Permutation(std::vector<Letter> letters, Unchecked) : letters_(std::move(letters)) {}

  std::vector<Letter> letters_;

  friend Permutation reversal(const Permutation&);
  friend Permutation complement(const Permutation&);
  friend Permutation varphi(const Permutation&, const std::set<std::size_t>&);
  friend Permutation phi_even(const Permutation&, const std::set<std::size_t>&);
};

/// Odes/Edes/Oasc/Easc of a word as sets of 1-based positions.
struct DescentProfile {
  std::set<std::size_t> odes_set;
  std::set<std::size_t> edes_set;
  std::set<std::size_t> oasc_set;
  std::set<std::size_t> easc_set;

  std::size_t odes() const { return odes_set.size(); }
  std::size_t edes() const { return edes_set.size(); }
  std::size_t oasc() const { return oasc_set.size(); }
  std::size_t easc() const { return easc_set.size(); }
};

DescentProfile descent_profile(std::span<const Letter> word);
inline DescentProfile descent_profile(const ExtendedWord& w) { return descent_profile(w.letters()); }
inline DescentProfile descent_profile(const Permutation& p) { return descent_profile(p.letters()); }

/// (odes, edes) without materializing the position sets. Hot path of the
/// brute-force enumerator.
struct ParityDescents {
  unsigned odd = 0;
  unsigned even = 0;
};
ParityDescents parity_descents(std::span<const Letter> word);

Permutation reversal(const Permutation& pi);
Permutation complement(const Permutation& pi);
Permutation reversal_complement(const Permutation& pi);

/// Boundary extensions of pi in S_{2k}: append or prepend a letter.
ExtendedWord append_letter(const Permutation& pi, Letter x);
ExtendedWord prepend_letter(Letter x, const Permutation& pi);

/// The map S'_{2k} -> S''_{2k}:
///   pi 0      -> (2k+1) (2k+1-pi_{2k}) ... (2k+1-pi_1)
///   pi (2k+1) -> 0      (2k+1-pi_{2k}) ... (2k+1-pi_1)
/// Throws std::invalid_argument for anything outside S'_{2k}.
ExtendedWord psi(const ExtendedWord& w);

/// Swap positions (2i-1, 2i) for each i in swaps, 1 <= i <= floor(n/2).
/// Throws std::out_of_range on a bad index.
Permutation varphi(const Permutation& pi, const std::set<std::size_t>& swaps);
/// Swap positions (2i, 2i+1) for each i in swaps, 1 <= i <= floor((n-1)/2).
Permutation phi_even(const Permutation& pi, const std::set<std::size_t>& swaps);

enum class PairKind { OddPairs, EvenPairs };

/// Number of commuting swap generators: floor(n/2) or floor((n-1)/2).
std::size_t generator_count(std::size_t n, PairKind kind);

struct Orbit {
  std::set<Permutation> members;
  /// Unique member increasing on every swapped pair.
  Permutation representative;
};

Orbit orbit(const Permutation& pi, PairKind kind);

/// Orbit representative without materializing the orbit.
Permutation canonical_representative(const Permutation& pi, PairKind kind);

}  // namespace refeul
