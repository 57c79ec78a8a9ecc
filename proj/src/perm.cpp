#include "refeul/perm.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace refeul {

ExtendedWord::ExtendedWord(std::vector<Letter> letters) : letters_(std::move(letters)) {
  std::unordered_set<Letter> seen;
  for (Letter x : letters_) {
    if (!seen.insert(x).second) {
      throw std::invalid_argument("word has repeated letter " + std::to_string(x));
    }
  }
}

Permutation::Permutation(std::vector<Letter> letters) : letters_(std::move(letters)) {
  const std::size_t n = letters_.size();
  if (n == 0) throw std::invalid_argument("permutation must have at least one letter");
  std::vector<bool> used(n + 1, false);
  for (Letter x : letters_) {
    if (x < 1 || x > n) {
      throw std::invalid_argument("letter " + std::to_string(x) + " outside [1," + std::to_string(n) + "]");
    }
    if (used[x]) throw std::invalid_argument("letter " + std::to_string(x) + " repeated");
    used[x] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  if (n == 0) throw std::invalid_argument("permutation must have at least one letter");
  std::vector<Letter> v(n);
  std::iota(v.begin(), v.end(), Letter{1});
  return Permutation(std::move(v), Unchecked{});
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<Letter> letters;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string_view tok = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    while (!tok.empty() && (tok.front() == ' ' || tok.front() == '\t')) tok.remove_prefix(1);
    while (!tok.empty() && (tok.back() == ' ' || tok.back() == '\t')) tok.remove_suffix(1);
    if (tok.empty()) throw std::invalid_argument("empty entry in permutation '" + std::string(text) + "'");
    Letter value = 0;
    auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || end != tok.data() + tok.size()) {
      throw std::invalid_argument("not a positive integer: '" + std::string(tok) + "'");
    }
    letters.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Permutation(std::move(letters));
}

bool Permutation::next() { return std::next_permutation(letters_.begin(), letters_.end()); }

std::string Permutation::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(letters_[i]);
  }
  return out;
}

DescentProfile descent_profile(std::span<const Letter> word) {
  DescentProfile prof;
  for (std::size_t i = 1; i < word.size(); ++i) {
    const bool descent = word[i - 1] > word[i];
    const bool odd = (i % 2) == 1;
    if (descent) {
      (odd ? prof.odes_set : prof.edes_set).insert(i);
    } else {
      (odd ? prof.oasc_set : prof.easc_set).insert(i);
    }
  }
  return prof;
}

ParityDescents parity_descents(std::span<const Letter> word) {
  ParityDescents d;
  for (std::size_t i = 1; i < word.size(); ++i) {
    if (word[i - 1] > word[i]) {
      if (i & 1U) {
        ++d.odd;
      } else {
        ++d.even;
      }
    }
  }
  return d;
}

Permutation reversal(const Permutation& pi) {
  std::vector<Letter> v(pi.letters_.rbegin(), pi.letters_.rend());
  return Permutation(std::move(v), Permutation::Unchecked{});
}

Permutation complement(const Permutation& pi) {
  const auto n = static_cast<Letter>(pi.size());
  std::vector<Letter> v;
  v.reserve(n);
  for (Letter x : pi.letters_) v.push_back(n + 1 - x);
  return Permutation(std::move(v), Permutation::Unchecked{});
}

Permutation reversal_complement(const Permutation& pi) { return complement(reversal(pi)); }

ExtendedWord append_letter(const Permutation& pi, Letter x) {
  std::vector<Letter> v(pi.letters().begin(), pi.letters().end());
  v.push_back(x);
  return ExtendedWord(std::move(v));
}

ExtendedWord prepend_letter(Letter x, const Permutation& pi) {
  std::vector<Letter> v;
  v.reserve(pi.size() + 1);
  v.push_back(x);
  v.insert(v.end(), pi.letters().begin(), pi.letters().end());
  return ExtendedWord(std::move(v));
}

ExtendedWord psi(const ExtendedWord& w) {
  const std::size_t len = w.size();
  if (len < 3 || len % 2 == 0) {
    throw std::invalid_argument("psi expects a word of odd length 2k+1 with k >= 1");
  }
  const auto top = static_cast<Letter>(len);  // 2k+1
  const Letter last = w.letters().back();
  if (last != 0 && last != top) {
    throw std::invalid_argument("psi expects last letter 0 or " + std::to_string(top) + ", got " +
                                std::to_string(last));
  }
  std::vector<Letter> prefix(w.letters().begin(), w.letters().end() - 1);
  const Permutation pi(std::move(prefix));  // throws unless a permutation of [2k]

  std::vector<Letter> out;
  out.reserve(len);
  out.push_back(last == 0 ? top : Letter{0});
  for (auto it = pi.letters().rbegin(); it != pi.letters().rend(); ++it) out.push_back(top - *it);
  return ExtendedWord(std::move(out));
}

namespace {

void check_swaps(const std::set<std::size_t>& swaps, std::size_t limit, const char* what) {
  for (std::size_t i : swaps) {
    if (i < 1 || i > limit) {
      throw std::out_of_range(std::string(what) + ": swap index " + std::to_string(i) + " outside [1," +
                              std::to_string(limit) + "]");
    }
  }
}

}  // namespace

Permutation varphi(const Permutation& pi, const std::set<std::size_t>& swaps) {
  check_swaps(swaps, pi.size() / 2, "varphi");
  std::vector<Letter> v = pi.letters_;
  for (std::size_t i : swaps) std::swap(v[2 * i - 2], v[2 * i - 1]);
  return Permutation(std::move(v), Permutation::Unchecked{});
}

Permutation phi_even(const Permutation& pi, const std::set<std::size_t>& swaps) {
  check_swaps(swaps, (pi.size() - 1) / 2, "phi_even");
  std::vector<Letter> v = pi.letters_;
  for (std::size_t i : swaps) std::swap(v[2 * i - 1], v[2 * i]);
  return Permutation(std::move(v), Permutation::Unchecked{});
}

std::size_t generator_count(std::size_t n, PairKind kind) {
  return kind == PairKind::OddPairs ? n / 2 : (n - 1) / 2;
}

namespace {

// First position (1-based) of generator i.
std::size_t pair_start(std::size_t i, PairKind kind) { return kind == PairKind::OddPairs ? 2 * i - 1 : 2 * i; }

Permutation apply_swaps(const Permutation& pi, const std::set<std::size_t>& s, PairKind kind) {
  return kind == PairKind::OddPairs ? varphi(pi, s) : phi_even(pi, s);
}

}  // namespace

Permutation canonical_representative(const Permutation& pi, PairKind kind) {
  std::set<std::size_t> flips;
  const std::size_t g = generator_count(pi.size(), kind);
  for (std::size_t i = 1; i <= g; ++i) {
    const std::size_t a = pair_start(i, kind);
    if (pi.at(a) > pi.at(a + 1)) flips.insert(i);
  }
  return apply_swaps(pi, flips, kind);
}

Orbit orbit(const Permutation& pi, PairKind kind) {
  const std::size_t g = generator_count(pi.size(), kind);
  if (g >= 8 * sizeof(std::size_t) - 1) throw std::length_error("orbit too large to materialize");
  Orbit out{{}, canonical_representative(pi, kind)};
  for (std::size_t mask = 0; mask < (std::size_t{1} << g); ++mask) {
    std::set<std::size_t> s;
    for (std::size_t i = 0; i < g; ++i) {
      if (mask >> i & 1U) s.insert(i + 1);
    }
    out.members.insert(apply_swaps(out.representative, s, kind));
  }
  return out;
}

}  // namespace refeul
