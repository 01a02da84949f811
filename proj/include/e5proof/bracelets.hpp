#pragma once

// Reduced bracelets: classes of freely and cyclically reduced words under
// rotation and inversion. The canonical representative of a class is its
// least member in the a < A < b < B order.

#include <cstddef>
#include <vector>

#include "e5proof/word.hpp"

namespace e5proof {

struct BraceletClass {
  Word canonical;
  std::size_t length = 0;

  friend bool operator==(const BraceletClass&, const BraceletClass&) = default;
};

inline Word bracelet_canon(const Word& w) {
  if (w.empty() || !is_cyclically_reduced(w))
    throw ContractViolation("bracelet_canon: word must be non-empty and cyclically reduced");
  Word best = least_rotation(w);
  Word other = least_rotation(invert(w));
  return other < best ? other : best;
}

/// True iff w = v^k for some k >= 2.
inline bool is_proper_power(const Word& w) {
  const std::size_t n = w.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = d; i < n && periodic; ++i) periodic = w[i] == w[i - d];
    if (periodic) return true;
  }
  return false;
}

/// Smallest v with w = v^k.
inline Word primitive_root(const Word& w) {
  const std::size_t n = w.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = d; i < n && periodic; ++i) periodic = w[i] == w[i - d];
    if (periodic) return w.sub(0, d);
  }
  return w;
}

namespace detail {

template <class Visit>
void extend_reduced(const std::vector<Letter>& letters, std::size_t length, Word& prefix,
                    Visit& visit) {
  if (prefix.size() == length) {
    if (length < 2 || prefix.front() != inverse(prefix.back())) visit(prefix);
    return;
  }
  for (Letter x : letters) {
    if (!prefix.empty() && x == inverse(prefix.back())) continue;
    // A canonical word starts with the least letter found in it or its inverse.
    if (!prefix.empty() && (letter_rank(x) < letter_rank(prefix.front()) ||
                            letter_rank(inverse(x)) < letter_rank(prefix.front())))
      continue;
    prefix.push_back(x);
    extend_reduced(letters, length, prefix, visit);
    prefix.pop_back();
  }
}

}  // namespace detail

/// One representative per class, in increasing order.
inline std::vector<BraceletClass> enumerate_reduced_bracelets(Alphabet alphabet,
                                                              std::size_t length) {
  std::vector<BraceletClass> out;
  if (length == 0) return out;
  const auto letters = alphabet.letters();
  Word prefix;
  prefix.reserve(length);
  auto visit = [&](const Word& w) {
    if (bracelet_canon(w) == w) out.push_back({w, length});
  };
  detail::extend_reduced(letters, length, prefix, visit);
  return out;
}

/// Reduced bracelets that are not proper powers.
inline std::vector<BraceletClass> enumerate_lyndon(Alphabet alphabet, std::size_t length) {
  auto all = enumerate_reduced_bracelets(alphabet, length);
  std::erase_if(all, [](const BraceletClass& c) { return is_proper_power(c.canonical); });
  return all;
}

/// Classes of lengths 1..max_length, shortest first.
inline std::vector<BraceletClass> enumerate_up_to(Alphabet alphabet, std::size_t max_length,
                                                  bool lyndon_only) {
  std::vector<BraceletClass> out;
  for (std::size_t n = 1; n <= max_length; ++n) {
    auto level = lyndon_only ? enumerate_lyndon(alphabet, n) : enumerate_reduced_bracelets(alphabet, n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

inline std::vector<Word> canonical_words(const std::vector<BraceletClass>& classes) {
  std::vector<Word> out;
  out.reserve(classes.size());
  for (const auto& c : classes) out.push_back(c.canonical);
  return out;
}

}  // namespace e5proof
