#pragma once

// Commutators and left-normed Engel words E_1 = [a,b], E_n = [E_{n-1}, b].

#include <stdexcept>

#include "e5proof/word.hpp"

namespace e5proof {

/// [x,y] = x^-1 y^-1 x y, freely reduced.
inline Word commutator(const Word& x, const Word& y) {
  return free_reduce(invert(x) * invert(y) * x * y);
}

/// E_n written out without any cancellation; its length is 4, 10, 22, 46, 94, ...
inline Word engel_expansion(int n) {
  if (n < 1) throw std::domain_error("engel word index must be at least 1");
  const Word a{1};
  const Word b{2};
  Word e = invert(a) * invert(b) * a * b;
  for (int i = 2; i <= n; ++i) e = invert(e) * invert(b) * e * b;
  return e;
}

inline Word engel_word(int n) {
  if (n < 1) throw std::domain_error("engel word index must be at least 1");
  const Word b{2};
  Word e = commutator(Word{1}, b);
  for (int i = 2; i <= n; ++i) e = commutator(e, b);
  return e;
}

/// The cyclically reduced core of an Engel word, and the conjugator that
/// turns a proof for the core back into a proof for the word itself.
struct EngelTarget {
  Word core;
  Word outer_conjugator;
};

inline EngelTarget engel_target(int n = 5) {
  auto [core, conjugator] = cyclic_reduce(engel_word(n));
  return {std::move(core), std::move(conjugator)};
}

}  // namespace e5proof
