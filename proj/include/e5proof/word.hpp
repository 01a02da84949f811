#pragma once

// Free group words over a small alphabet.
//
// A letter is a signed generator index: +g is generator g (written with the
// g-th lowercase letter) and -g is its inverse (the matching uppercase
// letter). So with two generators, a = +1, A = -1, b = +2, B = -2.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace e5proof {

using Letter = std::int8_t;

/// Thrown when text input cannot be read as a word or proof word.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : std::runtime_error("position " + std::to_string(position) + ": " + what),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Thrown when an operation is called outside its precondition.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline constexpr Letter inverse(Letter x) noexcept { return static_cast<Letter>(-x); }

/// Rank used for ordering: a < A < b < B < c < ...
inline constexpr int letter_rank(Letter x) noexcept {
  return 2 * ((x < 0 ? -x : x) - 1) + (x < 0 ? 1 : 0);
}

class Alphabet {
 public:
  explicit constexpr Alphabet(int rank = 2) : rank_(rank) {
    if (rank < 1 || rank > 26) throw std::invalid_argument("alphabet rank must be in 1..26");
  }

  constexpr int rank() const noexcept { return rank_; }
  constexpr int letter_count() const noexcept { return 2 * rank_; }

  constexpr bool contains(Letter x) const noexcept {
    return x != 0 && (x < 0 ? -x : x) <= rank_;
  }

  /// Letters in canonical order a, A, b, B, ...
  std::vector<Letter> letters() const {
    std::vector<Letter> out;
    out.reserve(static_cast<std::size_t>(letter_count()));
    for (int g = 1; g <= rank_; ++g) {
      out.push_back(static_cast<Letter>(g));
      out.push_back(static_cast<Letter>(-g));
    }
    return out;
  }

  friend constexpr bool operator==(Alphabet, Alphabet) = default;

 private:
  int rank_;
};

inline constexpr char to_char(Letter x) noexcept {
  return x > 0 ? static_cast<char>('a' + x - 1) : static_cast<char>('A' - x - 1);
}

/// Returns 0 for characters that are not letters.
inline constexpr Letter from_char(char c) noexcept {
  if (c >= 'a' && c <= 'z') return static_cast<Letter>(c - 'a' + 1);
  if (c >= 'A' && c <= 'Z') return static_cast<Letter>(-(c - 'A' + 1));
  return 0;
}

class Word {
 public:
  using value_type = Letter;
  using const_iterator = std::vector<Letter>::const_iterator;

  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
    for (Letter x : letters_)
      if (x == 0) throw std::invalid_argument("zero is not a letter");
  }
  Word(std::initializer_list<int> letters) {
    letters_.reserve(letters.size());
    for (int x : letters) {
      if (x == 0 || x > 26 || x < -26) throw std::invalid_argument("letter out of range");
      letters_.push_back(static_cast<Letter>(x));
    }
  }
  template <class It>
  Word(It first, It last) : letters_(first, last) {}

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }
  const_iterator begin() const noexcept { return letters_.begin(); }
  const_iterator end() const noexcept { return letters_.end(); }
  std::span<const Letter> letters() const noexcept { return letters_; }

  void push_back(Letter x) { letters_.push_back(x); }
  void pop_back() { letters_.pop_back(); }
  void reserve(std::size_t n) { letters_.reserve(n); }
  Word& operator+=(const Word& other) {
    letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
    return *this;
  }

  /// Letters [pos, pos + count).
  Word sub(std::size_t pos, std::size_t count) const {
    return Word(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                letters_.begin() + static_cast<std::ptrdiff_t>(pos + count));
  }

  friend bool operator==(const Word&, const Word&) = default;

  /// Lexicographic in the a < A < b < B order; a proper prefix sorts first.
  friend std::strong_ordering operator<=>(const Word& x, const Word& y) {
    const std::size_t n = std::min(x.size(), y.size());
    for (std::size_t i = 0; i < n; ++i) {
      const int rx = letter_rank(x[i]);
      const int ry = letter_rank(y[i]);
      if (rx != ry) return rx <=> ry;
    }
    return x.size() <=> y.size();
  }

 private:
  std::vector<Letter> letters_;
};

/// Plain concatenation, no reduction.
inline Word operator*(Word x, const Word& y) {
  x += y;
  return x;
}

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    // FNV-1a
    std::uint64_t h = 1469598103934665603ull;
    for (Letter x : w) {
      h ^= static_cast<std::uint8_t>(x);
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

/// Reads a word exactly as written; whitespace is skipped and nothing is
/// cancelled.
inline Word parse_word(std::string_view text, Alphabet alphabet = Alphabet{2}) {
  std::vector<Letter> out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
    const Letter x = from_char(c);
    if (!alphabet.contains(x))
      throw ParseError(i, std::string("invalid character '") + c + "' for alphabet of rank " +
                              std::to_string(alphabet.rank()));
    out.push_back(x);
  }
  return Word(std::move(out));
}

inline std::string to_string(const Word& w) {
  std::string s;
  s.reserve(w.size());
  for (Letter x : w) s.push_back(to_char(x));
  return s;
}

inline bool is_freely_reduced(const Word& w) noexcept {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i] == inverse(w[i - 1])) return false;
  return true;
}

inline bool is_cyclically_reduced(const Word& w) noexcept {
  return is_freely_reduced(w) && (w.size() < 2 || w.front() != inverse(w.back()));
}

/// Single stack pass.
inline Word free_reduce(const Word& w) {
  std::vector<Letter> stack;
  stack.reserve(w.size());
  for (Letter x : w) {
    if (!stack.empty() && stack.back() == inverse(x))
      stack.pop_back();
    else
      stack.push_back(x);
  }
  return Word(stack.begin(), stack.end());
}

/// free_reduce(x * y) where x and y are already freely reduced.
inline Word reduced_product(const Word& x, const Word& y) {
  std::size_t k = 0;
  while (k < x.size() && k < y.size() && x[x.size() - 1 - k] == inverse(y[k])) ++k;
  Word out;
  out.reserve(x.size() + y.size() - 2 * k);
  for (std::size_t i = 0; i + k < x.size(); ++i) out.push_back(x[i]);
  for (std::size_t i = k; i < y.size(); ++i) out.push_back(y[i]);
  return out;
}

inline Word invert(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) out.push_back(inverse(*it));
  return out;
}

/// free_reduce(u^-1 w u)
inline Word conjugate(const Word& w, const Word& u) {
  return free_reduce(invert(u) * w * u);
}

struct CyclicReduction {
  Word core;
  Word conjugator;
};

/// Splits free_reduce(w) as conjugator^-1 * core * conjugator with core
/// cyclically reduced.
inline CyclicReduction cyclic_reduce(const Word& w) {
  const Word r = free_reduce(w);
  std::size_t k = 0;
  while (2 * k + 1 < r.size() && r[k] == inverse(r[r.size() - 1 - k])) ++k;
  CyclicReduction out;
  out.core = r.sub(k, r.size() - 2 * k);
  // r = x1..xk core xk^-1..x1^-1, so the conjugator is the trailing part.
  out.conjugator = r.sub(r.size() - k, k);
  return out;
}

/// Cyclic shift moving the first k letters to the end.
inline Word rotate(const Word& w, std::size_t k) {
  if (w.empty()) return w;
  k %= w.size();
  Word out;
  out.reserve(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out.push_back(w[(i + k) % w.size()]);
  return out;
}

/// Distinct cyclic shifts of a cyclically reduced word, sorted.
inline std::vector<Word> rotations(const Word& w) {
  if (!is_cyclically_reduced(w)) throw ContractViolation("rotations: word is not cyclically reduced");
  std::vector<Word> out;
  out.reserve(w.size());
  for (std::size_t k = 0; k < w.size(); ++k) out.push_back(rotate(w, k));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (out.empty()) out.emplace_back();
  return out;
}

inline Word power(const Word& w, int e) {
  if (e < 1) throw std::invalid_argument("power: exponent must be positive");
  Word out;
  out.reserve(w.size() * static_cast<std::size_t>(e));
  for (int i = 0; i < e; ++i) out += w;
  return out;
}

/// Least rotation in the a < A < b < B order; used as a key for cyclic words.
inline Word least_rotation(const Word& w) {
  const std::size_t n = w.size();
  if (n < 2) return w;
  std::size_t i = 0, j = 1, k = 0;
  while (i < n && j < n && k < n) {
    const int x = letter_rank(w[(i + k) % n]);
    const int y = letter_rank(w[(j + k) % n]);
    if (x == y) {
      ++k;
      continue;
    }
    if (x > y)
      i += k + 1;
    else
      j += k + 1;
    if (i == j) ++j;
    k = 0;
  }
  return rotate(w, std::min(i, j));
}

}  // namespace e5proof
