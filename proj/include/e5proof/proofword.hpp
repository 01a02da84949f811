#pragma once

// Proof words: products of conjugated relators, written in the standard
// parenthesized form
//
//   w1 (r1) w2 (r2) ... wN (rN) wN+1
//
// where the wi are freely reduced conjugating strings and every ri is a
// power of a cyclically reduced base word. The parentheses are markup only.

#include <algorithm>
#include <cstddef>
#include <cstdio>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "e5proof/bracelets.hpp"
#include "e5proof/word.hpp"

namespace e5proof {

/// If r = base^e with base cyclically reduced, returns base.
inline std::optional<Word> power_base(const Word& r, int e) {
  if (e < 1 || r.empty() || r.size() % static_cast<std::size_t>(e) != 0) return std::nullopt;
  const std::size_t n = r.size() / static_cast<std::size_t>(e);
  for (std::size_t i = n; i < r.size(); ++i)
    if (r[i] != r[i - n]) return std::nullopt;
  Word base = r.sub(0, n);
  if (!is_cyclically_reduced(base)) return std::nullopt;
  return base;
}

// ---------------------------------------------------------------------------
// Relator sets

/// The e-th powers of a set of base words, closed under rotation and inversion.
class RelatorSet {
 public:
  RelatorSet(int exponent, std::vector<Word> bases, std::vector<Word> members)
      : exponent_(exponent), bases_(std::move(bases)), members_(std::move(members)),
        member_index_(members_.begin(), members_.end()) {}

  int exponent() const noexcept { return exponent_; }
  /// Canonical bracelet representatives, sorted.
  const std::vector<Word>& bases() const noexcept { return bases_; }
  /// Every rotation of every base^e and of its inverse, sorted.
  const std::vector<Word>& members() const noexcept { return members_; }

  bool is_member(const Word& w) const { return member_index_.contains(w); }

  /// Structural membership: w = base^e with base in one of the classes.
  bool contains(const Word& w) const {
    auto base = power_base(w, exponent_);
    if (!base) return false;
    return std::binary_search(bases_.begin(), bases_.end(), bracelet_canon(*base));
  }

 private:
  int exponent_;
  std::vector<Word> bases_;
  std::vector<Word> members_;
  std::unordered_set<Word, WordHash> member_index_;
};

inline RelatorSet symmetrize(std::span<const Word> bases, int e) {
  if (e < 1) throw std::invalid_argument("symmetrize: exponent must be positive");
  std::set<Word> classes;
  for (const Word& b : bases) {
    if (b.empty() || !is_cyclically_reduced(b))
      throw ContractViolation("symmetrize: base word " + to_string(b) + " is not cyclically reduced");
    classes.insert(bracelet_canon(b));
  }
  std::set<Word> members;
  for (const Word& b : classes) {
    for (const Word& orientation : {b, invert(b)}) {
      for (Word& r : rotations(power(orientation, e))) members.insert(std::move(r));
    }
  }
  return RelatorSet(e, std::vector<Word>(classes.begin(), classes.end()),
                    std::vector<Word>(members.begin(), members.end()));
}

inline RelatorSet symmetrize(const std::vector<Word>& bases, int e) {
  return symmetrize(std::span<const Word>(bases), e);
}

// ---------------------------------------------------------------------------
// Proof words

class ProofWord {
 public:
  ProofWord() : conjugators_(1) {}

  /// conjugators.size() must be relators.size() + 1.
  ProofWord(std::vector<Word> conjugators, std::vector<Word> relators)
      : conjugators_(std::move(conjugators)), relators_(std::move(relators)) {
    if (conjugators_.size() != relators_.size() + 1)
      throw std::invalid_argument("proof word needs one more conjugating segment than relators");
    for (const Word& w : conjugators_)
      if (!is_freely_reduced(w))
        throw std::invalid_argument("conjugating segment " + to_string(w) + " is not freely reduced");
    for (const Word& r : relators_)
      if (r.empty()) throw std::invalid_argument("empty relator segment");
  }

  std::size_t relator_count() const noexcept { return relators_.size(); }
  const std::vector<Word>& conjugators() const noexcept { return conjugators_; }
  const std::vector<Word>& relators() const noexcept { return relators_; }

  friend bool operator==(const ProofWord&, const ProofWord&) = default;

 private:
  std::vector<Word> conjugators_;
  std::vector<Word> relators_;
};

/// Reads the parenthesized notation. Whitespace is ignored and lines whose
/// first non-blank character is '#' are comments.
inline ProofWord parse_proof(std::string_view text, Alphabet alphabet = Alphabet{2}) {
  std::vector<Word> conjugators;
  std::vector<Word> relators;
  Word current;
  bool inside = false;
  bool line_start = true;
  std::size_t open_pos = 0;

  auto close_conjugator = [&](std::size_t pos) {
    if (!is_freely_reduced(current))
      throw ParseError(pos, "conjugating segment " + to_string(current) + " is not freely reduced");
    conjugators.push_back(std::move(current));
    current = Word{};
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '\n') {
      line_start = true;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') continue;
    if (line_start && c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    line_start = false;
    if (c == '(') {
      if (inside) throw ParseError(i, "nested '('");
      close_conjugator(i);
      inside = true;
      open_pos = i;
    } else if (c == ')') {
      if (!inside) throw ParseError(i, "unmatched ')'");
      if (current.empty()) throw ParseError(i, "empty relator");
      relators.push_back(std::move(current));
      current = Word{};
      inside = false;
    } else {
      const Letter x = from_char(c);
      if (!alphabet.contains(x))
        throw ParseError(i, std::string("invalid character '") + c + "'");
      current.push_back(x);
    }
  }
  if (inside) throw ParseError(open_pos, "unclosed '('");
  close_conjugator(text.size());
  return ProofWord(std::move(conjugators), std::move(relators));
}

inline std::string to_string(const ProofWord& p) {
  std::string s;
  for (std::size_t i = 0; i < p.relator_count(); ++i) {
    s += to_string(p.conjugators()[i]);
    s += '(';
    s += to_string(p.relators()[i]);
    s += ')';
  }
  s += to_string(p.conjugators().back());
  return s;
}

/// All segments concatenated and freely reduced.
inline Word flatten(const ProofWord& p) {
  Word all;
  for (std::size_t i = 0; i < p.relator_count(); ++i) {
    all += p.conjugators()[i];
    all += p.relators()[i];
  }
  all += p.conjugators().back();
  return free_reduce(all);
}

/// What is left after deleting the relators, freely reduced.
inline Word excision_word(const ProofWord& p) {
  Word all;
  for (const Word& w : p.conjugators()) all += w;
  return free_reduce(all);
}

// ---------------------------------------------------------------------------
// Verification

struct VerifyReport {
  bool flattens_to_target = false;
  bool every_segment_is_relator = false;
  bool excision_trivial = false;
  Word flattened;
  Word excision;
  std::vector<std::string> diagnostics;

  bool valid() const noexcept {
    return flattens_to_target && every_segment_is_relator && excision_trivial;
  }
};

namespace detail {

template <class IsRelator>
VerifyReport verify_with(const ProofWord& p, const Word& target, IsRelator&& is_relator) {
  VerifyReport report;
  report.flattened = flatten(p);
  report.flattens_to_target = report.flattened == free_reduce(target);
  if (!report.flattens_to_target)
    report.diagnostics.push_back("flattened word " + to_string(report.flattened) +
                                 " differs from target " + to_string(free_reduce(target)));
  report.every_segment_is_relator = true;
  for (std::size_t i = 0; i < p.relator_count(); ++i) {
    if (!is_relator(p.relators()[i])) {
      report.every_segment_is_relator = false;
      report.diagnostics.push_back("segment " + std::to_string(i + 1) + " (" +
                                   to_string(p.relators()[i]) + ") is not a relator");
    }
  }
  report.excision = excision_word(p);
  report.excision_trivial = report.excision.empty();
  if (!report.excision_trivial)
    report.diagnostics.push_back("excision leaves " + to_string(report.excision));
  return report;
}

}  // namespace detail

/// Relators must belong to the given set.
inline VerifyReport verify(const ProofWord& p, const Word& target, const RelatorSet& relators) {
  return detail::verify_with(p, target, [&](const Word& r) { return relators.contains(r); });
}

/// Relators may be any e-th power of a cyclically reduced word.
inline VerifyReport verify(const ProofWord& p, const Word& target, int exponent) {
  return detail::verify_with(p, target,
                             [&](const Word& r) { return power_base(r, exponent).has_value(); });
}

// ---------------------------------------------------------------------------
// Folding

/// Absorbs every x (r) x^-1 pattern whose free reduction is a rotation of r.
inline ProofWord fold(const ProofWord& p) {
  std::vector<Word> conj = p.conjugators();
  std::vector<Word> rels = p.relators();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < rels.size(); ++i) {
      for (;;) {
        Word& left = conj[i];
        Word& right = conj[i + 1];
        if (left.empty() || right.empty() || right.front() != inverse(left.back())) break;
        const Letter x = left.back();
        const Word& r = rels[i];
        Word rotated;
        if (r.back() == x) {
          rotated.push_back(x);
          rotated += r.sub(0, r.size() - 1);
        } else if (r.front() == inverse(x)) {
          rotated = r.sub(1, r.size() - 1);
          rotated.push_back(inverse(x));
        } else {
          break;
        }
        rels[i] = std::move(rotated);
        left.pop_back();
        right = right.sub(1, right.size() - 1);
        changed = true;
      }
    }
  }
  return ProofWord(std::move(conj), std::move(rels));
}

// ---------------------------------------------------------------------------
// Statistics

/// num/den rounded half up to two decimals.
inline std::string format_ratio(std::size_t num, std::size_t den) {
  if (den == 0) return "0.00";
  const std::size_t hundredths = (200 * num + den) / (2 * den);
  char buf[32];
  std::snprintf(buf, sizeof buf, "%zu.%02zu", hundredths / 100, hundredths % 100);
  return buf;
}

struct ProofStats {
  int exponent = 1;
  std::size_t overall_length = 0;  // includes parentheses
  std::size_t relator_count = 0;
  std::size_t relator_length_sum = 0;
  std::size_t conjugating_symbols = 0;
  std::size_t conjugating_pairs = 0;
  std::size_t distinct_relators = 0;  // base-word bracelet classes

  std::string mean_base_length() const {
    return format_ratio(relator_length_sum / static_cast<std::size_t>(exponent), relator_count);
  }
  std::string pairs_per_relator() const { return format_ratio(conjugating_pairs, relator_count); }
};

/// gcd over relators of the exponent of each relator over its primitive root.
inline int infer_exponent(const ProofWord& p) {
  std::size_t g = 0;
  for (const Word& r : p.relators()) g = std::gcd(g, r.size() / primitive_root(r).size());
  return g == 0 ? 1 : static_cast<int>(g);
}

inline Word relator_base(const Word& r, int exponent) {
  auto base = power_base(r, exponent);
  if (!base)
    throw std::invalid_argument("relator " + to_string(r) + " is not a power of exponent " +
                                std::to_string(exponent));
  return *base;
}

inline ProofStats stats(const ProofWord& p, int exponent) {
  ProofStats s;
  s.exponent = exponent;
  s.relator_count = p.relator_count();
  std::set<Word> classes;
  for (const Word& r : p.relators()) {
    s.relator_length_sum += r.size();
    classes.insert(bracelet_canon(relator_base(r, exponent)));
  }
  for (const Word& w : p.conjugators()) s.conjugating_symbols += w.size();
  s.conjugating_pairs = s.conjugating_symbols / 2;
  s.overall_length = to_string(p).size();
  s.distinct_relators = classes.size();
  return s;
}

inline ProofStats stats(const ProofWord& p) { return stats(p, infer_exponent(p)); }

/// One line per statistic, labelled as in the usual summary table.
inline std::string format_stats(const ProofStats& s) {
  std::string out;
  out += "overall length " + std::to_string(s.overall_length) + "\n";
  out += "count of relators " + std::to_string(s.relator_count) + "\n";
  out += "sum of relator lengths " + std::to_string(s.relator_length_sum) + "\n";
  out += "mean base word length " + s.mean_base_length() + "\n";
  out += "conjugating pairs " + std::to_string(s.conjugating_pairs) + "\n";
  out += "pairs per relator " + s.pairs_per_relator() + "\n";
  out += "distinct relators " + std::to_string(s.distinct_relators) + "\n";
  return out;
}

/// The relators implicit in a proof: base^e for each distinct base class.
inline std::vector<Word> distinct_presentation(const ProofWord& p, int exponent) {
  std::set<Word> classes;
  for (const Word& r : p.relators()) classes.insert(bracelet_canon(relator_base(r, exponent)));
  std::vector<Word> out;
  out.reserve(classes.size());
  for (const Word& b : classes) out.push_back(power(b, exponent));
  return out;
}

inline std::vector<Word> distinct_presentation(const ProofWord& p) {
  return distinct_presentation(p, infer_exponent(p));
}

}  // namespace e5proof
