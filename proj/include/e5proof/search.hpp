#pragma once

// Proof search by reduction to the empty word.
//
// Starting from T^-1 we apply two kinds of move: conjugation by a single
// letter (w -> x^-1 w x) and appending a relator (w -> w r). A sequence of
// moves that reaches the empty word is a certificate that T lies in the
// normal closure of the relators, and can be rewritten as a proof word for T
// (reconstruct). Conversely every valid proof word yields such a sequence
// (decompile).
//
// The search itself is a beam search over cyclically reduced states. One
// step rotates the state (a run of conjugations), appends a relator that
// cancels against the new suffix, and cyclically reduces the result (more
// conjugations). States are ranked by length, then by moves used, then
// lexicographically.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_set>
#include <vector>

#include "e5proof/proofword.hpp"
#include "e5proof/word.hpp"

namespace e5proof {

struct Move {
  enum class Kind : std::uint8_t { conjugate, append };

  Kind kind = Kind::conjugate;
  Letter letter = 0;  // conjugate
  Word relator;       // append

  static Move conjugate_by(Letter x) { return Move{Kind::conjugate, x, {}}; }
  static Move append(Word r) { return Move{Kind::append, 0, std::move(r)}; }

  friend bool operator==(const Move&, const Move&) = default;
};

struct MoveLog {
  Word start;
  std::vector<Move> moves;

  std::size_t append_count() const {
    return static_cast<std::size_t>(std::count_if(
        moves.begin(), moves.end(), [](const Move& m) { return m.kind == Move::Kind::append; }));
  }

  friend bool operator==(const MoveLog&, const MoveLog&) = default;
};

/// w must be freely reduced.
inline Word apply_move(const Word& w, const Move& m) {
  if (m.kind == Move::Kind::append) return reduced_product(w, m.relator);
  const Word x{m.letter};
  return reduced_product(reduced_product(invert(x), w), x);
}

inline Word replay(const MoveLog& log) {
  Word w = free_reduce(log.start);
  for (const Move& m : log.moves) w = apply_move(w, m);
  return w;
}

/// "c:a" for a conjugation, "r:aaaa" for an append; space separated.
inline std::string to_string(const MoveLog& log) {
  std::string s = "start " + to_string(log.start);
  for (const Move& m : log.moves) {
    s += m.kind == Move::Kind::conjugate ? " c:" : " r:";
    s += m.kind == Move::Kind::conjugate ? std::string(1, to_char(m.letter)) : to_string(m.relator);
  }
  return s;
}

struct SearchConfig {
  std::size_t beam_width = 1000;
  /// Relator appends allowed in one attempt.
  std::size_t max_moves = 64;
  /// 0 means four times the target length.
  std::size_t max_word_length = 0;
  /// How much one append may lengthen the state. 0 demands that at least
  /// half of the relator cancels; states shorter than the relator are exempt.
  std::size_t max_growth = 0;
  std::size_t restarts = 0;
  std::uint64_t seed = 1;
  /// When set, each attempt draws this many base words at random.
  std::optional<std::size_t> base_subset_size;
  /// Attempts run concurrently on this many threads. The outcome does not
  /// depend on it.
  unsigned threads = 1;
  /// 0 means no limit.
  double time_limit_seconds = 0;
};

struct SearchStats {
  std::size_t moves_tried = 0;
  std::size_t states_visited = 0;
  std::size_t attempts = 0;
  std::optional<std::size_t> winning_attempt;
  double elapsed_seconds = 0;
};

struct SearchResult {
  std::optional<MoveLog> log;
  SearchStats stats;

  bool found() const noexcept { return log.has_value(); }
};

namespace detail {

/// Conjugates a state until it is cyclically reduced, logging the moves.
inline void cyclically_reduce_logged(Word& w, std::vector<Move>* moves) {
  while (w.size() >= 2 && w.front() == inverse(w.back())) {
    const Letter x = w.front();
    if (moves) moves->push_back(Move::conjugate_by(x));
    w = w.sub(1, w.size() - 2);
  }
}

/// Rotation by k > 0 moves k letters from the front to the back; k < 0
/// moves |k| letters from the back to the front.
inline void rotate_logged(Word& w, long k, std::vector<Move>* moves) {
  if (moves) {
    const std::size_t n = w.size();
    if (k > 0)
      for (long i = 0; i < k; ++i) moves->push_back(Move::conjugate_by(w[static_cast<std::size_t>(i)]));
    else
      for (long i = 0; i < -k; ++i)
        moves->push_back(Move::conjugate_by(inverse(w[n - 1 - static_cast<std::size_t>(i)])));
  }
  const std::size_t n = w.size();
  if (n == 0) return;
  const long m = static_cast<long>(n);
  w = rotate(w, static_cast<std::size_t>(((k % m) + m) % m));
}

struct Node {
  std::uint32_t parent;
  std::int32_t rotation;
  std::uint32_t member;
  std::uint32_t depth;  // single moves used so far
};

struct Candidate {
  Word word;
  Word key;
  std::uint64_t tiebreak;
  std::uint32_t parent;
  std::int32_t rotation;
  std::uint32_t member;
  std::uint32_t depth;
};

class BeamAttempt {
 public:
  BeamAttempt(const Word& start, const RelatorSet& relators, const SearchConfig& config,
              std::size_t max_length, std::uint64_t salt)
      : relators_(relators), config_(config), max_length_(max_length), salt_(salt) {
    by_first_.resize(64);
    const auto& members = relators_.members();
    for (std::size_t i = 0; i < members.size(); ++i)
      by_first_[static_cast<std::size_t>(letter_rank(members[i].front()))].push_back(
          static_cast<std::uint32_t>(i));
    root_ = free_reduce(start);
    cyclically_reduce_logged(root_, &prefix_moves_);
  }

  template <class Stop>
  std::optional<MoveLog> run(const Word& start, Stop&& stop, SearchStats& stats) {
    if (root_.empty()) return MoveLog{free_reduce(start), prefix_moves_};

    nodes_.push_back({std::numeric_limits<std::uint32_t>::max(), 0, 0,
                      static_cast<std::uint32_t>(prefix_moves_.size())});
    std::vector<std::uint32_t> beam{0};
    std::vector<Word> beam_words{root_};
    std::unordered_set<Word, WordHash> visited{least_rotation(root_)};

    for (std::size_t layer = 0; layer < config_.max_moves && !beam.empty(); ++layer) {
      if (stop()) return std::nullopt;
      std::vector<Candidate> children;
      std::unordered_set<Word, WordHash> layer_keys;
      for (std::size_t b = 0; b < beam.size(); ++b) {
        ++stats.states_visited;
        if (auto done = expand(beam[b], beam_words[b], children, layer_keys, visited, stats))
          return finish(start, *done);
      }
      const std::size_t keep = std::min(config_.beam_width, children.size());
      auto better = [](const Candidate& x, const Candidate& y) {
        if (x.word.size() != y.word.size()) return x.word.size() < y.word.size();
        if (x.depth != y.depth) return x.depth < y.depth;
        if (x.tiebreak != y.tiebreak) return x.tiebreak < y.tiebreak;
        return x.word < y.word;
      };
      std::partial_sort(children.begin(), children.begin() + static_cast<std::ptrdiff_t>(keep),
                        children.end(), better);
      beam.clear();
      beam_words.clear();
      for (std::size_t i = 0; i < keep; ++i) {
        Candidate& c = children[i];
        visited.insert(std::move(c.key));
        beam.push_back(static_cast<std::uint32_t>(nodes_.size()));
        nodes_.push_back({c.parent, c.rotation, c.member, c.depth});
        beam_words.push_back(std::move(c.word));
      }
    }
    return std::nullopt;
  }

 private:
  struct Hit {
    std::uint32_t parent;
    std::int32_t rotation;
    std::uint32_t member;
  };

  std::optional<Hit> expand(std::uint32_t node, const Word& w, std::vector<Candidate>& children,
                            std::unordered_set<Word, WordHash>& layer_keys,
                            const std::unordered_set<Word, WordHash>& visited, SearchStats& stats) {
    const auto& members = relators_.members();
    const std::size_t n = w.size();
    for (std::size_t k = 0; k < n; ++k) {
      // Rotated state is w[k..] w[..k); its last letter is w[k-1].
      const Letter last = w[(k + n - 1) % n];
      const bool short_state = n < max_member_length();
      for (std::uint32_t mi : candidates(last, short_state)) {
        const Word& r = members[mi];
        const std::size_t len = r.size();
        std::size_t j = 0;
        while (j < n && j < len && w[(k + n - 1 - j) % n] == inverse(r[j])) ++j;
        if (len > 2 * j + config_.max_growth && n >= len) continue;
        ++stats.moves_tried;

        Word child;
        child.reserve(n - j + len - j);
        for (std::size_t i = 0; i + j < n; ++i) child.push_back(w[(k + i) % n]);
        for (std::size_t i = j; i < len; ++i) child.push_back(r[i]);
        std::size_t cyc = 0;
        if (!is_freely_reduced(child)) child = free_reduce(child);
        while (child.size() >= 2 && child.front() == inverse(child.back())) {
          child = child.sub(1, child.size() - 2);
          ++cyc;
        }
        const std::int32_t rotation =
            k <= n / 2 ? static_cast<std::int32_t>(k) : -static_cast<std::int32_t>(n - k);
        if (child.empty()) return Hit{node, rotation, mi};
        if (child.size() > max_length_) continue;

        Word key = least_rotation(child);
        if (visited.contains(key) || !layer_keys.insert(key).second) continue;
        const std::uint32_t depth = nodes_[node].depth +
                                    static_cast<std::uint32_t>(std::abs(rotation)) + 1 +
                                    static_cast<std::uint32_t>(cyc);
        const std::uint64_t tiebreak = salt_ == 0 ? 0 : mix(WordHash{}(key) ^ salt_);
        children.push_back({std::move(child), std::move(key), tiebreak, node, rotation, mi, depth});
      }
    }
    return std::nullopt;
  }

  std::span<const std::uint32_t> candidates(Letter last, bool all) {
    if (all) {
      if (all_members_.empty())
        for (std::uint32_t i = 0; i < relators_.members().size(); ++i) all_members_.push_back(i);
      return all_members_;
    }
    return by_first_[static_cast<std::size_t>(letter_rank(inverse(last)))];
  }

  std::size_t max_member_length() {
    if (max_member_length_ == 0)
      for (const Word& r : relators_.members()) max_member_length_ = std::max(max_member_length_, r.size());
    return max_member_length_;
  }

  static std::uint64_t mix(std::uint64_t x) {
    // splitmix64 finalizer
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ull;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebull;
    x ^= x >> 31;
    return x;
  }

  MoveLog finish(const Word& start, const Hit& hit) {
    std::vector<Hit> steps{hit};
    for (std::uint32_t i = hit.parent; i != 0; i = nodes_[i].parent)
      steps.push_back({nodes_[i].parent, nodes_[i].rotation, nodes_[i].member});
    std::reverse(steps.begin(), steps.end());

    MoveLog log{free_reduce(start), prefix_moves_};
    Word w = root_;
    for (const Hit& s : steps) {
      rotate_logged(w, s.rotation, &log.moves);
      const Word& r = relators_.members()[s.member];
      log.moves.push_back(Move::append(r));
      w = reduced_product(w, r);
      cyclically_reduce_logged(w, &log.moves);
    }
    if (!w.empty() || !replay(log).empty())
      throw std::logic_error("search produced a move log that does not reach the empty word");
    return log;
  }

  const RelatorSet& relators_;
  const SearchConfig& config_;
  std::size_t max_length_;
  std::uint64_t salt_;
  Word root_;
  std::vector<Move> prefix_moves_;
  std::vector<std::vector<std::uint32_t>> by_first_;
  std::vector<std::uint32_t> all_members_;
  std::size_t max_member_length_ = 0;
  std::vector<Node> nodes_;
};

/// Base words for attempt `index`: the full set, or a seeded random subset.
inline RelatorSet attempt_relators(const RelatorSet& relators, const SearchConfig& config,
                                   std::size_t index) {
  if (!config.base_subset_size || *config.base_subset_size >= relators.bases().size())
    return relators;
  std::mt19937_64 rng(config.seed ^ (0x9e3779b97f4a7c15ull * (index + 1)));
  std::vector<Word> bases = relators.bases();
  std::shuffle(bases.begin(), bases.end(), rng);
  bases.resize(*config.base_subset_size);
  return symmetrize(bases, relators.exponent());
}

}  // namespace detail

/// Looks for moves taking free_reduce(target^-1) to the empty word.
///
/// Attempt 0 uses lexicographic tie-breaking; later attempts break ties with
/// a seeded hash and, when base_subset_size is set, draw their own random
/// base subsets. The first attempt (by index) that succeeds determines the
/// result, so the outcome is the same for any thread count.
inline SearchResult search(const Word& target, const RelatorSet& relators,
                           const SearchConfig& config = {}) {
  if (config.beam_width == 0) throw std::invalid_argument("beam width must be positive");
  if (!is_freely_reduced(target)) throw ContractViolation("search: target must be freely reduced");
  const auto t0 = std::chrono::steady_clock::now();
  const std::size_t max_length =
      config.max_word_length == 0 ? 4 * target.size() : config.max_word_length;
  if (max_length < target.size())
    throw std::invalid_argument("max word length is shorter than the target");
  const Word start = invert(target);
  const std::size_t attempts = config.restarts + 1;

  auto elapsed = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  };

  std::vector<std::optional<MoveLog>> results(attempts);
  std::vector<SearchStats> per_attempt(attempts);
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{std::numeric_limits<std::size_t>::max()};

  auto worker = [&] {
    for (;;) {
      const std::size_t index = next.fetch_add(1);
      if (index >= attempts || index > best.load()) return;
      auto stop = [&] {
        return best.load() < index ||
               (config.time_limit_seconds > 0 && elapsed() > config.time_limit_seconds);
      };
      const RelatorSet chosen = detail::attempt_relators(relators, config, index);
      const std::uint64_t salt = index == 0 ? 0 : (config.seed + index) | 1;
      detail::BeamAttempt attempt(start, chosen, config, max_length, salt);
      per_attempt[index].attempts = 1;
      results[index] = attempt.run(start, stop, per_attempt[index]);
      if (results[index]) {
        std::size_t current = best.load();
        while (index < current && !best.compare_exchange_weak(current, index)) {
        }
      }
      if (config.time_limit_seconds > 0 && elapsed() > config.time_limit_seconds) return;
    }
  };

  const unsigned threads = std::max(1u, config.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  SearchResult out;
  for (std::size_t i = 0; i < attempts; ++i) {
    out.stats.moves_tried += per_attempt[i].moves_tried;
    out.stats.states_visited += per_attempt[i].states_visited;
    out.stats.attempts += per_attempt[i].attempts;
  }
  if (best.load() < attempts) {
    out.stats.winning_attempt = best.load();
    out.log = std::move(results[best.load()]);
  }
  out.stats.elapsed_seconds = elapsed();
  return out;
}

/// Turns a completed move log for `target` into a folded proof word for
/// conjugate(target, outer_conjugator).
inline ProofWord reconstruct(const MoveLog& log, const Word& target, const Word& outer_conjugator = {}) {
  if (free_reduce(log.start) != invert(free_reduce(target)))
    throw std::invalid_argument("move log does not start from the inverted target");
  if (!replay(log).empty()) throw std::invalid_argument("move log does not reach the empty word");

  // With v_i the conjugation run before the i-th append, the log shows
  //   (v1..vN vN+1)^-1 T^-1 v1 r1 ... vN rN vN+1 = 1,
  // so T = v1 r1 ... vN rN (v1..vN)^-1.
  std::vector<Word> runs;
  std::vector<Word> rels;
  Word pending;
  for (const Move& m : log.moves) {
    if (m.kind == Move::Kind::conjugate) {
      pending = reduced_product(pending, Word{m.letter});
    } else {
      runs.push_back(pending);
      rels.push_back(m.relator);
      pending = Word{};
    }
  }
  if (rels.empty()) return ProofWord{};

  Word prefix;
  for (const Word& v : runs) prefix = reduced_product(prefix, v);

  std::vector<Word> conj = runs;
  conj.front() = reduced_product(invert(outer_conjugator), conj.front());
  conj.push_back(reduced_product(invert(prefix), outer_conjugator));
  return fold(ProofWord(std::move(conj), std::move(rels)));
}

/// Reads a valid proof word as a move log starting from the inverse of the
/// word it proves. A non-empty outer_conjugator c is first stripped, so the
/// log proves c * flatten(p) * c^-1 instead.
inline MoveLog decompile(const ProofWord& p, const Word& outer_conjugator = {}) {
  std::vector<Word> conj = p.conjugators();
  conj.front() = reduced_product(outer_conjugator, conj.front());
  conj.back() = reduced_product(conj.back(), invert(outer_conjugator));
  const ProofWord stripped(std::move(conj), p.relators());
  if (!excision_word(stripped).empty())
    throw std::invalid_argument("proof word is invalid: conjugating segments do not cancel");

  MoveLog log;
  log.start = invert(flatten(stripped));
  for (std::size_t i = 0; i <= stripped.relator_count(); ++i) {
    for (Letter x : stripped.conjugators()[i]) log.moves.push_back(Move::conjugate_by(x));
    if (i < stripped.relator_count()) log.moves.push_back(Move::append(stripped.relators()[i]));
  }
  return log;
}

/// Greedily drops relators that the remaining ones prove within the budget.
/// A relator is only dropped on the strength of a verified proof.
inline std::vector<Word> reduce_presentation(std::span<const Word> relators, int exponent,
                                             const SearchConfig& budget) {
  std::vector<Word> current(relators.begin(), relators.end());
  for (const Word& r : current)
    if (!power_base(r, exponent))
      throw ContractViolation("reduce_presentation: " + to_string(r) + " is not a power");

  std::size_t i = 0;
  while (i < current.size()) {
    if (current.size() == 1) break;
    std::vector<Word> bases;
    for (std::size_t j = 0; j < current.size(); ++j)
      if (j != i) bases.push_back(*power_base(current[j], exponent));
    const RelatorSet others = symmetrize(bases, exponent);
    const Word& target = current[i];
    bool removed = false;
    auto result = search(target, others, budget);
    if (result.log) {
      const ProofWord proof = reconstruct(*result.log, target);
      removed = verify(proof, target, others).valid();
    }
    if (removed)
      current.erase(current.begin() + static_cast<std::ptrdiff_t>(i));
    else
      ++i;
  }
  return current;
}

inline std::vector<Word> reduce_presentation(const std::vector<Word>& relators, int exponent,
                                             const SearchConfig& budget) {
  return reduce_presentation(std::span<const Word>(relators), exponent, budget);
}

}  // namespace e5proof
