#pragma once

// Coset enumeration over the trivial subgroup (HLT strategy with lookahead).
// When it completes, the number of live cosets is the order of the group.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "e5proof/word.hpp"

namespace e5proof {

struct Presentation {
  Alphabet alphabet{2};
  std::vector<Word> relators;
};

struct EnumerationStats {
  std::size_t total_defined = 0;  // cosets ever created
  std::size_t max_active = 0;     // largest live count seen
  std::size_t lookaheads = 0;
};

/// The coset table. Column 2(g-1) holds the action of generator g, column
/// 2(g-1)+1 that of its inverse. Undefined entries are -1.
class CosetTable {
 public:
  static constexpr std::int32_t undefined = -1;

  explicit CosetTable(int rank) : columns_(2 * static_cast<std::size_t>(rank)) {}

  std::size_t columns() const noexcept { return columns_; }
  std::size_t rows() const noexcept { return parent_.size(); }

  static std::size_t column(Letter x) noexcept { return static_cast<std::size_t>(letter_rank(x)); }

  std::int32_t at(std::int32_t c, std::size_t col) const { return entries_[index(c, col)]; }
  std::int32_t act(std::int32_t c, Letter x) const { return at(c, column(x)); }

  bool live(std::int32_t c) const { return parent_[static_cast<std::size_t>(c)] == c; }

  std::size_t live_count() const noexcept { return live_; }

  /// Live cosets in increasing order.
  std::vector<std::int32_t> live_cosets() const {
    std::vector<std::int32_t> out;
    for (std::size_t c = 0; c < rows(); ++c)
      if (live(static_cast<std::int32_t>(c))) out.push_back(static_cast<std::int32_t>(c));
    return out;
  }

  /// Follows w from coset c; returns undefined if the path leaves the table.
  std::int32_t trace(std::int32_t c, const Word& w) const {
    for (Letter x : w) {
      c = act(c, x);
      if (c == undefined) return undefined;
    }
    return c;
  }

 private:
  friend class CosetEnumerator;

  std::size_t index(std::int32_t c, std::size_t col) const {
    return static_cast<std::size_t>(c) * columns_ + col;
  }

  std::size_t columns_;
  std::vector<std::int32_t> entries_;
  std::vector<std::int32_t> parent_;  // union-find; parent_[c] == c for live cosets
  std::size_t live_ = 0;
};

struct EnumerationResult {
  std::optional<std::size_t> order;  // empty on overflow
  EnumerationStats stats;
  CosetTable table{1};

  bool overflow() const noexcept { return !order.has_value(); }
};

class CosetEnumerator {
 public:
  CosetEnumerator(const Presentation& p, std::size_t max_cosets)
      : max_cosets_(max_cosets), table_(p.alphabet.rank()) {
    if (max_cosets == 0) throw std::invalid_argument("max_cosets must be positive");
    for (const Word& r : p.relators) {
      if (r.empty()) throw std::invalid_argument("empty relator");
      for (Letter x : r)
        if (!p.alphabet.contains(x)) throw std::invalid_argument("relator letter outside the alphabet");
      if (!is_freely_reduced(r))
        throw std::invalid_argument("relator " + to_string(r) + " is not freely reduced");
      Word core = cyclic_reduce(r).core;
      if (!core.empty()) relators_.push_back(std::move(core));
    }
    std::stable_sort(relators_.begin(), relators_.end(),
                     [](const Word& x, const Word& y) { return x.size() < y.size(); });
    for (const Word& r : relators_) reserve_ += r.size();
    reserve_ += table_.columns();
  }

  EnumerationResult run() {
    new_coset();
    std::size_t c = 0;
    while (c < table_.rows()) {
      if (table_.rows() + reserve_ > max_cosets_) {
        lookahead();
        c = compact(c);
        if (table_.rows() + reserve_ > max_cosets_) return finish(false);
        continue;
      }
      const auto cc = static_cast<std::int32_t>(c);
      for (const Word& r : relators_) {
        if (!table_.live(cc)) break;
        scan_and_fill(cc, r);
      }
      if (table_.live(cc)) {
        for (std::size_t col = 0; col < table_.columns(); ++col)
          if (table_.at(cc, col) == CosetTable::undefined) define(cc, col);
      }
      ++c;
    }
    return finish(true);
  }

 private:
  std::int32_t new_coset() {
    const auto c = static_cast<std::int32_t>(table_.parent_.size());
    table_.parent_.push_back(c);
    table_.entries_.resize(table_.entries_.size() + table_.columns(), CosetTable::undefined);
    ++table_.live_;
    ++stats_.total_defined;
    stats_.max_active = std::max(stats_.max_active, table_.live_);
    return c;
  }

  void set(std::int32_t c, std::size_t col, std::int32_t d) { table_.entries_[table_.index(c, col)] = d; }

  void define(std::int32_t c, std::size_t col) {
    const std::int32_t d = new_coset();
    set(c, col, d);
    set(d, col ^ 1u, c);
  }

  /// Scans r from coset c, defining cosets to close any gap.
  void scan_and_fill(std::int32_t c, const Word& r) {
    std::int32_t f = c, b = c;
    std::size_t i = 0, j = r.size();
    for (;;) {
      while (i < j && table_.act(f, r[i]) != CosetTable::undefined) f = table_.act(f, r[i++]);
      if (i == j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j > i && table_.act(b, inverse(r[j - 1])) != CosetTable::undefined)
        b = table_.act(b, inverse(r[--j]));
      if (j == i) {
        coincidence(f, b);
        return;
      }
      if (j == i + 1) {
        deduce(f, r[i], b);
        return;
      }
      define(f, CosetTable::column(r[i]));
    }
  }

  /// Scans r from coset c without defining anything.
  void scan(std::int32_t c, const Word& r) {
    std::int32_t f = c, b = c;
    std::size_t i = 0, j = r.size();
    while (i < j && table_.act(f, r[i]) != CosetTable::undefined) f = table_.act(f, r[i++]);
    if (i == j) {
      if (f != b) coincidence(f, b);
      return;
    }
    while (j > i && table_.act(b, inverse(r[j - 1])) != CosetTable::undefined)
      b = table_.act(b, inverse(r[--j]));
    if (j == i)
      coincidence(f, b);
    else if (j == i + 1)
      deduce(f, r[i], b);
  }

  void deduce(std::int32_t f, Letter x, std::int32_t b) {
    set(f, CosetTable::column(x), b);
    set(b, CosetTable::column(inverse(x)), f);
  }

  std::int32_t rep(std::int32_t c) {
    std::int32_t root = c;
    while (table_.parent_[static_cast<std::size_t>(root)] != root)
      root = table_.parent_[static_cast<std::size_t>(root)];
    while (table_.parent_[static_cast<std::size_t>(c)] != root) {
      const std::int32_t next = table_.parent_[static_cast<std::size_t>(c)];
      table_.parent_[static_cast<std::size_t>(c)] = root;
      c = next;
    }
    return root;
  }

  void merge(std::int32_t x, std::int32_t y) {
    x = rep(x);
    y = rep(y);
    if (x == y) return;
    if (y < x) std::swap(x, y);
    table_.parent_[static_cast<std::size_t>(y)] = x;
    --table_.live_;
    queue_.push_back(y);
  }

  void coincidence(std::int32_t x, std::int32_t y) {
    merge(x, y);
    for (std::size_t q = 0; q < queue_.size(); ++q) {
      const std::int32_t dead = queue_[q];
      for (std::size_t col = 0; col < table_.columns(); ++col) {
        const std::int32_t d = table_.at(dead, col);
        if (d == CosetTable::undefined) continue;
        set(d, col ^ 1u, CosetTable::undefined);
        const std::int32_t mu = rep(dead);
        const std::int32_t nu = rep(d);
        if (table_.at(mu, col) != CosetTable::undefined)
          merge(nu, table_.at(mu, col));
        else if (table_.at(nu, col ^ 1u) != CosetTable::undefined)
          merge(mu, table_.at(nu, col ^ 1u));
        else {
          set(mu, col, nu);
          set(nu, col ^ 1u, mu);
        }
      }
    }
    queue_.clear();
  }

  void lookahead() {
    ++stats_.lookaheads;
    for (std::size_t c = 0; c < table_.rows(); ++c) {
      for (const Word& r : relators_) {
        if (!table_.live(static_cast<std::int32_t>(c))) break;
        scan(static_cast<std::int32_t>(c), r);
      }
    }
  }

  /// Renumbers live cosets 0..live-1 in order; returns the new index of the
  /// first live coset at or after `cursor`.
  std::size_t compact(std::size_t cursor) {
    const std::size_t n = table_.rows();
    std::vector<std::int32_t> remap(n, CosetTable::undefined);
    std::int32_t next = 0;
    std::size_t new_cursor = table_.live_;
    for (std::size_t c = 0; c < n; ++c) {
      if (!table_.live(static_cast<std::int32_t>(c))) continue;
      if (c >= cursor && new_cursor == table_.live_) new_cursor = static_cast<std::size_t>(next);
      remap[c] = next++;
    }
    std::vector<std::int32_t> entries(static_cast<std::size_t>(next) * table_.columns());
    for (std::size_t c = 0; c < n; ++c) {
      if (remap[c] == CosetTable::undefined) continue;
      for (std::size_t col = 0; col < table_.columns(); ++col) {
        const std::int32_t d = table_.at(static_cast<std::int32_t>(c), col);
        entries[static_cast<std::size_t>(remap[c]) * table_.columns() + col] =
            d == CosetTable::undefined ? d : remap[static_cast<std::size_t>(d)];
      }
    }
    table_.entries_ = std::move(entries);
    table_.parent_.resize(static_cast<std::size_t>(next));
    for (std::int32_t c = 0; c < next; ++c) table_.parent_[static_cast<std::size_t>(c)] = c;
    return new_cursor;
  }

  EnumerationResult finish(bool complete) {
    EnumerationResult out;
    if (complete) {
      compact(0);
      out.order = table_.live_count();
    }
    out.stats = stats_;
    out.table = std::move(table_);
    return out;
  }

  std::size_t max_cosets_;
  std::size_t reserve_ = 0;
  std::vector<Word> relators_;
  CosetTable table_;
  std::vector<std::int32_t> queue_;
  EnumerationStats stats_;
};

/// Order of the group presented by p, or an empty result on overflow.
inline EnumerationResult enumerate_cosets(const Presentation& p, std::size_t max_cosets = 2'000'000) {
  return CosetEnumerator(p, max_cosets).run();
}

/// Every relator closes up from every live coset of a complete table.
inline bool relators_hold(const CosetTable& table, const std::vector<Word>& relators) {
  for (std::int32_t c : table.live_cosets())
    for (const Word& r : relators)
      if (table.trace(c, free_reduce(r)) != c) return false;
  return true;
}

}  // namespace e5proof
