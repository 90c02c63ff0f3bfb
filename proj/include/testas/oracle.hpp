#ifndef TESTAS_ORACLE_HPP
#define TESTAS_ORACLE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "testas/types.hpp"

namespace testas::oracle {

/// What a scanning window of width k sees in a word, with factor
/// occurrences counted up to the threshold t.
struct KProfile {
  std::size_t k = 1;
  std::size_t t = 1;
  Word prefix;  // first min(|w|, k-1) letters
  Word suffix;  // last min(|w|, k-1) letters
  /// Length-k factors with counts saturated at t, sorted by factor.
  std::vector<std::pair<Word, std::uint32_t>> counts;
  /// The whole word when it is shorter than k.
  std::optional<Word> short_word;

  friend bool operator==(const KProfile&, const KProfile&) = default;
};

KProfile profile_of(std::span<const Letter> word, std::size_t k, std::size_t t);

/// A deterministic fold of letters into a finite value set, given as a table.
class WordAction {
 public:
  WordAction(std::size_t alphabet_size, std::size_t value_count,
             std::uint32_t initial, std::vector<std::uint32_t> table);

  std::size_t alphabet_size() const noexcept { return alphabet_; }
  std::size_t value_count() const noexcept { return values_; }
  std::uint32_t initial() const noexcept { return initial_; }
  std::uint32_t step(std::uint32_t v, Letter c) const {
    return table_[v * alphabet_ + c];
  }
  std::uint32_t evaluate(std::span<const Letter> word) const;

 private:
  std::size_t alphabet_;
  std::size_t values_;
  std::uint32_t initial_;
  std::vector<std::uint32_t> table_;
};

/// Cayley automaton of a semigroup: letters are generators, value n stands
/// for the empty word, every other value is the evaluated element.
WordAction cayley_action(const FiniteSemigroup& s);

/// Lazily built automaton whose state after reading w is profile_of(w, k, t).
class ProfileAutomaton {
 public:
  using State = std::uint32_t;

  /// Throws std::invalid_argument when alphabet_size^k overflows 64 bits.
  ProfileAutomaton(std::size_t alphabet_size, std::size_t k, std::size_t t,
                   std::size_t budget);

  State initial() const noexcept { return 0; }
  /// Throws BudgetExceeded when a new state would pass the budget.
  State step(State s, Letter c);
  KProfile profile(State s) const;
  std::size_t size() const noexcept { return states_.size(); }

 private:
  struct Compact {
    bool is_short = true;
    Word head;  // the short word, or the prefix
    Word tail;  // suffix, long profiles only
    std::vector<std::pair<std::uint64_t, std::uint32_t>> counts;
  };

  State intern(Compact c);
  std::string key(const Compact& c) const;
  Compact from_word(std::span<const Letter> w) const;

  std::size_t alphabet_;
  std::size_t k_;
  std::size_t t_;
  std::size_t budget_;
  std::vector<Compact> states_;
  std::vector<State> next_;  // states x alphabet, kMissing when not built
  std::unordered_map<std::string, State> index_;
};

struct Determination {
  Truth status = Truth::unknown;
  /// Two words with equal profiles and different values.
  std::optional<std::pair<Word, Word>> witness;
  std::size_t states = 0;
  std::string detail;
};

/// Breadth-first search over reachable (profile, value) pairs; yes iff every
/// reachable profile carries exactly one value. `budget` caps the pair count.
Determination profile_determines(const WordAction& action, std::size_t k,
                                 std::size_t t, std::size_t budget);

struct ScanResult {
  bool holds = true;  // no conflict among words up to max_len
  std::optional<std::pair<Word, Word>> witness;
  std::size_t words_scanned = 0;
};

/// Enumerates every word up to max_len, grouping by profile_of.
ScanResult brute_force_scan(const WordAction& action, std::size_t k,
                            std::size_t t, std::size_t max_len);

/// Least k <= k_max with profile_determines(action, k, t) = yes.
OrderResult search_order(const WordAction& action, std::size_t k_max,
                         std::size_t t, std::size_t budget);

}  // namespace testas::oracle

#endif  // TESTAS_ORACLE_HPP
