#ifndef TESTAS_TYPES_HPP
#define TESTAS_TYPES_HPP

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace testas {

using Node = std::uint32_t;
using Letter = std::uint32_t;
using Element = std::uint32_t;
using Word = std::vector<Letter>;

inline constexpr Node kUndefined = std::numeric_limits<Node>::max();

namespace detail {
struct SemigroupAccess;
}

/// A DFA transition table without accepting states. Rows are nodes, columns
/// are labels. Cells may be kUndefined for partial automata.
class TransitionGraph {
 public:
  TransitionGraph(std::size_t alphabet_size, std::size_t node_count,
                  std::vector<Node> delta,
                  std::optional<Node> completed_sink = std::nullopt);

  std::size_t alphabet_size() const noexcept { return alphabet_size_; }
  std::size_t node_count() const noexcept { return node_count_; }
  std::optional<Node> completed_sink() const noexcept { return sink_; }

  Node next(Node p, Letter c) const { return delta_[p * alphabet_size_ + c]; }
  std::span<const Node> row(Node p) const {
    return {delta_.data() + p * alphabet_size_, alphabet_size_};
  }
  std::span<const Node> cells() const noexcept { return delta_; }

  bool is_complete() const noexcept;

  friend bool operator==(const TransitionGraph&,
                         const TransitionGraph&) = default;

 private:
  std::size_t alphabet_size_;
  std::size_t node_count_;
  std::vector<Node> delta_;
  std::optional<Node> sink_;
};

/// A total map of nodes to nodes. Words act left to right: the transformation
/// of uv applies u first, then v.
class Transformation {
 public:
  Transformation() = default;
  explicit Transformation(std::vector<Node> image);

  static Transformation identity(std::size_t degree);

  std::size_t degree() const noexcept { return image_.size(); }
  Node operator()(Node p) const { return image_[p]; }
  std::span<const Node> image() const noexcept { return image_; }

  /// `*this` followed by `next`.
  Transformation then(const Transformation& next) const;

  friend bool operator==(const Transformation&,
                         const Transformation&) = default;
  friend auto operator<=>(const Transformation&,
                          const Transformation&) = default;

 private:
  std::vector<Node> image_;
};

/// Right Cayley graph of a semigroup: element x, generator g -> x * g.
/// Generators are the elements 0 .. generator_count - 1.
struct CayleyRows {
  std::size_t element_count = 0;
  std::size_t generator_count = 0;
  std::vector<Element> cells;

  Element at(Element x, std::size_t gen) const {
    return cells[x * generator_count + gen];
  }
  friend bool operator==(const CayleyRows&, const CayleyRows&) = default;
};

/// A finite semigroup given by generators and its right Cayley graph, with
/// the full multiplication table and a generator word for every element.
///
/// Values are produced by close_cayley(); whether the table is associative
/// is established separately by check_associativity().
class FiniteSemigroup {
 public:
  std::size_t size() const noexcept { return rows_.element_count; }
  std::size_t generator_count() const noexcept {
    return rows_.generator_count;
  }
  const CayleyRows& cayley() const noexcept { return rows_; }

  Element right(Element x, std::size_t gen) const { return rows_.at(x, gen); }
  Element product(Element x, Element y) const {
    return table_[static_cast<std::size_t>(x) * size() + y];
  }
  std::span<const Element> product_table() const noexcept { return table_; }

  /// One nonempty word over generator indices that evaluates to `x`.
  Word factorization(Element x) const;
  std::size_t factorization_length(Element x) const { return depth_[x]; }

  /// Evaluates a nonempty generator word.
  Element evaluate(std::span<const Letter> word) const;

  /// Element acting as a two-sided identity, if any.
  std::optional<Element> identity() const;

  friend bool operator==(const FiniteSemigroup& a, const FiniteSemigroup& b) {
    return a.rows_ == b.rows_;
  }

 private:
  friend struct detail::SemigroupAccess;

  CayleyRows rows_;
  std::vector<Element> table_;
  std::vector<Element> parent_;  // kNoParent for generators
  std::vector<Letter> last_;
  std::vector<std::uint32_t> depth_;
};

enum class Truth { yes, no, unknown };

std::string_view to_string(Truth t);

struct Verdict {
  std::string property;
  Truth holds = Truth::unknown;
  /// Counterexample as element, label or node indices, meaning per property.
  std::vector<std::uint32_t> witness;
  /// Generator or label words for the witness, when known.
  std::vector<Word> witness_words;
  std::string detail;
};

struct OrderResult {
  enum class Status { found, none, unknown };
  Status status = Status::none;
  std::size_t k = 0;             // valid when found
  std::size_t lower_bound = 0;   // largest k proven to fail, 0 if none
  std::size_t k_max = 0;
  std::size_t threshold = 1;
  std::size_t states_explored = 0;
  std::optional<std::pair<Word, Word>> last_witness;
  std::string detail;
};

struct ResourceStats {
  double elapsed_ms = 0.0;
  std::size_t semigroup_size = 0;
  std::size_t oracle_states = 0;
};

class PropertyReport {
 public:
  explicit PropertyReport(std::string input) : input_(std::move(input)) {}

  const std::string& input() const noexcept { return input_; }

  /// Adds or replaces the verdict for `v.property`.
  void add(Verdict v);
  const Verdict* find(std::string_view property) const;
  const std::vector<Verdict>& verdicts() const noexcept { return verdicts_; }

  std::optional<OrderResult> order;
  std::optional<OrderResult> threshold_order;
  std::vector<std::string> notes;
  ResourceStats stats;

 private:
  std::string input_;
  std::vector<Verdict> verdicts_;
};

}  // namespace testas

#endif  // TESTAS_TYPES_HPP
