#include <algorithm>
#include <stdexcept>
#include <string>

#include "testas/error.hpp"
#include "testas/fixtures.hpp"
#include "testas/kernels.hpp"
#include "testas/properties.hpp"
#include "testas/semigroup.hpp"
#include "testas/types.hpp"

namespace testas {

TransitionGraph::TransitionGraph(std::size_t alphabet_size,
                                 std::size_t node_count,
                                 std::vector<Node> delta,
                                 std::optional<Node> completed_sink)
    : alphabet_size_(alphabet_size),
      node_count_(node_count),
      delta_(std::move(delta)),
      sink_(completed_sink) {
  if (alphabet_size_ == 0 || node_count_ == 0)
    throw std::invalid_argument("graph needs at least one label and one node");
  if (delta_.size() != alphabet_size_ * node_count_)
    throw std::invalid_argument("graph table has wrong size");
  for (Node v : delta_) {
    if (v != kUndefined && v >= node_count_)
      throw std::invalid_argument("graph cell " + std::to_string(v) +
                                  " out of range");
  }
  if (sink_) {
    if (*sink_ >= node_count_ || !is_complete())
      throw std::invalid_argument("completed graph has undefined cells");
    for (Node v : row(*sink_)) {
      if (v != *sink_) throw std::invalid_argument("sink does not self-loop");
    }
  }
}

bool TransitionGraph::is_complete() const noexcept {
  return std::find(delta_.begin(), delta_.end(), kUndefined) == delta_.end();
}

Transformation::Transformation(std::vector<Node> image)
    : image_(std::move(image)) {
  for (Node v : image_) {
    if (v >= image_.size())
      throw std::invalid_argument("transformation image out of range");
  }
}

Transformation Transformation::identity(std::size_t degree) {
  std::vector<Node> img(degree);
  for (std::size_t i = 0; i < degree; ++i) img[i] = static_cast<Node>(i);
  return Transformation(std::move(img));
}

Transformation Transformation::then(const Transformation& next) const {
  Transformation out;
  out.image_.resize(image_.size());
  for (std::size_t p = 0; p < image_.size(); ++p)
    out.image_[p] = next.image_[image_[p]];
  return out;
}

Word FiniteSemigroup::factorization(Element x) const {
  Word w(depth_[x]);
  for (std::size_t i = w.size(); i-- > 0;) {
    if (parent_[x] == kernels::kNoParent) {
      w[i] = x;
    } else {
      w[i] = last_[x];
      x = parent_[x];
    }
  }
  return w;
}

Element FiniteSemigroup::evaluate(std::span<const Letter> word) const {
  if (word.empty()) throw std::invalid_argument("empty word has no value");
  Element v = word[0];
  for (std::size_t i = 1; i < word.size(); ++i) v = right(v, word[i]);
  return v;
}

std::optional<Element> FiniteSemigroup::identity() const {
  for (Element e = 0; e < size(); ++e) {
    bool ok = true;
    for (Element x = 0; x < size() && ok; ++x)
      ok = product(e, x) == x && product(x, e) == x;
    if (ok) return e;
  }
  return std::nullopt;
}

std::string_view to_string(Truth t) {
  switch (t) {
    case Truth::yes:
      return "yes";
    case Truth::no:
      return "no";
    case Truth::unknown:
      return "unknown";
  }
  return "unknown";
}

void PropertyReport::add(Verdict v) {
  for (auto& existing : verdicts_) {
    if (existing.property == v.property) {
      existing = std::move(v);
      return;
    }
  }
  verdicts_.push_back(std::move(v));
}

const Verdict* PropertyReport::find(std::string_view property) const {
  for (const auto& v : verdicts_)
    if (v.property == property) return &v;
  return nullptr;
}

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::too_few_numbers:
      return "TooFewNumbers";
    case ErrorKind::cell_out_of_range:
      return "CellOutOfRange";
    case ErrorKind::nonpositive_header:
      return "NonpositiveHeader";
    case ErrorKind::header_inconsistent:
      return "HeaderInconsistent";
    case ErrorKind::malformed_token:
      return "MalformedToken";
    case ErrorKind::not_generated:
      return "NotGenerated";
    case ErrorKind::not_associative:
      return "NotAssociative";
    case ErrorKind::incomplete_input:
      return "IncompleteInput";
    case ErrorKind::bad_k:
      return "BadK";
    case ErrorKind::not_idempotent:
      return "NotIdempotent";
  }
  return "Error";
}

namespace {

struct PropertyNames {
  Property property;
  std::string_view report;
  std::string_view cli;
};

constexpr PropertyNames kNames[] = {
    {Property::associativity, "associativity", "assoc"},
    {Property::aperiodicity, "aperiodicity", "aperiodic"},
    {Property::local_testability, "local_testability", "lt"},
    {Property::strict_local_testability, "strict_local_testability", "slt"},
    {Property::right_local_testability, "right_local_testability", "right-lt"},
    {Property::left_local_testability, "left_local_testability", "left-lt"},
    {Property::local_idempotency, "local_idempotency", "loc-idem"},
    {Property::threshold_local_testability, "threshold_local_testability",
     "ltt"},
    {Property::piecewise_testability, "piecewise_testability", "pt"},
    {Property::one_testability, "one_testability", "1t"},
};

}  // namespace

std::string_view report_name(Property p) {
  for (const auto& n : kNames)
    if (n.property == p) return n.report;
  return "unknown_property";
}

std::string_view short_name(Property p) {
  for (const auto& n : kNames)
    if (n.property == p) return n.cli;
  return "?";
}

std::optional<Property> parse_property(std::string_view name) {
  for (const auto& n : kNames)
    if (n.cli == name) return n.property;
  return std::nullopt;
}

std::vector<Property> parse_property_list(std::string_view list) {
  if (list == "all")
    return {std::begin(kAllProperties), std::end(kAllProperties)};
  std::vector<Property> out;
  while (!list.empty()) {
    const auto comma = list.find(',');
    const auto item = list.substr(0, comma);
    if (!item.empty()) {
      auto p = parse_property(item);
      if (!p)
        throw std::invalid_argument("unknown property '" + std::string(item) +
                                    "'");
      if (std::find(out.begin(), out.end(), *p) == out.end()) out.push_back(*p);
    }
    if (comma == std::string_view::npos) break;
    list.remove_prefix(comma + 1);
  }
  return out;
}

const Fixtures& fixtures() {
  static const Fixtures f{
      make_semigroup({2, 2, {0, 0, 0, 1}}),
      make_semigroup({2, 2, {0, 0, 1, 1}}),
      make_semigroup({2, 1, {1, 0}}),
      TransitionGraph(2, 1, {0, 0}),
      TransitionGraph(1, 2, {1, 0}),
      TransitionGraph(2, 3, {1, 2, 2, 0, 2, 2}),
  };
  return f;
}

}  // namespace testas
