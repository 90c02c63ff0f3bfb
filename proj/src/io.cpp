#include "testas/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <iomanip>
#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "testas/error.hpp"
#include "testas/semigroup.hpp"

namespace testas::io {
namespace {

struct Number {
  long long value;
  SourcePos pos;
};

// Whitespace-separated tokens; tokens without a digit are comments.
std::vector<Number> scan_numbers(std::istream& in) {
  const std::string text((std::istreambuf_iterator<char>(in)),
                         std::istreambuf_iterator<char>());
  std::vector<Number> out;
  std::size_t line = 1, col = 1, i = 0;
  while (i < text.size()) {
    const char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      if (ch == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
      continue;
    }
    const std::size_t begin = i, start_col = col;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      ++col;
    }
    const std::string_view tok(text.data() + begin, i - begin);
    SourcePos pos{line, start_col, std::string(tok)};
    if (std::none_of(tok.begin(), tok.end(), [](char c) {
          return std::isdigit(static_cast<unsigned char>(c));
        }))
      continue;
    long long v = 0;
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec == std::errc::result_out_of_range)
      throw Error(ErrorKind::cell_out_of_range,
                  "number '" + pos.token + "' is out of range", pos);
    if (ec != std::errc() || ptr != last)
      throw Error(ErrorKind::malformed_token,
                  "token '" + pos.token + "' mixes digits with other characters",
                  pos);
    out.push_back({v, std::move(pos)});
  }
  return out;
}

std::string where(const SourcePos& pos) {
  return "line " + std::to_string(pos.line) + ", column " +
         std::to_string(pos.column) + ": ";
}

void require_numbers(const std::vector<Number>& nums, std::size_t needed) {
  if (nums.size() < needed)
    throw Error(ErrorKind::too_few_numbers,
                "expected " + std::to_string(needed) + " numbers, found " +
                    std::to_string(nums.size()),
                nums.empty() ? SourcePos{} : nums.back().pos);
}

}  // namespace

TransitionGraph parse_graph(std::istream& in) {
  const auto nums = scan_numbers(in);
  require_numbers(nums, 2);
  const long long a = nums[0].value, g = nums[1].value;
  if (a <= 0 || g <= 0)
    throw Error(ErrorKind::nonpositive_header,
                where(nums[a <= 0 ? 0 : 1].pos) +
                    "alphabet size and node count must be positive",
                nums[a <= 0 ? 0 : 1].pos);
  if (static_cast<unsigned long long>(a) * static_cast<unsigned long long>(g) >
      nums.size())
    throw Error(ErrorKind::too_few_numbers,
                "header announces more cells than the file holds",
                nums.back().pos);
  const auto cells = static_cast<std::size_t>(a * g);
  require_numbers(nums, 2 + cells);
  std::vector<Node> delta(cells);
  for (std::size_t i = 0; i < cells; ++i) {
    const auto& num = nums[2 + i];
    if (num.value == -1) {
      delta[i] = kUndefined;
    } else if (num.value < -1 || num.value >= g) {
      throw Error(ErrorKind::cell_out_of_range,
                  where(num.pos) + "cell '" + num.pos.token +
                      "' is not a node index or -1",
                  num.pos);
    } else {
      delta[i] = static_cast<Node>(num.value);
    }
  }
  return TransitionGraph(static_cast<std::size_t>(a),
                         static_cast<std::size_t>(g), std::move(delta));
}

TransitionGraph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_graph(in);
}

CayleyRows parse_cayley_rows(std::istream& in) {
  const auto nums = scan_numbers(in);
  require_numbers(nums, 2);
  const long long n = nums[0].value, gens = nums[1].value;
  if (n <= 0 || gens <= 0 || gens > n)
    throw Error(ErrorKind::header_inconsistent,
                where(nums[0].pos) +
                    "semigroup header needs 1 <= generators <= elements",
                nums[0].pos);
  if (static_cast<unsigned long long>(n) * static_cast<unsigned long long>(gens) >
      nums.size())
    throw Error(ErrorKind::too_few_numbers,
                "header announces more cells than the file holds",
                nums.back().pos);
  const auto cells = static_cast<std::size_t>(n * gens);
  require_numbers(nums, 2 + cells);
  CayleyRows rows{static_cast<std::size_t>(n), static_cast<std::size_t>(gens),
                  std::vector<Element>(cells)};
  for (std::size_t i = 0; i < cells; ++i) {
    const auto& num = nums[2 + i];
    if (num.value < 0 || num.value >= n)
      throw Error(ErrorKind::cell_out_of_range,
                  where(num.pos) + "cell '" + num.pos.token +
                      "' is not an element index",
                  num.pos);
    rows.cells[i] = static_cast<Element>(num.value);
  }
  return rows;
}

FiniteSemigroup parse_semigroup(std::istream& in) {
  return make_semigroup(parse_cayley_rows(in));
}

FiniteSemigroup parse_semigroup(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_semigroup(in);
}

void write_graph(std::ostream& out, const TransitionGraph& gr) {
  out << gr.alphabet_size() << ' ' << gr.node_count() << '\n';
  for (Node p = 0; p < gr.node_count(); ++p) {
    const auto row = gr.row(p);
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out << ' ';
      if (row[c] == kUndefined)
        out << -1;
      else
        out << row[c];
    }
    out << '\n';
  }
}

std::string write_graph(const TransitionGraph& gr) {
  std::ostringstream out;
  write_graph(out, gr);
  return out.str();
}

void write_semigroup(std::ostream& out, const FiniteSemigroup& s) {
  const auto& rows = s.cayley();
  out << rows.element_count << ' ' << rows.generator_count << '\n';
  for (Element x = 0; x < rows.element_count; ++x) {
    for (std::size_t g = 0; g < rows.generator_count; ++g) {
      if (g) out << ' ';
      out << rows.at(x, g);
    }
    out << '\n';
  }
}

std::string write_semigroup(const FiniteSemigroup& s) {
  std::ostringstream out;
  write_semigroup(out, s);
  return out.str();
}

std::string format_word(const Word& w, std::size_t alphabet_size) {
  if (w.empty()) return "(empty)";
  std::string out;
  if (alphabet_size <= 26) {
    for (Letter c : w) out.push_back(static_cast<char>('a' + c));
    return out;
  }
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out.push_back('.');
    out += std::to_string(w[i]);
  }
  return out;
}

namespace {

std::string order_value(const OrderResult& r) {
  switch (r.status) {
    case OrderResult::Status::found:
      return std::to_string(r.k);
    case OrderResult::Status::none:
      return "none <= " + std::to_string(r.k_max);
    case OrderResult::Status::unknown:
      return "unknown (budget exceeded: " + r.detail + ")";
  }
  return "unknown";
}

std::string_view status_name(OrderResult::Status s) {
  switch (s) {
    case OrderResult::Status::found:
      return "found";
    case OrderResult::Status::none:
      return "none";
    case OrderResult::Status::unknown:
      return "unknown";
  }
  return "unknown";
}

void text_order(std::ostream& out, std::string_view label,
                const OrderResult& r, std::size_t alphabet_size) {
  out << label << " = " << order_value(r) << '\n';
  out << label << "_lower_bound = " << r.lower_bound << '\n';
  if (r.status != OrderResult::Status::found && r.last_witness)
    out << "  witness_words = "
        << format_word(r.last_witness->first, alphabet_size) << ", "
        << format_word(r.last_witness->second, alphabet_size) << '\n';
}

nlohmann::ordered_json json_order(const OrderResult& r,
                                  std::size_t alphabet_size) {
  nlohmann::ordered_json j;
  j["status"] = status_name(r.status);
  if (r.status == OrderResult::Status::found) j["k"] = r.k;
  j["lower_bound"] = r.lower_bound;
  j["k_max"] = r.k_max;
  j["threshold"] = r.threshold;
  j["states_explored"] = r.states_explored;
  if (r.status != OrderResult::Status::found && r.last_witness)
    j["witness_words"] = {format_word(r.last_witness->first, alphabet_size),
                          format_word(r.last_witness->second, alphabet_size)};
  if (!r.detail.empty()) j["detail"] = r.detail;
  return j;
}

}  // namespace

void render_report(std::ostream& out, const PropertyReport& r,
                   ReportFormat format, std::size_t alphabet_size) {
  if (format == ReportFormat::machine) {
    nlohmann::ordered_json j;
    j["input"] = r.input();
    j["notes"] = r.notes;
    j["semigroup_size"] = r.stats.semigroup_size;
    j["oracle_states"] = r.stats.oracle_states;
    auto& verdicts = j["verdicts"] = nlohmann::ordered_json::array();
    for (const auto& v : r.verdicts()) {
      nlohmann::ordered_json e;
      e["property"] = v.property;
      e["holds"] = to_string(v.holds);
      if (!v.witness.empty()) e["witness"] = v.witness;
      if (!v.witness_words.empty()) {
        auto& words = e["witness_words"] = nlohmann::ordered_json::array();
        for (const auto& w : v.witness_words)
          words.push_back(format_word(w, alphabet_size));
      }
      if (!v.detail.empty()) e["detail"] = v.detail;
      verdicts.push_back(std::move(e));
    }
    if (r.order) j["order"] = json_order(*r.order, alphabet_size);
    if (r.threshold_order)
      j["threshold_order"] = json_order(*r.threshold_order, alphabet_size);
    out << j.dump(2) << '\n';
    return;
  }

  out << "input = " << r.input() << '\n';
  for (const auto& note : r.notes) out << "note = " << note << '\n';
  if (r.stats.semigroup_size)
    out << "semigroup_size = " << r.stats.semigroup_size << '\n';
  for (const auto& v : r.verdicts()) {
    out << v.property << " = ";
    if (v.holds == Truth::unknown) {
      out << "unknown (budget exceeded: " << v.detail << ")\n";
      continue;
    }
    out << to_string(v.holds) << '\n';
    if (v.holds == Truth::no) {
      if (!v.witness.empty()) {
        out << "  witness = (";
        for (std::size_t i = 0; i < v.witness.size(); ++i)
          out << (i ? ", " : "") << v.witness[i];
        out << ")\n";
      }
      if (!v.witness_words.empty()) {
        out << "  witness_words = ";
        for (std::size_t i = 0; i < v.witness_words.size(); ++i)
          out << (i ? ", " : "") << format_word(v.witness_words[i], alphabet_size);
        out << '\n';
      }
    }
    if (!v.detail.empty()) out << "  detail = " << v.detail << '\n';
  }
  if (r.order) text_order(out, "order", *r.order, alphabet_size);
  if (r.threshold_order)
    text_order(out,
               "threshold_order(t=" +
                   std::to_string(r.threshold_order->threshold) + ")",
               *r.threshold_order, alphabet_size);
  if (r.stats.oracle_states)
    out << "oracle_states = " << r.stats.oracle_states << '\n';
  out << "elapsed_ms = " << std::fixed << std::setprecision(1)
      << r.stats.elapsed_ms << '\n';
}

std::string render_report(const PropertyReport& r, ReportFormat format,
                          std::size_t alphabet_size) {
  std::ostringstream out;
  render_report(out, r, format, alphabet_size);
  return out.str();
}

}  // namespace testas::io
