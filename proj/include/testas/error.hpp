#ifndef TESTAS_ERROR_HPP
#define TESTAS_ERROR_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace testas {

enum class ErrorKind {
  too_few_numbers,
  cell_out_of_range,
  nonpositive_header,
  header_inconsistent,
  malformed_token,
  not_generated,
  not_associative,
  incomplete_input,
  bad_k,
  not_idempotent,
};

std::string_view to_string(ErrorKind kind);

/// Input position of a token; line and column are 1-based, 0 when unknown.
struct SourcePos {
  std::size_t line = 0;
  std::size_t column = 0;
  std::string token;
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what, SourcePos pos = {},
        std::vector<std::uint32_t> witness = {})
      : std::runtime_error(what),
        kind_(kind),
        pos_(std::move(pos)),
        witness_(std::move(witness)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const SourcePos& position() const noexcept { return pos_; }
  const std::vector<std::uint32_t>& witness() const noexcept {
    return witness_;
  }

 private:
  ErrorKind kind_;
  SourcePos pos_;
  std::vector<std::uint32_t> witness_;
};

/// A search or closure outgrew its configured state budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, std::size_t limit)
      : std::runtime_error(what), limit_(limit) {}
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::size_t limit_;
};

}  // namespace testas

#endif  // TESTAS_ERROR_HPP
