#ifndef TESTAS_IO_HPP
#define TESTAS_IO_HPP

#include <iosfwd>
#include <string>
#include <string_view>

#include "testas/types.hpp"

namespace testas::io {

// File formats: whitespace-separated integers. Graph files start with
// "alphabet_size node_count" followed by the nodes x labels matrix (-1 for an
// undefined cell). Semigroup files start with "element_count generator_count"
// followed by the elements x generators matrix. Tokens without any digit are
// comments and are skipped.

TransitionGraph parse_graph(std::istream& in);
TransitionGraph parse_graph(std::string_view text);

/// Closes the Cayley rows and runs Light's test.
FiniteSemigroup parse_semigroup(std::istream& in);
FiniteSemigroup parse_semigroup(std::string_view text);

/// Reads only the numeric matrix, without closure.
CayleyRows parse_cayley_rows(std::istream& in);

void write_graph(std::ostream& out, const TransitionGraph& gr);
std::string write_graph(const TransitionGraph& gr);
void write_semigroup(std::ostream& out, const FiniteSemigroup& s);
std::string write_semigroup(const FiniteSemigroup& s);

enum class ReportFormat { text, machine };

/// Letters a, b, c, ... for alphabets up to 26, dotted indices otherwise.
std::string format_word(const Word& w, std::size_t alphabet_size);

void render_report(std::ostream& out, const PropertyReport& r,
                   ReportFormat format, std::size_t alphabet_size = 26);
std::string render_report(const PropertyReport& r, ReportFormat format,
                          std::size_t alphabet_size = 26);

}  // namespace testas::io

#endif  // TESTAS_IO_HPP
