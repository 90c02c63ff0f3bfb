#include "cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "testas/constructions.hpp"
#include "testas/error.hpp"
#include "testas/graph.hpp"
#include "testas/io.hpp"
#include "testas/semigroup.hpp"

namespace testas::cli {
namespace {

struct AnalyzeOptions {
  std::string file;
  std::string props = "all";
  bool order = false;
  std::size_t k = 0;
  std::size_t t = 1;
  std::size_t k_max = kDefaultKMax;
  std::size_t budget = kDefaultBudget;
  std::size_t max_elements = kDefaultMaxElements;
  std::string format = "text";
};

struct ProductOptions {
  std::string first;
  std::string second;
  std::string output;
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path + ": error: cannot open file");
  return in;
}

void write_output(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InputError(path + ": error: cannot write file");
  out << text;
}

void add_analyze_flags(CLI::App* cmd, AnalyzeOptions& o, bool graph) {
  cmd->add_option("file", o.file, graph ? "Transition graph file"
                                        : "Semigroup file")
      ->required();
  cmd->add_option("--props", o.props,
                  "all, or a comma list of lt,slt,right-lt,left-lt,loc-idem,"
                  "ltt,pt,aperiodic,assoc,1t");
  cmd->add_flag("--order", o.order, "Search the order of local testability");
  cmd->add_option("--k", o.k, "Check k-testability at this scan width")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--t", o.t, "Threshold for factor counting")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--kmax", o.k_max, "Largest k tried by --order")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--budget", o.budget, "Oracle state budget")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--max-elements", o.max_elements,
                  "Largest transition semigroup to build")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--format", o.format, "text or machine")
      ->check(CLI::IsMember({"text", "machine"}));
}

Limits limits_of(const AnalyzeOptions& o) {
  Limits l;
  l.k_max = o.k_max;
  l.threshold = o.t;
  l.budget = o.budget;
  l.max_elements = o.max_elements;
  l.order = o.order;
  if (o.k) l.k = o.k;
  return l;
}

bool has_unknown(const PropertyReport& r) {
  for (const auto& v : r.verdicts())
    if (v.holds == Truth::unknown) return true;
  auto unknown = [](const std::optional<OrderResult>& o) {
    return o && o->status == OrderResult::Status::unknown;
  };
  return unknown(r.order) || unknown(r.threshold_order);
}

int emit(const PropertyReport& r, const AnalyzeOptions& o,
         std::size_t alphabet, bool strict, std::ostream& out) {
  io::render_report(out, r,
                    o.format == "machine" ? io::ReportFormat::machine
                                          : io::ReportFormat::text,
                    alphabet);
  return strict && has_unknown(r) ? kExitBudget : kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Testability of automata and semigroups", "testas"};
  app.require_subcommand(1);
  bool strict = false;
  app.add_flag("--strict", strict,
               "Exit with status 3 when a budget leaves a verdict unknown");

  AnalyzeOptions graph_opts, semi_opts;
  auto* ag = app.add_subcommand("analyze-graph", "Analyze a transition graph");
  add_analyze_flags(ag, graph_opts, true);
  auto* as = app.add_subcommand("analyze-semigroup", "Analyze a semigroup");
  add_analyze_flags(as, semi_opts, false);

  ProductOptions pg_opts, ps_opts, ts_opts;
  auto* pg = app.add_subcommand("product-graph", "Direct product of graphs");
  pg->add_option("a", pg_opts.first)->required();
  pg->add_option("b", pg_opts.second)->required();
  pg->add_option("-o,--output", pg_opts.output)->required();
  auto* ps =
      app.add_subcommand("product-semigroup", "Direct product of semigroups");
  ps->add_option("a", ps_opts.first)->required();
  ps->add_option("b", ps_opts.second)->required();
  ps->add_option("-o,--output", ps_opts.output)->required();
  auto* ts = app.add_subcommand("transition-semigroup",
                                "Transition semigroup of a graph");
  ts->add_option("graph", ts_opts.first)->required();
  ts->add_option("-o,--output", ts_opts.output)->required();
  std::size_t ts_cap = kDefaultMaxElements;
  ts->add_option("--max-elements", ts_cap,
                 "Largest transition semigroup to build")
      ->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\nrun with --help for usage\n";
    return kExitUsage;
  }

  std::string current;
  try {
    if (ag->parsed()) {
      current = graph_opts.file;
      const auto props = parse_property_list(graph_opts.props);
      auto in = open_input(current);
      const auto gr = io::parse_graph(in);
      const auto report =
          analyze_graph(gr, props, limits_of(graph_opts), current);
      return emit(report, graph_opts, gr.alphabet_size(), strict, out);
    }
    if (as->parsed()) {
      current = semi_opts.file;
      const auto props = parse_property_list(semi_opts.props);
      auto in = open_input(current);
      const auto s = io::parse_semigroup(in);
      const auto report =
          analyze_semigroup(s, props, limits_of(semi_opts), current);
      return emit(report, semi_opts, s.generator_count(), strict, out);
    }
    if (pg->parsed()) {
      current = pg_opts.first;
      auto in_a = open_input(current);
      const auto a = io::parse_graph(in_a);
      current = pg_opts.second;
      auto in_b = open_input(current);
      const auto b = io::parse_graph(in_b);
      current = pg_opts.output;
      write_output(current, io::write_graph(graph_direct_product(a, b)));
      return kExitOk;
    }
    if (ps->parsed()) {
      current = ps_opts.first;
      auto in_a = open_input(current);
      const auto a = io::parse_semigroup(in_a);
      current = ps_opts.second;
      auto in_b = open_input(current);
      const auto b = io::parse_semigroup(in_b);
      current = ps_opts.output;
      write_output(current,
                   io::write_semigroup(semigroup_direct_product(a, b)));
      return kExitOk;
    }
    if (ts->parsed()) {
      current = ts_opts.first;
      auto in = open_input(current);
      const auto gr = complete_with_sink(io::parse_graph(in));
      const auto sg = transition_semigroup(gr, ts_cap);
      current = ts_opts.output;
      write_output(current, io::write_semigroup(sg.semigroup));
      return kExitOk;
    }
  } catch (const Error& e) {
    err << current;
    if (e.position().line)
      err << ':' << e.position().line << ':' << e.position().column;
    err << ": error: " << to_string(e.kind()) << ": " << e.what();
    const auto& token = e.position().token;
    if (!token.empty() && std::string(e.what()).find(token) == std::string::npos)
      err << " (token '" << token << "')";
    err << '\n';
    return kExitInvalidInput;
  } catch (const BudgetExceeded& e) {
    err << current << ": error: budget exceeded: " << e.what() << '\n';
    return strict ? kExitBudget : kExitInvalidInput;
  } catch (const InputError& e) {
    err << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace testas::cli
