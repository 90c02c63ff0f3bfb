// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "testas/constructions.hpp"
#include "testas/error.hpp"
#include "testas/fixtures.hpp"
#include "testas/graph.hpp"
#include "testas/io.hpp"
#include "testas/oracle.hpp"
#include "testas/semigroup.hpp"

#include "support/brute_force.hpp"
#include "support/random_structures.hpp"

using namespace testas;
using testing::NaiveLocal;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::string note;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      note = what;
    }
  }
};

constexpr std::size_t kMonotoneBudget = 200000;

bool yes(const Verdict& v) { return v.holds == Truth::yes; }

// Verdicts recomputed by the naive loops in tests/support.
bool naive(const FiniteSemigroup& s, Property p) {
  switch (p) {
    case Property::associativity: return testing::naive_associative(s);
    case Property::aperiodicity: return testing::naive_aperiodic(s);
    case Property::local_testability:
    case Property::strict_local_testability:
      return testing::naive_local(s, NaiveLocal::semilattice);
    case Property::right_local_testability:
      return testing::naive_local(s, NaiveLocal::right);
    case Property::left_local_testability:
      return testing::naive_local(s, NaiveLocal::left);
    case Property::local_idempotency:
      return testing::naive_local(s, NaiveLocal::idempotent);
    case Property::threshold_local_testability: return testing::naive_ltt(s);
    case Property::piecewise_testability: return testing::naive_j_trivial(s);
    case Property::one_testability: break;
  }
  return false;
}

const Property kAlgebraic[] = {
    Property::associativity,          Property::aperiodicity,
    Property::local_testability,      Property::strict_local_testability,
    Property::right_local_testability, Property::left_local_testability,
    Property::local_idempotency,      Property::threshold_local_testability,
    Property::piecewise_testability};

struct Expect {
  Property p;
  bool value;
};

void expect_semigroup(Outcome& o, const std::string& name,
                      const FiniteSemigroup& s, std::initializer_list<Expect> e) {
  for (const auto& x : e) {
    o.require(yes(semigroup_property(s, x.p)) == x.value,
              name + " " + std::string(short_name(x.p)));
    if (x.p != Property::one_testability)
      o.require(naive(s, x.p) == x.value, name + " naive " + std::string(short_name(x.p)));
  }
}

void expect_graph(Outcome& o, const std::string& name, const TransitionGraph& g,
                  std::initializer_list<Expect> e) {
  const auto s = transition_semigroup(complete_with_sink(g)).semigroup;
  for (const auto& x : e) {
    o.require(yes(graph_property(g, x.p)) == x.value, name + " " + std::string(short_name(x.p)));
    if (x.p != Property::one_testability)
      o.require(naive(s, x.p) == x.value, name + " naive " + std::string(short_name(x.p)));
  }
}

Outcome fixture_matrix() {
  const auto t0 = Clock::now();
  const auto& f = fixtures();
  Outcome o;
  using P = Property;
  expect_semigroup(o, "U1", f.U1,
                   {{P::associativity, true}, {P::aperiodicity, true},
                    {P::local_testability, true}, {P::strict_local_testability, true},
                    {P::right_local_testability, true},
                    {P::left_local_testability, true}, {P::local_idempotency, true},
                    {P::threshold_local_testability, true},
                    {P::piecewise_testability, true}});
  expect_semigroup(o, "LZ2", f.LZ2,
                   {{P::aperiodicity, true}, {P::local_testability, true},
                    {P::threshold_local_testability, true},
                    {P::piecewise_testability, false}});
  const auto lz2_pt = semigroup_property(f.LZ2, P::piecewise_testability);
  o.require(lz2_pt.witness == std::vector<std::uint32_t>{0, 1}, "LZ2 PT witness");
  expect_semigroup(o, "Z2", f.Z2,
                   {{P::aperiodicity, false}, {P::local_testability, false},
                    {P::threshold_local_testability, false},
                    {P::piecewise_testability, false},
                    {P::local_idempotency, false}});

  const auto order = [](const FiniteSemigroup& s) {
    return order_of_local_testability_semigroup(s, kDefaultKMax, kDefaultBudget);
  };
  const auto u1 = order(f.U1), lz2 = order(f.LZ2), z2 = order(f.Z2);
  o.require(u1.status == OrderResult::Status::found && u1.k == 1u, "U1 order");
  o.require(lz2.status == OrderResult::Status::found && lz2.k == 2u, "LZ2 order");
  o.require(z2.status == OrderResult::Status::none, "Z2 order");

  std::vector<Expect> all_true;
  for (P p : kAlgebraic) all_true.push_back({p, true});
  expect_graph(o, "D_triv", f.D_triv,
               {{P::associativity, true}, {P::aperiodicity, true},
                {P::local_testability, true}, {P::strict_local_testability, true},
                {P::right_local_testability, true},
                {P::left_local_testability, true}, {P::local_idempotency, true},
                {P::threshold_local_testability, true},
                {P::piecewise_testability, true}, {P::one_testability, true}});
  o.require(transition_semigroup(f.D_parity).semigroup.size() == 2,
            "D_parity semigroup size");
  expect_graph(o, "D_parity", f.D_parity,
               {{P::aperiodicity, false}, {P::local_testability, false},
                {P::threshold_local_testability, false},
                {P::piecewise_testability, false},
                {P::local_idempotency, false}, {P::one_testability, false}});
  expect_graph(o, "D_ab", f.D_ab,
               {{P::local_testability, true}, {P::one_testability, false},
                {P::threshold_local_testability, true},
                {P::piecewise_testability, false}});

  const auto gorder = [](const TransitionGraph& g) {
    return order_of_local_testability_graph(g, kDefaultKMax, kDefaultBudget);
  };
  const auto triv = gorder(f.D_triv), ab = gorder(f.D_ab), par = gorder(f.D_parity);
  o.require(triv.status == OrderResult::Status::found && triv.k == 1u, "D_triv order");
  o.require(ab.status == OrderResult::Status::found && ab.k == 2u, "D_ab order");
  o.require(par.status == OrderResult::Status::none, "D_parity order");

  const double secs = seconds_since(t0);
  o.require(secs < 1.0, "took " + std::to_string(secs) + " s");
  if (o.pass) o.note = std::to_string(secs) + " s";
  return o;
}

std::vector<FiniteSemigroup> small_pool() {
  const auto& f = fixtures();
  std::vector<FiniteSemigroup> pool{f.U1, f.LZ2, f.Z2};
  testing::Rng rng(31);
  pool.push_back(testing::rectangular_band(2, 2));
  pool.push_back(testing::rectangular_band(1, 3));
  pool.push_back(testing::rectangular_band(3, 2));
  pool.push_back(testing::cyclic_group(3));
  pool.push_back(testing::cyclic_group(5));
  pool.push_back(testing::random_semilattice(rng, 6));
  pool.push_back(testing::random_semilattice(rng, 5));
  return pool;
}

Outcome generator_formula() {
  Outcome o;
  const auto pool = small_pool();
  std::size_t pairs = 0;
  for (const auto& a : pool)
    for (const auto& b : pool) {
      const auto p = semigroup_direct_product(a, b);
      const std::size_t n1 = a.size(), g1 = a.generator_count();
      const std::size_t n2 = b.size(), g2 = b.generator_count();
      o.require(p.generator_count() == n1 * g2 + n2 * g1 - g1 * g2,
                "generator count " + std::to_string(p.generator_count()));
      o.require(p.size() == n1 * n2, "product size");
      ++pairs;
    }
  o.require(pairs >= 10, "too few pairs");
  if (o.pass) o.note = std::to_string(pairs) + " pairs";
  return o;
}

std::vector<TransitionGraph> random_dfas() {
  std::vector<TransitionGraph> out;
  testing::Rng rng(2003);
  for (int i = 0; i < 60; ++i)
    out.push_back(testing::random_complete_graph(rng, 1 + i % 5, 2));
  return out;
}

Outcome oracle_agreement() {
  const auto t0 = Clock::now();
  Outcome o;
  std::size_t lt = 0;
  for (const auto& g : random_dfas()) {
    const bool algebraic = yes(graph_property(g, Property::local_testability));
    const auto r = order_of_local_testability_graph(g, 8, kDefaultBudget);
    o.require(r.status != OrderResult::Status::unknown, "oracle budget exceeded");
    o.require(algebraic == (r.status == OrderResult::Status::found),
              "disagreement on\n" + io::write_graph(g));
    lt += algebraic;
  }
  if (o.pass)
    o.note = "60 graphs, " + std::to_string(lt) + " locally testable, " +
             std::to_string(seconds_since(t0)) + " s";
  return o;
}

Outcome dual_path() {
  Outcome o;
  for (const auto& g : random_dfas()) {
    const auto s = transition_semigroup(g).semigroup;
    for (Property p : kAlgebraic)
      o.require(yes(graph_property(g, p)) == naive(s, p),
                std::string(short_name(p)) + " on\n" + io::write_graph(g));
  }
  return o;
}

Outcome variety_closure() {
  Outcome o;
  const auto& f = fixtures();
  const FiniteSemigroup* pool[] = {&f.U1, &f.LZ2, &f.Z2};
  const Property props[] = {
      Property::local_testability,      Property::right_local_testability,
      Property::left_local_testability, Property::local_idempotency,
      Property::threshold_local_testability, Property::piecewise_testability,
      Property::aperiodicity};
  std::size_t checks = 0;
  for (const auto* a : pool)
    for (const auto* b : pool) {
      const auto p = semigroup_direct_product(*a, *b);
      for (Property prop : props)
        if (yes(semigroup_property(*a, prop)) && yes(semigroup_property(*b, prop))) {
          o.require(yes(semigroup_property(p, prop)), std::string(short_name(prop)));
          ++checks;
        }
    }
  const TransitionGraph* graphs[] = {&f.D_triv, &f.D_parity, &f.D_ab};
  for (const auto* a : graphs)
    for (const auto* b : graphs) {
      const auto p = graph_direct_product(*a, *b);
      for (Property prop : props)
        if (yes(graph_property(*a, prop)) && yes(graph_property(*b, prop))) {
          o.require(yes(graph_property(p, prop)), std::string(short_name(prop)));
          ++checks;
        }
    }
  if (o.pass) o.note = std::to_string(checks) + " inherited verdicts";
  return o;
}

Outcome monotonicity() {
  Outcome o;
  const auto& f = fixtures();
  std::size_t checked = 0, skipped = 0;
  for (const auto* g : {&f.D_triv, &f.D_parity, &f.D_ab}) {
    Truth prev = Truth::unknown;
    for (std::size_t k = 1; k <= 5; ++k) {
      const auto v = is_k_testable_graph(*g, k, kMonotoneBudget);
      if (prev == Truth::yes && v.holds != Truth::unknown) {
        o.require(yes(v), "graph k = " + std::to_string(k));
        ++checked;
      } else if (v.holds == Truth::unknown) {
        ++skipped;
      }
      if (v.holds != Truth::unknown) prev = v.holds;
    }
  }
  for (const auto* s : {&f.U1, &f.LZ2, &f.Z2}) {
    const auto action = oracle::cayley_action(*s);
    for (std::size_t k = 1; k <= 4; ++k) {
      for (std::size_t t = 1; t <= 3; ++t) {
        const auto d = oracle::profile_determines(action, k, t, kMonotoneBudget);
        const auto up_t = oracle::profile_determines(action, k, t + 1, kMonotoneBudget);
        const auto up_k = oracle::profile_determines(action, k + 1, t, kMonotoneBudget);
        if (d.status != Truth::yes) continue;
        for (const auto* next : {&up_t, &up_k}) {
          if (next->status == Truth::unknown) {
            ++skipped;
            continue;
          }
          o.require(next->status == Truth::yes,
                    "k = " + std::to_string(k) + ", t = " + std::to_string(t));
          ++checked;
        }
      }
    }
  }
  o.require(checked > 0, "nothing checked");
  if (o.pass)
    o.note = std::to_string(checked) + " implications, " +
             std::to_string(skipped) + " over budget";
  return o;
}

Outcome round_trips() {
  Outcome o;
  const auto& f = fixtures();
  std::vector<FiniteSemigroup> semis{f.U1, f.LZ2, f.Z2};
  for (const auto& a : std::vector<FiniteSemigroup>{f.U1, f.LZ2, f.Z2})
    for (const auto& b : std::vector<FiniteSemigroup>{f.U1, f.LZ2, f.Z2})
      semis.push_back(semigroup_direct_product(a, b));
  for (const auto& s : semis) {
    const auto text = io::write_semigroup(s);
    const auto back = io::parse_semigroup(text);
    o.require(back == s, "semigroup identity");
    o.require(io::write_semigroup(back) == text, "semigroup bytes");
  }
  std::vector<TransitionGraph> graphs{f.D_triv, f.D_parity, f.D_ab};
  for (const auto* a : {&f.D_triv, &f.D_parity, &f.D_ab})
    for (const auto* b : {&f.D_triv, &f.D_parity, &f.D_ab})
      graphs.push_back(graph_direct_product(*a, *b));
  graphs.push_back(graph_power(f.D_ab, 3));
  for (const auto& g : graphs) {
    const auto text = io::write_graph(g);
    const auto back = io::parse_graph(text);
    o.require(back == g, "graph identity");
    o.require(io::write_graph(back) == text, "graph bytes");
  }
  if (o.pass)
    o.note = std::to_string(semis.size() + graphs.size()) + " structures";
  return o;
}

Outcome capacity_semigroup() {
  const auto t0 = Clock::now();
  Outcome o;
  const auto a = testing::transformation_semigroup_of_size(20, 1);
  const auto b = testing::transformation_semigroup_of_size(25, 1);
  const auto s = semigroup_direct_product(a, b);
  o.require(s.size() == 500, "size " + std::to_string(s.size()));
  // Every element idempotent and every check scans all of S.
  const auto band = testing::rectangular_band(20, 25);
  for (const auto* x : {&s, &band}) {
    const auto report = analyze_semigroup(*x, kAllProperties, Limits{}, "n500");
    for (const auto& v : report.verdicts())
      o.require(v.holds != Truth::unknown, v.property + " unknown");
  }
  o.require(yes(semigroup_property(band, Property::threshold_local_testability)),
            "band not LTT");
  const double secs = seconds_since(t0);
  o.require(secs < 60.0, "took " + std::to_string(secs) + " s");
  if (o.pass)
    o.note = "random product and 20x25 band, " +
             std::to_string(secs) + " s";
  return o;
}

Outcome capacity_graph() {
  const auto t0 = Clock::now();
  Outcome o;
  testing::Rng rng(200);
  const auto g = testing::random_complete_graph(rng, 200, 2);
  try {
    const auto report =
        analyze_graph(g, kAllProperties, Limits{}, "random-200");
    for (const auto& v : report.verdicts())
      o.require(v.holds != Truth::unknown,
                v.property + " unknown: " + v.detail);
  } catch (const std::exception& e) {
    o.require(false, e.what());
  }
  const double secs = seconds_since(t0);
  o.require(secs < 120.0, "took " + std::to_string(secs) + " s");
  if (o.pass) o.note = std::to_string(secs) + " s";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 fixture verdict matrix", fixture_matrix},
      {"2 product generator count", generator_formula},
      {"3 oracle/algebra agreement", oracle_agreement},
      {"4 dual-path agreement", dual_path},
      {"5 variety closure", variety_closure},
      {"6 monotonicity in k and t", monotonicity},
      {"7 format round trips", round_trips},
      {"8a capacity: semigroup n = 500", capacity_semigroup},
      {"8b capacity: graph g = 200", capacity_graph},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("%s %s%s%s\n", o.pass ? "PASS" : "FAIL", name.c_str(),
                o.note.empty() ? "" : " -- ", o.note.c_str());
    std::fflush(stdout);
  }
  return failed;
}
