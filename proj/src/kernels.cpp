#include "testas/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace testas::kernels {
namespace {

// Least i with fn(i) engaged, and that value. In parallel mode indices beyond
// the best hit so far are skipped; every index below the final best is still
// evaluated, so the answer matches the serial scan.
template <class Result, class Fn>
std::optional<Result> first_hit(std::size_t count, Exec exec, Fn&& fn) {
  if (exec == Exec::serial) {
    for (std::size_t i = 0; i < count; ++i) {
      if (auto r = fn(i)) return r;
    }
    return std::nullopt;
  }
  std::vector<std::optional<Result>> hits(count);
  std::atomic<std::size_t> best{count};
  const auto signed_count = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t si = 0; si < signed_count; ++si) {
    const auto i = static_cast<std::size_t>(si);
    if (i > best.load(std::memory_order_relaxed)) continue;
    hits[i] = fn(i);
    if (hits[i]) {
      std::size_t cur = best.load(std::memory_order_relaxed);
      while (i < cur &&
             !best.compare_exchange_weak(cur, i, std::memory_order_relaxed)) {
      }
    }
  }
  const std::size_t b = best.load();
  if (b < count) return hits[b];
  return std::nullopt;
}

bool violates(TableView t, LocalCondition cond, Element x, Element y) {
  if (t(x, x) != x) return true;
  switch (cond) {
    case LocalCondition::idempotent:
      return false;
    case LocalCondition::semilattice:
      return t(x, y) != t(y, x);
    case LocalCondition::right:
      return t(t(x, y), x) != t(x, y);
    case LocalCondition::left:
      return t(t(x, y), x) != t(y, x);
  }
  return false;
}

}  // namespace

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

std::vector<Element> product_table(const CayleyRows& rows,
                                   std::span<const Element> order,
                                   std::span<const Element> parent,
                                   std::span<const Letter> last, Exec exec) {
  const std::size_t n = rows.element_count;
  std::vector<Element> table(n * n);
  auto fill_row = [&](std::size_t x) {
    Element* row = table.data() + x * n;
    for (Element y : order) {
      row[y] = parent[y] == kNoParent
                   ? rows.at(static_cast<Element>(x), y)
                   : rows.at(row[parent[y]], last[y]);
    }
  };
  if (exec == Exec::serial) {
    for (std::size_t x = 0; x < n; ++x) fill_row(x);
  } else {
    const auto sn = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t x = 0; x < sn; ++x) fill_row(static_cast<std::size_t>(x));
  }
  return table;
}

std::vector<Element> product_table_reference(const CayleyRows& rows,
                                             std::span<const Word> words) {
  const std::size_t n = rows.element_count;
  std::vector<Element> table(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      auto v = static_cast<Element>(x);
      for (Letter g : words[y]) v = rows.at(v, g);
      table[x * n + y] = v;
    }
  }
  return table;
}

std::optional<std::array<Element, 3>> light_violation(TableView t,
                                                      std::size_t generators,
                                                      Exec exec) {
  using Triple = std::array<Element, 3>;
  return first_hit<Triple>(t.n, exec, [&](std::size_t xi) -> std::optional<Triple> {
    const auto x = static_cast<Element>(xi);
    for (Element g = 0; g < generators; ++g) {
      const Element xg = t(x, g);
      for (Element y = 0; y < t.n; ++y) {
        if (t(xg, y) != t(x, t(g, y))) return Triple{x, g, y};
      }
    }
    return std::nullopt;
  });
}

std::optional<std::array<Element, 3>> associativity_violation_reference(
    TableView t) {
  for (Element x = 0; x < t.n; ++x)
    for (Element y = 0; y < t.n; ++y)
      for (Element z = 0; z < t.n; ++z)
        if (t(t(x, y), z) != t(x, t(y, z))) return std::array{x, y, z};
  return std::nullopt;
}

std::vector<Element> sandwich_set(TableView t, Element e, Element f) {
  std::vector<char> mark(t.n, 0);
  for (Element x = 0; x < t.n; ++x) mark[t(t(e, x), f)] = 1;
  std::vector<Element> out;
  for (Element v = 0; v < t.n; ++v)
    if (mark[v]) out.push_back(v);
  return out;
}

std::optional<std::array<Element, 3>> local_violation(
    TableView t, std::span<const Element> idempotents, LocalCondition cond,
    Exec exec) {
  using Triple = std::array<Element, 3>;
  return first_hit<Triple>(
      idempotents.size(), exec, [&](std::size_t i) -> std::optional<Triple> {
        const Element e = idempotents[i];
        const auto local = sandwich_set(t, e, e);
        for (Element x : local)
          for (Element y : local)
            if (violates(t, cond, x, y)) return Triple{e, x, y};
        return std::nullopt;
      });
}

std::optional<std::pair<Element, std::size_t>> first_periodic(TableView t,
                                                              Exec exec) {
  using Hit = std::pair<Element, std::size_t>;
  const std::size_t n = t.n;
  auto scan = [&](std::vector<std::size_t>& seen_at, std::vector<Element>& stamp,
                  std::size_t xi) -> std::optional<Hit> {
    const auto x = static_cast<Element>(xi);
    Element p = x;
    for (std::size_t i = 1;; ++i) {
      if (stamp[p] == x + 1) {
        const std::size_t period = i - seen_at[p];
        if (period > 1) return Hit{x, period};
        return std::nullopt;
      }
      stamp[p] = x + 1;
      seen_at[p] = i;
      p = t(p, x);
    }
  };
  if (exec == Exec::serial) {
    std::vector<std::size_t> seen_at(n);
    std::vector<Element> stamp(n, 0);
    for (std::size_t x = 0; x < n; ++x)
      if (auto h = scan(seen_at, stamp, x)) return h;
    return std::nullopt;
  }
  std::vector<std::optional<Hit>> hits(n);
  const auto sn = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel
  {
    std::vector<std::size_t> seen_at(n);
    std::vector<Element> stamp(n, 0);
#pragma omp for schedule(static)
    for (std::ptrdiff_t x = 0; x < sn; ++x)
      hits[static_cast<std::size_t>(x)] =
          scan(seen_at, stamp, static_cast<std::size_t>(x));
  }
  for (auto& h : hits)
    if (h) return h;
  return std::nullopt;
}

std::optional<std::array<Element, 5>> exchange_violation(
    TableView t, std::span<const Element> idempotents, Exec exec) {
  using Five = std::array<Element, 5>;
  const std::size_t m = idempotents.size();
  return first_hit<Five>(m * m, exec, [&](std::size_t pair) -> std::optional<Five> {
    const Element e = idempotents[pair / m];
    const Element f = idempotents[pair % m];
    const auto left = sandwich_set(t, e, f);   // e S f
    const auto mid = sandwich_set(t, f, e);    // f S e
    bool bad = false;
    for (std::size_t i = 0; i < left.size() && !bad; ++i)
      for (std::size_t j = i + 1; j < left.size() && !bad; ++j)
        for (Element u : mid)
          if (t(t(left[i], u), left[j]) != t(t(left[j], u), left[i])) {
            bad = true;
            break;
          }
    if (!bad) return std::nullopt;
    std::vector<Element> exf(t.n), fue(t.n);
    for (Element x = 0; x < t.n; ++x) {
      exf[x] = t(t(e, x), f);
      fue[x] = t(t(f, x), e);
    }
    for (Element x = 0; x < t.n; ++x)
      for (Element u = 0; u < t.n; ++u)
        for (Element y = 0; y < t.n; ++y)
          if (t(t(exf[x], fue[u]), exf[y]) != t(t(exf[y], fue[u]), exf[x]))
            return Five{e, f, x, u, y};
    return std::nullopt;
  });
}

std::optional<std::array<Element, 5>> exchange_violation_reference(
    TableView t, std::span<const Element> idempotents) {
  for (Element e : idempotents)
    for (Element f : idempotents)
      for (Element x = 0; x < t.n; ++x)
        for (Element u = 0; u < t.n; ++u)
          for (Element y = 0; y < t.n; ++y) {
            const Element lhs =
                t(t(t(t(t(t(e, x), f), u), e), y), f);
            const Element rhs =
                t(t(t(t(t(t(e, y), f), u), e), x), f);
            if (lhs != rhs) return std::array{e, f, x, u, y};
          }
  return std::nullopt;
}

}  // namespace testas::kernels
