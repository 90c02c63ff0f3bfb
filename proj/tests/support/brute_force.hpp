#ifndef TESTAS_TESTS_BRUTE_FORCE_HPP
#define TESTAS_TESTS_BRUTE_FORCE_HPP

// Definitional checks written independently of the library kernels: plain
// nested loops over the multiplication table.

#include <set>
#include <vector>

#include "testas/types.hpp"

namespace testas::testing {

enum class NaiveLocal { idempotent, semilattice, right, left };

inline bool naive_local(const FiniteSemigroup& s, NaiveLocal kind) {
  const auto n = static_cast<Element>(s.size());
  auto m = [&](Element a, Element b) { return s.product(a, b); };
  for (Element e = 0; e < n; ++e) {
    if (m(e, e) != e) continue;
    for (Element x0 = 0; x0 < n; ++x0) {
      const Element x = m(m(e, x0), e);
      for (Element y0 = 0; y0 < n; ++y0) {
        const Element y = m(m(e, y0), e);
        if (m(x, x) != x || m(y, y) != y) return false;
        switch (kind) {
          case NaiveLocal::idempotent:
            break;
          case NaiveLocal::semilattice:
            if (m(x, y) != m(y, x)) return false;
            break;
          case NaiveLocal::right:
            if (m(m(x, y), x) != m(x, y)) return false;
            break;
          case NaiveLocal::left:
            if (m(m(x, y), x) != m(y, x)) return false;
            break;
        }
      }
    }
  }
  return true;
}

inline bool naive_associative(const FiniteSemigroup& s) {
  const auto n = static_cast<Element>(s.size());
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z)
        if (s.product(s.product(x, y), z) != s.product(x, s.product(y, z)))
          return false;
  return true;
}

/// x^n == x^(n+1) for every x.
inline bool naive_aperiodic(const FiniteSemigroup& s) {
  const auto n = static_cast<Element>(s.size());
  for (Element x = 0; x < n; ++x) {
    Element p = x;
    for (Element i = 1; i < n; ++i) p = s.product(p, x);
    if (s.product(p, x) != p) return false;
  }
  return true;
}

inline bool naive_ltt(const FiniteSemigroup& s) {
  if (!naive_aperiodic(s)) return false;
  const auto n = static_cast<Element>(s.size());
  auto m = [&](std::initializer_list<Element> xs) {
    auto it = xs.begin();
    Element v = *it++;
    for (; it != xs.end(); ++it) v = s.product(v, *it);
    return v;
  };
  for (Element e = 0; e < n; ++e) {
    if (s.product(e, e) != e) continue;
    for (Element f = 0; f < n; ++f) {
      if (s.product(f, f) != f) continue;
      for (Element x = 0; x < n; ++x)
        for (Element u = 0; u < n; ++u)
          for (Element y = 0; y < n; ++y)
            if (m({e, x, f, u, e, y, f}) != m({e, y, f, u, e, x, f}))
              return false;
    }
  }
  return true;
}

/// Two-sided ideal S^1 x S^1 as a set.
inline std::set<Element> naive_ideal(const FiniteSemigroup& s, Element x) {
  const auto n = static_cast<Element>(s.size());
  std::set<Element> out{x};
  for (Element a = 0; a < n; ++a) {
    out.insert(s.product(a, x));
    out.insert(s.product(x, a));
    for (Element b = 0; b < n; ++b) out.insert(s.product(s.product(a, x), b));
  }
  return out;
}

inline bool naive_j_equivalent(const FiniteSemigroup& s, Element x,
                               Element y) {
  return naive_ideal(s, x) == naive_ideal(s, y);
}

inline bool naive_j_trivial(const FiniteSemigroup& s) {
  const auto n = static_cast<Element>(s.size());
  std::vector<std::set<Element>> ideals;
  for (Element x = 0; x < n; ++x) ideals.push_back(naive_ideal(s, x));
  for (Element x = 0; x < n; ++x)
    for (Element y = x + 1; y < n; ++y)
      if (ideals[x] == ideals[y]) return false;
  return true;
}

}  // namespace testas::testing

#endif  // TESTAS_TESTS_BRUTE_FORCE_HPP
