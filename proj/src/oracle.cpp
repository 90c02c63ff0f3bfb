#include "testas/oracle.hpp"

#include <algorithm>
#include <cstring>
#include <limits>
#include <map>
#include <stdexcept>

#include "testas/error.hpp"

namespace testas::oracle {
namespace {

constexpr std::uint32_t kMissing = std::numeric_limits<std::uint32_t>::max();

void append_u32(std::string& out, std::uint32_t v) {
  char buf[sizeof v];
  std::memcpy(buf, &v, sizeof v);
  out.append(buf, sizeof v);
}

void append_u64(std::string& out, std::uint64_t v) {
  char buf[sizeof v];
  std::memcpy(buf, &v, sizeof v);
  out.append(buf, sizeof v);
}

std::string profile_key(const KProfile& p) {
  std::string key;
  if (p.short_word) {
    key.push_back('s');
    for (Letter c : *p.short_word) append_u32(key, c);
    return key;
  }
  key.push_back('l');
  for (Letter c : p.prefix) append_u32(key, c);
  key.push_back('|');
  for (Letter c : p.suffix) append_u32(key, c);
  for (const auto& [factor, count] : p.counts) {
    key.push_back('|');
    for (Letter c : factor) append_u32(key, c);
    append_u32(key, count);
  }
  return key;
}

Word trace(const std::vector<std::uint32_t>& parent,
           const std::vector<Letter>& letter, std::uint32_t node) {
  Word w;
  while (parent[node] != kMissing) {
    w.push_back(letter[node]);
    node = parent[node];
  }
  std::reverse(w.begin(), w.end());
  return w;
}

}  // namespace

KProfile profile_of(std::span<const Letter> word, std::size_t k,
                    std::size_t t) {
  if (k < 1 || t < 1) throw std::invalid_argument("profile needs k, t >= 1");
  KProfile p;
  p.k = k;
  p.t = t;
  const std::size_t edge = std::min(word.size(), k - 1);
  p.prefix.assign(word.begin(), word.begin() + edge);
  p.suffix.assign(word.end() - edge, word.end());
  if (word.size() < k) {
    p.short_word = Word(word.begin(), word.end());
    return p;
  }
  std::map<Word, std::uint32_t> counts;
  for (std::size_t i = 0; i + k <= word.size(); ++i) {
    auto& c = counts[Word(word.begin() + i, word.begin() + i + k)];
    if (c < t) ++c;
  }
  p.counts.assign(counts.begin(), counts.end());
  return p;
}

WordAction::WordAction(std::size_t alphabet_size, std::size_t value_count,
                       std::uint32_t initial, std::vector<std::uint32_t> table)
    : alphabet_(alphabet_size),
      values_(value_count),
      initial_(initial),
      table_(std::move(table)) {
  if (alphabet_ == 0 || initial_ >= values_ ||
      table_.size() != values_ * alphabet_)
    throw std::invalid_argument("malformed word action");
  for (auto v : table_)
    if (v >= values_) throw std::invalid_argument("action value out of range");
}

std::uint32_t WordAction::evaluate(std::span<const Letter> word) const {
  std::uint32_t v = initial_;
  for (Letter c : word) v = step(v, c);
  return v;
}

WordAction cayley_action(const FiniteSemigroup& s) {
  const std::size_t n = s.size();
  const std::size_t gens = s.generator_count();
  std::vector<std::uint32_t> table((n + 1) * gens);
  for (Element x = 0; x < n; ++x)
    for (Letter g = 0; g < gens; ++g) table[x * gens + g] = s.right(x, g);
  for (Letter g = 0; g < gens; ++g) table[n * gens + g] = g;
  return WordAction(gens, n + 1, static_cast<std::uint32_t>(n),
                    std::move(table));
}

ProfileAutomaton::ProfileAutomaton(std::size_t alphabet_size, std::size_t k,
                                   std::size_t t, std::size_t budget)
    : alphabet_(alphabet_size), k_(k), t_(t), budget_(budget) {
  if (k_ < 1 || t_ < 1 || alphabet_ == 0)
    throw std::invalid_argument("profile automaton needs a, k, t >= 1");
  std::uint64_t span = 1;
  for (std::size_t i = 0; i < k_; ++i) {
    if (span > std::numeric_limits<std::uint64_t>::max() / alphabet_)
      throw std::invalid_argument("alphabet_size^k does not fit in 64 bits");
    span *= alphabet_;
  }
  intern(Compact{});
}

std::string ProfileAutomaton::key(const Compact& c) const {
  std::string out;
  out.push_back(c.is_short ? 's' : 'l');
  for (Letter x : c.head) append_u32(out, x);
  out.push_back('|');
  for (Letter x : c.tail) append_u32(out, x);
  for (const auto& [code, count] : c.counts) {
    append_u64(out, code);
    append_u32(out, count);
  }
  return out;
}

ProfileAutomaton::State ProfileAutomaton::intern(Compact c) {
  auto k = key(c);
  if (auto it = index_.find(k); it != index_.end()) return it->second;
  if (states_.size() >= budget_)
    throw BudgetExceeded("profile automaton passed " +
                             std::to_string(budget_) + " states",
                         budget_);
  const auto id = static_cast<State>(states_.size());
  states_.push_back(std::move(c));
  next_.resize(next_.size() + alphabet_, kMissing);
  index_.emplace(std::move(k), id);
  return id;
}

ProfileAutomaton::Compact ProfileAutomaton::from_word(
    std::span<const Letter> w) const {
  const KProfile p = profile_of(w, k_, t_);
  Compact c;
  if (p.short_word) {
    c.head = *p.short_word;
    return c;
  }
  c.is_short = false;
  c.head = p.prefix;
  c.tail = p.suffix;
  for (const auto& [factor, count] : p.counts) {
    std::uint64_t code = 0;
    for (Letter x : factor) code = code * alphabet_ + x;
    c.counts.emplace_back(code, count);
  }
  return c;
}

ProfileAutomaton::State ProfileAutomaton::step(State s, Letter c) {
  const std::size_t slot = static_cast<std::size_t>(s) * alphabet_ + c;
  if (next_[slot] != kMissing) return next_[slot];
  const Compact& cur = states_[s];
  Compact out;
  if (cur.is_short) {
    Word w = cur.head;
    w.push_back(c);
    if (w.size() < k_) {
      out.head = std::move(w);
    } else {
      out = from_word(w);
    }
  } else {
    out.is_short = false;
    out.head = cur.head;
    std::uint64_t code = 0;
    for (Letter x : cur.tail) code = code * alphabet_ + x;
    code = code * alphabet_ + c;
    out.counts = cur.counts;
    auto it = std::lower_bound(
        out.counts.begin(), out.counts.end(), code,
        [](const auto& entry, std::uint64_t v) { return entry.first < v; });
    if (it != out.counts.end() && it->first == code) {
      if (it->second < t_) ++it->second;
    } else {
      out.counts.insert(it, {code, 1});
    }
    out.tail = cur.tail;
    out.tail.push_back(c);
    out.tail.erase(out.tail.begin());
  }
  const State target = intern(std::move(out));
  next_[slot] = target;
  return target;
}

KProfile ProfileAutomaton::profile(State s) const {
  const Compact& c = states_[s];
  KProfile p;
  p.k = k_;
  p.t = t_;
  if (c.is_short) {
    p.short_word = c.head;
    const std::size_t edge = std::min(c.head.size(), k_ - 1);
    p.prefix.assign(c.head.begin(), c.head.begin() + edge);
    p.suffix.assign(c.head.end() - edge, c.head.end());
    return p;
  }
  p.prefix = c.head;
  p.suffix = c.tail;
  for (const auto& [code, count] : c.counts) {
    Word factor(k_);
    std::uint64_t rest = code;
    for (std::size_t i = k_; i-- > 0;) {
      factor[i] = static_cast<Letter>(rest % alphabet_);
      rest /= alphabet_;
    }
    p.counts.emplace_back(std::move(factor), count);
  }
  return p;
}

Determination profile_determines(const WordAction& action, std::size_t k,
                                 std::size_t t, std::size_t budget) {
  Determination out;
  const std::size_t a = action.alphabet_size();
  ProfileAutomaton profiles(a, k, t, budget);

  std::vector<std::uint32_t> pstate{profiles.initial()};
  std::vector<std::uint32_t> value{action.initial()};
  std::vector<std::uint32_t> parent{kMissing};
  std::vector<Letter> letter{0};
  std::unordered_map<std::uint64_t, std::uint32_t> seen;
  std::vector<std::uint32_t> first_of_profile{0};
  seen.emplace(std::uint64_t{action.initial()}, 0);

  try {
    for (std::uint32_t head = 0; head < pstate.size(); ++head) {
      for (Letter c = 0; c < a; ++c) {
        const auto s2 = profiles.step(pstate[head], c);
        const auto v2 = action.step(value[head], c);
        const std::uint64_t key = (std::uint64_t{s2} << 32) | v2;
        if (seen.contains(key)) continue;
        if (pstate.size() >= budget)
          throw BudgetExceeded("search passed " + std::to_string(budget) +
                                   " (profile, value) pairs",
                               budget);
        const auto id = static_cast<std::uint32_t>(pstate.size());
        pstate.push_back(s2);
        value.push_back(v2);
        parent.push_back(head);
        letter.push_back(c);
        seen.emplace(key, id);
        if (s2 >= first_of_profile.size())
          first_of_profile.resize(s2 + 1, kMissing);
        const auto earlier = first_of_profile[s2];
        if (earlier == kMissing) {
          first_of_profile[s2] = id;
        } else if (value[earlier] != v2) {
          out.status = Truth::no;
          out.witness.emplace(trace(parent, letter, earlier),
                              trace(parent, letter, id));
          out.states = pstate.size();
          return out;
        }
      }
    }
  } catch (const BudgetExceeded& e) {
    out.status = Truth::unknown;
    out.states = pstate.size();
    out.detail = e.what();
    return out;
  }
  out.status = Truth::yes;
  out.states = pstate.size();
  return out;
}

ScanResult brute_force_scan(const WordAction& action, std::size_t k,
                            std::size_t t, std::size_t max_len) {
  ScanResult out;
  const std::size_t a = action.alphabet_size();
  std::unordered_map<std::string, std::pair<std::uint32_t, Word>> groups;
  Word w;
  for (std::size_t len = 0; len <= max_len; ++len) {
    w.assign(len, 0);
    while (true) {
      ++out.words_scanned;
      const auto v = action.evaluate(w);
      auto [it, fresh] = groups.try_emplace(profile_key(profile_of(w, k, t)),
                                            v, w);
      if (!fresh && it->second.first != v) {
        out.holds = false;
        out.witness.emplace(it->second.second, w);
        return out;
      }
      // next word of this length in lexicographic order
      std::size_t i = len;
      while (i > 0 && w[i - 1] + 1 == a) w[--i] = 0;
      if (i == 0) break;
      ++w[i - 1];
    }
  }
  return out;
}

OrderResult search_order(const WordAction& action, std::size_t k_max,
                         std::size_t t, std::size_t budget) {
  OrderResult r;
  r.k_max = k_max;
  r.threshold = t;
  for (std::size_t k = 1; k <= k_max; ++k) {
    const auto d = profile_determines(action, k, t, budget);
    r.states_explored += d.states;
    if (d.status == Truth::yes) {
      r.status = OrderResult::Status::found;
      r.k = k;
      return r;
    }
    if (d.status == Truth::unknown) {
      r.status = OrderResult::Status::unknown;
      r.detail = "budget exceeded at k=" + std::to_string(k) + ": " + d.detail;
      return r;
    }
    r.lower_bound = k;
    r.last_witness = d.witness;
  }
  r.status = OrderResult::Status::none;
  r.detail = "no k <= " + std::to_string(k_max);
  return r;
}

}  // namespace testas::oracle
