#include "oracles.hpp"

#include <algorithm>
#include <deque>

#include "heckebound/types.hpp"

namespace oracle {

namespace {

constexpr char kLetters[3] = {'s', 't', 'r'};

int bond(char a, char b, int m_sr, int m_st) {
  if (a == b) return 1;
  if ((a == 's' && b == 'r') || (a == 'r' && b == 's')) return m_sr;
  if ((a == 's' && b == 't') || (a == 't' && b == 's')) return m_st;
  return 2;
}

std::string alternating(char a, char b, int n) {
  std::string out;
  for (int i = 0; i < n; ++i) out += (i % 2 == 0) ? a : b;
  return out;
}

void add(QMap& p, int k, const Integer& c) {
  auto& slot = p[k];
  slot += c;
  if (slot == 0) p.erase(k);
}

}  // namespace

std::vector<std::string> all_words(int n) {
  std::vector<std::string> out{""};
  for (int i = 0; i < n; ++i) {
    std::vector<std::string> next;
    for (const std::string& w : out) {
      for (char c : kLetters) next.push_back(w + c);
    }
    out = std::move(next);
  }
  return out;
}

std::set<std::string> reduced_expressions(const std::string& word, int m_sr, int m_st) {
  std::set<std::string> seen{word};
  std::deque<std::string> queue{word};
  while (!queue.empty()) {
    const std::string w = queue.front();
    queue.pop_front();
    auto visit = [&](std::string v) {
      if (seen.insert(v).second) queue.push_back(std::move(v));
    };
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i] == w[i + 1]) {
        visit(w.substr(0, i) + w.substr(i + 2));
        continue;
      }
      const int m = bond(w[i], w[i + 1], m_sr, m_st);
      if (i + m > w.size()) continue;
      const std::string block = alternating(w[i], w[i + 1], m);
      if (w.compare(i, m, block) == 0) visit(w.substr(0, i) + alternating(w[i + 1], w[i], m) + w.substr(i + m));
    }
  }
  std::size_t shortest = word.size();
  for (const std::string& w : seen) shortest = std::min(shortest, w.size());
  std::set<std::string> out;
  for (const std::string& w : seen) {
    if (w.size() == shortest) out.insert(w);
  }
  return out;
}

std::string shortlex_min(const std::set<std::string>& words) {
  auto rank = [](char c) { return c == 's' ? 0 : c == 't' ? 1 : 2; };
  auto less = [&](const std::string& a, const std::string& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        [&](char x, char y) { return rank(x) < rank(y); });
  };
  return *std::min_element(words.begin(), words.end(), less);
}

bool subword_leq(const std::set<std::string>& reduced_y, const std::string& reduced_w) {
  const std::size_t n = reduced_w.size();
  const std::size_t len = reduced_y.begin()->size();
  for (unsigned mask = 0; mask < (1U << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != len) continue;
    std::string sub;
    for (std::size_t i = 0; i < n; ++i) {
      if ((mask >> i) & 1U) sub += reduced_w[i];
    }
    if (reduced_y.count(sub) != 0) return true;
  }
  return false;
}

std::map<Element, QMap> t_basis_product(Element x, Element y) {
  const auto& g = x.group();
  std::map<Element, QMap> cur{{x, QMap{{0, 1}}}};
  for (const heckebound::Generator s : y.normal_form()) {
    std::map<Element, QMap> next;
    for (const auto& [w, c] : cur) {
      const Element ws = g.multiply_gen(w, s, heckebound::Side::right);
      if (ws.length() > w.length()) {
        for (const auto& [k, a] : c) add(next[ws], k, a);
      } else {
        for (const auto& [k, a] : c) {
          add(next[w], k + 1, a);
          add(next[w], k, -a);
          add(next[ws], k + 1, a);
        }
      }
    }
    std::erase_if(next, [](const auto& kv) { return kv.second.empty(); });
    cur = std::move(next);
  }
  return cur;
}

std::map<Element, std::map<int, Integer>> normalized_structure_constants(Element x, Element y) {
  std::map<Element, std::map<int, Integer>> out;
  for (const auto& [z, c] : t_basis_product(x, y)) {
    for (const auto& [k, a] : c) out[z][2 * k + z.length() - x.length() - y.length()] = a;
  }
  return out;
}

std::map<Element, HalfMap> bar(const std::map<Element, HalfMap>& v) {
  std::map<Element, HalfMap> out;
  for (const auto& [w, c] : v) {
    const auto& g = w.group();
    // bar(T~_w) = prod over the letters of (T~_g - xi), xi = q^{1/2} - q^{-1/2}.
    std::map<Element, HalfMap> term{{g.neutral(), HalfMap{{0, 1}}}};
    for (const heckebound::Generator s : w.normal_form()) {
      std::map<Element, HalfMap> next;
      for (const auto& [u, a] : term) {
        const Element us = g.multiply_gen(u, s, heckebound::Side::right);
        for (const auto& [k, b] : a) {
          // - xi * T~_u
          add(next[u], k + 1, -b);
          add(next[u], k - 1, b);
          // T~_u T~_s
          if (us.length() > u.length()) {
            add(next[us], k, b);
          } else {
            add(next[u], k + 1, b);
            add(next[u], k - 1, -b);
            add(next[us], k, b);
          }
        }
      }
      std::erase_if(next, [](const auto& kv) { return kv.second.empty(); });
      term = std::move(next);
    }
    for (const auto& [u, a] : term) {
      for (const auto& [k, b] : a) {
        for (const auto& [j, cc] : c) add(out[u], k - j, b * cc);
      }
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.empty(); });
  return out;
}

// ---------------------------------------------------------------------------

std::vector<Dihedral::Elem> Dihedral::elements() const {
  std::vector<Elem> out{{0, 0}};
  for (int k = 1; k < m; ++k) {
    out.push_back({0, k});
    out.push_back({1, k});
  }
  out.push_back({0, m});
  return out;
}

int Dihedral::last_letter(Elem w) const { return (w.length % 2 == 1) ? w.first : 1 - w.first; }

Dihedral::Elem Dihedral::times(Elem w, int g) const {
  if (w.length == 0) return {g, 1};
  if (w.length == m) {
    // Pick the spelling of the longest element that ends in g.
    const int first = (m % 2 == 1) ? g : 1 - g;
    return {first, m - 1};
  }
  if (last_letter(w) == g) return w.length == 1 ? Elem{0, 0} : Elem{w.first, w.length - 1};
  if (w.length + 1 == m) return {0, m};
  return {w.first, w.length + 1};
}

std::string Dihedral::word(Elem w, char a, char b) const {
  std::string out;
  for (int i = 0; i < w.length; ++i) out += ((w.first + i) % 2 == 0) ? a : b;
  return out;
}

std::map<Dihedral::Elem, std::vector<long long>> Dihedral::product(Elem x, Elem y) const {
  std::map<Elem, std::vector<long long>> cur{{x, {1}}};
  for (int i = 0; i < y.length; ++i) {
    const int g = (y.first + i) % 2;
    std::map<Elem, std::vector<long long>> next;
    auto accumulate = [&](Elem e, const std::vector<long long>& c, int shift) {
      auto& slot = next[e];
      if (slot.size() < c.size() + shift) slot.resize(c.size() + shift, 0);
      for (std::size_t k = 0; k < c.size(); ++k) slot[k + shift] += c[k];
    };
    for (const auto& [w, c] : cur) {
      const Elem wg = times(w, g);
      if (wg.length > w.length) {
        accumulate(wg, c, 0);
      } else {
        accumulate(w, c, 1);
        accumulate(wg, c, 0);
      }
    }
    cur = std::move(next);
  }
  for (auto& [e, c] : cur) {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  std::erase_if(cur, [](const auto& kv) { return kv.second.empty(); });
  return cur;
}

}  // namespace oracle
