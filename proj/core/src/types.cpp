#include "heckebound/types.hpp"

#include <algorithm>

namespace heckebound {

char to_char(Generator g) noexcept {
  switch (g) {
    case Generator::s:
      return 's';
    case Generator::t:
      return 't';
    case Generator::r:
      return 'r';
  }
  return '?';
}

Generator generator_from_char(char c) {
  switch (c) {
    case 's':
      return Generator::s;
    case 't':
      return Generator::t;
    case 'r':
      return Generator::r;
    default:
      throw std::invalid_argument(std::string("not a generator letter: '") + c + "'");
  }
}

std::string to_string(const Word& w) {
  std::string out;
  out.reserve(w.size());
  for (Generator g : w) out.push_back(to_char(g));
  return out;
}

Word parse_word(std::string_view text) {
  Word out;
  out.reserve(text.size());
  for (char c : text) out.push_back(generator_from_char(c));
  return out;
}

Word reversed(const Word& w) { return Word(w.rbegin(), w.rend()); }

Word alternating(Generator first, Generator second, int length) {
  Word out;
  out.reserve(static_cast<std::size_t>(std::max(length, 0)));
  for (int i = 0; i < length; ++i) out.push_back(i % 2 == 0 ? first : second);
  return out;
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  // FNV-1a over the letters, with the length folded in.
  std::uint64_t h = 1469598103934665603ull ^ w.size();
  for (Generator g : w) {
    h ^= static_cast<std::uint64_t>(index(g)) + 1;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

Generator GeneratorSet::first() const noexcept {
  for (Generator g : kGenerators) {
    if (contains(g)) return g;
  }
  return Generator::s;
}

std::string to_string(GeneratorSet set) {
  std::string out = "{";
  bool first = true;
  for (Generator g : kGenerators) {
    if (!set.contains(g)) continue;
    if (!first) out.push_back(',');
    out.push_back(to_char(g));
    first = false;
  }
  out.push_back('}');
  return out;
}

std::string_view to_string(TheoremCase c) noexcept {
  switch (c) {
    case TheoremCase::case_a:
      return "case-a";
    case TheoremCase::case_b:
      return "case-b";
    case TheoremCase::out_of_theorem:
      return "out-of-theorem";
  }
  return "out-of-theorem";
}

GroupParams::GroupParams(int m_sr, int m_st) : m_sr_(m_sr), m_st_(m_st) {
  if (m_sr < 3 || m_st < 3) {
    throw InvalidParams("bond labels must satisfy m_sr >= 3 and m_st >= 3 (got m_sr=" +
                        std::to_string(m_sr) + ", m_st=" + std::to_string(m_st) + ")");
  }
}

int GroupParams::bond(Generator g, Generator h) const noexcept {
  if (g == h) return 1;
  const int lo = std::min(index(g), index(h));
  const int hi = std::max(index(g), index(h));
  if (lo == index(Generator::s) && hi == index(Generator::t)) return m_st_;
  if (lo == index(Generator::s) && hi == index(Generator::r)) return m_sr_;
  return m_tr();
}

TheoremCase GroupParams::theorem_case() const noexcept {
  if (m_sr_ >= 7 && m_st_ == 3) return TheoremCase::case_a;
  if (m_sr_ >= 5 && m_st_ >= 4) return TheoremCase::case_b;
  return TheoremCase::out_of_theorem;
}

int GroupParams::degree_bound() const noexcept {
  if (theorem_case() == TheoremCase::case_a) return m_sr_;
  return std::max(m_sr_, m_st_);
}

std::string to_string(const GroupParams& p) {
  return "(m_sr=" + std::to_string(p.m_sr()) + ", m_st=" + std::to_string(p.m_st()) + ")";
}

}  // namespace heckebound
