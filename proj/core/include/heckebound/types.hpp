#pragma once

// Basic vocabulary shared by every module: generators, words, descent sets
// and the Coxeter matrix data of a rank-3 group with s-r, s-t and t-r bonds.

#include <array>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace heckebound {

/// The three simple reflections. The numeric value is the ShortLex rank,
/// so s < t < r everywhere in the library.
enum class Generator : std::uint8_t { s = 0, t = 1, r = 2 };

inline constexpr std::array<Generator, 3> kGenerators{Generator::s, Generator::t,
                                                      Generator::r};

constexpr int index(Generator g) noexcept { return static_cast<int>(g); }
constexpr Generator generator_at(int i) noexcept { return static_cast<Generator>(i); }

char to_char(Generator g) noexcept;
Generator generator_from_char(char c);

enum class Side : std::uint8_t { left, right };

using Word = std::vector<Generator>;

std::string to_string(const Word& w);
Word parse_word(std::string_view text);
Word reversed(const Word& w);

/// Alternating word a b a b ... of the given length.
Word alternating(Generator first, Generator second, int length);

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

/// A subset of {s, t, r} as a 3-bit mask.
class GeneratorSet {
 public:
  constexpr GeneratorSet() = default;
  constexpr GeneratorSet(std::initializer_list<Generator> gens) {
    for (Generator g : gens) bits_ |= bit(g);
  }
  static constexpr GeneratorSet from_bits(std::uint8_t bits) {
    GeneratorSet out;
    out.bits_ = bits & 7u;
    return out;
  }

  constexpr bool contains(Generator g) const noexcept { return (bits_ & bit(g)) != 0; }
  constexpr void insert(Generator g) noexcept { bits_ |= bit(g); }
  constexpr void erase(Generator g) noexcept { bits_ &= static_cast<std::uint8_t>(~bit(g)); }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr int size() const noexcept {
    return ((bits_ >> 0) & 1) + ((bits_ >> 1) & 1) + ((bits_ >> 2) & 1);
  }
  constexpr std::uint8_t bits() const noexcept { return bits_; }

  constexpr GeneratorSet operator|(GeneratorSet o) const noexcept {
    return from_bits(bits_ | o.bits_);
  }
  constexpr GeneratorSet operator&(GeneratorSet o) const noexcept {
    return from_bits(bits_ & o.bits_);
  }
  constexpr bool intersects(GeneratorSet o) const noexcept { return (bits_ & o.bits_) != 0; }
  constexpr bool operator==(const GeneratorSet&) const = default;

  /// Smallest member in generator order; undefined on the empty set.
  Generator first() const noexcept;

 private:
  static constexpr std::uint8_t bit(Generator g) noexcept {
    return static_cast<std::uint8_t>(1u << index(g));
  }
  std::uint8_t bits_ = 0;
};

/// Renders as e.g. "{s,t}" in generator order.
std::string to_string(GeneratorSet set);

enum class TheoremCase { case_a, case_b, out_of_theorem };

std::string_view to_string(TheoremCase c) noexcept;

/// Coxeter matrix of W = <s,t,r | (sr)^m_sr = (st)^m_st = (tr)^2 = e>.
class GroupParams {
 public:
  GroupParams(int m_sr, int m_st);

  int m_sr() const noexcept { return m_sr_; }
  int m_st() const noexcept { return m_st_; }
  static constexpr int m_tr() noexcept { return 2; }

  /// Order of gh; 1 when g == h.
  int bond(Generator g, Generator h) const noexcept;

  TheoremCase theorem_case() const noexcept;

  /// m_sr in case (a), max(m_sr, m_st) otherwise.
  int degree_bound() const noexcept;

  /// W itself is finite: 1/m_sr + 1/m_st > 1/2.
  bool is_finite() const noexcept { return m_sr_ * m_st_ < 2 * (m_sr_ + m_st_); }

  bool operator==(const GroupParams&) const = default;

 private:
  int m_sr_;
  int m_st_;
};

std::string to_string(const GroupParams& p);

class InvalidParams : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotReduced : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace heckebound
