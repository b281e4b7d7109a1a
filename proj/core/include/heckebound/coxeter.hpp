#pragma once

// Elements of W are interned in a table that grows one length layer at a
// time. Ids are assigned in ShortLex order of normal forms, so comparing ids
// compares elements ShortLex and every id is independent of the order in
// which callers happened to request elements.

#include <array>
#include <atomic>
#include <compare>
#include <cstdint>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "heckebound/types.hpp"

namespace heckebound {

class CoxeterGroup;

/// Handle to an interned group element. Cheap to copy; equality is identity.
class Element {
 public:
  Element() = default;

  std::uint32_t id() const noexcept { return id_; }
  const CoxeterGroup& group() const noexcept { return *group_; }
  bool valid() const noexcept { return group_ != nullptr; }

  int length() const noexcept;
  const Word& normal_form() const noexcept;
  GeneratorSet left_descents() const noexcept;
  GeneratorSet right_descents() const noexcept;
  GeneratorSet descents(Side side) const noexcept {
    return side == Side::left ? left_descents() : right_descents();
  }
  bool is_identity() const noexcept { return id_ == 0; }

  std::string to_string() const { return heckebound::to_string(normal_form()); }

  friend bool operator==(const Element& a, const Element& b) noexcept { return a.id_ == b.id_; }
  friend std::strong_ordering operator<=>(const Element& a, const Element& b) noexcept {
    return a.id_ <=> b.id_;
  }

 private:
  friend class CoxeterGroup;
  Element(const CoxeterGroup* group, std::uint32_t id) : group_(group), id_(id) {}

  const CoxeterGroup* group_ = nullptr;
  std::uint32_t id_ = 0;
};

struct ElementHash {
  std::size_t operator()(const Element& e) const noexcept { return e.id(); }
};

/// A subset I of S together with the bond labels it inherits.
class ParabolicLabel {
 public:
  ParabolicLabel(GeneratorSet gens) : gens_(gens) {}  // NOLINT(google-explicit-constructor)

  GeneratorSet generators() const noexcept { return gens_; }
  /// Every proper parabolic is dihedral or smaller, hence finite; W_S is
  /// finite only for the spherical parameters.
  bool is_finite(const GroupParams& params) const noexcept {
    return gens_.size() <= 2 || params.is_finite();
  }
  /// Order of W_I; throws InfiniteParabolic unless is_finite(params).
  int order(const GroupParams& params) const;
  std::string to_string() const { return heckebound::to_string(gens_); }

 private:
  GeneratorSet gens_;
};

class InfiniteParabolic : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class CoxeterGroup {
 public:
  /// Longest length the table may grow to.
  static constexpr int kMaxLength = 200;

  explicit CoxeterGroup(GroupParams params);
  ~CoxeterGroup();
  CoxeterGroup(const CoxeterGroup&) = delete;
  CoxeterGroup& operator=(const CoxeterGroup&) = delete;

  const GroupParams& params() const noexcept { return params_; }

  Element neutral() const noexcept { return Element(this, 0); }
  Element generator(Generator g) const { return multiply_gen(neutral(), g, Side::right); }

  /// Normal form of gw (side = left) or wg (side = right).
  Element multiply_gen(Element w, Generator g, Side side) const;
  Element multiply(Element w, Element u) const;
  Element inverse(Element w) const noexcept;
  GeneratorSet descents(Element w, Side side) const noexcept { return w.descents(side); }

  /// Evaluates an arbitrary, possibly non-reduced, word.
  Element element(const Word& w) const;
  Element element(std::string_view w) const { return element(parse_word(w)); }
  Element by_id(std::uint32_t id) const;

  /// Longest element of W_I; throws InfiniteParabolic when W_I is infinite.
  Element longest_parabolic(ParabolicLabel label) const;

  /// w = first * second with lengths adding up. For Side::right the pair is
  /// (minimal coset representative of wW_I, element of W_I); for Side::left
  /// it is (element of W_I, minimal representative of W_I w).
  std::pair<Element, Element> parabolic_decompose(Element w, ParabolicLabel label,
                                                  Side side) const;

  bool bruhat_leq(Element y, Element w) const;
  /// {x : x <= w} in ShortLex order.
  std::vector<Element> lower_interval(Element w) const;

  /// w = (w1)(suffix) for some w1, i.e. l(w suffix^-1) + l(suffix) = l(w).
  bool ends_with_reduced(Element w, const Word& suffix) const;
  /// w = (prefix)(w1) for some w1.
  bool starts_with_reduced(Element w, const Word& prefix) const;

  /// All elements of length <= n in ShortLex order.
  std::vector<Element> enumerate_up_to(int n) const;
  std::vector<Element> elements_of_length(int n) const;
  std::size_t count_up_to(int n) const;

  /// Builds every layer up to length n (bounded by the group's diameter when
  /// W is finite). Safe to call concurrently with readers.
  void ensure_length(int n) const;
  int built_length() const noexcept;
  /// True once a finite group has been enumerated completely.
  bool exhausted() const noexcept;

  /// Length of the W_{g,h} part of w in its right coset decomposition.
  int right_tail(Element w, Generator g, Generator h) const noexcept;

 private:
  friend class Element;
  struct Record;
  struct Storage;

  const Record& record(std::uint32_t id) const noexcept;
  std::uint32_t right_link(std::uint32_t id, Generator g) const;
  void build_next_layer() const;

  GroupParams params_;
  std::unique_ptr<Storage> storage_;
};

}  // namespace heckebound
