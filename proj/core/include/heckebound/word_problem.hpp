#pragma once

// Tits' solution of the word problem: two words represent the same element
// iff they are connected by braid moves and deletions of repeated letters,
// and a word is reduced iff no word in its braid class contains "gg".

#include <array>
#include <atomic>
#include <cstdint>
#include <filesystem>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "heckebound/types.hpp"

namespace heckebound {

/// (gh...) = (hg...), both sides of length m_gh.
struct BraidRelation {
  Generator first;
  Generator second;
  int length;

  Word lhs() const { return alternating(first, second, length); }
  Word rhs() const { return alternating(second, first, length); }
};

/// The relations for {s,t}, {s,r}, {t,r}, in that order.
std::array<BraidRelation, 3> braid_relations(const GroupParams& params);

struct CacheStats {
  std::uint64_t hits = 0;
  std::uint64_t misses = 0;
  std::size_t entries = 0;
};

class CacheMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CacheFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Word -> ShortLex normal form. Concurrent lookups, serialized inserts.
///
/// On disk the cache is a text file whose first line is
///   `# heckebound-reduction-cache v1 m_sr=<a> m_st=<b>`
/// followed by one `<word>\t<normal_form>` record per line (the empty string
/// stands for the identity).
class ReductionCache {
 public:
  std::optional<Word> find(const Word& w) const;
  void insert(const Word& w, const Word& normal_form);
  CacheStats stats() const;
  void clear();

  void save(const std::filesystem::path& path, const GroupParams& params) const;
  /// Merges the records of `path`; throws CacheMismatch when the file was
  /// written for other parameters.
  void load(const std::filesystem::path& path, const GroupParams& params);

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<Word, Word, WordHash> map_;
  mutable std::atomic<std::uint64_t> hits_{0};
  mutable std::atomic<std::uint64_t> misses_{0};
};

/// Outcome of reducing one word.
struct Reduction {
  Word normal_form;
  GeneratorSet left_descents;
  GeneratorSet right_descents;

  int length() const noexcept { return static_cast<int>(normal_form.size()); }
};

struct WordProblemOptions {
  /// Longest word accepted by reduce(); braid classes grow quickly past it.
  std::size_t max_word_length = 20;
};

class WordTooLong : public std::length_error {
 public:
  using std::length_error::length_error;
};

class WordProblem {
 public:
  explicit WordProblem(GroupParams params, WordProblemOptions options = {});

  const GroupParams& params() const noexcept { return params_; }
  const WordProblemOptions& options() const noexcept { return options_; }

  /// Every reduced expression of the element, sorted ShortLex.
  /// Throws NotReduced when some braid-equivalent word has a repeated letter.
  std::vector<Word> braid_closure(const Word& reduced) const;

  Reduction reduce(const Word& w);
  Word normal_form(const Word& w) { return reduce(w).normal_form; }
  bool is_reduced(const Word& w);
  bool equal(const Word& a, const Word& b);

  ReductionCache& cache() noexcept { return cache_; }
  const ReductionCache& cache() const noexcept { return cache_; }

 private:
  struct Descents {
    GeneratorSet left;
    GeneratorSet right;
  };

  // Braid class of `w`; stops early and reports a deletable position when a
  // member has two equal adjacent letters.
  struct ClosureResult {
    std::vector<Word> members;
    std::optional<Word> shortened;
  };
  ClosureResult explore(const Word& w) const;

  Descents descents_of(const Word& normal_form);

  GroupParams params_;
  WordProblemOptions options_;
  std::array<BraidRelation, 3> relations_;
  ReductionCache cache_;

  mutable std::shared_mutex descent_mutex_;
  std::unordered_map<Word, Descents, WordHash> descent_cache_;
};

}  // namespace heckebound
