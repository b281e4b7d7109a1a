#include "heckebound/word_problem.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <sstream>
#include <unordered_set>

namespace heckebound {

std::array<BraidRelation, 3> braid_relations(const GroupParams& params) {
  return {BraidRelation{Generator::s, Generator::t, params.m_st()},
          BraidRelation{Generator::s, Generator::r, params.m_sr()},
          BraidRelation{Generator::t, Generator::r, GroupParams::m_tr()}};
}

namespace {

bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

std::string cache_header(const GroupParams& p) {
  return "# heckebound-reduction-cache v1 m_sr=" + std::to_string(p.m_sr()) +
         " m_st=" + std::to_string(p.m_st());
}

}  // namespace

// ---------------------------------------------------------------------------
// ReductionCache

std::optional<Word> ReductionCache::find(const Word& w) const {
  std::shared_lock lock(mutex_);
  auto it = map_.find(w);
  if (it == map_.end()) {
    misses_.fetch_add(1, std::memory_order_relaxed);
    return std::nullopt;
  }
  hits_.fetch_add(1, std::memory_order_relaxed);
  return it->second;
}

void ReductionCache::insert(const Word& w, const Word& normal_form) {
  std::unique_lock lock(mutex_);
  map_.insert_or_assign(w, normal_form);
}

CacheStats ReductionCache::stats() const {
  std::shared_lock lock(mutex_);
  return {hits_.load(), misses_.load(), map_.size()};
}

void ReductionCache::clear() {
  std::unique_lock lock(mutex_);
  map_.clear();
  hits_ = 0;
  misses_ = 0;
}

void ReductionCache::save(const std::filesystem::path& path, const GroupParams& params) const {
  std::vector<std::pair<Word, Word>> records;
  {
    std::shared_lock lock(mutex_);
    records.assign(map_.begin(), map_.end());
  }
  std::sort(records.begin(), records.end(),
            [](const auto& a, const auto& b) { return shortlex_less(a.first, b.first); });

  const auto tmp = std::filesystem::path(path.string() + ".tmp");
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write reduction cache: " + tmp.string());
    out << cache_header(params) << '\n';
    for (const auto& [word, nf] : records) out << to_string(word) << '\t' << to_string(nf) << '\n';
    if (!out) throw std::runtime_error("failed writing reduction cache: " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

void ReductionCache::load(const std::filesystem::path& path, const GroupParams& params) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open reduction cache: " + path.string());

  std::string header;
  std::getline(in, header);
  if (header.rfind("# heckebound-reduction-cache v1 ", 0) != 0) {
    throw CacheFormatError("not a version-1 reduction cache: " + path.string());
  }
  if (header != cache_header(params)) {
    int file_sr = 0;
    int file_st = 0;
    std::istringstream fields(header.substr(std::string("# heckebound-reduction-cache v1 ").size()));
    std::string field;
    while (fields >> field) {
      if (field.rfind("m_sr=", 0) == 0) file_sr = std::stoi(field.substr(5));
      if (field.rfind("m_st=", 0) == 0) file_st = std::stoi(field.substr(5));
    }
    throw CacheMismatch("reduction cache " + path.string() + " was written for (m_sr=" +
                        std::to_string(file_sr) + ", m_st=" + std::to_string(file_st) +
                        ") but the run uses " + to_string(params));
  }

  std::vector<std::pair<Word, Word>> records;
  std::string line;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) {
      throw CacheFormatError("malformed cache record at " + path.string() + ":" +
                             std::to_string(line_no));
    }
    try {
      records.emplace_back(parse_word(std::string_view(line).substr(0, tab)),
                           parse_word(std::string_view(line).substr(tab + 1)));
    } catch (const std::invalid_argument& e) {
      throw CacheFormatError("malformed cache record at " + path.string() + ":" +
                             std::to_string(line_no) + ": " + e.what());
    }
  }

  std::unique_lock lock(mutex_);
  for (auto& [w, nf] : records) map_.insert_or_assign(std::move(w), std::move(nf));
}

// ---------------------------------------------------------------------------
// WordProblem

WordProblem::WordProblem(GroupParams params, WordProblemOptions options)
    : params_(params), options_(options), relations_(braid_relations(params)) {}

WordProblem::ClosureResult WordProblem::explore(const Word& w) const {
  ClosureResult result;
  std::unordered_set<Word, WordHash> seen{w};
  std::deque<Word> queue{w};

  while (!queue.empty()) {
    Word u = std::move(queue.front());
    queue.pop_front();

    for (std::size_t i = 0; i + 1 < u.size(); ++i) {
      if (u[i] == u[i + 1]) {
        Word shorter;
        shorter.reserve(u.size() - 2);
        shorter.insert(shorter.end(), u.begin(), u.begin() + static_cast<std::ptrdiff_t>(i));
        shorter.insert(shorter.end(), u.begin() + static_cast<std::ptrdiff_t>(i) + 2, u.end());
        result.shortened = std::move(shorter);
        return result;
      }
    }

    for (const BraidRelation& rel : relations_) {
      const auto m = static_cast<std::size_t>(rel.length);
      if (u.size() < m) continue;
      for (std::size_t i = 0; i + m <= u.size(); ++i) {
        const Generator a = u[i];
        if (a != rel.first && a != rel.second) continue;
        const Generator b = (a == rel.first) ? rel.second : rel.first;
        bool run = true;
        for (std::size_t k = 0; k < m && run; ++k) run = u[i + k] == (k % 2 == 0 ? a : b);
        if (!run) continue;
        Word v = u;
        for (std::size_t k = 0; k < m; ++k) v[i + k] = (k % 2 == 0 ? b : a);
        if (seen.insert(v).second) queue.push_back(std::move(v));
      }
    }
    result.members.push_back(std::move(u));
  }
  return result;
}

std::vector<Word> WordProblem::braid_closure(const Word& reduced) const {
  if (reduced.size() > options_.max_word_length) {
    throw WordTooLong("word longer than the configured cap of " +
                      std::to_string(options_.max_word_length));
  }
  ClosureResult res = explore(reduced);
  if (res.shortened) throw NotReduced("word is not reduced: " + to_string(reduced));
  std::sort(res.members.begin(), res.members.end(), shortlex_less);
  return std::move(res.members);
}

WordProblem::Descents WordProblem::descents_of(const Word& normal_form) {
  {
    std::shared_lock lock(descent_mutex_);
    auto it = descent_cache_.find(normal_form);
    if (it != descent_cache_.end()) return it->second;
  }
  Descents d;
  for (const Word& member : braid_closure(normal_form)) {
    if (member.empty()) break;
    d.left.insert(member.front());
    d.right.insert(member.back());
  }
  std::unique_lock lock(descent_mutex_);
  descent_cache_.emplace(normal_form, d);
  return d;
}

Reduction WordProblem::reduce(const Word& w) {
  if (w.size() > options_.max_word_length) {
    throw WordTooLong("word longer than the configured cap of " +
                      std::to_string(options_.max_word_length));
  }

  std::vector<Word> chain;
  Word current = w;
  Word normal_form;
  while (true) {
    if (auto hit = cache_.find(current)) {
      normal_form = std::move(*hit);
      break;
    }
    ClosureResult res = explore(current);
    if (res.shortened) {
      chain.push_back(std::move(current));
      current = std::move(*res.shortened);
      continue;
    }
    normal_form = *std::min_element(res.members.begin(), res.members.end(), shortlex_less);
    for (const Word& member : res.members) cache_.insert(member, normal_form);

    Descents d;
    for (const Word& member : res.members) {
      if (member.empty()) break;
      d.left.insert(member.front());
      d.right.insert(member.back());
    }
    std::unique_lock lock(descent_mutex_);
    descent_cache_.emplace(normal_form, d);
    break;
  }
  for (const Word& visited : chain) cache_.insert(visited, normal_form);

  const Descents d = descents_of(normal_form);
  return Reduction{std::move(normal_form), d.left, d.right};
}

bool WordProblem::is_reduced(const Word& w) { return reduce(w).length() == static_cast<int>(w.size()); }

bool WordProblem::equal(const Word& a, const Word& b) {
  return reduce(a).normal_form == reduce(b).normal_form;
}

}  // namespace heckebound
