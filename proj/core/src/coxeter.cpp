#include "heckebound/coxeter.hpp"

#include <algorithm>
#include <cassert>
#include <unordered_map>

namespace heckebound {

namespace {

constexpr std::uint32_t kUnbuilt = 0xffffffffu;
constexpr std::uint32_t kChunkBits = 14;
constexpr std::uint32_t kChunkSize = 1u << kChunkBits;
constexpr std::uint32_t kMaxChunks = 1u << 10;

// Index of the rank-2 parabolic {g,h}: the generator it leaves out.
constexpr int pair_index(Generator g, Generator h) noexcept { return 3 - index(g) - index(h); }

}  // namespace

struct CoxeterGroup::Record {
  Word normal_form;
  int length = 0;
  GeneratorSet left;
  GeneratorSet right;
  std::uint32_t inverse = 0;
  // Right tails for the pairs indexed by pair_index().
  std::array<std::uint8_t, 3> tail{};
  std::array<std::atomic<std::uint32_t>, 3> links{kUnbuilt, kUnbuilt, kUnbuilt};
};

struct CoxeterGroup::Storage {
  std::array<std::unique_ptr<Record[]>, kMaxChunks> chunks;
  std::atomic<std::uint32_t> count{0};
  // layer_start[n] = first id of length n; valid for n <= built + 1.
  std::array<std::atomic<std::uint32_t>, kMaxLength + 2> layer_start{};
  std::atomic<int> built{-1};
  std::atomic<bool> exhausted{false};
  std::mutex grow_mutex;

  Record& at(std::uint32_t id) noexcept { return chunks[id >> kChunkBits][id & (kChunkSize - 1)]; }

  Record& append() {
    const std::uint32_t id = count.load(std::memory_order_relaxed);
    const std::uint32_t chunk = id >> kChunkBits;
    if (chunk >= kMaxChunks) throw std::length_error("element table capacity exceeded");
    if (!chunks[chunk]) chunks[chunk] = std::make_unique<Record[]>(kChunkSize);
    return at(id);
  }
};

// ---------------------------------------------------------------------------
// Element

int Element::length() const noexcept { return group_->record(id_).length; }
const Word& Element::normal_form() const noexcept { return group_->record(id_).normal_form; }
GeneratorSet Element::left_descents() const noexcept { return group_->record(id_).left; }
GeneratorSet Element::right_descents() const noexcept { return group_->record(id_).right; }

int ParabolicLabel::order(const GroupParams& params) const {
  switch (gens_.size()) {
    case 0:
      return 1;
    case 1:
      return 2;
    case 2: {
      const Generator g = gens_.first();
      GeneratorSet rest = gens_;
      rest.erase(g);
      return 2 * params.bond(g, rest.first());
    }
    default: {
      if (!params.is_finite()) throw InfiniteParabolic("W_S is infinite");
      const int a = params.m_sr();
      const int b = params.m_st();
      return 8 * a * b / (2 * a + 2 * b - a * b);
    }
  }
}

// ---------------------------------------------------------------------------
// CoxeterGroup

CoxeterGroup::CoxeterGroup(GroupParams params)
    : params_(params), storage_(std::make_unique<Storage>()) {
  Record& e = storage_->append();
  e.length = 0;
  e.inverse = 0;
  storage_->layer_start[0].store(0, std::memory_order_relaxed);
  storage_->count.store(1, std::memory_order_relaxed);
  storage_->layer_start[1].store(1, std::memory_order_relaxed);
  storage_->built.store(0, std::memory_order_release);
}

CoxeterGroup::~CoxeterGroup() = default;

const CoxeterGroup::Record& CoxeterGroup::record(std::uint32_t id) const noexcept {
  return storage_->at(id);
}

int CoxeterGroup::built_length() const noexcept {
  return storage_->built.load(std::memory_order_acquire);
}

bool CoxeterGroup::exhausted() const noexcept {
  return storage_->exhausted.load(std::memory_order_acquire);
}

void CoxeterGroup::ensure_length(int n) const {
  if (n > kMaxLength) throw std::length_error("requested length exceeds the table cap");
  if (built_length() >= n || exhausted()) return;
  std::lock_guard lock(storage_->grow_mutex);
  while (built_length() < n && !exhausted()) build_next_layer();
}

std::uint32_t CoxeterGroup::right_link(std::uint32_t id, Generator g) const {
  const Record& rec = record(id);
  std::uint32_t link = rec.links[index(g)].load(std::memory_order_acquire);
  if (link == kUnbuilt) {
    ensure_length(rec.length + 1);
    link = rec.links[index(g)].load(std::memory_order_acquire);
  }
  assert(link != kUnbuilt);
  return link;
}

// Extends the table by one length layer. For y = xg with g not a right
// descent of x, the right descents of y are g together with every h whose
// {g,h}-tail in x is already m_gh - 1 long (then the tail of y is w_gh). The
// ShortLex normal form of y is the least of nf(yd) d over those descents.
void CoxeterGroup::build_next_layer() const {
  Storage& st = *storage_;
  const int n = st.built.load(std::memory_order_relaxed);
  const std::uint32_t begin = st.layer_start[n].load(std::memory_order_relaxed);
  const std::uint32_t end = st.layer_start[n + 1].load(std::memory_order_relaxed);

  struct Candidate {
    Word normal_form;
    GeneratorSet right;
    std::array<std::uint32_t, 3> below{kUnbuilt, kUnbuilt, kUnbuilt};
  };
  std::vector<Candidate> candidates;
  std::unordered_map<Word, std::size_t, WordHash> interner;
  std::vector<std::array<std::size_t, 3>> up(end - begin);

  auto link = [&](std::uint32_t id, Generator g) {
    const std::uint32_t to = st.at(id).links[index(g)].load(std::memory_order_relaxed);
    assert(to != kUnbuilt);
    return to;
  };

  for (std::uint32_t x = begin; x < end; ++x) {
    const Record& rx = st.at(x);
    for (Generator g : kGenerators) {
      if (rx.right.contains(g)) continue;

      Candidate c;
      c.right.insert(g);
      c.below[index(g)] = x;
      for (Generator h : kGenerators) {
        if (h == g) continue;
        const int m = params_.bond(g, h);
        if (rx.tail[pair_index(g, h)] != m - 1) continue;
        c.right.insert(h);
        // x = u p with p the alternating word of length m-1 ending in h, so
        // yh = u (w_gh h): strip p, then climb the word of length m-1 ending in g.
        std::uint32_t cur = x;
        for (int k = 0; k < m - 1; ++k) cur = link(cur, k % 2 == 0 ? h : g);
        for (int j = 0; j < m - 1; ++j) cur = link(cur, (m - 2 - j) % 2 == 0 ? g : h);
        c.below[index(h)] = cur;
      }

      bool first = true;
      for (Generator d : kGenerators) {
        if (!c.right.contains(d)) continue;
        Word w = st.at(c.below[index(d)]).normal_form;
        w.push_back(d);
        if (first || w < c.normal_form) c.normal_form = std::move(w);
        first = false;
      }

      auto [it, inserted] = interner.try_emplace(c.normal_form, candidates.size());
      if (inserted) candidates.push_back(std::move(c));
      up[x - begin][index(g)] = it->second;
    }
  }

  if (candidates.empty()) {
    st.exhausted.store(true, std::memory_order_release);
    return;
  }

  std::vector<std::size_t> order(candidates.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return candidates[a].normal_form < candidates[b].normal_form;
  });
  std::vector<std::uint32_t> id_of(candidates.size());
  for (std::size_t rank = 0; rank < order.size(); ++rank) {
    id_of[order[rank]] = end + static_cast<std::uint32_t>(rank);
  }

  for (std::size_t rank = 0; rank < order.size(); ++rank) {
    Candidate& c = candidates[order[rank]];
    Record& rec = st.append();
    rec.normal_form = std::move(c.normal_form);
    rec.length = n + 1;
    rec.right = c.right;
    for (Generator d : kGenerators) {
      if (c.right.contains(d)) rec.links[index(d)].store(c.below[index(d)], std::memory_order_relaxed);
    }
    for (Generator g : kGenerators) {
      for (Generator h : kGenerators) {
        if (index(h) <= index(g)) continue;
        const GeneratorSet pair{g, h};
        std::uint8_t tail = 0;
        if (rec.right.intersects(pair)) {
          const Generator d = (rec.right & pair).first();
          tail = static_cast<std::uint8_t>(st.at(c.below[index(d)]).tail[pair_index(g, h)] + 1);
        }
        rec.tail[pair_index(g, h)] = tail;
      }
    }
    st.count.store(st.count.load(std::memory_order_relaxed) + 1, std::memory_order_relaxed);
  }

  // Inverses: walk the reversed normal form; only the last step crosses into
  // the new layer, and those links are still local.
  auto step = [&](std::uint32_t id, Generator g) -> std::uint32_t {
    const Record& r = st.at(id);
    if (r.length == n && !r.right.contains(g)) return id_of[up[id - begin][index(g)]];
    return r.links[index(g)].load(std::memory_order_relaxed);
  };
  for (std::uint32_t id = end; id < end + order.size(); ++id) {
    Record& rec = st.at(id);
    std::uint32_t cur = 0;
    for (auto it = rec.normal_form.rbegin(); it != rec.normal_form.rend(); ++it) cur = step(cur, *it);
    rec.inverse = cur;
  }
  for (std::uint32_t id = end; id < end + order.size(); ++id) {
    Record& rec = st.at(id);
    rec.left = st.at(rec.inverse).right;
  }

  // Publish the new layer.
  for (std::uint32_t x = begin; x < end; ++x) {
    Record& rx = st.at(x);
    for (Generator g : kGenerators) {
      if (rx.right.contains(g)) continue;
      rx.links[index(g)].store(id_of[up[x - begin][index(g)]], std::memory_order_release);
    }
  }
  st.layer_start[n + 2].store(st.count.load(std::memory_order_relaxed), std::memory_order_relaxed);
  st.built.store(n + 1, std::memory_order_release);
}

Element CoxeterGroup::multiply_gen(Element w, Generator g, Side side) const {
  if (side == Side::right) return Element(this, right_link(w.id(), g));
  const std::uint32_t inv = record(w.id()).inverse;
  return Element(this, record(right_link(inv, g)).inverse);
}

Element CoxeterGroup::multiply(Element w, Element u) const {
  std::uint32_t cur = w.id();
  for (Generator g : u.normal_form()) cur = right_link(cur, g);
  return Element(this, cur);
}

Element CoxeterGroup::inverse(Element w) const noexcept {
  return Element(this, record(w.id()).inverse);
}

Element CoxeterGroup::element(const Word& w) const {
  std::uint32_t cur = 0;
  for (Generator g : w) cur = right_link(cur, g);
  return Element(this, cur);
}

Element CoxeterGroup::by_id(std::uint32_t id) const {
  if (id >= storage_->count.load(std::memory_order_acquire)) {
    throw std::out_of_range("element id " + std::to_string(id) + " is not built");
  }
  return Element(this, id);
}

Element CoxeterGroup::longest_parabolic(ParabolicLabel label) const {
  const GeneratorSet gens = label.generators();
  if (!label.is_finite(params_)) {
    throw InfiniteParabolic("the parabolic subgroup generated by " + label.to_string() +
                            " is infinite and has no longest element");
  }
  if (gens.empty()) return neutral();
  if (gens.size() == 3) {
    Element w = neutral();
    while (w.right_descents().size() < 3) {
      GeneratorSet ascents = GeneratorSet::from_bits(0b111 & ~w.right_descents().bits());
      w = multiply_gen(w, ascents.first(), Side::right);
    }
    return w;
  }
  const Generator g = gens.first();
  if (gens.size() == 1) return generator(g);
  GeneratorSet rest = gens;
  rest.erase(g);
  const Generator h = rest.first();
  return element(alternating(g, h, params_.bond(g, h)));
}

std::pair<Element, Element> CoxeterGroup::parabolic_decompose(Element w, ParabolicLabel label,
                                                              Side side) const {
  const GeneratorSet gens = label.generators();
  Element rep = w;
  while (rep.descents(side).intersects(gens)) {
    rep = multiply_gen(rep, (rep.descents(side) & gens).first(), side);
  }
  if (side == Side::right) return {rep, multiply(inverse(rep), w)};
  return {multiply(w, inverse(rep)), rep};
}

// y <= w iff min(y, yg) <= wg for any right descent g of w.
bool CoxeterGroup::bruhat_leq(Element y, Element w) const {
  while (true) {
    if (y.length() > w.length()) return false;
    if (y.length() == w.length()) return y == w;
    if (y.is_identity()) return true;
    const Generator g = w.right_descents().first();
    if (y.right_descents().contains(g)) y = multiply_gen(y, g, Side::right);
    w = multiply_gen(w, g, Side::right);
  }
}

std::vector<Element> CoxeterGroup::lower_interval(Element w) const {
  // [e, w] = [e, wg] together with [e, wg] g, for any right descent g.
  std::vector<Generator> path;
  Element cur = w;
  while (!cur.is_identity()) {
    const Generator g = cur.right_descents().first();
    path.push_back(g);
    cur = multiply_gen(cur, g, Side::right);
  }
  std::vector<Element> interval{neutral()};
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    const std::size_t n = interval.size();
    for (std::size_t i = 0; i < n; ++i) interval.push_back(multiply_gen(interval[i], *it, Side::right));
    std::sort(interval.begin(), interval.end());
    interval.erase(std::unique(interval.begin(), interval.end()), interval.end());
  }
  return interval;
}

bool CoxeterGroup::ends_with_reduced(Element w, const Word& suffix) const {
  for (auto it = suffix.rbegin(); it != suffix.rend(); ++it) {
    if (!w.right_descents().contains(*it)) return false;
    w = multiply_gen(w, *it, Side::right);
  }
  return true;
}

bool CoxeterGroup::starts_with_reduced(Element w, const Word& prefix) const {
  for (Generator g : prefix) {
    if (!w.left_descents().contains(g)) return false;
    w = multiply_gen(w, g, Side::left);
  }
  return true;
}

std::vector<Element> CoxeterGroup::enumerate_up_to(int n) const {
  std::vector<Element> out;
  if (n < 0) return out;
  ensure_length(n);
  const int top = std::min(n, built_length());
  const std::uint32_t end = storage_->layer_start[top + 1].load(std::memory_order_acquire);
  out.reserve(end);
  for (std::uint32_t id = 0; id < end; ++id) out.push_back(Element(this, id));
  return out;
}

std::vector<Element> CoxeterGroup::elements_of_length(int n) const {
  std::vector<Element> out;
  if (n < 0) return out;
  ensure_length(n);
  if (n > built_length()) return out;
  const std::uint32_t begin = storage_->layer_start[n].load(std::memory_order_acquire);
  const std::uint32_t end = storage_->layer_start[n + 1].load(std::memory_order_acquire);
  for (std::uint32_t id = begin; id < end; ++id) out.push_back(Element(this, id));
  return out;
}

std::size_t CoxeterGroup::count_up_to(int n) const {
  if (n < 0) return 0;
  ensure_length(n);
  const int top = std::min(n, built_length());
  return storage_->layer_start[top + 1].load(std::memory_order_acquire);
}

int CoxeterGroup::right_tail(Element w, Generator g, Generator h) const noexcept {
  if (g == h) return w.right_descents().contains(g) ? 1 : 0;
  return record(w.id()).tail[pair_index(g, h)];
}

}  // namespace heckebound
