#include "unitgraph/vertex_set.hpp"

#include <algorithm>
#include <functional>

#include "unitgraph/errors.hpp"

namespace unitgraph {

VertexSet::VertexSet(std::size_t universe, std::initializer_list<std::size_t> members)
    : VertexSet(universe) {
  for (auto v : members) insert(v);
}

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  for (auto& w : s.words_) w = ~std::uint64_t{0};
  if (universe % 64 != 0 && !s.words_.empty()) {
    s.words_.back() = (std::uint64_t{1} << (universe % 64)) - 1;
  }
  s.count_ = universe;
  return s;
}

VertexSet VertexSet::from(std::size_t universe, std::span<const Elem> members) {
  VertexSet s(universe);
  for (auto v : members) s.insert(v);
  return s;
}

void VertexSet::insert(std::size_t v) {
  if (v >= universe_) throw InvalidArgument("vertex " + std::to_string(v) + " outside universe");
  auto& w = words_[v >> 6];
  const std::uint64_t bit = std::uint64_t{1} << (v & 63);
  if ((w & bit) == 0) {
    w |= bit;
    ++count_;
  }
}

void VertexSet::erase(std::size_t v) {
  if (v >= universe_) return;
  auto& w = words_[v >> 6];
  const std::uint64_t bit = std::uint64_t{1} << (v & 63);
  if ((w & bit) != 0) {
    w &= ~bit;
    --count_;
  }
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  if (other.universe_ != universe_) throw InvalidArgument("vertex set universe mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  recount();
  return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  if (other.universe_ != universe_) throw InvalidArgument("vertex set universe mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  recount();
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  if (other.universe_ != universe_) throw InvalidArgument("vertex set universe mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  recount();
  return *this;
}

std::size_t VertexSet::intersection_size(const VertexSet& other) const {
  std::size_t n = 0;
  const std::size_t m = std::min(words_.size(), other.words_.size());
  for (std::size_t i = 0; i < m; ++i) n += std::popcount(words_[i] & other.words_[i]);
  return n;
}

bool VertexSet::intersects(const VertexSet& other) const {
  const std::size_t m = std::min(words_.size(), other.words_.size());
  for (std::size_t i = 0; i < m; ++i) {
    if ((words_[i] & other.words_[i]) != 0) return true;
  }
  return false;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    const std::uint64_t o = i < other.words_.size() ? other.words_[i] : 0;
    if ((words_[i] & ~o) != 0) return false;
  }
  return true;
}

std::size_t VertexSet::first() const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
  }
  return universe_;
}

std::vector<Elem> VertexSet::elements() const {
  std::vector<Elem> out;
  out.reserve(count_);
  for_each([&](std::size_t v) { out.push_back(static_cast<Elem>(v)); });
  return out;
}

std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) {
  const auto ea = a.elements();
  const auto eb = b.elements();
  return std::lexicographical_compare_three_way(ea.begin(), ea.end(), eb.begin(), eb.end());
}

void VertexSet::recount() noexcept {
  count_ = 0;
  for (auto w : words_) count_ += static_cast<std::size_t>(std::popcount(w));
}

std::size_t VertexSetHash::operator()(const VertexSet& s) const noexcept {
  std::size_t h = s.universe();
  for (auto w : s.words()) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

}  // namespace unitgraph
