#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace puregraph {

// Fixed-universe bitset over vertices 0..universe-1.
class VertexSet {
public:
  VertexSet() = default;
  explicit VertexSet(int universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}
  VertexSet(int universe, std::initializer_list<int> members)
      : VertexSet(universe) {
    for (int v : members) insert(v);
  }
  static auto of(int universe, const std::vector<int>& members) -> VertexSet {
    VertexSet s(universe);
    for (int v : members) s.insert(v);
    return s;
  }
  static auto full(int universe) -> VertexSet {
    VertexSet s(universe);
    for (int v = 0; v < universe; ++v) s.insert(v);
    return s;
  }

  auto universe() const -> int { return universe_; }

  auto insert(int v) -> void { words_[v >> 6] |= (std::uint64_t{1} << (v & 63)); }
  auto erase(int v) -> void { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  auto contains(int v) const -> bool {
    return v >= 0 && v < universe_ && ((words_[v >> 6] >> (v & 63)) & 1U);
  }

  auto size() const -> int {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  auto empty() const -> bool {
    for (auto w : words_)
      if (w) return false;
    return true;
  }
  // Lowest member, or -1.
  auto first() const -> int {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i]) return static_cast<int>(i * 64) + std::countr_zero(words_[i]);
    return -1;
  }
  // Lowest member strictly greater than v, or -1.
  auto next(int v) const -> int {
    int s = v + 1;
    if (s >= universe_) return -1;
    std::size_t i = static_cast<std::size_t>(s >> 6);
    std::uint64_t w = words_[i] & (~std::uint64_t{0} << (s & 63));
    while (true) {
      if (w) return static_cast<int>(i * 64) + std::countr_zero(w);
      if (++i >= words_.size()) return -1;
      w = words_[i];
    }
  }

  auto operator|=(const VertexSet& o) -> VertexSet& {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  auto operator&=(const VertexSet& o) -> VertexSet& {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  auto operator-=(const VertexSet& o) -> VertexSet& {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend auto operator|(VertexSet a, const VertexSet& b) -> VertexSet { return a |= b; }
  friend auto operator&(VertexSet a, const VertexSet& b) -> VertexSet { return a &= b; }
  friend auto operator-(VertexSet a, const VertexSet& b) -> VertexSet { return a -= b; }
  friend auto operator==(const VertexSet& a, const VertexSet& b) -> bool = default;

  // Complement within the universe.
  auto inverted() const -> VertexSet {
    VertexSet r(universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
    r.trim();
    return r;
  }

  auto intersects(const VertexSet& o) const -> bool {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }
  auto intersection_size(const VertexSet& o) const -> int {
    int c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) c += std::popcount(words_[i] & o.words_[i]);
    return c;
  }
  auto subset_of(const VertexSet& o) const -> bool {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  auto to_vector() const -> std::vector<int> {
    std::vector<int> out;
    for (int v = first(); v >= 0; v = next(v)) out.push_back(v);
    return out;
  }
  auto to_string() const -> std::string;

  // Lexicographic order on sorted member lists.
  auto lex_less(const VertexSet& o) const -> bool { return to_vector() < o.to_vector(); }

  class iterator {
  public:
    iterator(const VertexSet* s, int v) : s_(s), v_(v) {}
    auto operator*() const -> int { return v_; }
    auto operator++() -> iterator& {
      v_ = s_->next(v_);
      return *this;
    }
    auto operator!=(const iterator& o) const -> bool { return v_ != o.v_; }

  private:
    const VertexSet* s_;
    int v_;
  };
  auto begin() const -> iterator { return {this, first()}; }
  auto end() const -> iterator { return {this, -1}; }

private:
  auto trim() -> void {
    if (universe_ & 63) words_.back() &= (std::uint64_t{1} << (universe_ & 63)) - 1;
  }

  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace puregraph
