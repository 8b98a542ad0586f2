#pragma once

#include <cstdint>
#include <compare>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace arborpack {

// Subset of {0,..,n-1} as a 64-bit mask. Value type; the numeric order on the
// underlying bits is used as the canonical total order on vertex sets.
class VertexSet {
 public:
  static constexpr int max_vertices = 64;

  constexpr VertexSet() = default;

  static constexpr VertexSet from_bits(std::uint64_t bits) {
    VertexSet s;
    s.bits_ = bits;
    return s;
  }

  static VertexSet all(int n) {
    check_vertex_range(n - 1);
    if (n <= 0) return VertexSet{};
    return from_bits(n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
  }

  static VertexSet of(std::initializer_list<int> vs) {
    VertexSet s;
    for (int v : vs) s = s.with(v);
    return s;
  }

  static VertexSet of(const std::vector<int>& vs) {
    VertexSet s;
    for (int v : vs) s = s.with(v);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }

  bool contains(int v) const {
    check_vertex_range(v);
    return (bits_ >> v) & 1u;
  }

  VertexSet with(int v) const {
    check_vertex_range(v);
    return from_bits(bits_ | (std::uint64_t{1} << v));
  }

  VertexSet without(int v) const {
    check_vertex_range(v);
    return from_bits(bits_ & ~(std::uint64_t{1} << v));
  }

  int size() const { return __builtin_popcountll(bits_); }
  bool empty() const { return bits_ == 0; }

  // least element; requires nonempty
  int least() const {
    if (empty()) throw std::logic_error("VertexSet::least on empty set");
    return __builtin_ctzll(bits_);
  }

  bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
  bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }

  friend VertexSet operator|(VertexSet a, VertexSet b) { return from_bits(a.bits_ | b.bits_); }
  friend VertexSet operator&(VertexSet a, VertexSet b) { return from_bits(a.bits_ & b.bits_); }
  friend VertexSet operator-(VertexSet a, VertexSet b) { return from_bits(a.bits_ & ~b.bits_); }

  bool operator==(const VertexSet&) const = default;
  auto operator<=>(const VertexSet&) const = default;

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for_each([&](int v) { out.push_back(v); });
    return out;
  }

  template <class F>
  void for_each(F&& f) const {
    std::uint64_t rest = bits_;
    while (rest) {
      int v = __builtin_ctzll(rest);
      f(v);
      rest &= rest - 1;
    }
  }

 private:
  static void check_vertex_range(int v) {
    if (v >= max_vertices) throw std::out_of_range("vertex index exceeds VertexSet capacity");
  }

  std::uint64_t bits_ = 0;
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const {
    return std::hash<std::uint64_t>{}(s.bits());
  }
};

}  // namespace arborpack
