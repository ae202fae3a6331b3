#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace qcover {

/// Vertex labels are dense positive integers 1..n.
using Vertex = int;

inline constexpr int kMaxVertices = 64;

/// Fixed-width set of vertex labels in 1..64; label v occupies bit v-1.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  static VertexSet of(const std::vector<Vertex>& vertices) {
    VertexSet s;
    for (Vertex v : vertices) s.insert(v);
    return s;
  }

  /// {1, ..., n}
  static constexpr VertexSet range(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }

  constexpr bool contains(Vertex v) const { return (bits_ >> (v - 1)) & 1U; }
  constexpr void insert(Vertex v) { bits_ |= std::uint64_t{1} << (v - 1); }
  constexpr void erase(Vertex v) { bits_ &= ~(std::uint64_t{1} << (v - 1)); }

  constexpr bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }

  /// Smallest label, or 0 when empty.
  constexpr Vertex min() const { return bits_ == 0 ? 0 : std::countr_zero(bits_) + 1; }
  /// Largest label, or 0 when empty.
  constexpr Vertex max() const { return bits_ == 0 ? 0 : 64 - std::countl_zero(bits_); }

  std::vector<Vertex> to_vector() const {
    std::vector<Vertex> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
    return out;
  }

  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(VertexSet a, VertexSet b) = default;

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace qcover
