#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace colorful {

// Subset of the color set {0,...,r-1} as a machine word; r <= 64 everywhere.
class ColorSet {
public:
  constexpr ColorSet() = default;
  constexpr explicit ColorSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr ColorSet full(int r) {
    return ColorSet(r == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << r) - 1);
  }
  static constexpr ColorSet single(int c) { return ColorSet(std::uint64_t{1} << c); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int c) const { return (bits_ >> c) & 1; }
  constexpr bool subset_of(ColorSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr ColorSet with(int c) const { return ColorSet(bits_ | (std::uint64_t{1} << c)); }
  constexpr ColorSet without(int c) const { return ColorSet(bits_ & ~(std::uint64_t{1} << c)); }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  friend constexpr bool operator==(ColorSet a, ColorSet b) { return a.bits_ == b.bits_; }
  friend constexpr bool operator!=(ColorSet a, ColorSet b) { return a.bits_ != b.bits_; }
  friend constexpr bool operator<(ColorSet a, ColorSet b) { return a.bits_ < b.bits_; }

private:
  std::uint64_t bits_ = 0;
};

}  // namespace colorful
