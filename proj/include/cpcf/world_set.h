// Bitset of worlds. Models are limited to 64 worlds.

#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace cpcf {

using WorldId = std::uint32_t;

inline constexpr std::size_t kMaxWorlds = 64;

class WorldSet {
 public:
  constexpr WorldSet() = default;
  constexpr explicit WorldSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr WorldSet single(WorldId w) { return WorldSet(std::uint64_t{1} << w); }
  static constexpr WorldSet first_n(std::size_t n) {
    return WorldSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr bool contains(WorldId w) const { return (bits_ >> w) & 1u; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr std::uint64_t bits() const { return bits_; }

  constexpr bool subset_of(WorldSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(WorldSet o) const { return (bits_ & o.bits_) != 0; }

  constexpr void insert(WorldId w) { bits_ |= std::uint64_t{1} << w; }
  constexpr void erase(WorldId w) { bits_ &= ~(std::uint64_t{1} << w); }

  constexpr WorldSet operator|(WorldSet o) const { return WorldSet(bits_ | o.bits_); }
  constexpr WorldSet operator&(WorldSet o) const { return WorldSet(bits_ & o.bits_); }
  constexpr WorldSet operator-(WorldSet o) const { return WorldSet(bits_ & ~o.bits_); }
  constexpr WorldSet& operator|=(WorldSet o) { bits_ |= o.bits_; return *this; }
  constexpr WorldSet& operator&=(WorldSet o) { bits_ &= o.bits_; return *this; }

  constexpr bool operator==(const WorldSet&) const = default;
  constexpr auto operator<=>(const WorldSet&) const = default;

  std::vector<WorldId> members() const {
    std::vector<WorldId> out;
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(static_cast<WorldId>(std::countr_zero(b)));
    return out;
  }

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace cpcf
