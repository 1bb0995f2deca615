#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>

namespace g2forge {

/// Basis monomials e^{i1...ik} on a fixed 7-dimensional frame, encoded as a
/// 7-bit mask: bit (i-1) set means index i is present. The canonical form is
/// always strictly increasing, which the mask encoding gives for free.
struct Blade {
  std::uint8_t mask = 0;

  constexpr Blade() = default;
  constexpr explicit Blade(std::uint8_t m) : mask(m) {}

  /// Blade from a list of 1-based indices, e.g. Blade::of({1,2,7}).
  static constexpr Blade of(std::initializer_list<int> indices) {
    std::uint8_t m = 0;
    for (int i : indices) m |= static_cast<std::uint8_t>(1u << (i - 1));
    return Blade(m);
  }

  constexpr int degree() const { return std::popcount(mask); }
  constexpr bool contains(int index) const { return mask & (1u << (index - 1)); }

  constexpr bool operator==(const Blade&) const = default;
  constexpr auto operator<=>(const Blade&) const = default;

  /// Increasing index list, e.g. "127" for e^{127}; "1" denotes the scalar
  /// blade of degree 0 only through the empty string.
  std::string label() const {
    std::string s;
    for (int i = 1; i <= 7; ++i)
      if (contains(i)) s += static_cast<char>('0' + i);
    return s;
  }

  static std::optional<Blade> from_label(const std::string& s) {
    std::uint8_t m = 0;
    for (char c : s) {
      if (c < '1' || c > '7') return std::nullopt;
      std::uint8_t bit = static_cast<std::uint8_t>(1u << (c - '1'));
      if (m & bit) return std::nullopt;
      m |= bit;
    }
    return Blade(m);
  }
};

inline constexpr std::uint8_t kFullMask = 0x7F;           // e^{1...7}
inline constexpr Blade kVolumeBlade{kFullMask};

namespace detail {

/// Sign of e^a ^ e^b relative to the canonical ordering of a|b, or 0 when the
/// masks overlap. Equals the parity of crossings: pairs (i in a, j in b) with
/// j < i.
constexpr int wedge_sign_slow(std::uint8_t a, std::uint8_t b) {
  if (a & b) return 0;
  int crossings = 0;
  for (int i = 0; i < 7; ++i) {
    if (a & (1u << i)) crossings += std::popcount(static_cast<std::uint8_t>(b & ((1u << i) - 1)));
  }
  return (crossings & 1) ? -1 : 1;
}

struct WedgeSignTable {
  std::array<std::int8_t, 128 * 128> t{};
  constexpr WedgeSignTable() {
    for (int a = 0; a < 128; ++a)
      for (int b = 0; b < 128; ++b)
        t[a * 128 + b] = static_cast<std::int8_t>(
            wedge_sign_slow(static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b)));
  }
};

inline constexpr WedgeSignTable kWedgeSigns{};

}  // namespace detail

/// +1/-1 permutation sign of concatenating two disjoint blades, 0 on overlap.
inline constexpr int wedge_sign(Blade a, Blade b) {
  return detail::kWedgeSigns.t[a.mask * 128 + b.mask];
}

}  // namespace g2forge
