#pragma once

// Shifted difference indeterminates y_j^(k), u_ij^(k) packed into one word.

#include <compare>
#include <cstdint>
#include <functional>
#include <string>

namespace diffchow {

/// A shifted variable. Layout (high to low): kind (1 bit, parameters = 0 so
/// they sort first), block (22 bits), index (21 bits), shift (20 bits).
/// Comparing keys gives the canonical variable order used for printing.
class Var {
 public:
  enum class Kind : std::uint8_t { Param = 0, Main = 1 };

  static constexpr std::uint32_t kMaxBlock = (1u << 22) - 1;
  static constexpr std::uint32_t kMaxIndex = (1u << 21) - 1;
  static constexpr std::uint32_t kMaxShift = (1u << 20) - 1;
  // Reserved parameter blocks; never produced by the parser.
  static constexpr std::uint32_t kLambdaBlock = kMaxBlock;
  static constexpr std::uint32_t kSatBlock = kMaxBlock - 1;
  static constexpr std::uint32_t kFirstReservedBlock = kMaxBlock - 1;
  // Main block 1 holds the auxiliary z variables used by apply_transform.
  static constexpr std::uint32_t kAuxMainBlock = 1;

  constexpr Var() = default;

  static Var make(Kind kind, std::uint32_t block, std::uint32_t index, std::uint32_t shift = 0);
  /// y<index>^(shift)
  static Var y(std::uint32_t index, std::uint32_t shift = 0) { return make(Kind::Main, 0, index, shift); }
  /// z<index>^(shift), auxiliary main variables.
  static Var z(std::uint32_t index, std::uint32_t shift = 0) {
    return make(Kind::Main, kAuxMainBlock, index, shift);
  }
  /// u<block>_<index>^(shift)
  static Var u(std::uint32_t block, std::uint32_t index, std::uint32_t shift = 0) {
    return make(Kind::Param, block, index, shift);
  }
  static Var lambda(std::uint32_t shift = 0) { return make(Kind::Param, kLambdaBlock, 0, shift); }
  static Var sat(std::uint32_t index) { return make(Kind::Param, kSatBlock, index, 0); }
  static Var from_key(std::uint64_t key) {
    Var v;
    v.key_ = key;
    return v;
  }

  std::uint64_t key() const { return key_; }
  Kind kind() const { return (key_ >> 63) ? Kind::Main : Kind::Param; }
  bool is_main() const { return kind() == Kind::Main; }
  bool is_param() const { return kind() == Kind::Param; }
  std::uint32_t block() const { return static_cast<std::uint32_t>((key_ >> 41) & kMaxBlock); }
  std::uint32_t index() const { return static_cast<std::uint32_t>((key_ >> 20) & kMaxIndex); }
  std::uint32_t shift() const { return static_cast<std::uint32_t>(key_ & kMaxShift); }
  bool is_reserved() const { return is_param() && block() >= kFirstReservedBlock; }

  /// The underlying difference indeterminate (shift 0).
  Var symbol() const { return from_key(key_ & ~static_cast<std::uint64_t>(kMaxShift)); }
  /// sigma^k applied to this variable.
  Var shifted(std::uint32_t k) const;
  Var with_shift(std::uint32_t s) const { return make(kind(), block(), index(), s); }

  /// y1, y1@2, u0_1@1, z2, lambda@1, t_0
  std::string to_string() const;

  friend constexpr auto operator<=>(Var a, Var b) { return a.key_ <=> b.key_; }
  friend constexpr bool operator==(Var a, Var b) { return a.key_ == b.key_; }

 private:
  std::uint64_t key_ = 0;
};

}  // namespace diffchow

template <>
struct std::hash<diffchow::Var> {
  std::size_t operator()(diffchow::Var v) const noexcept { return std::hash<std::uint64_t>{}(v.key()); }
};
