#include "diffchow/var.hpp"

#include "diffchow/errors.hpp"

namespace diffchow {

Var Var::make(Kind kind, std::uint32_t block, std::uint32_t index, std::uint32_t shift) {
  if (block > kMaxBlock || index > kMaxIndex || shift > kMaxShift)
    throw InvalidArgument("variable field out of range");
  Var v;
  v.key_ = (static_cast<std::uint64_t>(kind == Kind::Main) << 63) |
           (static_cast<std::uint64_t>(block) << 41) | (static_cast<std::uint64_t>(index) << 20) |
           static_cast<std::uint64_t>(shift);
  return v;
}

Var Var::shifted(std::uint32_t k) const {
  if (static_cast<std::uint64_t>(shift()) + k > kMaxShift) throw InvalidArgument("shift overflow");
  return from_key(key_ + k);
}

std::string Var::to_string() const {
  std::string s;
  if (is_main()) {
    s = (block() == kAuxMainBlock ? "z" : "y") + std::to_string(index());
    if (block() > kAuxMainBlock) s += "_b" + std::to_string(block());
  } else if (block() == kLambdaBlock) {
    s = "lambda";
  } else if (block() == kSatBlock) {
    s = "t_" + std::to_string(index());
  } else {
    s = "u" + std::to_string(block()) + "_" + std::to_string(index());
  }
  if (shift() > 0) s += "@" + std::to_string(shift());
  return s;
}

}  // namespace diffchow
