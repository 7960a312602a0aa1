#pragma once

#include <optional>
#include <string_view>

namespace cpcf {

// Which sets rank the worlds during an update: forcing sets (i),
// agreement sets (a) or disagreement sets (d).
enum class UpdateTag { i, a, d };

// Where a cp-operator evaluates its operands.
//   a: spheres come from the updated chain, operands from the original model
//   b: the update replaces S(x) only and operands see the updated model
//   c: the update replaces S(y) for every world y
enum class Variant { a, b, c };

inline constexpr UpdateTag kAllTags[] = {UpdateTag::i, UpdateTag::a, UpdateTag::d};

inline const char* to_string(UpdateTag u) {
  switch (u) {
    case UpdateTag::i: return "i";
    case UpdateTag::a: return "a";
    case UpdateTag::d: return "d";
  }
  return "?";
}

inline const char* to_string(Variant v) {
  switch (v) {
    case Variant::a: return "a";
    case Variant::b: return "b";
    case Variant::c: return "c";
  }
  return "?";
}

inline std::optional<UpdateTag> parse_update_tag(std::string_view s) {
  if (s == "i") return UpdateTag::i;
  if (s == "a") return UpdateTag::a;
  if (s == "d") return UpdateTag::d;
  return std::nullopt;
}

inline std::optional<Variant> parse_variant(std::string_view s) {
  if (s == "a") return Variant::a;
  if (s == "b") return Variant::b;
  if (s == "c") return Variant::c;
  return std::nullopt;
}

}  // namespace cpcf
