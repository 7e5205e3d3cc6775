// A named knot together with whatever data is available for it: an explicit
// Seifert matrix, pretzel or Whitehead-double parameters, or only a
// determinant. Flags record facts imported from outside theorems (2-bridge,
// fibered); they are trusted, never computed.
#pragma once

#include <optional>
#include <string>
#include <variant>

#include "g1cc/seifert.hpp"

namespace g1cc {

struct DeterminantOnly {
    Integer det;
    bool operator==(const DeterminantOnly&) const = default;
};

using KnotSource = std::variant<DeterminantOnly, SeifertMatrix, PretzelParams, WhiteheadParams>;

struct KnotRecord {
    std::string name;
    KnotSource source;
    // Cross-check value for matrix/family sources; a mismatch with the
    // computed determinant marks the record as inconsistent.
    std::optional<Integer> declared_det;
    bool two_bridge = false;
    bool fibered = false;
    std::string note;
};

}  // namespace g1cc
