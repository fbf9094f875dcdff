#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "qha/presentations/quiver.hpp"

namespace qha {

/// A = 𝕂Q/I given by generators of I.
struct Presentation {
  std::string name;
  Field field;
  Quiver quiver;
  std::vector<LinComb> relations;
  int degree_cap = 64;
};

/// Algebra file:
///   field Q | field F <p>
///   vertices <n>
///   arrow <name> <source> <target>
///   relation <lincomb>
///   degree-cap <d>
///   name <identifier>          (optional; defaults to the file stem)
/// '#' starts a comment. Relations may appear before the arrows they use.
Presentation parse_presentation(const std::string& text, const std::string& default_name = "A");
Presentation load_presentation(const std::filesystem::path& file);

/// Inverse of parse_presentation, up to formatting.
std::string serialize_presentation(const Presentation& p);

/// Presentation of A^op: same arrow names on the reversed quiver, every
/// relation word reversed.
Presentation opposite(const Presentation& p);

}  // namespace qha
