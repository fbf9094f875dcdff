#pragma once

#include <filesystem>
#include <string>

#include "qha/modcat/representation.hpp"

namespace qha {

/// Module file:
///   module <name> over <algebra-name>       (<algebra-name>^op for right modules)
///   dims <d_1> ... <d_n>
///   arrow <name>
///   <row 1 of the target-dim x source-dim matrix>
///   ...
/// Entries are integers or fractions p/q. A matrix with a zero dimension has
/// no rows. Arrows that are not listed act as zero. '#' starts a comment.
struct NamedModule {
  std::string name;
  bool right = false;  ///< module over the opposite algebra
  Representation rep;
};

NamedModule parse_module(const std::string& text, const AlgebraPtr& alg);
NamedModule load_module(const std::filesystem::path& file, const AlgebraPtr& alg);
std::string serialize_module(const NamedModule& m, const std::string& algebra_name);

}  // namespace qha
