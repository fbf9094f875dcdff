#pragma once

#include <vector>

#include "qha/modcat/projectives.hpp"

namespace qha {

/// dim Tor_i^A(M, N) for a right module M (over A^op) and a left module N.
/// M is resolved minimally to stage i+1 and the resolution is tensored
/// with N.
///
/// Errors: CapExceeded("ResolutionCapExceeded") when i > cap.
std::size_t tor(const Representation& right, const Representation& left, std::size_t i, std::size_t cap = 32);

/// Tor_0 .. Tor_max_degree from a single resolution.
std::vector<std::size_t> tor_dims(const Representation& right, const Representation& left, std::size_t max_degree);

}  // namespace qha
