#include "qha/homology/tor.hpp"

#include "qha/error.hpp"
#include "qha/modcat/tensor.hpp"

namespace qha {

std::vector<std::size_t> tor_dims(const Representation& right, const Representation& left, std::size_t max_degree) {
  ResolutionReport r = resolve(right, max_degree + 2);
  std::vector<TensorProduct> t;
  for (const auto& term : r.terms) t.push_back(tensor(term.rep(), left));
  // ranks[k] = rank(d_k ⊗ N) for k ≥ 1; d_0 is the augmentation and is dropped.
  std::vector<std::size_t> ranks(t.size() + 1, 0);
  for (std::size_t k = 1; k < t.size(); ++k)
    ranks[k] = rank(tensor_map_right(t[k], t[k - 1], r.differentials[k]));
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i <= max_degree; ++i) {
    if (i >= t.size()) {
      out.push_back(0);
      continue;
    }
    out.push_back(t[i].dim() - ranks[i] - ranks[i + 1]);
  }
  return out;
}

std::size_t tor(const Representation& right, const Representation& left, std::size_t i, std::size_t cap) {
  if (i > cap)
    throw CapExceeded("ResolutionCapExceeded",
                      "Tor_" + std::to_string(i) + " needs a resolution beyond the cap " + std::to_string(cap));
  return tor_dims(right, left, i).back();
}

}  // namespace qha
