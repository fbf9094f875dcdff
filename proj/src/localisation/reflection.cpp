#include "qha/localisation/reflection.hpp"

#include <cstdlib>
#include <sstream>

namespace qha {

namespace {

struct PreparedSigma {
  ProjMap map;
  ProjMapModules modules;
  std::vector<Vec> images;  ///< σ(generator s) in the total space of the target
};

std::string history_str(const std::vector<std::size_t>& h) {
  std::ostringstream os;
  for (std::size_t k = 0; k < h.size(); ++k) os << (k ? "," : "") << h[k];
  return os.str();
}

// The pushout of P^r → Q^r along p: P^r → M, where the k-th copy of P maps
// by the lift p_k of a cokernel vector of Hom(σ, M).
Quotient pushout(const PreparedSigma& ps, const Representation& m, const Mat& lifts, DirectSum& sum) {
  const AlgebraPtr& alg = m.algebra();
  const Field& f = m.field();
  const std::size_t r = lifts.cols();
  const std::size_t ns = ps.map.source.size(), nt = ps.map.target.size();
  std::vector<int> src, tgt;
  for (std::size_t k = 0; k < r; ++k) {
    src.insert(src.end(), ps.map.source.begin(), ps.map.source.end());
    tgt.insert(tgt.end(), ps.map.target.begin(), ps.map.target.end());
  }
  ProjectiveSum pr = projective_sum(alg, src), qr = projective_sum(alg, tgt);
  sum = direct_sum({qr.rep(), m}, alg);
  std::vector<Vec> images;
  for (std::size_t k = 0; k < r; ++k) {
    std::size_t row = 0;
    for (std::size_t s = 0; s < ns; ++s) {
      const int j = ps.map.source[s];
      Vec in_q(qr.rep().total_dim());
      for (std::size_t t = 0; t < nt; ++t) {
        Vec part = ps.modules.target.parts.projections[t].apply(ps.images[s]);
        in_q = vec_add(f, in_q, qr.parts.injections[k * nt + t].apply(part));
      }
      Vec p(m.dim(j));
      for (std::size_t c = 0; c < p.size(); ++c) p[c] = lifts(row + c, k);
      row += p.size();
      Vec img = vec_add(f, sum.injections[0].apply(in_q),
                        vec_scale(f, f.neg(Scalar(1)), sum.injections[1].apply(m.embed(p, j))));
      images.push_back(std::move(img));
    }
  }
  return kernel_cokernel(map_from_projective_sum(pr, sum.sum, images)).cokernel;
}

}  // namespace

Caps Caps::from_env() {
  Caps c;
  if (const char* v = std::getenv("QHA_MAX_DIM")) {
    try {
      long long d = std::stoll(v);
      if (d > 0) c.max_dim = static_cast<std::size_t>(d);
    } catch (const std::exception&) {
      throw ValidationError("InvalidCap", std::string("QHA_MAX_DIM is not a positive integer: ") + v);
    }
  }
  return c;
}

Mat hom_sigma_matrix(const ProjMap& sigma, const Representation& m) {
  const AlgebraPtr& alg = m.algebra();
  std::size_t rows = 0, cols = 0;
  std::vector<std::size_t> row_off, col_off;
  for (int j : sigma.source) {
    row_off.push_back(rows);
    rows += m.dim(j);
  }
  for (int i : sigma.target) {
    col_off.push_back(cols);
    cols += m.dim(i);
  }
  Mat h(m.field(), rows, cols);
  for (std::size_t t = 0; t < sigma.target.size(); ++t)
    for (std::size_t s = 0; s < sigma.source.size(); ++s) {
      const int i = sigma.target[t], j = sigma.source[s];
      if (sigma.entries[t][s].empty() || !m.dim(i) || !m.dim(j)) continue;
      h.set_block(row_off[s], col_off[t], m.action(alg->coordinates(sigma.entries[t][s]), i, j));
    }
  return h;
}

bool in_X(const std::vector<ProjMap>& sigma, const Representation& m) {
  for (const auto& s : sigma) {
    Mat h = hom_sigma_matrix(s, m);
    if (!h.is_square() || rank(h) != h.rows()) return false;
  }
  return true;
}

ReflectionResult reflect(const std::vector<ProjMap>& sigma, const Representation& m, const Caps& caps) {
  if (caps.max_dim == 0 || caps.max_iter == 0) throw ValidationError("InvalidCap", "reflection caps must be positive");
  const AlgebraPtr& alg = m.algebra();
  std::vector<PreparedSigma> prepared;
  for (const auto& s : sigma) {
    PreparedSigma ps{s, to_module_map(s, alg), {}};
    for (std::size_t k = 0; k < s.source.size(); ++k)
      ps.images.push_back(ps.modules.map.apply(ps.modules.source.generator(k)));
    prepared.push_back(std::move(ps));
  }

  ReflectionResult out{m, ModuleMap::identity(m), 0, {m.total_dim()}};
  auto step_done = [&](const char* what) {
    ++out.iterations;
    out.history.push_back(out.reflection.total_dim());
    if (out.reflection.total_dim() > caps.max_dim)
      throw ReflectionCapExceeded("max_dim",
                                  std::string("reflection exceeded max_dim=") + std::to_string(caps.max_dim) +
                                      " after a " + what + " step; dimension history " + history_str(out.history),
                                  out.history);
    if (out.iterations >= caps.max_iter)
      throw ReflectionCapExceeded("max_iter",
                                  "reflection did not stabilise within max_iter=" + std::to_string(caps.max_iter) +
                                      " steps; dimension history " + history_str(out.history),
                                  out.history);
  };

  for (;;) {
    Representation& cur = out.reflection;
    // Kill the images of all maps coker σ → M.
    std::vector<Vec> gens;
    std::vector<Mat> homs;
    for (const auto& ps : prepared) {
      homs.push_back(hom_sigma_matrix(ps.map, cur));
      Mat ker = nullspace(homs.back());
      for (std::size_t c = 0; c < ker.cols(); ++c) {
        std::size_t row = 0;
        for (int i : ps.map.target) {
          Vec part(cur.dim(i));
          for (std::size_t k = 0; k < part.size(); ++k) part[k] = ker(row + k, c);
          row += part.size();
          if (!vec_is_zero(part)) gens.push_back(cur.embed(part, i));
        }
      }
    }
    if (!gens.empty()) {
      Quotient q = quotient(cur, generated_subspaces(cur, gens));
      out.unit = compose(q.projection, out.unit);
      cur = q.rep;
      step_done("quotient");
      continue;
    }
    // Fill one cokernel of Hom(σ, M) by a pushout.
    bool filled = false;
    for (std::size_t k = 0; k < prepared.size() && !filled; ++k) {
      const Mat& h = homs[k];
      if (rank(h) == h.rows()) continue;
      QuotientCoordinates qc = quotient_coordinates(column_space(h).basis, h.rows());
      DirectSum sum;
      Quotient q = pushout(prepared[k], cur, qc.lift, sum);
      out.unit = compose(q.projection, compose(sum.injections[1], out.unit));
      cur = q.rep;
      filled = true;
    }
    if (!filled) return out;
    step_done("pushout");
  }
}

}  // namespace qha
