#pragma once

#include <string>

#include "qha/presentations/path_algebra.hpp"

inline qha::Presentation corpus_presentation(const std::string& name) {
  return qha::load_presentation(std::string(QHA_CORPUS_DIR) + "/" + name + ".alg");
}

inline qha::AlgebraPtr corpus_algebra(const std::string& name) { return qha::build_algebra(corpus_presentation(name)); }

inline qha::AlgebraPtr corpus_algebra_over(const std::string& name, const qha::Field& f) {
  auto p = corpus_presentation(name);
  p.field = f;
  return qha::build_algebra(p);
}
