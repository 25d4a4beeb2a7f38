#pragma once

#include <string>

#include "cohopf/io.hpp"
#include "cohopf/repcat.hpp"

namespace cohopf::testing {

inline HopfAlgebraData catalog(const std::string& file) {
  return load_algebra(std::string(COHOPF_CATALOG_DIR) + "/" + file);
}

inline std::string catalog_path(const std::string& file) {
  return std::string(COHOPF_CATALOG_DIR) + "/" + file;
}

inline HopfPtr share(HopfAlgebraData h) { return std::make_shared<const HopfAlgebraData>(std::move(h)); }

inline int group_product(const HopfAlgebraData& g, int a, int b) { return g.product(a, b).front().index; }

inline int group_inverse(const HopfAlgebraData& g, int a) {
  for (int b = 0; b < g.dim; ++b)
    if (g.unit(group_product(g, a, b)) == 1) return b;
  return -1;
}

// Left ideal D(G)(δ_c ⊗ 1) with basis w_a = δ_{aca⁻¹} ⊗ a:
// (δ_x ⊗ b) w_a = [x = b a c a⁻¹ b⁻¹] w_{ba}.
inline ModulePtr induced(const HopfPtr& d, const HopfAlgebraData& g, int c) {
  const int n = g.dim;
  std::vector<Matrix> action;
  for (int x = 0; x < n; ++x)
    for (int b = 0; b < n; ++b) {
      Matrix m = Matrix::Zero(n, n);
      for (int a = 0; a < n; ++a) {
        const int ba = group_product(g, b, a);
        if (group_product(g, group_product(g, ba, c), group_inverse(g, ba)) == x) m(ba, a) = 1;
      }
      action.push_back(m);
    }
  return explicit_module(d, std::move(action));
}

inline Object seed(const HopfPtr& h, const std::string& name) {
  for (const auto& m : h->modules)
    if (m.name == name) return Object(make_atom(name, explicit_module(h, m.action)));
  throw std::runtime_error("no module " + name);
}

inline int label(const HopfAlgebraData& g, const std::string& s) {
  for (int i = 0; i < g.dim; ++i)
    if (g.basis[static_cast<std::size_t>(i)] == s) return i;
  return -1;
}

}  // namespace cohopf::testing
