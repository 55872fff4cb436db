#pragma once

#include <initializer_list>
#include <memory>
#include <vector>

#include "thinpl/pl_word.hpp"
#include "thinpl/thin_group.hpp"

namespace thinpl::testing {

inline std::shared_ptr<const SimplicialComplex> hollow3() {
  ComplexSpec spec;
  spec.ambient_dim = 2;
  spec.vertices = {{"A", make_point({"0", "0"})},
                   {"B", make_point({"1", "0"})},
                   {"C", make_point({"0", "1"})}};
  spec.simplices = {{"A", "B"}, {"B", "C"}, {"C", "A"}};
  spec.basepoint = "A";
  return build_complex(spec);
}

inline std::shared_ptr<const SimplicialComplex> filled3() {
  ComplexSpec spec;
  spec.ambient_dim = 2;
  spec.vertices = {{"A", make_point({"0", "0"})},
                   {"B", make_point({"1", "0"})},
                   {"C", make_point({"0", "1"})}};
  spec.simplices = {{"A", "B"}, {"B", "C"}, {"C", "A"}, {"A", "B", "C"}};
  spec.basepoint = "A";
  return build_complex(spec);
}

inline std::shared_ptr<const SimplicialComplex> line() {
  ComplexSpec spec;
  spec.ambient_dim = 1;
  spec.vertices = {{"P", make_point({"0"})}, {"Q", make_point({"3"})}};
  spec.simplices = {{"P", "Q"}};
  spec.basepoint = "P";
  return build_complex(spec);
}

inline std::shared_ptr<const SimplicialComplex> rt345() {
  ComplexSpec spec;
  spec.ambient_dim = 2;
  spec.vertices = {{"A", make_point({"0", "0"})},
                   {"B", make_point({"3", "0"})},
                   {"C", make_point({"3", "4"})}};
  spec.simplices = {{"A", "B"}, {"B", "C"}, {"C", "A"}};
  spec.basepoint = "A";
  return build_complex(spec);
}

inline Point pt(std::initializer_list<const char*> coords) { return make_point(coords); }

inline PLWord loop(std::shared_ptr<const SimplicialComplex> c,
                   std::vector<Point> pts) {
  return make_word(std::move(c), std::move(pts), Kind::Loop);
}

inline PLWord path(std::shared_ptr<const SimplicialComplex> c,
                   std::vector<Point> pts) {
  return make_word(std::move(c), std::move(pts), Kind::Path);
}

inline std::vector<SimplexId> named_simplices(
    const SimplicialComplex& c, std::vector<std::vector<std::string>> names) {
  std::vector<SimplexId> out;
  for (auto& n : names) out.push_back(*c.find_simplex(n));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace thinpl::testing
