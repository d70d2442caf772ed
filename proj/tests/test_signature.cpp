#include "cosphere/signature.hpp"

#include "cosphere/tessellate.hpp"

#include <algorithm>
#include <random>

#include "doctest.h"

using namespace cosphere;

namespace {

CuboidDims unit() { return {ExactScalar(1), ExactScalar(1), ExactScalar(1)}; }

ShapeSignature sig_of_mask_cell(unsigned mask, std::size_t cell_index) {
  TessellationResult t = tessellate(bisection_config(unit(), mask));
  REQUIRE(t.complex.cells.size() > cell_index);
  return signature(*t.kpts, t.complex.cells[cell_index]);
}

}  // namespace

TEST_CASE("signatures of the basic cells") {
  // unrefined cube: a cuboid with six exact rectangles
  ShapeSignature cube = sig_of_mask_cell(0, 0);
  CHECK(cube.V == 8);
  CHECK(cube.E == 12);
  CHECK(cube.F == 6);
  CHECK(cube.face_labels.at("rect") == 6);

  // mask 6 contains tetrahedra
  TessellationResult t = tessellate(bisection_config(unit(), 6));
  bool found_tet = false;
  for (const auto& cell : t.complex.cells) {
    ShapeSignature s = signature(*t.kpts, cell);
    if (s.V == 4) {
      CHECK(s.E == 6);
      CHECK(s.F == 4);
      CHECK(s.face_labels.at("tri") == 4);
      found_tet = true;
    }
  }
  CHECK(found_tet);
}

TEST_CASE("pentagonal pyramid row of the new-element table") {
  // masks frozen from a catalog scan
  bool found = false;
  for (unsigned mask : {361u, 363u, 365u}) {
    TessellationResult t = tessellate(bisection_config(unit(), mask));
    for (const auto& cell : t.complex.cells) {
      ShapeSignature s = signature(*t.kpts, cell);
      if (s.V == 6 && s.E == 10 && s.F == 6 && s.face_labels.count("pent")) {
        CHECK(s.face_labels.at("tri") == 5);
        found = true;
      }
    }
  }
  CHECK(found);
}

TEST_CASE("canonical code ignores vertex numbering and face order") {
  std::mt19937 rng(5);
  // triangular prism with labeled faces
  std::vector<std::pair<std::string, std::vector<int>>> prism = {
      {"tri", {0, 1, 2}},      {"tri", {3, 4, 5}},      {"rect", {0, 1, 4, 3}},
      {"rect", {1, 2, 5, 4}},  {"rect", {2, 0, 3, 5}},
  };
  // repair the last face's cycle orientation typo: use a consistent cycle
  prism[4].second = {2, 0, 3, 5};
  ShapeSignature base = signature_from_faces(prism);
  for (int it = 0; it < 100; ++it) {
    std::vector<int> perm = {0, 1, 2, 3, 4, 5};
    std::shuffle(perm.begin(), perm.end(), rng);
    auto faces = prism;
    for (auto& [label, verts] : faces)
      for (int& v : verts) v = perm[static_cast<std::size_t>(v)] + 40;
    std::shuffle(faces.begin(), faces.end(), rng);
    ShapeSignature got = signature_from_faces(faces);
    CHECK(got.canonical_code == base.canonical_code);
    CHECK(got.V == 6);
    CHECK(got.E == 9);
    CHECK(got.F == 5);
  }
}

TEST_CASE("labels feed the canonical code") {
  std::vector<std::pair<std::string, std::vector<int>>> rect_sides = {
      {"tri", {0, 1, 2}},     {"tri", {3, 4, 5}},     {"rect", {0, 1, 4, 3}},
      {"rect", {1, 2, 5, 4}}, {"rect", {2, 0, 3, 5}},
  };
  auto quad_sides = rect_sides;
  for (auto& [label, verts] : quad_sides)
    if (label == "rect") label = "quad";
  CHECK(signature_from_faces(rect_sides).canonical_code !=
        signature_from_faces(quad_sides).canonical_code);
}

TEST_CASE("relabeling invariance on real cells") {
  std::mt19937 rng(17);
  TessellationResult t = tessellate(bisection_config(unit(), 1013));
  for (const auto& cell : t.complex.cells) {
    ShapeSignature base = signature(*t.kpts, cell);
    // renumber the cell's vertex ids arbitrarily in the abstract face list
    std::vector<std::pair<std::string, std::vector<int>>> faces;
    for (const auto& f : cell.faces) {
      bool rect = false;
      if (f.size() == 4) {
        rect = true;
        for (int i = 0; i < 4 && rect; ++i)
          if (t.kpts->dot_sign(f[static_cast<std::size_t>(i)],
                               f[static_cast<std::size_t>((i + 1) % 4)],
                               f[static_cast<std::size_t>((i + 1) % 4)],
                               f[static_cast<std::size_t>((i + 2) % 4)]) != 0)
            rect = false;
      }
      faces.push_back({face_label(f.size(), rect), f});
    }
    for (int it = 0; it < 10; ++it) {
      std::map<int, int> remap;
      for (const auto& [label, verts] : faces)
        for (int v : verts) remap.emplace(v, 0);
      std::vector<int> ids;
      for (auto& [v, dummy] : remap) ids.push_back(v);
      std::vector<int> shuffled = ids;
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      for (std::size_t i = 0; i < ids.size(); ++i) remap[ids[i]] = shuffled[i];
      auto renamed = faces;
      for (auto& [label, verts] : renamed)
        for (int& v : verts) v = remap[v];
      std::shuffle(renamed.begin(), renamed.end(), rng);
      CHECK(signature_from_faces(renamed).canonical_code == base.canonical_code);
    }
  }
}
