#include "cosphere/signature.hpp"

#include <algorithm>
#include <cstdio>

namespace cosphere {

std::string face_label(std::size_t size, bool rectangular) {
  switch (size) {
    case 3: return "tri";
    case 4: return rectangular ? "rect" : "quad";
    case 5: return "pent";
    case 6: return "hex";
    default: return "gon" + std::to_string(size);
  }
}

namespace {

int label_byte(const std::string& label) {
  if (label == "tri") return 3 << 1;
  if (label == "quad") return 4 << 1;
  if (label == "rect") return (4 << 1) | 1;
  if (label == "pent") return 5 << 1;
  if (label == "hex") return 6 << 1;
  return (std::stoi(label.substr(3)) << 1);
}

struct Canonizer {
  int V = 0;
  // faces: (label byte, local vertex ids)
  std::vector<std::pair<int, std::vector<int>>> faces;
  std::vector<std::vector<int>> incident;  // vertex -> face indices

  std::string best;

  // Refines colors to a fixpoint of the labeled-incidence walk.
  void refine(std::vector<int>& color) const {
    for (;;) {
      std::vector<std::pair<std::vector<int>, int>> keys(static_cast<std::size_t>(V));
      for (int v = 0; v < V; ++v) {
        std::vector<int> key;
        key.push_back(color[static_cast<std::size_t>(v)]);
        std::vector<std::vector<int>> parts;
        for (int fi : incident[static_cast<std::size_t>(v)]) {
          const auto& [lab, verts] = faces[static_cast<std::size_t>(fi)];
          std::vector<int> part = {lab};
          std::vector<int> cs;
          for (int u : verts)
            if (u != v) cs.push_back(color[static_cast<std::size_t>(u)]);
          std::sort(cs.begin(), cs.end());
          part.insert(part.end(), cs.begin(), cs.end());
          part.push_back(-1);
          parts.push_back(std::move(part));
        }
        std::sort(parts.begin(), parts.end());
        for (auto& p : parts) key.insert(key.end(), p.begin(), p.end());
        keys[static_cast<std::size_t>(v)] = {std::move(key), v};
      }
      auto sorted = keys;
      std::sort(sorted.begin(), sorted.end());
      std::vector<int> next(static_cast<std::size_t>(V));
      int rank = -1;
      const std::vector<int>* prev = nullptr;
      for (auto& [key, v] : sorted) {
        if (!prev || key != *prev) ++rank;
        next[static_cast<std::size_t>(v)] = rank;
        prev = &key;
      }
      if (next == color) return;
      color = std::move(next);
    }
  }

  void search(std::vector<int> color) {
    refine(color);
    // First non-singleton class, by color value.
    std::vector<int> count(static_cast<std::size_t>(V), 0);
    for (int c : color) ++count[static_cast<std::size_t>(c)];
    int target = -1;
    for (int c = 0; c < V && target < 0; ++c)
      if (count[static_cast<std::size_t>(c)] > 1) target = c;
    if (target < 0) {
      emit(color);
      return;
    }
    for (int v = 0; v < V; ++v) {
      if (color[static_cast<std::size_t>(v)] != target) continue;
      std::vector<int> branch = color;
      // Individualize v ahead of its class.
      for (int& c : branch)
        if (c >= target) ++c;
      branch[static_cast<std::size_t>(v)] = target;
      search(std::move(branch));
    }
  }

  void emit(const std::vector<int>& color) {
    std::vector<unsigned char> bytes;
    bytes.push_back(static_cast<unsigned char>(V));
    bytes.push_back(static_cast<unsigned char>(faces.size()));
    std::vector<std::vector<int>> enc;
    for (const auto& [lab, verts] : faces) {
      std::vector<int> e = {lab, static_cast<int>(verts.size())};
      std::vector<int> ids;
      for (int v : verts) ids.push_back(color[static_cast<std::size_t>(v)]);
      std::sort(ids.begin(), ids.end());
      e.insert(e.end(), ids.begin(), ids.end());
      enc.push_back(std::move(e));
    }
    std::sort(enc.begin(), enc.end());
    for (const auto& e : enc)
      for (int x : e) bytes.push_back(static_cast<unsigned char>(x));
    std::string hex;
    hex.reserve(bytes.size() * 2);
    for (unsigned char b : bytes) {
      char buf[3];
      std::snprintf(buf, sizeof buf, "%02x", b);
      hex += buf;
    }
    if (best.empty() || hex < best) best = std::move(hex);
  }
};

}  // namespace

ShapeSignature signature_from_faces(
    const std::vector<std::pair<std::string, std::vector<int>>>& faces) {
  ShapeSignature sig;
  std::map<int, int> local;
  Canonizer cz;
  for (const auto& [label, verts] : faces) {
    sig.face_labels[label]++;
    std::vector<int> lv;
    for (int v : verts) {
      auto [it, fresh] = local.emplace(v, static_cast<int>(local.size()));
      (void)fresh;
      lv.push_back(it->second);
    }
    cz.faces.emplace_back(label_byte(label), std::move(lv));
  }
  cz.V = static_cast<int>(local.size());
  cz.incident.resize(static_cast<std::size_t>(cz.V));
  std::size_t halfedges = 0;
  for (std::size_t fi = 0; fi < cz.faces.size(); ++fi) {
    halfedges += cz.faces[fi].second.size();
    for (int v : cz.faces[fi].second)
      cz.incident[static_cast<std::size_t>(v)].push_back(static_cast<int>(fi));
  }
  sig.V = cz.V;
  sig.F = static_cast<int>(faces.size());
  sig.E = static_cast<int>(halfedges / 2);
  if (sig.V - sig.E + sig.F != 2)
    throw InvariantError("signature: Euler characteristic violated");

  // Identical as-built encodings are trivially isomorphic; a memo keyed
  // on them skips the canonical search for the recurring construction
  // patterns of the enumeration runs.
  std::string key;
  key.reserve(faces.size() * 10);
  key += static_cast<char>(cz.V);
  for (const auto& [lab, verts] : cz.faces) {
    key += static_cast<char>(lab);
    key += static_cast<char>(verts.size());
    for (int v : verts) key += static_cast<char>(v);
  }
  thread_local std::map<std::string, std::string> memo;
  if (memo.size() > 200000) memo.clear();
  auto hit = memo.find(key);
  if (hit != memo.end()) {
    sig.canonical_code = hit->second;
    return sig;
  }
  cz.search(std::vector<int>(static_cast<std::size_t>(cz.V), 0));
  sig.canonical_code = cz.best;
  memo.emplace(std::move(key), sig.canonical_code);
  return sig;
}

ShapeSignature signature(const kernel::ScaledPointSet& kpts,
                         const CoSphericalCell& cell) {
  std::vector<std::pair<std::string, std::vector<int>>> faces;
  faces.reserve(cell.faces.size());
  for (const auto& f : cell.faces) {
    bool rect = false;
    if (f.size() == 4) {
      rect = true;
      for (int i = 0; i < 4 && rect; ++i) {
        int a = f[static_cast<std::size_t>(i)];
        int b = f[static_cast<std::size_t>((i + 1) % 4)];
        int c = f[static_cast<std::size_t>((i + 2) % 4)];
        if (kpts.dot_sign(a, b, b, c) != 0) rect = false;
      }
    }
    faces.emplace_back(face_label(f.size(), rect), f);
  }
  return signature_from_faces(faces);
}

}  // namespace cosphere
