#include "cosphere/catalog.hpp"

#include "json.hpp"

#include <fstream>

namespace cosphere {

Catalog Catalog::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("catalog: cannot open " + path);
  nlohmann::json doc = nlohmann::json::parse(in);
  Catalog cat;
  for (const auto& je : doc.at("elements")) {
    CatalogEntry e;
    e.name = je.at("name").get<std::string>();
    e.group = je.at("group").get<std::string>();
    e.provenance = je.at("provenance").get<std::string>();
    e.sig.V = je.at("V").get<int>();
    e.sig.E = je.at("E").get<int>();
    e.sig.F = je.at("F").get<int>();
    for (auto& [label, count] : je.at("face_labels").items())
      e.sig.face_labels[label] = count.get<int>();
    e.sig.canonical_code = je.at("canonical_code").get<std::string>();
    cat.add(std::move(e));
  }
  return cat;
}

void Catalog::save(const std::string& path) const {
  nlohmann::json elems = nlohmann::json::array();
  for (const CatalogEntry& e : entries_) {
    nlohmann::json je;
    je["name"] = e.name;
    je["group"] = e.group;
    je["provenance"] = e.provenance;
    je["V"] = e.sig.V;
    je["E"] = e.sig.E;
    je["F"] = e.sig.F;
    nlohmann::json labels;
    for (auto& [label, count] : e.sig.face_labels) labels[label] = count;
    je["face_labels"] = std::move(labels);
    je["canonical_code"] = e.sig.canonical_code;
    elems.push_back(std::move(je));
  }
  nlohmann::json doc;
  doc["elements"] = std::move(elems);
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("catalog: cannot write " + path);
  out << doc.dump(2) << '\n';
}

const std::string& Catalog::classify(const ShapeSignature& sig, bool allow_discovery) {
  auto it = code_to_entry_.find(sig.canonical_code);
  if (it != code_to_entry_.end())
    return entries_[static_cast<std::size_t>(it->second)].group;
  if (!allow_discovery) throw UnknownShapeError(sig);
  CatalogEntry e;
  e.name = "discovered-" + std::to_string(++discovered_);
  e.group = e.name;
  e.provenance = "discovered";
  e.sig = sig;
  add(std::move(e));
  return entries_.back().group;
}

int Catalog::group_of(const std::string& code) const {
  auto it = code_to_entry_.find(code);
  if (it == code_to_entry_.end()) return -1;
  return group_id(entries_[static_cast<std::size_t>(it->second)].group);
}

int Catalog::group_id(const std::string& group) const {
  auto it = group_index_.find(group);
  return it == group_index_.end() ? -1 : it->second;
}

void Catalog::add(CatalogEntry entry) {
  if (code_to_entry_.count(entry.sig.canonical_code))
    throw std::invalid_argument("catalog: duplicate canonical code for " + entry.name);
  for (const CatalogEntry& e : entries_)
    if (e.name == entry.name)
      throw std::invalid_argument("catalog: duplicate name " + entry.name);
  code_to_entry_[entry.sig.canonical_code] = static_cast<int>(entries_.size());
  if (!group_index_.count(entry.group)) {
    group_index_[entry.group] = static_cast<int>(groups_.size());
    groups_.push_back(entry.group);
  }
  entries_.push_back(std::move(entry));
}

}  // namespace cosphere
