#pragma once

#include "cosphere/signature.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cosphere {

struct CatalogEntry {
  std::string name;        // unique per signature
  std::string group;       // element name; alias groups share it
  std::string provenance;  // initial-7 | bisection-17 | intersection-14 | discovered
  ShapeSignature sig;
};

/// Classification error carrying the offending shape's counts.
struct UnknownShapeError : std::runtime_error {
  explicit UnknownShapeError(const ShapeSignature& sig)
      : std::runtime_error("unknown co-spherical element V=" + std::to_string(sig.V) +
                           " E=" + std::to_string(sig.E) +
                           " F=" + std::to_string(sig.F)) {}
};

class Catalog {
 public:
  Catalog() = default;

  static Catalog load(const std::string& path);
  void save(const std::string& path) const;

  /// Group name on exact canonical-code match. With discovery enabled an
  /// unmatched signature is appended as `discovered-N`; otherwise
  /// UnknownShapeError is thrown. Discovery requires exclusive access.
  const std::string& classify(const ShapeSignature& sig, bool allow_discovery);

  /// Group id (stable index into group_order) or -1.
  int group_of(const std::string& code) const;

  const std::vector<CatalogEntry>& entries() const { return entries_; }
  const std::vector<std::string>& group_order() const { return groups_; }
  int group_id(const std::string& group) const;

  void add(CatalogEntry entry);

 private:
  std::vector<CatalogEntry> entries_;
  std::vector<std::string> groups_;           // report order
  std::map<std::string, int> group_index_;    // group -> id
  std::map<std::string, int> code_to_entry_;  // canonical code -> entry index
  int discovered_ = 0;
};

}  // namespace cosphere
