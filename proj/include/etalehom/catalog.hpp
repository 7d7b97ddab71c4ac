#pragma once

#include <string>
#include <vector>

#include "etalehom/abelian_group.hpp"
#include "etalehom/homogeneous.hpp"

namespace etalehom {

/// A classical homogeneous space with its homotopy groups known from
/// topology, completed at the entry's characteristic.
struct CatalogEntry {
  std::string name;
  EmbeddingData embedding;
  FgAbGroup expected_pi2;
  FgAbGroup expected_pi1_X;
  FgAbGroup expected_pi1_G;
  FgAbGroup expected_pi1_H;
  std::string oracle_note;

  Characteristic characteristic() const { return embedding.group.characteristic(); }
};

/// Every space of the golden suite, once per characteristic in {0, 2, 3, 5}.
std::vector<CatalogEntry> catalog_entries();

struct CatalogOptions {
  /// Skip p-stripping of the computed groups (mutation test hook).
  bool strip_p_part = true;
  ComplexOptions complex;
};

struct CatalogResult {
  std::string name;
  Characteristic characteristic;
  std::vector<std::string> mismatches;

  bool passed() const { return mismatches.empty(); }
};

struct CatalogReport {
  std::vector<CatalogResult> results;

  bool all_passed() const;
  /// One line per entry, then a pass count per characteristic.
  std::string table() const;
};

CatalogResult run_entry(const CatalogEntry& entry, const CatalogOptions& opts = {});
CatalogReport run_catalog(const CatalogOptions& opts = {});

}  // namespace etalehom
