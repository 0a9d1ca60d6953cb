#pragma once

#include <optional>
#include <string>
#include <vector>

#include "conatus/tendency.hpp"

namespace conatus {

/// One entry of the shipped emotion dictionary. Base entries carry a
/// template tendency over fixed placeholder atoms; form entries (pleasure,
/// feeling of beauty) have no condition of their own and are detected over
/// traces instead.
struct CatalogEntry {
  std::string emotion_name;
  bool is_form = false;
  ActionName quality;  // empty for pleasure, whose quality is whatever is being done
  std::optional<ActionTendency> tendency_template;
  std::string gloss;
};

/// The standard emotion dictionary, in fixed order.
const std::vector<CatalogEntry>& standard_catalog();

/// Entry lookup by name; nullptr when absent.
const CatalogEntry* catalog_lookup(const std::string& emotion_name);

/// Machine-readable listing: one tab-separated record per entry with fields
/// name, kind (base|form), quality, condition text, gloss.
std::string catalog_export();

}  // namespace conatus
