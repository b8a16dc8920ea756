#include "embedded_data.hpp"
#include "licterm/dataset.hpp"

namespace licterm {

std::string_view seed_dataset_text() noexcept { return embedded::kSeedDataset; }

Dataset seed_dataset() { return parse_dataset(embedded::kSeedDataset, "<seed dataset>"); }

AliasTable seed_aliases() { return parse_alias_table(embedded::kAliases, "<seed aliases>"); }

KnownLicenses seed_known_licenses() {
  return parse_known_licenses(embedded::kKnownLicenses, embedded::kKnownExceptions,
                              "<seed license list>");
}

}  // namespace licterm
