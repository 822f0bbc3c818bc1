#pragma once

#include "cedga/dga.hpp"
#include "cedga/diagram.hpp"
#include "cedga/products.hpp"
#include "cedga/spun.hpp"
#include "cedga/variety.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cedga {

enum class EntryKind { Diagram, Model, Inventory, Spun, Polynomial };

const char* to_string(EntryKind k);

struct CatalogEntry {
    std::string name;
    EntryKind kind = EntryKind::Diagram;
    std::optional<int> rotation;
    std::string notes;
};

/// Directory holding the shipped diagram files; CEDGA_CATALOG overrides it.
std::string catalog_dir();

std::vector<CatalogEntry> catalog_entries();
const CatalogEntry& catalog_entry(const std::string& name);
/// Names of entries that yield a DGA (diagrams, models and spun entries).
std::vector<std::string> catalog_dga_names();
std::vector<std::string> catalog_spun_names();

LagrangianDiagram catalog_diagram(const std::string& name);
DGA catalog_dga(const std::string& name, std::uint32_t p = 2);
SpunDGA catalog_spun(const std::string& name, std::uint32_t p = 2);
ChordInventory catalog_inventory(const std::string& name);
LocusPolynomial catalog_polynomial(const std::string& name);

/// The degree-2r member of the knot family: one chord of degree 2r and length
/// 1/2 together with representative long chords.
ChordInventory lambda2_inventory(int r);
ChordInventory inventory_of(const DGA& a);

} // namespace cedga
