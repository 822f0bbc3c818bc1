#include "cedga/catalog.hpp"
#include "cedga/error.hpp"
#include "cedga/io.hpp"

#include <cstdlib>

namespace cedga {

const char* to_string(EntryKind k) {
    switch (k) {
    case EntryKind::Diagram: return "diagram";
    case EntryKind::Model: return "model";
    case EntryKind::Inventory: return "inventory";
    case EntryKind::Spun: return "spun";
    case EntryKind::Polynomial: return "polynomial";
    }
    return "unknown";
}

std::string catalog_dir() {
    if (const char* env = std::getenv("CEDGA_CATALOG"); env && *env)
        return env;
#ifdef CEDGA_CATALOG_DIR
    return CEDGA_CATALOG_DIR;
#else
    return "data/catalog";
#endif
}

std::vector<CatalogEntry> catalog_entries() {
    static const std::vector<CatalogEntry> entries = {
        {"unknot", EntryKind::Diagram, 0, "one-crossing figure-eight projection of the standard unknot"},
        {"trefoil", EntryKind::Diagram, 0, "five-crossing Lagrangian projection of the right-handed trefoil"},
        {"loose", EntryKind::Model, std::nullopt, "one generator x of degree 1 with d(x) = 1; the unit is a boundary"},
        {"lambda1", EntryKind::Inventory, 0, "standard unknot: one chord a of degree 1 and length 1"},
        {"lambda2_r0", EntryKind::Inventory, 0, "family member with short chord b of degree 0"},
        {"lambda2_r1", EntryKind::Inventory, 0, "family member with short chord b of degree 2"},
        {"lambda2_r2", EntryKind::Inventory, 0, "family member with short chord b of degree 4"},
        {"lambda2_r3", EntryKind::Inventory, 0, "family member with short chord b of degree 6"},
        {"spun-unknot", EntryKind::Spun, std::nullopt, "twist spun of the unknot along the constant loop"},
        {"spun-trefoil", EntryKind::Spun, std::nullopt, "twist spun of the trefoil along the constant loop"},
        {"spun-loose", EntryKind::Spun, std::nullopt, "twist spun of the loose model along the constant loop"},
        {"poly:clifford", EntryKind::Polynomial, std::nullopt, "1 + lambda (1 + mu)"},
        {"poly:chekanov", EntryKind::Polynomial, std::nullopt, "1 + lambda (1 + mu)^2"},
    };
    return entries;
}

const CatalogEntry& catalog_entry(const std::string& name) {
    static const std::vector<CatalogEntry> entries = catalog_entries();
    for (const auto& e : entries)
        if (e.name == name)
            return e;
    throw Error(ErrorCode::UnknownEntry, "no catalog entry named '" + name + "'");
}

std::vector<std::string> catalog_dga_names() {
    std::vector<std::string> out;
    for (const auto& e : catalog_entries())
        if (e.kind == EntryKind::Diagram || e.kind == EntryKind::Model || e.kind == EntryKind::Spun)
            out.push_back(e.name);
    return out;
}

std::vector<std::string> catalog_spun_names() {
    std::vector<std::string> out;
    for (const auto& e : catalog_entries())
        if (e.kind == EntryKind::Spun)
            out.push_back(e.name);
    return out;
}

LagrangianDiagram catalog_diagram(const std::string& name) {
    if (catalog_entry(name).kind != EntryKind::Diagram)
        throw Error(ErrorCode::UnknownEntry, "catalog entry '" + name + "' has no diagram");
    return load_diagram(catalog_dir() + "/" + name + ".diagram.json");
}

SpunDGA catalog_spun(const std::string& name, std::uint32_t p) {
    if (catalog_entry(name).kind != EntryKind::Spun)
        throw Error(ErrorCode::UnknownEntry, "catalog entry '" + name + "' is not a spun DGA");
    DGA base = catalog_dga(name.substr(5), p);
    return twist_spun_dga(base, identity_morphism(base));
}

DGA catalog_dga(const std::string& name, std::uint32_t p) {
    const CatalogEntry& e = catalog_entry(name);
    switch (e.kind) {
    case EntryKind::Diagram:
        return chekanov_dga(catalog_diagram(name), p);
    case EntryKind::Model: {
        DGA a;
        a.p = p;
        a.name = name;
        GenId x = a.add_generator({"x", 1, Rational(1)});
        a.d[x] = NCPoly::unit(p);
        return a;
    }
    case EntryKind::Spun: {
        DGA a = catalog_spun(name, p).dga;
        a.name = name;
        return a;
    }
    default:
        throw Error(ErrorCode::UnknownEntry, "catalog entry '" + name + "' has no DGA");
    }
}

ChordInventory lambda2_inventory(int r) {
    if (r < 0)
        throw Error(ErrorCode::NotInRegime, "r must be nonnegative");
    ChordInventory inv;
    inv.name = "lambda2_r" + std::to_string(r);
    inv.chords = {{"b", 2 * r, Rational(1, 2)}, {"c1", 1, Rational(3, 2)}, {"c2", 1, Rational(2)}};
    return inv;
}

ChordInventory catalog_inventory(const std::string& name) {
    const CatalogEntry& e = catalog_entry(name);
    if (e.kind != EntryKind::Inventory) {
        if (e.kind == EntryKind::Polynomial)
            throw Error(ErrorCode::UnknownEntry, "catalog entry '" + name + "' has no inventory");
        return inventory_of(catalog_dga(name));
    }
    if (name == "lambda1")
        return ChordInventory{"lambda1", {{"a", 1, Rational(1)}}};
    return lambda2_inventory(std::stoi(name.substr(std::string("lambda2_r").size())));
}

LocusPolynomial catalog_polynomial(const std::string& name) {
    if (name == "poly:clifford")
        return LocusPolynomial::parse("1[0,0] + 1[0,1] + 1[1,1]");
    if (name == "poly:chekanov")
        return LocusPolynomial::parse("1[0,0] + 1[0,1] + 2[1,1] + 1[2,1]");
    throw Error(ErrorCode::UnknownEntry, "no catalog polynomial named '" + name + "'");
}

ChordInventory inventory_of(const DGA& a) {
    ChordInventory inv;
    inv.name = a.name;
    for (const auto& g : a.gens)
        inv.chords.push_back({g.name, g.degree, g.length});
    return inv;
}

} // namespace cedga
