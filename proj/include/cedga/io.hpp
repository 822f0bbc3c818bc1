#pragma once

#include "cedga/dga.hpp"
#include "cedga/complex.hpp"
#include "cedga/diagram.hpp"
#include "cedga/obstruction.hpp"
#include "cedga/spun.hpp"
#include "cedga/variety.hpp"

#include <json.hpp>

#include <string>

namespace cedga {

using Json = nlohmann::ordered_json;

inline constexpr int kDgaFormatVersion = 1;
inline constexpr int kDiagramFormatVersion = 1;

struct DGAFile {
    DGA dga;
    Json provenance;
    bool verified = true;
};

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

Json dga_to_json(const DGA& dga, const Json& provenance = nullptr, bool verified = true);
/// Rejects files whose differential fails d^2 = 0, the degree law or the
/// action law unless verify is false; the outcome is kept in DGAFile::verified.
DGAFile dga_from_json(const Json& j, bool verify = true);
DGAFile load_dga(const std::string& path, bool verify = true);
void save_dga(const DGA& dga, const std::string& path, const Json& provenance = nullptr, bool verified = true);
/// Throws VerificationFailed naming the first offending generator.
void verify_dga(const DGA& dga);

Json diagram_to_json(const LagrangianDiagram& d);
LagrangianDiagram diagram_from_json(const Json& j);
LagrangianDiagram load_diagram(const std::string& path);

Json poly_to_json(const DGA& dga, const NCPoly& x);
NCPoly poly_from_json(const DGA& dga, const Json& j);

/// Provenance block of a spun DGA: source DGA, loop images and twist.
Json spun_provenance(const SpunDGA& s);
/// Rebuilds a spun DGA from its provenance and checks it reproduces dga.
SpunDGA spun_from_file(const DGAFile& file);

/// Endomorphism table {"images": {gen: terms}}; generators not listed map to themselves.
DGAMorphism morphism_from_json(const DGA& a, const Json& j);
Json morphism_to_json(const DGA& a, const std::vector<NCPoly>& images);

Json augmentation_to_json(const DGA& a, const Augmentation& e);
Augmentation augmentation_from_json(const DGA& a, const Json& j);

Json betti_to_json(const BettiVector& b);
Json complex_to_json(const GradedComplex& c);
Json points_to_json(const TorusPointSet& s);
Json feasibility_to_json(const ConeFeasibility& f);
Json obstruction_to_json(const ObstructionReport& r);
Json inventory_to_json(const ChordInventory& inv);
Json product_to_json(const ProductInventory& inv);

/// Parses "-2:0,-3:1,-4:0" or a JSON object {"-2": 0, ...}.
DimWindow parse_window(const std::string& text);

} // namespace cedga
