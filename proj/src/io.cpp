#include "cedga/io.hpp"
#include "cedga/error.hpp"

#include <fstream>
#include <sstream>

namespace cedga {

namespace {

template <class T>
T get_field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw Error(ErrorCode::Format, std::string("missing field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::Format, std::string("field '") + key + "': " + e.what());
    }
}

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw Error(ErrorCode::Format, std::string("missing field '") + key + "'");
    return j.at(key);
}

Rational length_from_json(const Json& j) {
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    if (j.is_number_integer())
        return Rational(j.get<std::int64_t>());
    if (j.is_number())
        return parse_rational(j.dump());
    throw Error(ErrorCode::Format, "length must be a string or a number");
}

void check_format(const Json& j, const char* format, int version) {
    auto f = get_field<std::string>(j, "format");
    if (f != format)
        throw Error(ErrorCode::Format, "expected format '" + std::string(format) + "', got '" + f + "'");
    auto v = get_field<int>(j, "version");
    if (v != version)
        throw Error(ErrorCode::VersionMismatch,
                    "unsupported " + std::string(format) + " version " + std::to_string(v) + " (expected " +
                        std::to_string(version) + ")");
}

const char* end_name(CrossingEnd e) {
    if (e.strand == Strand::Over)
        return e.dir == Direction::Out ? "over-out" : "over-in";
    return e.dir == Direction::Out ? "under-out" : "under-in";
}

CrossingEnd end_from_name(const std::string& s) {
    if (s == "over-out")
        return {Strand::Over, Direction::Out};
    if (s == "over-in")
        return {Strand::Over, Direction::In};
    if (s == "under-out")
        return {Strand::Under, Direction::Out};
    if (s == "under-in")
        return {Strand::Under, Direction::In};
    throw Error(ErrorCode::Format, "unknown crossing end '" + s + "'");
}

} // namespace

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::Format, "cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::Format, "'" + path + "': " + e.what());
    }
}

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out)
        throw Error(ErrorCode::Format, "cannot write '" + path + "'");
    out << j.dump(2) << '\n';
}

Json poly_to_json(const DGA& dga, const NCPoly& x) {
    Json terms = Json::array();
    for (const auto& [key, c] : x.terms()) {
        Json word = Json::array();
        for (GenId g : key.word)
            word.push_back(dga.gens.at(g).name);
        terms.push_back(Json{{"c", c}, {"mu", key.mu}, {"lambda", key.lambda}, {"word", word}});
    }
    return terms;
}

NCPoly poly_from_json(const DGA& dga, const Json& j) {
    if (!j.is_array())
        throw Error(ErrorCode::Format, "a polynomial is a list of terms");
    NCPoly x(dga.p);
    for (const Json& t : j) {
        Word w;
        for (const auto& name : get_field<std::vector<std::string>>(t, "word"))
            w.push_back(dga.index(name));
        auto c = get_field<std::int64_t>(t, "c");
        int mu = t.contains("mu") ? get_field<int>(t, "mu") : 0;
        int lambda = t.contains("lambda") ? get_field<int>(t, "lambda") : 0;
        x.add_term(std::move(w), x.field().from_int(c), mu, lambda);
    }
    return x;
}

Json dga_to_json(const DGA& dga, const Json& provenance, bool verified) {
    Json j;
    j["format"] = "cedga-dga";
    j["version"] = kDgaFormatVersion;
    j["name"] = dga.name;
    j["characteristic"] = dga.p;
    j["maslov_offsets"] = Json::array({dga.mu_degree, dga.lambda_degree});
    Json gens = Json::array();
    for (const ChordGen& g : dga.gens)
        gens.push_back(Json{{"name", g.name}, {"degree", g.degree}, {"length", format_rational(g.length)}});
    j["generators"] = gens;
    Json diff = Json::object();
    for (GenId g = 0; g < dga.size(); ++g)
        diff[dga.gens[g].name] = poly_to_json(dga, dga.d[g]);
    j["differential"] = diff;
    j["verified"] = verified;
    if (!provenance.is_null())
        j["provenance"] = provenance;
    return j;
}

void verify_dga(const DGA& dga) {
    if (auto bad = check_d_squared(dga); !bad.empty())
        throw Error(ErrorCode::VerificationFailed, "d^2 != 0 at generator '" + dga.gens[bad.front()].name + "'");
    if (auto bad = check_degree_law(dga); !bad.empty())
        throw Error(ErrorCode::VerificationFailed, "degree law fails at generator '" + dga.gens[bad.front().gen].name +
                                                       "' (word '" + dga.word_name(bad.front().word) + "')");
    if (auto bad = check_action_law(dga); !bad.empty())
        throw Error(ErrorCode::VerificationFailed, "action law fails at generator '" + dga.gens[bad.front().gen].name +
                                                       "' (word '" + dga.word_name(bad.front().word) + "')");
}

DGAFile dga_from_json(const Json& j, bool verify) {
    check_format(j, "cedga-dga", kDgaFormatVersion);
    DGAFile file;
    DGA& dga = file.dga;
    dga.p = get_field<std::uint32_t>(j, "characteristic");
    (void)PrimeField(dga.p);
    dga.name = get_field<std::string>(j, "name");
    if (j.contains("maslov_offsets")) {
        auto off = get_field<std::vector<int>>(j, "maslov_offsets");
        if (off.size() != 2)
            throw Error(ErrorCode::Format, "maslov_offsets must have two entries");
        dga.mu_degree = off[0];
        dga.lambda_degree = off[1];
    }
    const Json& gens = field(j, "generators");
    if (!gens.is_array())
        throw Error(ErrorCode::Format, "generators must be a list");
    for (const Json& g : gens)
        dga.add_generator({get_field<std::string>(g, "name"), get_field<int>(g, "degree"), length_from_json(field(g, "length"))});
    if (!j.contains("differential") || !j.at("differential").is_object())
        throw Error(ErrorCode::Format, "missing differential table");
    for (const auto& [name, terms] : j.at("differential").items())
        dga.d[dga.index(name)] = poly_from_json(dga, terms);
    if (j.contains("provenance"))
        file.provenance = j.at("provenance");
    file.verified = j.contains("verified") ? get_field<bool>(j, "verified") : true;
    if (verify) {
        verify_dga(dga);
    } else {
        file.verified = false;
    }
    return file;
}

DGAFile load_dga(const std::string& path, bool verify) { return dga_from_json(read_json_file(path), verify); }

void save_dga(const DGA& dga, const std::string& path, const Json& provenance, bool verified) {
    write_json_file(path, dga_to_json(dga, provenance, verified));
}

Json diagram_to_json(const LagrangianDiagram& d) {
    Json j;
    j["format"] = "lagrangian-diagram";
    j["version"] = kDiagramFormatVersion;
    j["name"] = d.name;
    Json crossings = Json::array();
    for (const Crossing& c : d.crossings) {
        Json ends = Json::array();
        for (CrossingEnd e : c.ends)
            ends.push_back(end_name(e));
        crossings.push_back(
            Json{{"name", c.name}, {"degree", c.degree}, {"length", format_rational(c.length)}, {"ends", ends}});
    }
    j["crossings"] = crossings;
    Json comps = Json::array();
    for (const auto& comp : d.components) {
        Json visits = Json::array();
        for (const Visit& v : comp)
            visits.push_back(Json{{"crossing", d.crossings.at(v.crossing).name},
                                  {"strand", v.strand == Strand::Over ? "over" : "under"}});
        comps.push_back(visits);
    }
    j["components"] = comps;
    j["outer_face"] = Json{{"edge", d.outer_edge}, {"side", d.outer_on_right ? "right" : "left"}};
    j["base_point_edge"] = d.base_point_edge;
    if (!d.notes.empty())
        j["notes"] = d.notes;
    return j;
}

LagrangianDiagram diagram_from_json(const Json& j) {
    check_format(j, "lagrangian-diagram", kDiagramFormatVersion);
    LagrangianDiagram d;
    d.name = get_field<std::string>(j, "name");
    for (const Json& c : field(j, "crossings")) {
        Crossing x;
        x.name = get_field<std::string>(c, "name");
        x.degree = get_field<int>(c, "degree");
        x.length = length_from_json(field(c, "length"));
        auto ends = get_field<std::vector<std::string>>(c, "ends");
        if (ends.size() != 4)
            throw Error(ErrorCode::Format, "crossing '" + x.name + "' needs four ends");
        for (int k = 0; k < 4; ++k)
            x.ends[k] = end_from_name(ends[k]);
        for (const Crossing& y : d.crossings)
            if (y.name == x.name)
                throw Error(ErrorCode::Format, "duplicate crossing '" + x.name + "'");
        d.crossings.push_back(std::move(x));
    }
    for (const Json& comp : field(j, "components")) {
        std::vector<Visit> visits;
        for (const Json& v : comp) {
            auto name = get_field<std::string>(v, "crossing");
            auto strand = get_field<std::string>(v, "strand");
            if (strand != "over" && strand != "under")
                throw Error(ErrorCode::Format, "strand must be 'over' or 'under'");
            std::size_t idx = d.crossings.size();
            for (std::size_t i = 0; i < d.crossings.size(); ++i)
                if (d.crossings[i].name == name)
                    idx = i;
            if (idx == d.crossings.size())
                throw Error(ErrorCode::Format, "traversal names unknown crossing '" + name + "'");
            visits.push_back({idx, strand == "over" ? Strand::Over : Strand::Under});
        }
        d.components.push_back(std::move(visits));
    }
    const Json& outer = field(j, "outer_face");
    d.outer_edge = get_field<std::size_t>(outer, "edge");
    auto side = get_field<std::string>(outer, "side");
    if (side != "left" && side != "right")
        throw Error(ErrorCode::Format, "outer_face side must be 'left' or 'right'");
    d.outer_on_right = side == "right";
    d.base_point_edge = j.contains("base_point_edge") ? get_field<std::size_t>(j, "base_point_edge") : 0;
    if (j.contains("notes"))
        d.notes = get_field<std::string>(j, "notes");
    return d;
}

LagrangianDiagram load_diagram(const std::string& path) { return diagram_from_json(read_json_file(path)); }

} // namespace cedga

namespace cedga {

Json spun_provenance(const SpunDGA& s) {
    Json j;
    j["kind"] = "twist-spun";
    j["source"] = dga_to_json(s.source);
    j["phi"] = morphism_to_json(s.source, s.phi);
    j["lambda_twist"] = s.lambda_twist;
    j["eps"] = format_rational(s.eps);
    return j;
}

SpunDGA spun_from_file(const DGAFile& file) {
    const Json& p = file.provenance;
    if (!p.is_object() || !p.contains("kind") || p.at("kind") != "twist-spun")
        throw Error(ErrorCode::Format, "DGA file carries no twist-spun provenance");
    DGA source = dga_from_json(field(p, "source")).dga;
    DGAMorphism phi = morphism_from_json(source, field(p, "phi"));
    SpunDGA s = twist_spun_dga(source, phi, get_field<int>(p, "lambda_twist"), length_from_json(field(p, "eps")));
    s.dga.name = file.dga.name;
    if (!(s.dga == file.dga))
        throw Error(ErrorCode::VerificationFailed, "spun DGA does not match its provenance");
    return s;
}

DGAMorphism morphism_from_json(const DGA& a, const Json& j) {
    DGAMorphism f = identity_morphism(a);
    if (!j.is_object() || !j.contains("images") || !j.at("images").is_object())
        throw Error(ErrorCode::Format, "endomorphism table needs an 'images' object");
    for (const auto& [name, terms] : j.at("images").items())
        f.images[a.index(name)] = poly_from_json(a, terms);
    return f;
}

Json morphism_to_json(const DGA& a, const std::vector<NCPoly>& images) {
    Json imgs = Json::object();
    for (GenId g = 0; g < images.size(); ++g)
        imgs[a.gens.at(g).name] = poly_to_json(a, images[g]);
    return Json{{"format", "cedga-morphism"}, {"version", 1}, {"images", imgs}};
}

Json augmentation_to_json(const DGA& a, const Augmentation& e) {
    Json vals = Json::object();
    for (GenId g = 0; g < a.size(); ++g)
        vals[a.gens[g].name] = e.values.at(g);
    return Json{{"format", "cedga-augmentation"}, {"version", 1}, {"p", e.p}, {"mu", e.mu0},
                {"lambda", e.lambda0},        {"graded", e.graded}, {"values", vals}};
}

Augmentation augmentation_from_json(const DGA& a, const Json& j) {
    check_format(j, "cedga-augmentation", 1);
    Augmentation e;
    e.p = get_field<std::uint32_t>(j, "p");
    const PrimeField F(e.p);
    e.mu0 = F.from_int(get_field<std::int64_t>(j, "mu"));
    e.lambda0 = F.from_int(get_field<std::int64_t>(j, "lambda"));
    e.graded = j.contains("graded") ? get_field<bool>(j, "graded") : true;
    e.values.assign(a.size(), 0);
    if (!j.contains("values") || !j.at("values").is_object())
        throw Error(ErrorCode::Format, "augmentation needs a 'values' object");
    for (const auto& [name, v] : j.at("values").items())
    {
        if (!v.is_number_integer())
            throw Error(ErrorCode::Format, "augmentation value of '" + name + "' must be an integer");
        e.values[a.index(name)] = F.from_int(v.get<std::int64_t>());
    }
    return e;
}

Json betti_to_json(const BettiVector& b) {
    Json j = Json::object();
    for (const auto& [k, v] : b)
        j[std::to_string(k)] = v;
    return j;
}

Json complex_to_json(const GradedComplex& c) {
    Json j;
    j["p"] = c.p;
    Json basis = Json::object();
    for (const auto& [k, b] : c.basis)
        basis[std::to_string(k)] = b;
    j["basis"] = basis;
    Json d = Json::object();
    for (const auto& [k, m] : c.d) {
        Json rows = Json::array();
        for (std::size_t i = 0; i < m.rows(); ++i) {
            Json row = Json::array();
            for (std::size_t jj = 0; jj < m.cols(); ++jj)
                row.push_back(m.at(i, jj));
            rows.push_back(row);
        }
        d[std::to_string(k)] = rows;
    }
    j["differential"] = d;
    return j;
}

Json points_to_json(const TorusPointSet& s) {
    Json pts = Json::array();
    for (const auto& [m, l] : s.points)
        pts.push_back(Json::array({m, l}));
    return Json{{"q", s.q}, {"provenance", s.provenance}, {"points", pts}};
}

Json feasibility_to_json(const ConeFeasibility& f) {
    Json d = Json::object();
    for (auto it = f.d.rbegin(); it != f.d.rend(); ++it)
        d[std::to_string(it->first)] = it->second;
    Json j{{"feasible", f.feasible}, {"d", d}, {"t_min", f.t_min}};
    j["t_max"] = f.t_max ? Json(*f.t_max) : Json(nullptr);
    j["certificate_degree"] = f.certificate_degree ? Json(*f.certificate_degree) : Json(nullptr);
    j["steps"] = f.steps;
    return j;
}

Json obstruction_to_json(const ObstructionReport& r) {
    Json window = Json::object();
    for (auto it = r.window.rbegin(); it != r.window.rend(); ++it)
        window[std::to_string(it->first)] = it->second;
    Json lch = Json::object();
    for (auto it = r.nonpositive_window.rbegin(); it != r.nonpositive_window.rend(); ++it)
        lch[std::to_string(it->first)] = it->second ? Json(*it->second) : Json(nullptr);
    return Json{{"r", r.r},
                {"verdict", r.verdict},
                {"not_twist_spun", r.not_twist_spun},
                {"assumptions", r.assumptions},
                {"graded_candidates", r.graded_candidates},
                {"forced_nonpositive", lch},
                {"window", window},
                {"feasibility", feasibility_to_json(r.feasibility)}};
}

Json inventory_to_json(const ChordInventory& inv) {
    Json chords = Json::array();
    for (const auto& c : inv.chords)
        chords.push_back(Json{{"name", c.name}, {"degree", c.degree}, {"length", format_rational(c.length)}});
    return Json{{"name", inv.name}, {"chords", chords}};
}

Json product_to_json(const ProductInventory& inv) {
    Json chords = Json::array();
    for (const auto& c : inv.chords)
        chords.push_back(Json{{"name", c.chord.name},
                              {"degree", c.chord.degree},
                              {"length", format_rational(c.chord.length)},
                              {"family", to_string(c.family)}});
    return Json{{"q1", inventory_to_json(inv.q1)},
                {"q2_short", inventory_to_json(inv.q2_short)},
                {"eps", format_rational(inv.eps)},
                {"chords", chords}};
}

DimWindow parse_window(const std::string& text) {
    DimWindow w;
    auto first = text.find_first_not_of(" \t");
    if (first != std::string::npos && text[first] == '{') {
        Json j;
        try {
            j = Json::parse(text);
        } catch (const nlohmann::json::exception& e) {
            throw Error(ErrorCode::Format, std::string("window: ") + e.what());
        }
        for (const auto& [k, v] : j.items()) {
            if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
                throw Error(ErrorCode::Format, "window dimensions must be nonnegative integers");
            w[std::stoi(k)] = v.get<std::size_t>();
        }
        return w;
    }
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto colon = item.find(':');
        if (colon == std::string::npos)
            throw Error(ErrorCode::Format, "window entries look like degree:dimension, got '" + item + "'");
        try {
            int k = std::stoi(item.substr(0, colon));
            long long v = std::stoll(item.substr(colon + 1));
            if (v < 0)
                throw Error(ErrorCode::Format, "window dimensions must be nonnegative");
            if (!w.emplace(k, static_cast<std::size_t>(v)).second)
                throw Error(ErrorCode::Format, "degree " + std::to_string(k) + " listed twice");
        } catch (const std::logic_error&) {
            throw Error(ErrorCode::Format, "bad window entry '" + item + "'");
        }
    }
    return w;
}

} // namespace cedga
