#include "cedga/catalog.hpp"
#include "cedga/complex.hpp"
#include "cedga/error.hpp"
#include "cedga/io.hpp"
#include "cedga/obstruction.hpp"
#include "cedga/variety.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <sstream>

using namespace cedga;

namespace {

enum Exit : int {
    kOk = 0,
    kObstructionFires = 10,
    kUsage = 20,
    kFormat = 21,
    kVerification = 22,
    kVersion = 23,
    kUnknownEntry = 24,
    kBadDiagram = 25,
    kRing = 26,
    kBadMap = 27,
    kRegime = 28,
    kUnsupported = 29,
    kResource = 30,
    kInternal = 40,
};

int exit_code(ErrorCode c) {
    switch (c) {
    case ErrorCode::Format:
    case ErrorCode::UndeclaredGenerator: return kFormat;
    case ErrorCode::VerificationFailed: return kVerification;
    case ErrorCode::VersionMismatch: return kVersion;
    case ErrorCode::UnknownEntry: return kUnknownEntry;
    case ErrorCode::NonPlanar:
    case ErrorCode::MultiComponent:
    case ErrorCode::NonPositiveLength:
    case ErrorCode::InvalidDiagram: return kBadDiagram;
    case ErrorCode::RingMismatch:
    case ErrorCode::InvalidPoint:
    case ErrorCode::AugmentationMismatch: return kRing;
    case ErrorCode::InvalidLoop:
    case ErrorCode::NotChainMap: return kBadMap;
    case ErrorCode::NotInRegime:
    case ErrorCode::EmptyInventory: return kRegime;
    case ErrorCode::Unsupported: return kUnsupported;
    case ErrorCode::ResourceLimit: return kResource;
    case ErrorCode::InternalConsistency: return kInternal;
    }
    return kInternal;
}

struct Options {
    bool json = false;
    std::string target;
    std::uint32_t p = 2;
    bool p_given = false;
    bool no_verify = false;
    std::string out;
    int cap = 4;
    std::string phi = "id";
    int lambda_twist = 0;
    std::string eps_len;
    long long mu = -1;
    long long lambda = 1;
    bool graded = false;
    std::uint64_t bound = kDefaultSearchBound;
    std::string eps1, eps2;
    std::string dims;
    int r = 0;
    std::uint32_t q = 5;
    bool line_test = false;
    int basis_scan = -1;
};

void emit(const Options& o, const Json& j, const std::string& text) {
    if (o.json)
        std::cout << j.dump(2) << '\n';
    else
        std::cout << text;
}

bool is_file(const std::string& s) { return std::filesystem::is_regular_file(s); }

DGAFile resolve_dga(const Options& o, std::uint32_t p) {
    if (is_file(o.target)) {
        Json j = read_json_file(o.target);
        if (j.contains("format") && j.at("format") == "lagrangian-diagram")
            return {chekanov_dga(diagram_from_json(j), p), nullptr, true};
        DGAFile f = dga_from_json(j, !o.no_verify);
        return f;
    }
    const CatalogEntry& e = catalog_entry(o.target);
    if (e.kind == EntryKind::Spun) {
        SpunDGA s = catalog_spun(o.target, p);
        s.dga.name = o.target;
        return {s.dga, spun_provenance(s), true};
    }
    return {catalog_dga(o.target, p), nullptr, true};
}

std::string list_terms(const DGA& a) {
    std::ostringstream os;
    for (GenId g = 0; g < a.size(); ++g)
        os << "  d(" << a.gens[g].name << ") = " << to_string(a, a.d[g]) << '\n';
    return os.str();
}

int cmd_catalog_list(const Options& o) {
    Json arr = Json::array();
    std::ostringstream os;
    for (const auto& e : catalog_entries()) {
        Json j{{"name", e.name}, {"kind", to_string(e.kind)}, {"notes", e.notes}};
        j["rotation"] = e.rotation ? Json(*e.rotation) : Json(nullptr);
        arr.push_back(j);
        os << e.name << "  [" << to_string(e.kind) << "]  " << e.notes << '\n';
    }
    emit(o, Json{{"command", "catalog list"}, {"entries", arr}}, os.str());
    return kOk;
}

int cmd_dga_check(const Options& o) {
    Options loose = o;
    loose.no_verify = true;
    DGAFile f = resolve_dga(loose, o.p);
    const DGA& a = f.dga;
    auto d2 = check_d_squared(a);
    auto deg = check_degree_law(a);
    auto act = check_action_law(a);
    Json bad_d2 = Json::array(), bad_deg = Json::array(), bad_act = Json::array();
    std::ostringstream os;
    os << "DGA " << a.name << " over F_" << a.p << ", " << a.size() << " generators\n" << list_terms(a);
    for (GenId g : d2) {
        bad_d2.push_back(a.gens[g].name);
        os << "d^2 != 0 at " << a.gens[g].name << '\n';
    }
    for (const auto& v : deg) {
        bad_deg.push_back(Json{{"generator", a.gens[v.gen].name}, {"word", a.word_name(v.word)}});
        os << "degree law fails at " << a.gens[v.gen].name << " (word " << a.word_name(v.word) << ")\n";
    }
    for (const auto& v : act) {
        bad_act.push_back(Json{{"generator", a.gens[v.gen].name}, {"word", a.word_name(v.word)}});
        os << "action law fails at " << a.gens[v.gen].name << " (word " << a.word_name(v.word) << ")\n";
    }
    bool pass = d2.empty() && deg.empty() && act.empty();
    os << (pass ? "pass\n" : "fail\n");
    emit(o,
         Json{{"command", "dga check"},
              {"name", a.name},
              {"characteristic", a.p},
              {"pass", pass},
              {"d_squared", bad_d2},
              {"degree_law", bad_deg},
              {"action_law", bad_act}},
         os.str());
    return pass ? kOk : kVerification;
}

int cmd_dga_from_diagram(const Options& o) {
    LagrangianDiagram d = is_file(o.target) ? load_diagram(o.target) : catalog_diagram(o.target);
    PolygonOptions opt;
    opt.p = o.p;
    opt.multiplicity_cap = o.cap;
    DGA a = chekanov_dga(d, opt);
    DiagramReport rep = validate_diagram(d);
    GradingReport gr = validate_gradings(d, a);
    if (!gr.ok)
        throw Error(ErrorCode::VerificationFailed, gr.messages.front());
    verify_dga(a);
    Json prov{{"kind", "diagram"}, {"diagram", d.name}, {"rotation", rep.rotation}};
    Json dj = dga_to_json(a, prov);
    if (!o.out.empty())
        write_json_file(o.out, dj);
    std::ostringstream os;
    os << "DGA of " << d.name << " over F_" << a.p << " (rotation number " << rep.rotation << ")\n" << list_terms(a);
    emit(o, Json{{"command", "dga from-diagram"}, {"dga", dj}}, os.str());
    return kOk;
}

int cmd_spin(const Options& o) {
    DGAFile f = resolve_dga(o, o.p);
    DGAMorphism phi = o.phi == "id" ? identity_morphism(f.dga) : morphism_from_json(f.dga, read_json_file(o.phi));
    std::optional<Rational> eps;
    if (!o.eps_len.empty())
        eps = parse_rational(o.eps_len);
    SpunDGA s = twist_spun_dga(f.dga, phi, o.lambda_twist, eps);
    bool inclusion = verify_inclusion(s);
    if (!inclusion)
        throw Error(ErrorCode::InternalConsistency, "spun DGA does not contain the source DGA");
    Json dj = dga_to_json(s.dga, spun_provenance(s));
    if (!o.out.empty())
        write_json_file(o.out, dj);
    std::ostringstream os;
    os << "twist spun of " << f.dga.name << " (lambda twist " << o.lambda_twist << ")\n"
       << list_terms(s.dga) << "inclusion of the source DGA verified\n";
    emit(o, Json{{"command", "spin"}, {"inclusion", inclusion}, {"dga", dj}}, os.str());
    return kOk;
}

int cmd_augment(const Options& o) {
    DGAFile f = resolve_dga(o, o.p);
    const PrimeField F(o.p);
    Fp mu0 = F.from_int(o.mu), lambda0 = F.from_int(o.lambda);
    auto augs = find_augmentations(f.dga, o.p, mu0, lambda0, o.graded, o.bound);
    Json arr = Json::array();
    std::ostringstream os;
    os << augs.size() << (o.graded ? " graded" : "") << " augmentation(s) of " << f.dga.name << " over F_" << o.p
       << " at mu = " << mu0 << ", lambda = " << lambda0 << '\n';
    for (const auto& e : augs) {
        arr.push_back(augmentation_to_json(f.dga, e));
        os << " ";
        for (GenId g = 0; g < f.dga.size(); ++g)
            os << ' ' << f.dga.gens[g].name << '=' << e.values[g];
        os << '\n';
    }
    emit(o,
         Json{{"command", "augment"},
              {"name", f.dga.name},
              {"p", o.p},
              {"mu", mu0},
              {"lambda", lambda0},
              {"graded", o.graded},
              {"count", augs.size()},
              {"augmentations", arr}},
         os.str());
    return kOk;
}

Augmentation load_or_pick(const Options& o, const DGA& a, const std::string& source) {
    if (source != "auto")
        return augmentation_from_json(a, read_json_file(source));
    const PrimeField F(a.p);
    auto augs = find_augmentations(a, a.p, F.from_int(o.mu), F.from_int(o.lambda), true, o.bound);
    if (augs.empty())
        throw Error(ErrorCode::AugmentationMismatch, "'" + a.name + "' has no graded augmentation at the given point");
    return augs.front();
}

int cmd_linhom(const Options& o) {
    DGAFile f = resolve_dga(o, o.p);
    Augmentation e1 = load_or_pick(o, f.dga, o.eps1);
    Augmentation e2 = o.eps2.empty() ? e1 : load_or_pick(o, f.dga, o.eps2);
    GradedComplex c = linearise(f.dga, e1, e2);
    BettiVector b = betti(c);
    std::ostringstream os;
    os << (o.eps2.empty() ? "linearised" : "bilinearised") << " homology of " << f.dga.name << ":";
    for (const auto& [k, v] : b)
        os << ' ' << k << ':' << v;
    os << '\n';
    emit(o, Json{{"command", "linhom"}, {"name", f.dga.name}, {"complex", complex_to_json(c)}, {"betti", betti_to_json(b)}},
         os.str());
    return kOk;
}

int cmd_cone_check(const Options& o) {
    DimWindow w = parse_window(o.dims);
    ConeFeasibility res = cone_feasible(w);
    std::ostringstream os;
    os << (res.feasible ? "feasible" : "infeasible") << '\n';
    for (const auto& s : res.steps)
        os << "  " << s << '\n';
    emit(o, Json{{"command", "cone-check"}, {"result", feasibility_to_json(res)}}, os.str());
    return res.feasible ? kOk : kObstructionFires;
}

int cmd_obstruct(const Options& o) {
    ProductInventory inv = family_product_inventory(o.r);
    ObstructionReport rep = not_twist_spun_report(inv, o.r);
    std::ostringstream os;
    os << "product of the unknot with the degree-" << 2 * o.r << " family member\n";
    os << "chords:";
    for (const auto& c : inv.chords)
        os << ' ' << c.chord.name << '(' << c.chord.degree << ", " << format_rational(c.chord.length) << ')';
    os << "\ngraded augmentation candidates over F_2: " << rep.graded_candidates << '\n';
    os << "window:";
    for (auto it = rep.window.rbegin(); it != rep.window.rend(); ++it)
        os << ' ' << it->first << ':' << it->second;
    os << "\nassumptions:\n";
    for (const auto& a : rep.assumptions)
        os << "  - " << a << '\n';
    os << "recurrence:\n";
    for (const auto& s : rep.feasibility.steps)
        os << "  " << s << '\n';
    os << "verdict: " << rep.verdict << '\n';
    emit(o, Json{{"command", "obstruct product"}, {"inventory", product_to_json(inv)}, {"report", obstruction_to_json(rep)}},
         os.str());
    return rep.not_twist_spun ? kObstructionFires : kOk;
}

int cmd_variety(const Options& o) {
    TorusPointSet pts;
    if (o.target.rfind("poly:", 0) == 0) {
        bool named = o.target == "poly:clifford" || o.target == "poly:chekanov";
        LocusPolynomial f = named ? catalog_polynomial(o.target) : LocusPolynomial::parse(o.target.substr(5));
        pts = polynomial_locus(f, o.q);
    } else {
        DGAFile f = resolve_dga(o, o.q);
        pts = augmentation_points(f.dga, o.q, true, o.bound);
    }
    std::ostringstream os;
    os << pts.points.size() << " point(s) over F_" << o.q << " for " << pts.provenance << ":";
    for (const auto& [m, l] : pts.points)
        os << " (" << m << ',' << l << ')';
    os << '\n';
    Json j{{"command", "variety"}, {"points", points_to_json(pts)}};
    int code = kOk;
    if (o.line_test) {
        ContainmentResult res = line_containment(pts);
        TorusPointSet on_line = intersect_line(pts);
        os << "line mu = -1: " << to_string(res.verdict);
        if (res.witness)
            os << ", witness (" << res.witness->first << ',' << res.witness->second << ')';
        os << "; " << on_line.points.size() << " point(s) on the line\n";
        Json lt{{"verdict", to_string(res.verdict)}, {"on_line", on_line.points.size()}};
        lt["witness"] = res.witness ? Json::array({res.witness->first, res.witness->second}) : Json(nullptr);
        if (res.verdict == Containment::NotContained) {
            os << "the necessary condition for twist spuns fails at q = " << o.q << '\n';
            code = kObstructionFires;
        }
        if (o.basis_scan >= 0) {
            BasisScan scan = scan_basis_changes(pts, o.basis_scan);
            lt["basis_scan"] = Json{{"bound", o.basis_scan}, {"matrices", scan.matrices_tried}};
            lt["basis_scan"]["containing"] = scan.containing ? Json(*scan.containing) : Json(nullptr);
            os << "basis changes with entries in [-" << o.basis_scan << ", " << o.basis_scan << "]: "
               << scan.matrices_tried << " tried, "
               << (scan.containing ? "one moves the set into the line" : "none moves the set into the line") << '\n';
            if (scan.containing)
                code = kOk;
        }
        j["line_test"] = lt;
    }
    emit(o, j, os.str());
    return code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Chekanov-Eliashberg DGAs, twist spuns and their obstructions"};
    app.require_subcommand(1);
    Options o;
    app.add_flag("--json", o.json, "Print JSON instead of text");

    auto* catalog = app.add_subcommand("catalog", "Shipped examples");
    catalog->require_subcommand(1);
    auto* catalog_list = catalog->add_subcommand("list", "List catalog entries");

    auto* dga = app.add_subcommand("dga", "DGA files");
    dga->require_subcommand(1);
    auto* dga_check = dga->add_subcommand("check", "Check d^2 = 0, the degree law and the action law");
    dga_check->add_option("dga", o.target, "DGA file or catalog name")->required();
    dga_check->add_option("--p", o.p, "Characteristic for catalog entries");
    auto* from_diagram = dga->add_subcommand("from-diagram", "Compute the DGA of a Lagrangian diagram");
    from_diagram->add_option("diagram", o.target, "Diagram file or catalog name")->required();
    from_diagram->add_option("--p", o.p, "Characteristic");
    from_diagram->add_option("--cap", o.cap, "Multiplicity cap for the polygon search");
    from_diagram->add_option("--out", o.out, "Write the DGA file here");

    auto* spin = app.add_subcommand("spin", "Twist spun DGA along a loop endomorphism");
    spin->add_option("dga", o.target, "DGA file or catalog name")->required();
    spin->add_option("--phi", o.phi, "Endomorphism table file, or 'id'")->required();
    spin->add_option("--lambda-twist", o.lambda_twist, "Power of lambda multiplying phi(x) - x");
    spin->add_option("--eps", o.eps_len, "Length offset of hatted generators");
    spin->add_option("--p", o.p, "Characteristic for catalog entries");
    spin->add_option("--out", o.out, "Write the spun DGA file here");
    spin->add_flag("--no-verify", o.no_verify, "Load the input without checking it");

    auto* augment = app.add_subcommand("augment", "Enumerate augmentations");
    augment->add_option("dga", o.target, "DGA file or catalog name")->required();
    augment->add_option("--p", o.p, "Prime field")->required();
    augment->add_option("--mu", o.mu, "Value of mu (default -1)");
    augment->add_option("--lambda", o.lambda, "Value of lambda (default 1)");
    augment->add_flag("--graded", o.graded, "Only graded augmentations");
    augment->add_option("--bound", o.bound, "Largest search space allowed");
    augment->add_flag("--no-verify", o.no_verify, "Load the input without checking it");

    auto* linhom = app.add_subcommand("linhom", "Linearised or bilinearised homology");
    linhom->add_option("dga", o.target, "DGA file or catalog name")->required();
    linhom->add_option("--eps", o.eps1, "Augmentation file, or 'auto'")->required();
    linhom->add_option("--eps2", o.eps2, "Second augmentation file, or 'auto'");
    linhom->add_option("--p", o.p, "Characteristic for catalog entries");
    linhom->add_option("--mu", o.mu, "mu for 'auto' (default -1)");
    linhom->add_option("--lambda", o.lambda, "lambda for 'auto' (default 1)");
    linhom->add_flag("--no-verify", o.no_verify, "Load the input without checking it");

    auto* cone = app.add_subcommand("cone-check", "Long exact sequence feasibility of a cone window");
    cone->add_option("--dims", o.dims, "Window such as '-2:0,-3:1,-4:0'")->required();

    auto* obstruct = app.add_subcommand("obstruct", "Obstructions to being a twist spun");
    obstruct->require_subcommand(1);
    auto* product = obstruct->add_subcommand("product", "Product of the unknot with the degree-2r family member");
    product->add_option("--r", o.r, "Family index r >= 1")->required();

    auto* variety = app.add_subcommand("variety", "Augmentation points over F_q");
    variety->add_option("target", o.target, "DGA file, catalog name, poly:clifford, poly:chekanov or poly:<text>")
        ->required();
    variety->add_option("--q", o.q, "Odd prime")->required();
    variety->add_flag("--line-test", o.line_test, "Test containment in mu = -1");
    variety->add_option("--basis-scan", o.basis_scan, "Also scan basis changes with entries up to this bound");
    variety->add_option("--bound", o.bound, "Largest augmentation search space allowed");
    variety->add_flag("--no-verify", o.no_verify, "Load the input without checking it");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (catalog_list->parsed())
            return cmd_catalog_list(o);
        if (dga_check->parsed())
            return cmd_dga_check(o);
        if (from_diagram->parsed())
            return cmd_dga_from_diagram(o);
        if (spin->parsed())
            return cmd_spin(o);
        if (augment->parsed())
            return cmd_augment(o);
        if (linhom->parsed())
            return cmd_linhom(o);
        if (cone->parsed())
            return cmd_cone_check(o);
        if (product->parsed())
            return cmd_obstruct(o);
        if (variety->parsed())
            return cmd_variety(o);
    } catch (const Error& e) {
        int code = exit_code(e.code());
        if (o.json)
            std::cout << Json{{"command", "error"}, {"error", to_string(e.code())}, {"message", e.what()}, {"exit", code}}.dump(2)
                      << '\n';
        std::cerr << "error (" << to_string(e.code()) << "): " << e.what() << '\n';
        return code;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kInternal;
    }
    return kUsage;
}
