#include "arrcohom_cli/cli.hpp"

#include "arrcohom/complex_io.hpp"
#include "arrcohom/complex_ops.hpp"
#include "arrcohom/constructions.hpp"
#include "arrcohom/errors.hpp"
#include "arrcohom/gm_cohomology.hpp"
#include "arrcohom/lattice.hpp"
#include "arrcohom/ring_structure.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>

namespace arrcohom::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Settings {
    std::string complex_path;
    std::string space = "diagonal";
    std::string ambient = "complex";
    std::string format = "json";
    std::string generators = "missing-faces";
    std::optional<int> max_degree;
    bool oracle = false;
    unsigned jobs = 1;
    int m = 0;
    int k = 0;
};

struct Report {
    Json json;
    std::vector<std::string> text;
    bool mismatch = false;
    std::string mismatch_message;
};

Json integer_json(const Integer& x) { return x.fits_slong_p() ? Json(x.get_si()) : Json(x.get_str()); }

Json group_json(const AbelianGroup& g)
{
    Json t = Json::array();
    for (const auto& d : g.torsion) t.push_back(integer_json(d));
    return Json{{"rank", g.rank}, {"torsion", t}, {"group", g.to_string()}};
}

Json graded_json(const GradedAbelianGroup& H)
{
    Json out = Json::array();
    for (const auto& [q, g] : H.groups()) {
        Json row{{"degree", q}};
        const Json body = group_json(g);
        for (auto& [key, value] : body.items()) row[key] = value;
        out.push_back(std::move(row));
    }
    return out;
}

Json faces_json(const std::vector<FaceSet>& faces)
{
    Json out = Json::array();
    for (const auto& f : faces) out.push_back(f.vertices());
    return out;
}

std::string faces_text(const std::vector<FaceSet>& faces)
{
    std::string s = "{";
    for (std::size_t i = 0; i < faces.size(); ++i) s += (i ? "," : "") + faces[i].to_string();
    return s + "}";
}

GmOptions gm_options(const Settings& s)
{
    GmOptions o;
    o.max_q = s.max_degree;
    o.jobs = s.jobs;
    o.pair_oracle = s.oracle;
    return o;
}

std::string space_symbol(ArrangementKind kind, Ambient ambient)
{
    const bool real = ambient == Ambient::Real;
    if (kind == ArrangementKind::Diagonal) return real ? "D_R(K)" : "D(K)";
    return real ? "U_R(K)" : "U(K)";
}

Report cmd_cohomology(const SimplicialComplex& K, const Settings& s)
{
    const auto kind = parse_arrangement(s.space);
    const auto ambient = parse_ambient(s.ambient);
    const auto options = gm_options(s);
    const auto L = arrangement_lattice(K, kind, ambient);
    const auto result = gm_terms(L, options);

    Report r;
    r.json["space"] = s.space;
    r.json["ambient"] = s.ambient;
    r.json["N"] = L.ambient_dimension();
    r.json["strata"] = L.size();
    r.json["cohomology"] = graded_json(result.cohomology);
    r.json["rendered"] = result.cohomology.render("H^");
    Json terms = Json::array();
    for (const auto& t : result.terms)
        terms.push_back({{"stratum", L[t.stratum].to_string(kind)},
                         {"d", L.d(t.stratum)},
                         {"contribution", graded_json(t.cohomology)}});
    r.json["terms"] = std::move(terms);
    r.text.push_back(space_symbol(kind, ambient) + ", N = " + std::to_string(L.ambient_dimension()) + ", " +
                     std::to_string(L.size()) + " strata");
    for (const auto& [q, g] : result.cohomology.groups()) r.text.push_back("H^" + std::to_string(q) + " = " + g.to_string());

    if (s.oracle) {
        Json paths = Json::array();
        paths.push_back("lattice sum");
        paths.push_back("pair homology of every stratum");
        auto check = [&](const char* name, const GradedAbelianGroup& other) {
            paths.push_back(name);
            if (!(other == result.cohomology)) {
                r.mismatch = true;
                r.mismatch_message += std::string(name) + " gives " + other.render("H^") + "; ";
            }
        };
        if (kind == ArrangementKind::Diagonal && common_vertex_predicate(K)) {
            check("links in the Alexander dual", diagonal_cohomology_via_links(K, ambient, options));
            check("full subcomplexes", diagonal_cohomology_via_subcomplexes(K, ambient, options));
        } else if (kind == ArrangementKind::Coordinate) {
            check("full subcomplexes (coordinate)", coordinate_cohomology_hochster(K, ambient, options));
        }
        r.json["oracle"] = {{"paths", paths}, {"agree", !r.mismatch}};
        r.text.push_back(std::string("oracle: ") + (r.mismatch ? "MISMATCH" : "all paths agree") + " (" +
                         std::to_string(paths.size()) + " paths)");
    }
    return r;
}

Report cmd_lattice(const SimplicialComplex& K, const Settings& s)
{
    const auto kind = parse_arrangement(s.space);
    const auto ambient = parse_ambient(s.ambient);
    LatticeGenerators gens;
    if (s.generators == "missing-faces") gens = LatticeGenerators::MissingFaces;
    else if (s.generators == "all-non-faces") gens = LatticeGenerators::AllNonFaces;
    else throw MalformedInput("--generators must be 'missing-faces' or 'all-non-faces'");
    const auto L = arrangement_lattice(K, kind, ambient, gens);
    Report r;
    r.json["lattice"] = Json::parse(L.to_json());
    r.text.push_back(std::to_string(L.size()) + " strata, N = " + std::to_string(L.ambient_dimension()));
    for (std::size_t i = 0; i < L.size(); ++i)
        r.text.push_back("  " + std::to_string(i) + "  " + L[i].to_string(kind) + "  d = " + std::to_string(L.d(i)));
    const auto edges = L.hasse_edges();
    r.text.push_back(std::to_string(edges.size()) + " Hasse edges");
    return r;
}

Json table_json(const ProductTable& t)
{
    const auto& L = t.lattice;
    Json entries = Json::array();
    for (const auto& e : t.entries) {
        Json coords = Json::array();
        for (const auto& c : e.coordinates) coords.push_back(integer_json(c));
        entries.push_back({{"u", L[e.u].to_string(L.kind())},
                           {"v", L[e.v].to_string(L.kind())},
                           {"p", e.p},
                           {"q", e.q},
                           {"i", e.i},
                           {"j", e.j},
                           {"target", L[e.target].to_string(L.kind())},
                           {"target_group", e.target_group.to_string()},
                           {"coordinates", coords},
                           {"nonzero", e.nonzero}});
    }
    Json blocks = Json::array();
    for (auto [p, q] : t.nonzero_blocks) blocks.push_back({p, q});
    return Json{{"classes", t.classes.size()},
                {"stratum_pairs", t.stratum_pairs},
                {"codimension_pairs", t.codimension_pairs},
                {"all_zero", t.all_zero},
                {"nonzero_blocks", blocks},
                {"degenerate_dropped", t.degenerate_dropped},
                {"entries", entries}};
}

std::vector<std::string> table_text(const ProductTable& t)
{
    std::vector<std::string> out;
    std::size_t nonzero = 0;
    for (const auto& e : t.entries) nonzero += e.nonzero ? 1 : 0;
    out.push_back(std::to_string(t.classes.size()) + " class groups, " + std::to_string(t.codimension_pairs) + " of " +
                  std::to_string(t.stratum_pairs) + " stratum pairs meet the codimension condition");
    out.push_back(std::to_string(t.entries.size()) + " generator products, " + std::to_string(nonzero) + " nonzero");
    for (auto [p, q] : t.nonzero_blocks)
        out.push_back("nonzero block H^" + std::to_string(p) + " x H^" + std::to_string(q) + " -> H^" +
                      std::to_string(p + q));
    if (t.degenerate_dropped) out.push_back("degenerate simplices dropped: " + std::to_string(t.degenerate_dropped));
    return out;
}

Report cmd_product(const SimplicialComplex& K, const Settings& s)
{
    const auto table = product_table(K, parse_arrangement(s.space), parse_ambient(s.ambient), s.jobs);
    Report r;
    r.json["space"] = s.space;
    r.json["ambient"] = s.ambient;
    r.json["table"] = table_json(table);
    r.text = table_text(table);
    return r;
}

Report cmd_bbcg(const SimplicialComplex& K, const Settings& s)
{
    const auto summands = bbcg_summands(K, s.jobs);
    const auto wedge = wedge_summary(summands);
    const auto aggregate = bbcg_cohomology(summands);
    GmOptions o = gm_options(s);
    o.max_q.reset();
    const auto direct = coordinate_cohomology(K, Ambient::Complex, o);
    Report r;
    Json list = Json::array();
    for (const auto& x : summands)
        list.push_back({{"subset", x.subset.vertices()}, {"reduced_homology", graded_json(x.reduced_homology)}});
    Json terms = Json::array();
    for (const auto& t : wedge)
        terms.push_back({{"label", t.label},
                         {"multiplicity", t.multiplicity},
                         {"reduced_homology", graded_json(t.reduced_homology)}});
    r.json["summands"] = std::move(list);
    r.json["wedge"] = std::move(terms);
    r.json["rendered"] = render_wedge(wedge);
    r.json["aggregate_cohomology"] = graded_json(aggregate);
    r.json["matches_coordinate_cohomology"] = aggregate == direct;
    r.text.push_back("U(K) ~ " + render_wedge(wedge));
    for (const auto& t : wedge)
        if (!t.sphere) r.text.push_back("  " + t.label + ": " + t.reduced_homology.render("H~_"));
    r.text.push_back("aggregate " + aggregate.render("H^"));
    r.text.push_back(std::string("matches the lattice sum for U(K): ") + (aggregate == direct ? "yes" : "NO"));
    if (!(aggregate == direct)) {
        r.mismatch = true;
        r.mismatch_message = "wedge aggregate " + aggregate.render("H^") + " vs " + direct.render("H^");
    }
    return r;
}

Report cmd_golod(const SimplicialComplex& K, const Settings& s)
{
    const auto g = golod_product_check(K, s.jobs);
    const auto n = neighbourliness(K);
    Report r;
    r.json["common_vertex"] = g.common_vertex;
    r.json["coordinate_products_all_zero"] = g.coordinate_products_all_zero;
    r.json["golod_certified"] = g.golod_certified;
    r.json["massey_products_checked"] = false;
    r.json["dimension"] = n.dimension;
    r.json["neighbourly"] = n.neighbourly;
    r.json["half_dimension_neighbourly"] = n.half_neighbourly;
    r.json["table"] = table_json(g.table);
    r.text.push_back(std::string("common vertex: ") + (g.common_vertex ? "yes" : "no"));
    r.text.push_back(std::string("positive-degree products in H*(U(K)) all zero: ") +
                     (g.coordinate_products_all_zero ? "yes" : "no"));
    r.text.push_back(std::string("Golod by the common-vertex criterion: ") + (g.golod_certified ? "yes" : "no") +
                     " (higher Massey products not computed)");
    r.text.push_back("dim K = " + std::to_string(n.dimension) + ", " + std::to_string(n.neighbourly) +
                     "-neighbourly, ceil(dim/2)-neighbourly: " + (n.half_neighbourly ? "yes" : "no"));
    for (auto& line : table_text(g.table)) r.text.push_back(line);
    return r;
}

Report cmd_kequal(const Settings& s)
{
    const auto rep = kequal_closed_form(s.m, s.k, parse_ambient(s.ambient), gm_options(s));
    Report r;
    r.json["m"] = rep.m;
    r.json["k"] = rep.k;
    r.json["ambient"] = s.ambient;
    r.json["in_range"] = rep.in_range;
    r.json["closed_form"] = rep.closed_form ? graded_json(*rep.closed_form) : Json(nullptr);
    r.json["wedge"] = graded_json(rep.wedge);
    r.json["gm"] = graded_json(rep.gm);
    r.json["wedge_matches_gm"] = rep.wedge_matches_gm;
    r.json["closed_form_matches_gm"] = rep.closed_form_matches_gm ? Json(*rep.closed_form_matches_gm) : Json(nullptr);
    r.json["closed_form_discrepancy"] = rep.closed_form_discrepancy;
    r.json["notes"] = rep.notes;
    r.text.push_back("k-equal, m = " + std::to_string(rep.m) + ", k = " + std::to_string(rep.k) + ", " + s.ambient);
    r.text.push_back("closed form:    " + (rep.closed_form ? rep.closed_form->render("H^") : std::string("(suppressed)")));
    r.text.push_back("wedge of spheres: " + rep.wedge.render("H^"));
    r.text.push_back("lattice sum:    " + rep.gm.render("H^"));
    r.text.push_back(std::string("wedge = lattice sum: ") + (rep.wedge_matches_gm ? "yes" : "NO"));
    if (rep.closed_form_matches_gm)
        r.text.push_back(std::string("closed form = lattice sum: ") + (*rep.closed_form_matches_gm ? "yes" : "no"));
    if (rep.closed_form_discrepancy) r.text.push_back("FLAG: closed form disagrees with the wedge ranks");
    for (const auto& n : rep.notes) r.text.push_back("note: " + n);
    if (!rep.wedge_matches_gm) {
        r.mismatch = true;
        r.mismatch_message = "wedge ranks disagree with the lattice sum";
    }
    return r;
}

Report relation_report(const std::vector<RelationCheck>& checks)
{
    Report r;
    Json list = Json::array();
    bool all = true;
    for (const auto& c : checks) {
        Json rows = Json::array();
        for (const auto& row : c.rows)
            rows.push_back({{"degree", row.degree},
                            {"lhs", row.lhs.to_string()},
                            {"rhs", row.rhs.to_string()},
                            {"match", row.match}});
        list.push_back({{"relation", c.relation}, {"match", c.match}, {"rows", rows}});
        r.text.push_back(c.relation + ": " + (c.match ? "consistent" : "INCONSISTENT"));
        for (const auto& row : c.rows)
            r.text.push_back("  q = " + std::to_string(row.degree) + ": " + row.lhs.to_string() + " | " +
                             row.rhs.to_string() + (row.match ? "" : "  <-- differs"));
        all = all && c.match;
    }
    r.json["checks"] = std::move(list);
    r.json["cohomology_consistent"] = all;
    r.text.push_back(all ? "cohomology-consistent (integral cohomology only; no homotopy equivalence is verified)"
                         : "cohomology mismatch");
    if (!all) {
        r.mismatch = true;
        r.mismatch_message = "cohomology comparison failed";
    }
    return r;
}

Report cmd_mf(const SimplicialComplex& K)
{
    const auto mf = missing_faces(K);
    const auto n = neighbourliness(K);
    Report r;
    r.json["missing_faces"] = faces_json(mf);
    r.json["common_vertex"] = common_vertex_predicate(K);
    r.json["ghost_vertices"] = K.ghost_vertices().vertices();
    r.json["dimension"] = K.dimension();
    r.json["neighbourly"] = n.neighbourly;
    r.text.push_back("missing faces: " + faces_text(mf));
    r.text.push_back(std::string("common vertex: ") + (common_vertex_predicate(K) ? "true" : "false"));
    if (K.has_ghost_vertices()) r.text.push_back("ghost vertices: " + K.ghost_vertices().to_string());
    return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Integral cohomology of diagonal and coordinate arrangement complements", "arrcohom"};
    app.require_subcommand(1);
    Settings s;

    auto add_complex = [&](CLI::App* sub) {
        sub->add_option("--complex", s.complex_path, "complex JSON file")->required();
    };
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", s.format, "json or text")->check(CLI::IsMember({"json", "text"}));
        sub->add_option("--jobs", s.jobs, "worker threads")->check(CLI::PositiveNumber);
    };
    auto add_space = [&](CLI::App* sub) {
        sub->add_option("--space", s.space, "diagonal or coordinate")->check(CLI::IsMember({"diagonal", "coordinate"}));
        sub->add_option("--ambient", s.ambient, "complex or real")->check(CLI::IsMember({"complex", "real"}));
    };

    auto* cohomology = app.add_subcommand("cohomology", "cohomology of the complement");
    add_complex(cohomology);
    add_space(cohomology);
    add_common(cohomology);
    cohomology->add_option("--max-degree", s.max_degree, "highest degree reported (default N)");
    cohomology->add_flag("--oracle", s.oracle, "recompute through the independent paths and fail on mismatch");

    auto* lattice = app.add_subcommand("lattice", "intersection lattice dump");
    add_complex(lattice);
    add_space(lattice);
    add_common(lattice);
    lattice->add_option("--generators", s.generators, "missing-faces or all-non-faces");

    auto* product = app.add_subcommand("product", "multiplication table of positive-degree classes");
    add_complex(product);
    add_space(product);
    add_common(product);

    auto* bbcg = app.add_subcommand("bbcg", "wedge decomposition of U(K) by full subcomplexes");
    add_complex(bbcg);
    add_common(bbcg);

    auto* golod = app.add_subcommand("golod-check", "common-vertex criterion and product vanishing");
    add_complex(golod);
    add_common(golod);

    auto* kequal = app.add_subcommand("kequal", "k-equal arrangement: closed form, wedge and lattice sum");
    kequal->add_option("--m", s.m, "number of coordinates")->required();
    kequal->add_option("--k", s.k, "k")->required();
    kequal->add_option("--ambient", s.ambient, "complex or real")->check(CLI::IsMember({"complex", "real"}));
    add_common(kequal);

    auto* suspension = app.add_subcommand("check-suspension", "compare U(K) with the double suspension of D(K)");
    add_complex(suspension);
    add_common(suspension);

    auto* cone = app.add_subcommand("check-cone", "compare U(K) with D of the cone extension");
    add_complex(cone);
    add_common(cone);

    auto* mf = app.add_subcommand("mf", "missing faces and the common-vertex predicate");
    add_complex(mf);
    add_common(mf);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return ok;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return ok;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return malformed_input;
    }

    CLI::App* chosen = app.get_subcommands().front();
    const std::string command = chosen->get_name();
    try {
        Report r;
        std::string hash;
        if (command == "kequal") {
            if (s.k < 2 || s.k > s.m) throw DomainError("k-equal arrangements need 2 <= k <= m");
            hash = canonical_hash(skeleton(SimplicialComplex::full_simplex(s.m), s.k - 2));
            r = cmd_kequal(s);
        } else {
            const auto K = read_complex_file(s.complex_path);
            hash = canonical_hash(K);
            if (command == "cohomology") r = cmd_cohomology(K, s);
            else if (command == "lattice") r = cmd_lattice(K, s);
            else if (command == "product") r = cmd_product(K, s);
            else if (command == "bbcg") r = cmd_bbcg(K, s);
            else if (command == "golod-check") r = cmd_golod(K, s);
            else if (command == "check-suspension") r = relation_report(suspension_relation_check(K, gm_options(s)));
            else if (command == "check-cone") r = relation_report(cone_equivalence_check(K, gm_options(s)));
            else r = cmd_mf(K);
        }
        Json report{{"command", command}, {"input_hash", hash}};
        for (auto& [key, value] : r.json.items()) report[key] = value;
        if (s.format == "json") {
            out << report.dump(2) << "\n";
        } else {
            out << "input " << hash << "\n";
            for (const auto& line : r.text) out << line << "\n";
        }
        if (r.mismatch) {
            err << "error: independent computations disagree: " << r.mismatch_message << "\n";
            return mismatch;
        }
        return ok;
    } catch (const OracleMismatch& e) {
        err << "error: independent computations disagree: " << e.what() << "\n";
        return mismatch;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return domain_error;
    } catch (const MalformedInput& e) {
        err << "error: malformed input: " << e.what() << "\n";
        return malformed_input;
    } catch (const IntegrityError& e) {
        err << "internal error: " << e.what() << "\n";
        return internal_error;
    }
}

}  // namespace arrcohom::cli
