// Command-line front end: build spaces, check axioms, run named
// reproductions, test point maps, export graphs and distance reports.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "matgeo/axioms.hpp"
#include "matgeo/maps.hpp"
#include "matgeo/scenario.hpp"

using json = nlohmann::ordered_json;
using namespace matgeo;

namespace {

constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct CommonOpts {
    std::string space;
    long long cap = 100000;
    int jobs = 1;
    std::string format = "json";
    std::string out;
};

struct Built {
    PointSet space;
    AdjacencyList adj;
    DistanceIndex index;
};

Built build(const std::string& descriptor, long long cap, int jobs) {
    PointSet space = PointSet::enumerate(SpaceDescriptor::parse(descriptor), cap);
    AdjacencyList adj = build_adjacency(space, jobs);
    DistanceIndex index = build_index(adj, cap, jobs);
    return Built{std::move(space), std::move(adj), std::move(index)};
}

void emit(const CommonOpts& opts, const std::string& text) {
    if (opts.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(opts.out);
    if (!f) throw Error("cannot write output file '" + opts.out + "'");
    f << text;
    if (!f) throw Error("write to output file '" + opts.out + "' failed");
}

json histogram_json(const std::map<int, long long>& h) {
    json out = json::object();
    for (const auto& [d, count] : h) out[std::to_string(d)] = count;
    return out;
}

json witness_json(const AxiomResult& r, const PointSet* space) {
    json parts = json::array();
    for (const auto& part : r.witness) {
        json p;
        p["role"] = part.role;
        p["vertex"] = part.vertex;
        if (space) p["matrix"] = space->point(part.vertex).to_text();
        parts.push_back(p);
    }
    return parts;
}

int cmd_space(const CommonOpts& opts) {
    Built b = build(opts.space, opts.cap, opts.jobs);
    std::size_t min_deg = b.adj.nbrs.empty() ? 0 : b.adj.nbrs.front().size();
    std::size_t max_deg = min_deg;
    for (const auto& row : b.adj.nbrs) {
        min_deg = std::min(min_deg, row.size());
        max_deg = std::max(max_deg, row.size());
    }
    auto formula = verify_distance_formula(b.space, b.index);
    auto histogram = distance_histogram(b.index);

    if (opts.format == "table") {
        std::ostringstream t;
        t << "space        " << b.space.descriptor().to_string() << "\n"
          << "points       " << b.space.size() << "\n"
          << "edges        " << b.adj.edge_count << "\n"
          << "degree       " << min_deg << ".." << max_deg << "\n"
          << "connected    " << (b.index.connected() ? "yes" : "no") << "\n"
          << "diameter     " << b.index.diameter() << "\n";
        t << "distances    ";
        bool first = true;
        for (const auto& [d, count] : histogram) {
            t << (first ? "" : ", ") << d << ":" << count;
            first = false;
        }
        t << "\n"
          << "formula      " << formula_mode_name(formula.mode) << " "
          << (formula.pass ? "pass" : "FAIL") << " (" << formula.note << ")\n";
        emit(opts, t.str());
    } else {
        json out;
        out["space"] = b.space.descriptor().to_string();
        out["points"] = b.space.size();
        out["edges"] = b.adj.edge_count;
        out["degree"] = {{"min", min_deg}, {"max", max_deg}};
        out["connected"] = b.index.connected();
        out["diameter"] = b.index.diameter();
        out["distance_histogram"] = histogram_json(histogram);
        json fj;
        fj["mode"] = formula_mode_name(formula.mode);
        fj["pass"] = formula.pass;
        fj["pairs_checked"] = formula.pairs_checked;
        if (formula.expected_diameter >= 0) fj["expected_diameter"] = formula.expected_diameter;
        fj["note"] = formula.note;
        if (formula.violation) {
            fj["violation"] = {{"a", formula.violation->a},
                               {"b", formula.violation->b},
                               {"expected", formula.violation->expected},
                               {"actual", formula.violation->actual}};
        }
        out["distance_formula"] = fj;
        emit(opts, out.dump(2) + "\n");
    }
    return formula.pass ? 0 : kExitCheckFailed;
}

std::vector<Axiom> parse_axiom_subset(const std::vector<std::string>& tokens) {
    if (tokens.empty())
        return {Axiom::A1, Axiom::A2, Axiom::A3, Axiom::A4, Axiom::A5};
    std::vector<Axiom> out;
    for (const auto& t : tokens) {
        if (t == "A1" || t == "a1") out.push_back(Axiom::A1);
        else if (t == "A2" || t == "a2") out.push_back(Axiom::A2);
        else if (t == "A3" || t == "a3") out.push_back(Axiom::A3);
        else if (t == "A4" || t == "a4") out.push_back(Axiom::A4);
        else if (t == "A5" || t == "a5") out.push_back(Axiom::A5);
        else throw Error("unknown axiom '" + t + "' (expected A1..A5)");
    }
    return out;
}

int cmd_axioms(const CommonOpts& opts, const std::vector<std::string>& subset_tokens) {
    Built b = build(opts.space, opts.cap, opts.jobs);
    std::vector<Axiom> subset = parse_axiom_subset(subset_tokens);

    std::vector<AxiomResult> results;
    std::string note;
    if (!b.index.connected()) {
        // Only A1 is decidable; the rest quantify over distances that do not
        // exist here.
        results.push_back(check_a1(b.index));
        note = "graph is disconnected; only A1 was evaluated";
    } else {
        results = check_axioms(b.index, subset);
    }
    bool all_hold = true;
    for (const auto& r : results) all_hold = all_hold && r.holds;

    if (opts.format == "table") {
        std::ostringstream t;
        t << "space        " << b.space.descriptor().to_string() << "\n"
          << "diameter     " << b.index.diameter() << "\n";
        for (const auto& r : results) {
            t << axiom_name(r.axiom) << "           " << (r.holds ? "holds" : "FAILS");
            if (!r.holds) {
                t << " at";
                for (const auto& part : r.witness)
                    t << " " << part.role << "=" << b.space.point(part.vertex).to_text();
            }
            t << "\n";
        }
        if (!note.empty()) t << "note         " << note << "\n";
        emit(opts, t.str());
    } else {
        json out;
        out["space"] = b.space.descriptor().to_string();
        out["diameter"] = b.index.diameter();
        out["connected"] = b.index.connected();
        json arr = json::array();
        for (const auto& r : results) {
            json a;
            a["axiom"] = axiom_name(r.axiom);
            a["holds"] = r.holds;
            a["witness"] = witness_json(r, &b.space);
            a["elapsed_ms"] = r.elapsed_ms;
            arr.push_back(a);
        }
        out["axioms"] = arr;
        out["all_hold"] = all_hold;
        if (!note.empty()) out["note"] = note;
        emit(opts, out.dump(2) + "\n");
    }
    return all_hold ? 0 : kExitCheckFailed;
}

int cmd_scenario(const CommonOpts& opts, const std::string& name, std::uint64_t seed) {
    ScenarioReport rep = run_scenario(name, seed);
    if (opts.format == "table") {
        std::ostringstream t;
        t << "scenario     " << rep.name << "\n"
          << "verdict      " << (rep.pass ? "PASS" : "FAIL") << "\n";
        for (const auto& s : rep.steps)
            t << "  [" << (s.pass ? "ok" : "NO") << "] " << s.name << ": expected " << s.expected
              << ", got " << s.actual << "\n";
        emit(opts, t.str());
    } else {
        json out;
        out["scenario"] = rep.name;
        out["pass"] = rep.pass;
        json steps = json::array();
        for (const auto& s : rep.steps)
            steps.push_back(
                {{"name", s.name}, {"pass", s.pass}, {"expected", s.expected}, {"actual", s.actual}});
        out["steps"] = steps;
        emit(opts, out.dump(2) + "\n");
    }
    return rep.pass ? 0 : kExitCheckFailed;
}

int cmd_map_test(const CommonOpts& opts, const std::string& map_path,
                 const std::string& target_desc) {
    Built src = build(opts.space, opts.cap, opts.jobs);
    std::optional<Built> tgt_built;
    if (!target_desc.empty() && target_desc != opts.space)
        tgt_built = build(target_desc, opts.cap, opts.jobs);
    const Built& tgt = tgt_built ? *tgt_built : src;

    PointMap map = load_map(map_path, src.space, tgt.space);
    auto dm = check_diameter_pairs(map, src.index, tgt.index);
    auto iso = check_isomorphism(map, src.index, tgt.index);
    const std::optional<MapViolation>& violation = dm.violation ? dm.violation : iso.violation;

    if (opts.format == "table") {
        std::ostringstream t;
        t << "map          " << map_path << "\n"
          << "source       " << src.space.descriptor().to_string() << "\n"
          << "target       " << tgt.space.descriptor().to_string() << "\n"
          << "injective    " << (map.injective() ? "yes" : "no") << "\n"
          << "surjective   " << (dm.surjective ? "yes" : "no") << "\n"
          << "dm_treu      " << (dm.dm_treu ? "yes" : "no") << "\n"
          << "isomorphism  " << (iso.isomorphism ? "yes" : "no") << "\n";
        if (violation)
            t << "violation    x=" << violation->x << " y=" << violation->y
              << " d_src=" << violation->d_src << " d_tgt=" << violation->d_tgt << "\n";
        emit(opts, t.str());
    } else {
        json out;
        out["map_source"] = map_path;
        out["source"] = src.space.descriptor().to_string();
        out["target"] = tgt.space.descriptor().to_string();
        out["injective"] = map.injective();
        out["surjective"] = dm.surjective;
        out["bijective"] = map.injective() && dm.surjective;
        out["dm_treu"] = dm.dm_treu;
        out["adjacency_preserved"] = iso.adjacency_preserved;
        out["isomorphism"] = iso.isomorphism;
        if (violation) {
            out["first_violation"] = {{"x", violation->x},
                                      {"y", violation->y},
                                      {"d_src", violation->d_src},
                                      {"d_tgt", violation->d_tgt}};
        } else {
            out["first_violation"] = nullptr;
        }
        emit(opts, out.dump(2) + "\n");
    }
    // The measurement itself succeeded; verdicts are data, not failures.
    return 0;
}

int cmd_export(const CommonOpts& opts, const std::string& format) {
    Built b = build(opts.space, opts.cap, opts.jobs);
    if (format == "dot") {
        emit(opts, to_dot(b.space, b.adj));
    } else if (format == "json") {
        json out;
        out["space"] = b.space.descriptor().to_string();
        out["points"] = b.space.size();
        out["distance_histogram"] = histogram_json(distance_histogram(b.index));
        emit(opts, out.dump(2) + "\n");
    } else {
        throw Error("unknown export format '" + format + "' (expected dot or json)");
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification laboratory for adjacency graphs of matrix geometries"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::vector<std::string> axiom_subset;
    std::string scenario_name;
    std::uint64_t seed = 42;
    std::string map_path;
    std::string target_desc;
    std::string export_format = "dot";

    auto add_common = [&](CLI::App* sub, bool needs_space, bool report_format) {
        if (needs_space)
            sub->add_option("--space", opts.space, "space descriptor, e.g. sym:2:GF(3)")
                ->required();
        sub->add_option("--cap", opts.cap, "largest point count to build");
        sub->add_option("--jobs", opts.jobs, "worker threads for graph construction");
        if (report_format)
            sub->add_option("--format", opts.format, "output format")
                ->check(CLI::IsMember({"json", "table"}));
        sub->add_option("--out", opts.out, "write the report here instead of stdout");
    };

    CLI::App* sp_space = app.add_subcommand("space", "build a space and report its graph");
    add_common(sp_space, true, true);

    CLI::App* sp_axioms = app.add_subcommand("axioms", "run the axiom suite on a space");
    add_common(sp_axioms, true, true);
    sp_axioms->add_option("--axioms", axiom_subset, "subset to check, e.g. A1,A4")
        ->delimiter(',');

    CLI::App* sp_scenario = app.add_subcommand("scenario", "run a named reproduction");
    sp_scenario->add_option("name", scenario_name, "scenario name")->required();
    sp_scenario->add_option("--seed", seed, "seed for sampled steps");
    add_common(sp_scenario, false, true);

    CLI::App* sp_map = app.add_subcommand("map-test", "measure a point map from a file");
    add_common(sp_map, true, true);
    sp_map->add_option("--map", map_path, "map file")->required();
    sp_map->add_option("--target", target_desc, "target space descriptor (defaults to --space)");

    CLI::App* sp_export = app.add_subcommand("export", "write the graph or distance census");
    add_common(sp_export, true, false);
    sp_export->add_option("--format", export_format, "dot or json")
        ->check(CLI::IsMember({"dot", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (sp_space->parsed()) return cmd_space(opts);
        if (sp_axioms->parsed()) return cmd_axioms(opts, axiom_subset);
        if (sp_scenario->parsed()) return cmd_scenario(opts, scenario_name, seed);
        if (sp_map->parsed()) return cmd_map_test(opts, map_path, target_desc);
        if (sp_export->parsed()) return cmd_export(opts, export_format);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
