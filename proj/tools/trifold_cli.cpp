// Command-line front end: branched-cover topology, lifted braid generator
// verification, and word/automorphism queries, with text or newline-delimited
// JSON output.
//
// Exit codes: 0 all checks passed, 1 a check failed, 2 usage or parse error.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "trifold/catalog.hpp"
#include "trifold/monodromy.hpp"
#include "trifold/pi1.hpp"
#include "trifold/relations.hpp"

using json = nlohmann::ordered_json;

namespace {

struct Options {
    int k = 0;
    int sheets = 3;
    std::string word;
    std::string monodromy;
    std::string format = "text";
};

bool json_mode(const Options& opt) { return opt.format == "json"; }

void emit(const json& record) { std::cout << record.dump() << "\n"; }

json invariants_record(int sheets, int k, const trifold::SurfaceInvariants& inv) {
    return json{{"sheets", sheets},
                {"k", k},
                {"euler_char", inv.euler_char},
                {"boundary", inv.boundary_components},
                {"genus", inv.genus},
                {"connected", inv.connected}};
}

void print_invariants(const Options& opt, int sheets, int k, const trifold::SurfaceInvariants& inv) {
    if (json_mode(opt)) {
        emit(invariants_record(sheets, k, inv));
    } else {
        std::cout << "sheets=" << sheets << " k=" << k << " chi=" << inv.euler_char
                  << " b=" << inv.boundary_components << " g=" << inv.genus
                  << " connected=" << (inv.connected ? "true" : "false") << "\n";
    }
}

int run_topology(const Options& opt) {
    if (!opt.monodromy.empty()) {
        std::vector<trifold::Permutation> perms;
        std::stringstream in(opt.monodromy);
        std::string part;
        while (std::getline(in, part, ','))
            perms.push_back(trifold::parse_cycles(part, opt.sheets));
        trifold::MonodromySpec spec(opt.sheets, std::move(perms));
        print_invariants(opt, spec.sheets, spec.branch_points(), trifold::surface_invariants(spec));
        return 0;
    }
    for (int k = 1; k <= opt.k; ++k) {
        trifold::SurfaceInvariants inv =
            trifold::surface_invariants(trifold::standard_cover(opt.sheets, k));
        print_invariants(opt, opt.sheets, k, inv);
    }
    return 0;
}

json relation_record(const trifold::RelationCheck& check) {
    json failing = json::array();
    for (const auto& f : check.failing)
        failing.push_back({{"arrow", f.arrow}, {"lhs_word", f.lhs}, {"rhs_word", f.rhs}});
    return json{{"relation", check.relation}, {"k", check.k},       {"i", check.i},
                {"j", check.j},               {"holds", check.holds()}, {"failing_arrows", failing}};
}

int run_verify_braid(const Options& opt) {
    auto cover = trifold::build_cover_groupoid(opt.k);
    auto checks = trifold::check_braid_relations(cover);
    bool all_ok = true;
    for (const auto& check : checks) {
        all_ok = all_ok && check.holds();
        if (json_mode(opt)) {
            emit(relation_record(check));
        } else {
            std::cout << check.relation << " k=" << check.k << " i=" << check.i << " j=" << check.j
                      << ": " << (check.holds() ? "holds" : "FAILS") << "\n";
            for (const auto& f : check.failing)
                std::cout << "  " << f.arrow << ": " << f.lhs << "  vs  " << f.rhs << "\n";
        }
    }
    if (!json_mode(opt))
        std::cout << (all_ok ? "all " : "FAILED: some of ") << checks.size()
                  << " lifted braid relations hold\n";
    return all_ok ? 0 : 1;
}

int run_verify_decomposition(const Options& opt) {
    auto cover = trifold::build_cover_groupoid(opt.k);
    auto checks = trifold::check_decomposition(cover);
    for (const auto& c : checks) {
        if (json_mode(opt)) {
            json mismatches = json::array();
            for (const auto& m : c.pi1_mismatches)
                mismatches.push_back({{"generator", m.arrow}, {"lhs_word", m.lhs}, {"rhs_word", m.rhs}});
            emit(json{{"k", c.k},
                      {"i", c.i},
                      {"order", c.order},
                      {"pi1_equal", c.pi1_equal},
                      {"routes_consistent", c.routes_consistent},
                      {"functor_equal", c.functor_equal},
                      {"object_map_equal", c.object_map_equal},
                      {"pi1_mismatches", mismatches}});
        } else {
            std::cout << "decomposition k=" << c.k << " i=" << c.i << " order=" << c.order << ": pi1 "
                      << (c.pi1_equal ? "equal" : "DIFFERS") << ", routes "
                      << (c.routes_consistent ? "consistent" : "INCONSISTENT") << ", raw functor "
                      << (c.functor_equal ? "equal" : "differs") << "\n";
        }
    }
    bool ok = trifold::decomposition_passes(checks);
    if (!json_mode(opt))
        std::cout << (ok ? "decomposition holds (order: apply D_y^-1 first, then D_z^-1)"
                         : "decomposition FAILED")
                  << "\n";
    return ok ? 0 : 1;
}

int run_verify_pi1_tables(const Options& opt) {
    auto cover = trifold::build_cover_groupoid(opt.k);
    auto lines = trifold::check_pi1_tables(cover);
    for (const auto& line : lines) {
        if (json_mode(opt)) {
            emit(json{{"generator", line.generator},
                      {"line", line.line},
                      {"status", line.status},
                      {"derived", line.derived},
                      {"paper", line.paper}});
        } else {
            std::cout << line.generator << "  [" << line.status << "]  " << line.line;
            if (line.status != "match") std::cout << "  derived: " << line.derived;
            std::cout << "\n";
        }
    }
    bool ok = trifold::pi1_tables_pass(lines);
    if (!json_mode(opt)) std::cout << (ok ? "pi1 tables conform" : "pi1 tables MISMATCH") << "\n";
    return ok ? 0 : 1;
}

int run_act(const Options& opt) {
    auto cover = trifold::build_cover_groupoid(opt.k);
    auto letters = trifold::parse_braid_word(opt.word);
    trifold::MappingClass action = trifold::compose_braid(cover, letters);
    trifold::SpanningTree tree(cover);
    trifold::Pi1Automorphism pi1 = trifold::induced_automorphism(action, tree);

    if (json_mode(opt)) {
        json objects = json::array();
        for (int o = 0; o < cover->object_count(); ++o) objects.push_back(cover->object_name(o));
        json arrows = json::array();
        for (int a = 0; a < cover->arrow_count(); ++a) {
            const trifold::Arrow& arrow = cover->arrow(a);
            arrows.push_back({{"name", arrow.name},
                              {"src", cover->object_name(arrow.src)},
                              {"dst", cover->object_name(arrow.dst)}});
        }
        emit(json{{"type", "presentation"}, {"objects", objects}, {"arrows", arrows}});
        for (int o = 0; o < cover->object_count(); ++o)
            emit(json{{"type", "object"},
                      {"name", cover->object_name(o)},
                      {"image", cover->object_name(action.map_object(o))}});
        for (int a = 0; a < cover->arrow_count(); ++a)
            emit(json{{"type", "arrow"},
                      {"name", cover->arrow(a).name},
                      {"image", trifold::to_string(action.image(a))}});
        for (int g = 0; g < pi1.rank(); ++g)
            emit(json{{"type", "pi1"},
                      {"generator", trifold::gen_name(g)},
                      {"image", trifold::to_string(pi1.image(g))}});
    } else {
        std::cout << "word: " << (opt.word.empty() ? "(identity)" : opt.word) << "  on k=" << opt.k
                  << "\n";
        for (int o = 0; o < cover->object_count(); ++o)
            if (action.map_object(o) != o)
                std::cout << cover->object_name(o) << " -> "
                          << cover->object_name(action.map_object(o)) << "\n";
        for (int a = 0; a < cover->arrow_count(); ++a)
            std::cout << cover->arrow(a).name << " -> " << trifold::to_string(action.image(a)) << "\n";
        for (int g = 0; g < pi1.rank(); ++g)
            std::cout << trifold::gen_name(g) << " -> " << trifold::to_string(pi1.image(g)) << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "trifold: symbolic 3-fold branched covers of the disk.\n"
        "Braid words look like \"s1 s2^-1 s1\" (S1 is shorthand for s1^-1) and act\n"
        "left to right; groupoid words look like \"c0 b1 a1^-1 c0^-1\".\n"};
    app.require_subcommand(1);
    Options opt;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", opt.format, "Output format")
            ->check(CLI::IsMember({"text", "json"}))
            ->capture_default_str();
    };

    CLI::App* topology = app.add_subcommand(
        "topology", "Euler characteristic, boundary count and genus of branched covers");
    topology->add_option("--k", opt.k, "Print rows for 1..k branch points (standard cycle monodromy)");
    topology->add_option("--sheets", opt.sheets, "Cover degree")->capture_default_str();
    topology
        ->add_option("--monodromy", opt.monodromy,
                     "Explicit branch permutations in cycle notation, comma separated, "
                     "e.g. \"(0 1 2),(0 2 1)\"")
        ->excludes(topology->get_option("--k"));
    add_format(topology);

    CLI::App* verify_braid =
        app.add_subcommand("verify-braid", "Check the braid relations of the lifted half twists");
    verify_braid->add_option("--k", opt.k, "Branch point count")->required();
    add_format(verify_braid);

    CLI::App* verify_decomposition = app.add_subcommand(
        "verify-decomposition",
        "Check that each lifted half twist is the product of two inverse Dehn twists");
    verify_decomposition->add_option("--k", opt.k, "Branch point count")->required();
    add_format(verify_decomposition);

    CLI::App* verify_pi1 = app.add_subcommand(
        "verify-pi1-tables", "Check the stated pi1 actions against the derived automorphisms");
    verify_pi1->add_option("--k", opt.k, "Branch point count")->required();
    add_format(verify_pi1);

    CLI::App* act =
        app.add_subcommand("act", "Apply a braid word to the cover groupoid and to pi1");
    act->add_option("--k", opt.k, "Branch point count")->required();
    act->add_option("--word", opt.word, "Braid word, e.g. \"s1 s2^-1\"")->required();
    add_format(act);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (topology->parsed()) {
            if (opt.monodromy.empty() && opt.k < 1)
                throw std::invalid_argument("topology needs --k >= 1 or --monodromy");
            if (opt.sheets < 1) throw std::invalid_argument("--sheets must be positive");
            return run_topology(opt);
        }
        if (verify_braid->parsed()) {
            if (opt.k < 2) throw std::invalid_argument("verify-braid needs --k >= 2");
            return run_verify_braid(opt);
        }
        if (verify_decomposition->parsed()) {
            if (opt.k < 2) throw std::invalid_argument("verify-decomposition needs --k >= 2");
            return run_verify_decomposition(opt);
        }
        if (verify_pi1->parsed()) {
            if (opt.k < 3) throw std::invalid_argument("verify-pi1-tables needs --k >= 3");
            return run_verify_pi1_tables(opt);
        }
        if (act->parsed()) {
            if (opt.k < 2) throw std::invalid_argument("act needs --k >= 2");
            return run_act(opt);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
