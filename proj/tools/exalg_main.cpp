// exalg: exact-arithmetic toolkit for three-qubit entanglement measures,
// finite matrix groups and Lie-algebra analysis.

#include <CLI11.hpp>

#include <iostream>

#include "exalg/gates.hpp"
#include "exalg/liealg.hpp"
#include "exalg/matgroup.hpp"
#include "exalg/reproduce.hpp"

using namespace exalg;
using io::json;

namespace {

unsigned long long env_seed() {
    const char* s = std::getenv("EXALG_SEED");
    if (!s) return 1;
    try {
        return std::stoull(s);
    } catch (...) {
        return 1;
    }
}

void emit(const json& j, bool as_json, const std::string& text) {
    if (as_json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

json mvalue_json(const MValue& v) {
    json j;
    j["value"] = v.value;
    if (v.exact) j["exact"] = v.exact->str();
    return j;
}

json profile_json(const EntanglementProfile& p) {
    json j;
    j["three_tangle"] = mvalue_json(p.tau3);
    j["two_tangles"] = json{{"ab", mvalue_json(p.tau_ab)},
                            {"ac", mvalue_json(p.tau_ac)},
                            {"bc", mvalue_json(p.tau_bc)}};
    j["one_tangles"] = json{{"a", mvalue_json(p.tau_a)},
                            {"b", mvalue_json(p.tau_b)},
                            {"c", mvalue_json(p.tau_c)}};
    j["monogamy_residuals"] = json::array(
        {mvalue_json(p.residuals[0]), mvalue_json(p.residuals[1]), mvalue_json(p.residuals[2])});
    j["b_type"] = is_b_type(p);
    return j;
}

grp::ProgressFn progress_fn(bool enabled) {
    if (!enabled) return {};
    return [](const grp::Progress& p) {
        json j{{"phase", p.phase}, {"count", p.count}, {"level", p.level}};
        std::cerr << j.dump() << "\n";
        return true;
    };
}

lie::LieAlgebraBasis basis_from_file(const io::NamedBasis& nb) {
    return lie::LieAlgebraBasis::from(nb.matrices);
}

std::vector<Matrix> cartan_from_names(const io::NamedBasis& nb, const std::string& list) {
    std::vector<Matrix> cartan;
    std::stringstream ss(list);
    std::string name;
    while (std::getline(ss, name, ',')) {
        bool found = false;
        for (size_t i = 0; i < nb.names.size(); i++)
            if (nb.names[i] == name) {
                cartan.push_back(nb.matrices[i]);
                found = true;
                break;
            }
        if (!found) {
            // fall back to the constant registry
            cartan.push_back(gates::constant(name));
            found = true;
        }
    }
    if (cartan.empty()) fail(Err::ParseError, "no Cartan elements named");
    return cartan;
}

int run_cli(int argc, char** argv) {
    CLI::App app{"exact-arithmetic toolkit: entanglement measures, finite matrix groups, "
                 "Lie algebras"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable output (stable key order)");

    // reproduce ------------------------------------------------------------
    auto* cmd_rep = app.add_subcommand("reproduce", "re-derive the source claims and report");
    std::vector<std::string> sections;
    std::string tier = "fast";
    unsigned long long seed = env_seed();
    cmd_rep->add_option("--sections", sections,
                        "subset of entanglement,gates,groups,lie,appendix");
    cmd_rep->add_option("--tier", tier, "fast|full (full runs the W'(E8) certificate)")
        ->check(CLI::IsMember({"fast", "full"}));
    cmd_rep->add_option("--seed", seed, "seed for randomized checks");
    bool timings = false;
    cmd_rep->add_flag("--timings", timings, "include runtimes in --json output");

    // tangle ---------------------------------------------------------------
    auto* cmd_tangle = app.add_subcommand("tangle", "entanglement profile of a state file");
    std::string state_path;
    cmd_tangle->add_option("--state", state_path, "state JSON file")->required();

    // group ----------------------------------------------------------------
    auto* cmd_group = app.add_subcommand("group", "finite matrix-group analysis");
    std::string group_op, gens_path, method = "bsgs";
    long long limit = 1000000;
    bool verify = true, no_verify = false, progress = false;
    unsigned long long gseed = env_seed();
    cmd_group->add_option("op", group_op, "order|derived")->required()
        ->check(CLI::IsMember({"order", "derived"}));
    cmd_group->add_option("--gens", gens_path, "generator-set JSON file")->required();
    cmd_group->add_option("--method", method, "enum|bsgs")
        ->check(CLI::IsMember({"enum", "bsgs"}));
    cmd_group->add_option("--limit", limit, "element limit for enumeration");
    cmd_group->add_option("--seed", gseed, "seed for the randomized chain construction");
    cmd_group->add_flag("--verify", verify, "deterministic strong-generation check (default)");
    cmd_group->add_flag("--no-verify", no_verify, "skip verification (order is an estimate)");
    cmd_group->add_flag("--progress", progress, "line-delimited JSON progress on stderr");

    // lie ------------------------------------------------------------------
    auto* cmd_lie = app.add_subcommand("lie", "Lie-algebra analysis of a basis file");
    std::string lie_op, basis_path, cartan_names;
    int maxdim = 128;
    cmd_lie->add_option("op", lie_op, "closure|killing|signature|roots|table")->required()
        ->check(CLI::IsMember({"closure", "killing", "signature", "roots", "table"}));
    cmd_lie->add_option("--basis", basis_path, "basis JSON file")->required();
    cmd_lie->add_option("--cartan", cartan_names, "comma-separated Cartan element names");
    cmd_lie->add_option("--maxdim", maxdim, "closure dimension cap");

    // eigencheck -------------------------------------------------------------
    auto* cmd_eig = app.add_subcommand("eigencheck", "joint eigenstate check of a gate");
    std::string gate_name, gate_file, triple_kind = "two_qubit";
    cmd_eig->add_option("--gate", gate_name, "registry constant name");
    cmd_eig->add_option("--file", gate_file, "matrix JSON file");
    cmd_eig->add_option("--triple", triple_kind, "two_qubit|three_qubit")
        ->check(CLI::IsMember({"two_qubit", "three_qubit"}));

    // constant ---------------------------------------------------------------
    auto* cmd_const = app.add_subcommand("constant", "print a registry constant");
    std::string const_name;
    bool list_constants = false;
    cmd_const->add_option("name", const_name, "constant name (see --list)");
    cmd_const->add_flag("--list", list_constants, "list registered names");

    CLI11_PARSE(app, argc, argv);

    if (cmd_rep->parsed()) {
        rep::Options o;
        for (auto& s : sections) o.sections.insert(s);
        for (auto& s : o.sections) {
            auto& all = rep::all_sections();
            if (std::find(all.begin(), all.end(), s) == all.end())
                fail(Err::ParseError, "unknown section '" + s + "'");
        }
        o.tier = tier == "full" ? rep::Tier::full : rep::Tier::fast;
        o.seed = seed;
        auto entries = rep::run(o);
        emit(rep::report_to_json(entries, timings), as_json, rep::report_to_text(entries));
        return rep::report_exit_code(entries);
    }

    if (cmd_tangle->parsed()) {
        PureState s = io::state_from_json(io::read_json_file(state_path));
        if (s.qubits() != 3)
            fail(Err::WrongQubitCount, "tangle profiles need a three-qubit state");
        EntanglementProfile p = entanglement_profile(s);
        json j = profile_json(p);
        std::ostringstream text;
        text << "three-tangle: " << p.tau3.str() << "\n"
             << "two-tangles:  AB " << p.tau_ab.str() << "  AC " << p.tau_ac.str() << "  BC "
             << p.tau_bc.str() << "\n"
             << "one-tangles:  A " << p.tau_a.str() << "  B " << p.tau_b.str() << "  C "
             << p.tau_c.str() << "\n"
             << "residuals:    " << p.residuals[0].str() << ", " << p.residuals[1].str() << ", "
             << p.residuals[2].str() << "\n"
             << "B-type:       " << (is_b_type(p) ? "yes" : "no") << "\n";
        emit(j, as_json, text.str());
        return 0;
    }

    if (cmd_group->parsed()) {
        auto gens = io::gens_from_json(io::read_json_file(gens_path));
        grp::MatrixGroup g = grp::MatrixGroup::from(gens);
        if (group_op == "order" && method == "bsgs") {
            grp::BsgsOptions bo;
            bo.seed = gseed;
            bo.verify = verify && !no_verify;
            bo.progress = progress_fn(progress);
            grp::BsgsResult r = grp::order_bsgs(g, bo);
            json orbits = json::array();
            for (auto& lv : r.chain.levels()) orbits.push_back(lv.orbit.size());
            json j{{"order", r.order.str()},
                   {"method", "bsgs"},
                   {"verified", bo.verify},
                   {"orbit_sizes", orbits},
                   {"seed", gseed}};
            emit(j, as_json,
                 "order " + r.order.str() + (bo.verify ? " (certified)\n" : " (estimate)\n"));
            return 0;
        }
        grp::GroupClosure c = grp::enumerate(g, limit, progress_fn(progress));
        if (group_op == "order") {
            json j{{"order", c.order()}, {"method", "enum"}};
            emit(j, as_json, "order " + std::to_string(c.order()) + "\n");
            return 0;
        }
        grp::GroupClosure d = grp::derived_subgroup(c);
        grp::StructureDescriptor sd = grp::identify_small(c);
        json j{{"order", c.order()},
               {"derived_order", d.order()},
               {"abelianization", sd.abelianization},
               {"exponent", sd.exponent}};
        if (sd.name) j["name"] = *sd.name;
        std::ostringstream text;
        text << "order " << c.order() << ", derived order " << d.order() << ", name "
             << (sd.name ? *sd.name : "(undetermined)") << "\n";
        emit(j, as_json, text.str());
        return 0;
    }

    if (cmd_lie->parsed()) {
        io::NamedBasis nb = io::basis_from_json(io::read_json_file(basis_path));
        if (lie_op == "closure") {
            lie::LieAlgebraBasis b = lie::lie_closure(nb.matrices, maxdim);
            lie::LieAlgebraBasis der = lie::derived_algebra(b);
            json j{{"dim", b.dim()},
                   {"derived_dim", der.dim()},
                   {"center_dim", lie::center(b).dim()},
                   {"semisimple", lie::is_semisimple(b)}};
            emit(j, as_json,
                 "closure dim " + std::to_string(b.dim()) + ", derived " +
                     std::to_string(der.dim()) + ", center " +
                     std::to_string(lie::center(b).dim()) + "\n");
            return 0;
        }
        lie::LieAlgebraBasis b = basis_from_file(nb);
        if (lie_op == "killing") {
            Matrix k = lie::killing_form(b);
            emit(io::matrix_to_json(k), as_json, k.str());
            return 0;
        }
        if (lie_op == "signature") {
            Inertia sig = lie::killing_signature(b);
            json j{{"positives", sig.positives}, {"negatives", sig.negatives},
                   {"zeros", sig.zeros}};
            emit(j, as_json,
                 "signature (" + std::to_string(sig.positives) + "," +
                     std::to_string(sig.negatives) + "," + std::to_string(sig.zeros) + ")\n");
            return 0;
        }
        if (lie_op == "roots") {
            if (cartan_names.empty()) fail(Err::ParseError, "roots needs --cartan");
            lie::RootDatum rd = lie::roots_relative(b, cartan_from_names(nb, cartan_names));
            json roots = json::array();
            std::ostringstream text;
            for (auto& r : rd.roots) {
                json alpha = json::array();
                text << "(";
                for (size_t k = 0; k < r.alpha.size(); k++) {
                    alpha.push_back(r.alpha[k].str());
                    text << (k ? "," : "") << r.alpha[k].str();
                }
                text << ") x" << r.space.size() << "\n";
                roots.push_back(json{{"alpha", alpha}, {"multiplicity", r.space.size()}});
            }
            json j{{"roots", roots},
                   {"zero_weight_dim", rd.zero_weight_dim},
                   {"complete", rd.complete}};
            emit(j, as_json, text.str());
            return 0;
        }
        // table
        std::map<std::string, Matrix> named;
        static const char* expect_names[8] = {"x1", "x2", "x3", "y1", "y2",
                                              "y3", "h1", "h2"};
        if (nb.matrices.size() != 8)
            fail(Err::ParseError, "table verification needs exactly 8 basis elements");
        for (size_t i = 0; i < 8; i++) {
            std::string name = nb.names[i].empty() ? expect_names[i] : nb.names[i];
            named.emplace(name, nb.matrices[i]);
        }
        lie::TableReport r = lie::verify_chevalley_table(named);
        json mism = json::array();
        for (auto& m : r.mismatches)
            mism.push_back(json{{"pair", m.pair}, {"expected", m.expected}});
        json j{{"check", "chevalley_table"},
               {"expected", "all 28 bracket pairs per the sl(3,C) table"},
               {"computed", std::to_string(28 - r.mismatches.size()) + "/28 pairs match"},
               {"pass", r.pass()},
               {"mismatches", mism}};
        emit(j, as_json,
             r.pass() ? "all 28 bracket pairs match\n"
                      : std::to_string(r.mismatches.size()) + " mismatching pairs\n");
        return 0;
    }

    if (cmd_eig->parsed()) {
        if (gate_name.empty() == gate_file.empty())
            fail(Err::ParseError, "eigencheck needs exactly one of --gate or --file");
        Matrix gate = gate_name.empty() ? io::matrix_from_json(io::read_json_file(gate_file))
                                        : gates::constant(gate_name);
        auto kind = triple_kind == "two_qubit" ? gates::TripleKind::two_qubit
                                               : gates::TripleKind::three_qubit;
        try {
            gates::SignPattern p = gates::joint_eigensign_check(gate, gates::observable_triple(kind));
            json rows = json::array();
            for (auto& r : p.rows) rows.push_back(json::array({r[0], r[1], r[2]}));
            emit(json{{"eigenvectors", true}, {"signs", rows}}, as_json,
                 "all rows are joint eigenvectors\nsigns: " + p.str() + "\n");
            return 0;
        } catch (const Error& e) {
            if (e.kind() != Err::NotEigenvector) throw;
            emit(json{{"eigenvectors", false},
                      {"row", e.detail_a},
                      {"observable", e.detail_b}},
                 as_json,
                 "row " + std::to_string(e.detail_a) + " is not an eigenvector of observable " +
                     std::to_string(e.detail_b) + "\n");
            return 0;
        }
    }

    if (cmd_const->parsed()) {
        if (list_constants) {
            json names = json::array();
            std::string text;
            for (auto& n : gates::constant_names()) {
                names.push_back(n);
                text += n + "\n";
            }
            emit(json{{"constants", names}}, as_json, text);
            return 0;
        }
        if (const_name.empty()) fail(Err::ParseError, "constant needs a name or --list");
        const gates::NamedConstant& c = gates::constant_info(const_name);
        json j = io::matrix_to_json(c.matrix);
        j["name"] = c.name;
        j["provenance"] = c.provenance;
        emit(j, as_json, c.provenance + "\n" + c.matrix.str());
        return 0;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run_cli(argc, argv);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
