// Command line front end: compute spectra, classify, generate, verify, convert.

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cnspectra/brute.hpp"
#include "cnspectra/canonical.hpp"
#include "cnspectra/classifier.hpp"
#include "cnspectra/derive.hpp"
#include "cnspectra/errors.hpp"
#include "cnspectra/families.hpp"
#include "cnspectra/generators.hpp"
#include "cnspectra/graph6.hpp"
#include "cnspectra/sha256.hpp"
#include "cnspectra/spectrum.hpp"
#include "cnspectra/verify.hpp"

namespace {

using nlohmann::json;

json json_set(const std::set<int>& s) { return json(std::vector<int>(s.begin(), s.end())); }

// One graph per non-empty line from the file, or the single inline argument.
std::vector<cns::Graph> load_inputs(const std::string& inline_text, const std::string& path) {
    if (!inline_text.empty() && !path.empty())
        throw cns::InputError("give either an inline graph or --input, not both");
    std::vector<cns::Graph> graphs;
    if (!inline_text.empty()) {
        graphs.push_back(cns::parse_graph_auto(inline_text));
        return graphs;
    }
    if (path.empty()) throw cns::InputError("no input graph given");
    std::ifstream in(path);
    if (!in) throw cns::InputError("cannot open " + path);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        graphs.push_back(cns::parse_graph_auto(line));
    }
    if (graphs.empty()) throw cns::InputError("no graphs in " + path);
    return graphs;
}

std::set<int> parse_int_set(const std::string& csv) {
    std::set<int> out;
    std::stringstream in(csv);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        if (tok.empty()) continue;
        out.insert(std::stoi(tok));
    }
    return out;
}

int default_jobs() {
    if (const char* env = std::getenv("CNSPECTRA_JOBS")) {
        int j = std::atoi(env);
        if (j >= 1) return j;
    }
    return 1;
}

void print_evidence(const cns::Evidence& e) {
    std::cout << "p=" << e.p << "\nq=" << e.q << "\ndelta=" << e.delta << "\nL=" << e.l
              << "\nconnectivity=" << cns::to_string(e.connectivity)
              << "\nplanar=" << (e.planar ? "true" : "false")
              << "\nouterplanar=" << (e.outerplanar ? "true" : "false")
              << "\nfamily=" << cns::to_string(e.family) << "\n";
}

json evidence_json(const cns::Evidence& e) {
    return json{{"p", e.p},
                {"q", e.q},
                {"delta", e.delta},
                {"L", e.l},
                {"connectivity", cns::to_string(e.connectivity)},
                {"planar", e.planar},
                {"outerplanar", e.outerplanar},
                {"family", cns::to_string(e.family)}};
}

int run_spectrum(const std::vector<cns::Graph>& graphs, int n, bool all, bool as_json) {
    for (const cns::Graph& g : graphs) {
        if (as_json) {
            json j{{"graph6", cns::write_graph6(g)}, {"p", g.order()}, {"q", g.size()}};
            json a = json::object();
            if (all) {
                for (int k = 1; k <= g.order(); ++k)
                    a[std::to_string(k)] = json_set(cns::a_set(g, k).values);
            } else {
                a[std::to_string(n)] = json_set(cns::a_set(g, n).values);
            }
            j["A"] = a;
            std::cout << j.dump() << "\n";
            continue;
        }
        std::cout << "graph=" << cns::write_graph6(g) << "\np=" << g.order() << "\nq=" << g.size()
                  << "\n";
        if (all) {
            for (int k = 1; k <= g.order(); ++k)
                std::cout << "A" << k << "=" << cns::to_string(cns::a_set(g, k).values) << "\n";
        } else {
            std::cout << "A" << n << "=" << cns::to_string(cns::a_set(g, n).values) << "\n";
        }
    }
    return 0;
}

int run_classify(const std::vector<cns::Graph>& graphs, const std::string& mode, int n,
                 bool as_json) {
    for (const cns::Graph& g : graphs) {
        if (mode == "a2") {
            auto c = cns::classify_a2(g);
            if (as_json) {
                std::cout << json{{"graph6", cns::write_graph6(g)},
                                  {"mode", "a2"},
                                  {"row", cns::to_string(c.row)},
                                  {"A2", json_set(c.a2)},
                                  {"member", cns::to_string(c.member)},
                                  {"member_verified", c.member_verified},
                                  {"evidence", evidence_json(c.evidence)}}
                                 .dump()
                          << "\n";
            } else {
                std::cout << "graph=" << cns::write_graph6(g) << "\nmode=a2\nrow="
                          << cns::to_string(c.row) << "\nA2=" << cns::to_string(c.a2)
                          << "\nmember=" << cns::to_string(c.member)
                          << "\nmember_verified=" << (c.member_verified ? "true" : "false") << "\n";
                print_evidence(c.evidence);
            }
        } else if (mode == "outerplanar") {
            auto c = cns::classify_outerplanar_a2(g);
            if (as_json) {
                std::cout << json{{"graph6", cns::write_graph6(g)},
                                  {"mode", "outerplanar"},
                                  {"row", cns::to_string(c.row)},
                                  {"A2", json_set(c.a2)},
                                  {"member", cns::to_string(c.member)},
                                  {"member_verified", c.member_verified},
                                  {"evidence", evidence_json(c.evidence)}}
                                 .dump()
                          << "\n";
            } else {
                std::cout << "graph=" << cns::write_graph6(g) << "\nmode=outerplanar\nrow="
                          << cns::to_string(c.row) << "\nA2=" << cns::to_string(c.a2)
                          << "\nmember=" << cns::to_string(c.member)
                          << "\nmember_verified=" << (c.member_verified ? "true" : "false") << "\n";
                print_evidence(c.evidence);
            }
        } else if (mode == "an") {
            auto c = cns::predict_an(g, n);
            if (as_json) {
                std::cout << json{{"graph6", cns::write_graph6(g)},
                                  {"mode", "an"},
                                  {"n", n},
                                  {"branch", cns::to_string(c.branch)},
                                  {"predicted", json_set(c.predicted.values)},
                                  {"evidence", evidence_json(c.evidence)}}
                                 .dump()
                          << "\n";
            } else {
                std::cout << "graph=" << cns::write_graph6(g) << "\nmode=an\nn=" << n
                          << "\nbranch=" << cns::to_string(c.branch)
                          << "\npredicted=" << cns::to_string(c.predicted.values) << "\n";
                print_evidence(c.evidence);
            }
        } else {  // profile
            auto c = cns::predict_profile(g);
            if (as_json) {
                json prof = json::object();
                for (const auto& s : c.predicted) prof[std::to_string(s.n)] = json_set(s.values);
                std::cout << json{{"graph6", cns::write_graph6(g)},
                                  {"mode", "profile"},
                                  {"branch", cns::to_string(c.branch)},
                                  {"predicted", prof},
                                  {"evidence", evidence_json(c.evidence)}}
                                 .dump()
                          << "\n";
            } else {
                std::cout << "graph=" << cns::write_graph6(g) << "\nmode=profile\nbranch="
                          << cns::to_string(c.branch) << "\n";
                for (const auto& s : c.predicted)
                    std::cout << "A" << s.n << "=" << cns::to_string(s.values) << "\n";
                print_evidence(c.evidence);
            }
        }
    }
    return 0;
}

void print_generated(const cns::Graph& g, const std::string& target, uint64_t seed, int spectrum_n,
                     bool as_json) {
    auto an = cns::brute_a_set(g, spectrum_n).values;
    if (as_json) {
        std::cout << json{{"graph6", cns::write_graph6(g)},
                          {"p", g.order()},
                          {"q", g.size()},
                          {"target", target},
                          {"seed", seed},
                          {std::string("A") + std::to_string(spectrum_n), json_set(an)},
                          {"planar", cns::is_planar(g)},
                          {"connected", cns::is_connected(g)}}
                         .dump()
                  << "\n";
        return;
    }
    std::cout << "graph6=" << cns::write_graph6(g) << "\np=" << g.order() << "\nq=" << g.size()
              << "\ntarget=" << target << "\nseed=" << seed << "\nA" << spectrum_n << "="
              << cns::to_string(an) << "\nplanar=" << (cns::is_planar(g) ? "true" : "false")
              << "\nconnected=" << (cns::is_connected(g) ? "true" : "false") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"common-neighbourhood spectra of planar graphs"};
    app.require_subcommand(1);

    std::string inline_graph, input_path;
    bool as_json = false;

    auto* sp = app.add_subcommand("spectrum", "compute A_n or the whole profile");
    int sp_n = 0;
    bool sp_all = false;
    sp->add_option("graph", inline_graph, "inline graph6 or edge list 'p; u v; ...'");
    sp->add_option("--input", input_path, "file with one graph per line");
    sp->add_option("--n", sp_n, "tuple size n");
    sp->add_flag("--all", sp_all, "every n from 1 to p");
    sp->add_flag("--json", as_json, "one JSON object per graph");

    auto* cl = app.add_subcommand("classify", "classification tables and predictions");
    bool cl_a2 = false, cl_profile = false, cl_outer = false;
    int cl_n = 0;
    cl->add_option("graph", inline_graph, "inline graph6 or edge list");
    cl->add_option("--input", input_path, "file with one graph per line");
    cl->add_flag("--a2", cl_a2, "A_2 table row (planar connected; default)");
    cl->add_flag("--profile", cl_profile, "predicted profile A_3..A_p (planar)");
    cl->add_flag("--outerplanar", cl_outer, "outerplanar A_2 table row");
    cl->add_option("--n", cl_n, "predict a single A_n, n >= 3 (planar)");
    cl->add_flag("--json", as_json, "one JSON object per graph");

    auto* gen = app.add_subcommand("generate", "build a graph for a target spectrum");
    gen->require_subcommand(1);
    auto* gen_a2_cmd = gen->add_subcommand("a2", "target A_2 = base + A'");
    std::string gen_base = "12", gen_aprime;
    uint64_t gen_seed = 0;
    gen_a2_cmd->add_option("--base", gen_base, "12, 012 or 02")
        ->check(CLI::IsMember({"12", "012", "02"}));
    gen_a2_cmd->add_option("--aprime", gen_aprime, "comma list of integers >= 3");
    gen_a2_cmd->add_option("--seed", gen_seed, "64-bit seed");
    gen_a2_cmd->add_flag("--json", as_json, "JSON output");
    auto* gen_a1_cmd = gen->add_subcommand("a1", "target degree set A_1");
    std::string gen_degrees;
    gen_a1_cmd->add_option("--degrees", gen_degrees, "comma list of degrees")->required();
    gen_a1_cmd->add_option("--seed", gen_seed, "64-bit seed");
    gen_a1_cmd->add_flag("--json", as_json, "JSON output");

    auto* fam = app.add_subcommand("family", "construct a named family member");
    std::string fam_kind;
    int fam_param = 0;
    uint64_t fam_mask = 0;
    fam->add_option("--kind", fam_kind,
                    "t, tprime, tclass, b, bprime, d, r, k2l, cycle, path, cube, icosahedron, "
                    "sprime, s")
        ->required();
    fam->add_option("--m,--ell,--k,--param", fam_param, "family parameter");
    fam->add_option("--mask", fam_mask, "kept path edges for tclass/r (bit i = edge {i,i+1})");
    fam->add_flag("--json", as_json, "JSON output");

    auto* ver = app.add_subcommand("verify", "sweep the classification against brute force");
    int ver_max = 8, ver_jobs = default_jobs();
    std::string ver_file, ver_theorems = "standard";
    ver->add_option("--max-order", ver_max, "built-in corpus bound (<= 9)");
    ver->add_option("--graph6", ver_file, "verify the graphs in this file instead");
    ver->add_option("--theorems", ver_theorems,
                    "comma list (thm1,thm2,thm3,no0,no03,l02,l2,l4cy,rows01,exc,l023,appA,appB,"
                    "appB_members,standard,all); default standard");
    ver->add_option("--jobs", ver_jobs, "worker threads (default $CNSPECTRA_JOBS or 1)");

    auto* conv = app.add_subcommand("convert", "edge list <-> graph6");
    std::string conv_to = "auto";
    conv->add_option("graph", inline_graph, "inline graph6 or edge list");
    conv->add_option("--input", input_path, "file with one graph per line");
    conv->add_option("--to", conv_to, "g6 | edges | auto (opposite of the input)")
        ->check(CLI::IsMember({"g6", "edges", "auto"}));

    auto* der = app.add_subcommand("derive", "re-derive the committed S-graph certificates");
    int der_max = 10;
    der->add_option("--max-order", der_max, "search bound (8..10)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (sp->parsed()) {
            if (sp_all == (sp_n != 0))
                throw cns::InputError("spectrum: give exactly one of --n or --all");
            if (!sp_all && sp_n < 1) throw cns::InputError("spectrum: n must be positive");
            return run_spectrum(load_inputs(inline_graph, input_path), sp_n, sp_all, as_json);
        }
        if (cl->parsed()) {
            int modes = int(cl_a2) + int(cl_profile) + int(cl_outer) + int(cl_n != 0);
            if (modes > 1) throw cns::InputError("classify: give at most one mode");
            std::string mode =
                cl_profile ? "profile" : cl_outer ? "outerplanar" : cl_n ? "an" : "a2";
            return run_classify(load_inputs(inline_graph, input_path), mode, cl_n, as_json);
        }
        if (gen_a2_cmd->parsed()) {
            cns::A2Target target;
            target.base = gen_base == "12"    ? cns::A2Target::Base::OneTwo
                          : gen_base == "012" ? cns::A2Target::Base::ZeroOneTwo
                                              : cns::A2Target::Base::ZeroTwo;
            target.a_prime = parse_int_set(gen_aprime);
            cns::Graph g = cns::gen_a2(target, gen_seed);
            print_generated(g, "A2={" + gen_base + "}+{" + gen_aprime + "}", gen_seed, 2, as_json);
            return 0;
        }
        if (gen_a1_cmd->parsed()) {
            cns::A1Target target;
            target.degrees = parse_int_set(gen_degrees);
            cns::Graph g = cns::gen_a1(target, gen_seed);
            print_generated(g, "A1={" + gen_degrees + "}", gen_seed, 1, as_json);
            return 0;
        }
        if (fam->parsed()) {
            using K = cns::FamilySpec::Kind;
            for (char& c : fam_kind) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
            cns::FamilySpec spec;
            if (fam_kind == "t") spec.kind = K::T;
            else if (fam_kind == "tprime") spec.kind = K::Tprime;
            else if (fam_kind == "tclass") spec.kind = K::Tclass;
            else if (fam_kind == "b") spec.kind = K::B;
            else if (fam_kind == "bprime") spec.kind = K::Bprime;
            else if (fam_kind == "d") spec.kind = K::D;
            else if (fam_kind == "r") spec.kind = K::Rclass;
            else if (fam_kind == "k2l") spec.kind = K::K2l;
            else if (fam_kind == "cycle") spec.kind = K::Cycle;
            else if (fam_kind == "path") spec.kind = K::Path;
            else if (fam_kind == "cube") spec.kind = K::Cube;
            else if (fam_kind == "icosahedron") spec.kind = K::Icosahedron;
            else if (fam_kind == "sprime") spec.kind = K::Sprime;
            else if (fam_kind == "s") spec.kind = K::S;
            else throw cns::InputError("family: unknown kind " + fam_kind);
            spec.param = fam_param;
            spec.mask = static_cast<uint32_t>(fam_mask);
            cns::Graph g = cns::construct_family(spec);
            if (as_json)
                std::cout << json{{"graph6", cns::write_graph6(g)},
                                  {"p", g.order()},
                                  {"q", g.size()}}
                                 .dump()
                          << "\n";
            else
                std::cout << "graph6=" << cns::write_graph6(g) << "\np=" << g.order()
                          << "\nq=" << g.size() << "\n";
            return 0;
        }
        if (ver->parsed()) {
            cns::TheoremSelection sel = cns::TheoremSelection::parse(ver_theorems);
            cns::VerificationReport rep;
            if (!ver_file.empty()) {
                std::ifstream in(ver_file);
                if (!in) throw cns::InputError("cannot open " + ver_file);
                std::vector<cns::Graph> corpus;
                std::string line;
                while (std::getline(in, line))
                    if (!line.empty()) corpus.push_back(cns::parse_graph6(line));
                rep = cns::verify_theorems(corpus, sel, ver_jobs);
                rep.corpus = ver_file + " (" + std::to_string(corpus.size()) + " graphs)";
            } else {
                rep = cns::verify_built_in(ver_max, sel, ver_jobs);
            }
            std::cout << rep.to_text();
            return rep.ok() ? 0 : 1;
        }
        if (conv->parsed()) {
            for (const cns::Graph& g : load_inputs(inline_graph, input_path)) {
                bool to_edges;
                if (conv_to == "auto") {
                    size_t i = 0;
                    while (i < inline_graph.size() &&
                           std::isspace(static_cast<unsigned char>(inline_graph[i])))
                        ++i;
                    bool input_is_edges =
                        i < inline_graph.size() &&
                        std::isdigit(static_cast<unsigned char>(inline_graph[i]));
                    to_edges = !input_is_edges;
                    if (inline_graph.empty()) to_edges = true;  // treat files as graph6 pipelines
                } else {
                    to_edges = conv_to == "edges";
                }
                std::cout << (to_edges ? cns::write_edge_list(g) : cns::write_graph6(g)) << "\n";
            }
            return 0;
        }
        if (der->parsed()) {
            auto certs = cns::derive_s_graphs(der_max);
            for (const auto& [k, cert] : certs) {
                cns::Graph g = cns::parse_graph6(cert.g6);
                std::string line =
                    "S_" + std::to_string(k) + " " + std::to_string(g.order()) + " " + cert.g6;
                std::cout << line << " " << cns::sha256_hex(line) << "\n";
            }
            return 0;
        }
    } catch (const cns::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const cns::TargetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const cns::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const cns::CapabilityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
    return 2;
}
