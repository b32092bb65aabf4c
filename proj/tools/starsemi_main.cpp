// starsemi: numerical semigroups of star-shaped Seifert graphs.
//
// Subcommands: semigroup, classify, graph (info|semigroup|frobenius|zk),
// represent, decompose, quotient, verify. Exit codes: 0 success,
// 1 domain error, 2 parse/usage error. Data output is byte-stable;
// --format json selects the machine interface.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "starsemi/flat_rep.hpp"
#include "starsemi/io.hpp"
#include "starsemi/plumbing.hpp"

namespace {

using namespace starsemi;
using nlohmann::json;

struct Options {
    std::string format = "text";
    bool quiet = false;
};

bool json_out(const Options& opt) { return opt.format == "json"; }

GeneratorSet gens_from_args(const std::vector<std::string>& args) {
    std::string joined;
    for (const std::string& a : args) {
        if (!joined.empty()) joined += " ";
        joined += a;
    }
    return parse_generators(joined);
}

json semigroup_record(const NumericalSemigroup& s) {
    json gens = json::array(), gaps = json::array();
    for (const Int& g : s.minimal_generators) gens.push_back(g.to_int64());
    for (const Int& g : s.gaps) gaps.push_back(g.to_int64());
    return json{{"generators", std::move(gens)},
                {"frobenius", s.frobenius.to_int64()},
                {"gaps", std::move(gaps)}};
}

std::string flatness_phrase(FlatnessClass c) {
    std::string name = flatness_name(c);
    for (char& ch : name) {
        if (ch == '-') ch = ' ';
    }
    return name;
}

int cmd_semigroup(const std::vector<std::string>& args, const Options& opt) {
    NumericalSemigroup s = build_semigroup(gens_from_args(args));
    if (json_out(opt)) {
        std::cout << semigroup_record(s).dump() << "\n";
        return 0;
    }
    std::cout << render_semigroup(s) << "\n";
    std::cout << "frobenius: " << to_string(s.frobenius) << "\n";
    std::cout << "gaps:";
    for (const Int& g : s.gaps) std::cout << " " << to_string(g);
    std::cout << "\n";
    return 0;
}

int cmd_classify(const std::vector<std::string>& args, const Options& opt) {
    FlatnessClass c = classify(gens_from_args(args));
    if (json_out(opt)) {
        std::cout << json{{"class", flatness_name(c)}}.dump() << "\n";
    } else {
        std::cout << flatness_name(c) << "\n";
    }
    return 0;
}

int cmd_quotient(const std::vector<std::string>& args, Int by, const Options& opt) {
    NumericalSemigroup s = quotient(build_semigroup(gens_from_args(args)), by);
    if (json_out(opt)) {
        std::cout << semigroup_record(s).dump() << "\n";
    } else {
        std::cout << render_semigroup(s) << "\n";
    }
    return 0;
}

int cmd_graph(const std::string& what, const std::string& sf, const Options& opt) {
    SSRGraph g = parse_graph(sf);
    if (what == "info") {
        GraphInvariants inv = graph_invariants(g);
        PlumbingData p = plumbing_expand(g);
        bool ngor = is_numerically_gorenstein(g);
        if (json_out(opt)) {
            json zk = json::array();
            for (const Rational& z : p.z_k) zk.push_back(z.to_string());
            std::cout << json{{"e", inv.e.to_string()},
                              {"alpha", inv.alpha_lcm.to_int64()},
                              {"h", to_string(inv.h)},
                              {"o", inv.o.to_int64()},
                              {"gamma", inv.gamma.to_string()},
                              {"numerically_gorenstein", ngor},
                              {"z_k", std::move(zk)}}
                             .dump()
                      << "\n";
            return 0;
        }
        std::cout << "e: " << inv.e.to_string() << "\n";
        std::cout << "alpha: " << to_string(inv.alpha_lcm) << "\n";
        std::cout << "h: " << to_string(inv.h) << "\n";
        std::cout << "o: " << to_string(inv.o) << "\n";
        std::cout << "gamma: " << inv.gamma.to_string() << "\n";
        std::cout << "numerically Gorenstein: " << (ngor ? "yes" : "no") << "\n";
        std::cout << "Z_K:";
        for (const Rational& z : p.z_k) std::cout << " " << z.to_string();
        std::cout << "\n";
        return 0;
    }
    if (what == "semigroup") {
        NumericalSemigroup s = semigroup_of_graph(g);
        bool sym = is_symmetric(s);
        FlatnessClass c = classify(GeneratorSet::of(s.minimal_generators));
        if (json_out(opt)) {
            json rec = semigroup_record(s);
            rec["symmetric"] = sym;
            rec["class"] = flatness_name(c);
            std::cout << rec.dump() << "\n";
            return 0;
        }
        std::cout << render_semigroup(s) << ", " << (sym ? "symmetric" : "not symmetric") << ", "
                  << flatness_phrase(c) << "\n";
        return 0;
    }
    if (what == "frobenius") {
        GraphFrobenius f = frobenius_of_graph(g);
        if (json_out(opt)) {
            std::cout << json{{"frobenius", f.frobenius.to_int64()},
                              {"check_s", f.check_s.to_string()}}
                             .dump()
                      << "\n";
            return 0;
        }
        std::cout << "frobenius: " << to_string(f.frobenius) << "\n";
        std::cout << "check_s: " << f.check_s.to_string() << "\n";
        return 0;
    }
    if (what == "zk") {
        PlumbingData p = plumbing_expand(g);
        if (json_out(opt)) {
            json zk = json::array();
            for (const Rational& z : p.z_k) zk.push_back(z.to_string());
            std::cout << json{{"z_k", std::move(zk)}}.dump() << "\n";
            return 0;
        }
        std::cout << "Z_K:";
        for (const Rational& z : p.z_k) std::cout << " " << z.to_string();
        std::cout << "\n";
        return 0;
    }
    throw Error("unknown graph action: " + what);
}

int cmd_represent(const std::vector<Int>& alphas, const std::vector<Int>& mults,
                  const Options& opt) {
    FlatPresentation f = FlatPresentation::of(alphas, mults);
    CanonicalRepresentative c = canonical_representative(f);
    auto h = h_group(c);
    Int frob = f.frobenius_by_formula();
    IcisSystem icis = icis_equations(c);
    if (json_out(opt)) {
        json hgrp = json::array();
        for (const auto& [order, exp] : h) {
            hgrp.push_back({{"cyclic_order", order.to_int64()}, {"exponent", exp.to_int64()}});
        }
        std::istringstream eq_lines(render_icis(icis));
        json eqs = json::array();
        for (std::string line; std::getline(eq_lines, line);) eqs.push_back(line);
        std::cout << json{{"graph", json::parse(graph_to_json(c.graph))},
                          {"frobenius", frob.to_int64()},
                          {"h_group", std::move(hgrp)},
                          {"equations", std::move(eqs)}}
                         .dump()
                  << "\n";
        return 0;
    }
    std::cout << render_graph(c.graph) << "\n";
    std::cout << "frobenius: " << to_string(frob) << "\n";
    std::cout << "H:";
    if (h.empty()) std::cout << " trivial";
    for (const auto& [order, exp] : h) {
        std::cout << " Z" << to_string(order) << "^" << to_string(exp);
    }
    std::cout << "\n";
    std::cout << "equations:\n" << render_icis(icis);
    return 0;
}

int cmd_decompose(const std::string& sf, const std::string& out_file, const Options& opt) {
    SSRGraph g = parse_graph(sf);
    QuotientCertificate cert = decompose(g);
    std::string record = certificate_to_json(cert);
    if (!out_file.empty()) {
        std::ofstream out(out_file);
        if (!out) throw Error("cannot write " + out_file);
        out << record << "\n";
    }
    if (json_out(opt)) {
        std::cout << record << "\n";
        return 0;
    }
    NumericalSemigroup s = semigroup_of_graph(g);
    std::cout << "graph: " << render_graph(cert.perturbed_graph) << "\n";
    std::cout << "flat: " << render_flat(cert.flat) << "\n";
    std::cout << "divisor: " << to_string(cert.divisor) << "\n";
    std::cout << "tilde: " << render_graph(cert.tilde_graph) << "\n";
    std::cout << "quotient semigroup: " << render_semigroup(s) << "\n";
    return 0;
}

int cmd_verify(const std::string& path, const Options& opt) {
    std::ifstream in(path);
    if (!in) throw Error("cannot read " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    CertificateFile cert = certificate_from_json(buffer.str());
    verify_certificate(cert.graph, cert.flat, cert.divisor);
    if (json_out(opt)) {
        std::cout << json{{"verified", true}}.dump() << "\n";
    } else if (!opt.quiet) {
        std::cout << "certificate verified: " << render_graph(cert.graph) << " = "
                  << render_flat(cert.flat) << " / " << to_string(cert.divisor) << "\n";
    }
    return 0;
}

std::vector<Int> split_ints(const std::string& csv) {
    std::vector<Int> out;
    std::string item;
    std::istringstream stream(csv);
    while (std::getline(stream, item, ',')) out.push_back(parse_int(item));
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical semigroups of star-shaped Seifert graphs"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--format", opt.format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_flag("--quiet", opt.quiet, "suppress log output");

    std::vector<std::string> gen_args;
    auto* semigroup_cmd = app.add_subcommand("semigroup", "build G(a1, a2, ...)");
    semigroup_cmd->add_option("generators", gen_args, "generators")->required()->expected(-1);

    std::vector<std::string> classify_args;
    auto* classify_cmd = app.add_subcommand("classify", "flatness class of G(a1, ...)");
    classify_cmd->add_option("generators", classify_args, "generators")->required()->expected(-1);

    std::string graph_action, graph_sf;
    auto* graph_cmd = app.add_subcommand("graph", "graph computations");
    graph_cmd->add_option("action", graph_action, "info | semigroup | frobenius | zk")
        ->required()
        ->check(CLI::IsMember({"info", "semigroup", "frobenius", "zk"}));
    graph_cmd->add_option("sf", graph_sf, "Seifert data, e.g. sf(-2; 2x(2,1), (5,1))")->required();

    std::string rep_alphas, rep_mults;
    auto* represent_cmd = app.add_subcommand("represent", "canonical representative of a flat presentation");
    represent_cmd->add_option("--alpha", rep_alphas, "comma-separated alphas")->required();
    represent_cmd->add_option("--s", rep_mults, "comma-separated multiplicities")->required();

    std::string decompose_sf, decompose_out;
    auto* decompose_cmd = app.add_subcommand("decompose", "flat-quotient certificate of a graph");
    decompose_cmd->add_option("sf", decompose_sf, "Seifert data")->required();
    decompose_cmd->add_option("--out", decompose_out, "write the certificate to a file");

    std::vector<std::string> quotient_args;
    long long quotient_by = 0;
    auto* quotient_cmd = app.add_subcommand("quotient", "quotient semigroup G(...) / k");
    quotient_cmd->add_option("generators", quotient_args, "generators")->required()->expected(-1);
    quotient_cmd->add_option("--by", quotient_by, "divisor k")->required();

    std::string verify_path;
    auto* verify_cmd = app.add_subcommand("verify", "re-check a certificate file");
    verify_cmd->add_option("certfile", verify_path, "certificate JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (semigroup_cmd->parsed()) return cmd_semigroup(gen_args, opt);
        if (classify_cmd->parsed()) return cmd_classify(classify_args, opt);
        if (graph_cmd->parsed()) return cmd_graph(graph_action, graph_sf, opt);
        if (represent_cmd->parsed()) {
            return cmd_represent(split_ints(rep_alphas), split_ints(rep_mults), opt);
        }
        if (decompose_cmd->parsed()) return cmd_decompose(decompose_sf, decompose_out, opt);
        if (quotient_cmd->parsed()) return cmd_quotient(quotient_args, Int(quotient_by), opt);
        if (verify_cmd->parsed()) return cmd_verify(verify_path, opt);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
