// Command-line front end: generate graphs, emit and verify AT certificates,
// run the brute-force oracles, export DOT.
//
// Exit codes: 0 success / verified, 1 verification failure or a certificate
// that could not be established, 2 invalid input, 3 resource cap exceeded.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "at/json_io.hpp"
#include "at/oracles.hpp"
#include "at/verify.hpp"

namespace {

using at::Json;
using at::OrderedJson;

int exit_code_for(const at::error& e) {
    switch (e.code()) {
        case at::errc::oracle_too_large:
        case at::errc::overflow:
            return 3;
        case at::errc::certificate_violation:
            return 1;
        default:
            return 2;
    }
}

std::string read_all(std::istream& in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Json load_json(const std::string& path_or_empty) {
    std::string text;
    if (path_or_empty.empty() || path_or_empty == "-") {
        text = read_all(std::cin);
    } else {
        std::ifstream in(path_or_empty);
        at::require(in.good(), at::errc::invalid_input, "cannot open " + path_or_empty);
        text = read_all(in);
    }
    try {
        return Json::parse(text);
    } catch (const Json::exception& e) {
        at::fail(at::errc::invalid_input, std::string("JSON parse error: ") + e.what());
    }
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    at::require(out.good(), at::errc::invalid_input, "cannot write " + path);
    out << text;
}

void emit(const std::string& out_path, const OrderedJson& bare, const at::PlaneGraph& g) {
    if (!out_path.empty()) {
        write_text(out_path, bare.dump() + "\n");
    } else {
        // stdout carries a bundle so the certificate can be piped into verify
        OrderedJson bundle;
        bundle["graph"] = at::graph_to_json(g);
        bundle["certificate"] = bare;
        std::cout << bundle.dump() << "\n";
    }
}

struct CertArgs {
    std::string graph_path;
    std::string out_path;
    std::string dot_path;
};

int run_certificate(const CertArgs& args, bool matching) {
    at::PlaneGraph g = at::graph_from_json(load_json(args.graph_path));
    at::Certificate cert =
        matching ? at::at4_matching_certificate(g) : at::at5_certificate(g);
    at::Verdict verdict = at::check_certificate(cert, g);
    if (!verdict.pass) {
        std::cout << at::verdict_to_json(verdict).dump() << "\n";
        return 1;
    }
    emit(args.out_path, at::certificate_to_json(cert), g);
    if (!args.dot_path.empty()) write_text(args.dot_path, at::certificate_dot(g, cert));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Alon-Tarsi orientation certificates for plane graphs"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a graph (JSON to stdout or -o)");
    std::string gen_kind, gen_name, gen_out;
    int gen_n = 0;
    std::uint64_t gen_seed = 0;
    gen->add_option("kind", gen_kind, "cycle|wheel|fan|stacked|named")->required();
    gen->add_option("--n", gen_n, "size parameter");
    gen->add_option("--seed", gen_seed, "seed for stacked triangulations");
    gen->add_option("--name", gen_name, "tetrahedron|octahedron|icosahedron");
    gen->add_option("-o,--output", gen_out, "output file (default stdout)");

    // at5 / at4m
    auto* at5 = app.add_subcommand("at5", "AT <= 5 certificate");
    auto* at4m = app.add_subcommand("at4m", "matching M with AT(G-M) <= 4 certificate");
    CertArgs at5_args, at4m_args;
    for (auto [cmd, args] : {std::pair{at5, &at5_args}, std::pair{at4m, &at4m_args}}) {
        cmd->add_option("graph", args->graph_path, "graph JSON (default stdin)");
        cmd->add_option("-o,--output", args->out_path, "certificate file (default: bundle to stdout)");
        cmd->add_option("--dot", args->dot_path, "also write a DOT rendering");
    }

    // verify
    auto* verify = app.add_subcommand("verify", "check a certificate against a graph");
    std::string verify_graph, verify_cert;
    verify->add_option("graph", verify_graph, "graph JSON");
    verify->add_option("certificate", verify_cert, "certificate JSON");

    // diff
    auto* diff = app.add_subcommand("diff", "Eulerian sub-digraph diff of an orientation");
    std::string diff_graph, diff_orient, diff_oracle = "both";
    diff->add_option("graph", diff_graph, "graph JSON")->required();
    diff->add_option("orientation", diff_orient, "orientation JSON")->required();
    diff->add_option("--oracle", diff_oracle, "enum|coeff|both (default both)");

    // atnum
    auto* atnum = app.add_subcommand("atnum", "brute-force Alon-Tarsi number");
    std::string atnum_graph;
    atnum->add_option("graph", atnum_graph, "graph JSON")->required();

    // color-sample
    auto* cs = app.add_subcommand("color-sample", "sampled list-coloring consistency check");
    std::string cs_graph, cs_cert;
    int cs_samples = 200;
    std::uint64_t cs_seed = 1;
    cs->add_option("graph", cs_graph, "graph JSON")->required();
    cs->add_option("certificate", cs_cert, "certificate JSON")->required();
    cs->add_option("--samples", cs_samples, "number of sampled list assignments");
    cs->add_option("--seed", cs_seed, "sampling seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) {
            at::PlaneGraph g = [&] {
                if (gen_kind == "cycle") return at::generate(at::GraphKind::cycle, gen_n);
                if (gen_kind == "wheel") return at::generate(at::GraphKind::wheel, gen_n);
                if (gen_kind == "fan") return at::generate(at::GraphKind::fan, gen_n);
                if (gen_kind == "stacked")
                    return at::generate(at::GraphKind::stacked, gen_n, gen_seed);
                if (gen_kind == "named") return at::generate_named(gen_name);
                at::fail(at::errc::invalid_input, "unknown kind: " + gen_kind);
            }();
            std::string text = at::graph_to_json(g).dump() + "\n";
            if (gen_out.empty())
                std::cout << text;
            else
                write_text(gen_out, text);
            std::cerr << "gen kind=" << gen_kind
                      << (gen_name.empty() ? "" : " name=" + gen_name) << " n=" << gen_n
                      << " seed=" << gen_seed << "\n";
            return 0;
        }
        if (at5->parsed()) return run_certificate(at5_args, false);
        if (at4m->parsed()) return run_certificate(at4m_args, true);
        if (verify->parsed()) {
            Json graph_json, cert_json;
            if (!verify_graph.empty() && !verify_cert.empty()) {
                graph_json = load_json(verify_graph);
                cert_json = load_json(verify_cert);
            } else if (verify_graph.empty() && verify_cert.empty()) {
                Json bundle = load_json("");
                at::require(bundle.contains("graph") && bundle.contains("certificate"),
                            at::errc::invalid_input,
                            "stdin must carry a {graph, certificate} bundle");
                graph_json = bundle.at("graph");
                cert_json = bundle.at("certificate");
            } else {
                at::fail(at::errc::invalid_input,
                         "verify takes both a graph and a certificate, or a bundle on stdin");
            }
            at::PlaneGraph g = at::graph_from_json(graph_json);
            at::Certificate cert = at::certificate_from_json(cert_json);
            at::Verdict v = at::check_certificate(cert, g);
            std::cout << at::verdict_to_json(v).dump() << "\n";
            return v.pass ? 0 : 1;
        }
        if (diff->parsed()) {
            at::PlaneGraph g = at::graph_from_json(load_json(diff_graph));
            at::Orientation d(g.graph(), at::arcs_from_json(load_json(diff_orient)));
            at::require(diff_oracle == "enum" || diff_oracle == "coeff" || diff_oracle == "both",
                        at::errc::invalid_input, "--oracle must be enum|coeff|both");
            if (diff_oracle != "coeff") std::cout << at::diff_enum(d).diff() << "\n";
            if (diff_oracle != "enum") std::cout << at::diff_coeff(d) << "\n";
            return 0;
        }
        if (atnum->parsed()) {
            at::PlaneGraph g = at::graph_from_json(load_json(atnum_graph));
            std::cout << at::at_number(g.graph()) << "\n";
            return 0;
        }
        if (cs->parsed()) {
            at::PlaneGraph g = at::graph_from_json(load_json(cs_graph));
            at::Certificate cert = at::certificate_from_json(load_json(cs_cert));
            at::require(at::graph_sha256(g) == cert.graph_sha256, at::errc::invalid_input,
                        "certificate was issued for a different graph");
            at::Graph base = g.graph();
            for (const at::Edge& e : cert.matching) base = base.without_edge(e);
            at::SampleReport report = at::sampled_choosability_check(
                base, at::DegreeBudget(cert.budget), cs_samples, cs_seed);
            OrderedJson j;
            j["pass"] = report.pass;
            j["samples_run"] = report.samples_run;
            if (report.counterexample) {
                OrderedJson lists = OrderedJson::object();
                for (const auto& [v, l] : *report.counterexample) lists[std::to_string(v)] = l;
                j["counterexample"] = std::move(lists);
            }
            std::cout << j.dump() << "\n";
            return report.pass ? 0 : 1;
        }
    } catch (const at::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
