/**
 * @file hyperfan_cli.cpp
 * @brief Command-line frontend: validation, search, classification, SVG.
 *
 * Exit codes: 0 = valid / success, 1 = validation failure (a report is
 * printed), 2 = input, parse or precondition error.
 */

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hyperfan/domain.hpp"
#include "hyperfan/fan.hpp"
#include "hyperfan/glue.hpp"
#include "hyperfan/hert.hpp"
#include "hyperfan/io.hpp"
#include "hyperfan/marked_graph.hpp"
#include "hyperfan/monodromy.hpp"
#include "hyperfan/svg.hpp"
#include "hyperfan/tiling.hpp"
#include "hyperfan/typed_quotient.hpp"

namespace {

using namespace hyperfan;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write file: " + path);
    out << text;
}

json load_document(const std::string& path) { return parse_document(read_file(path)); }

/// Sampling seed: HYPERFAN_SEED when set, the built-in default otherwise.
std::uint64_t sampling_seed() {
    const char* env = std::getenv("HYPERFAN_SEED");
    if (env == nullptr || *env == '\0') return kDefaultSeed;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == nullptr || *end != '\0')
        throw std::invalid_argument("HYPERFAN_SEED must be an unsigned integer, got \"" +
                                    std::string(env) + "\"");
    return static_cast<std::uint64_t>(v);
}

int report_outcome(const ValidationReport& report) {
    if (report.valid()) {
        std::cout << "valid\n";
        return 0;
    }
    std::cout << "invalid: " << report.violations.size() << " violation(s)\n";
    for (const Violation& v : report.violations) {
        std::cout << "  - " << v.condition << ": " << v.detail;
        if (!v.witness.empty()) std::cout << " [" << v.witness << "]";
        std::cout << "\n";
    }
    return 1;
}

RatVec parse_vector_arg(const std::string& text) {
    RatVec out;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) out.push_back(parse_rat(part));
    if (out.empty()) throw std::invalid_argument("empty vector argument");
    return out;
}

int run_fan_validate(const std::string& file) {
    const Fan fan = fan_from_json(load_document(file));
    return report_outcome(validate_fan(fan, sampling_seed()));
}

int run_fan_locate(const std::string& file, const std::string& vector_arg) {
    const Fan fan = fan_from_json(load_document(file));
    const RatVec w = parse_vector_arg(vector_arg);
    const ConeId id = locate(fan, w, sampling_seed());
    std::cout << cone_id_to_string(id) << "\n";
    return 0;
}

int run_fan_dual(const std::string& file) {
    const Fan fan = fan_from_json(load_document(file));
    const ValidationReport report = validate_fan(fan, sampling_seed());
    if (!report.valid()) return report_outcome(report);
    for (const ConeId& id : dual_complex(fan))
        std::cout << cone_id_to_string(id) << " dim " << fan.ambient_dim - id.size() << "\n";
    return 0;
}

int run_domain_build(const std::string& file) {
    const Fan fan = fan_from_json(load_document(file));
    const DomainComplex d = domain_from_fan(fan, sampling_seed());
    std::cout << "cells by dimension:";
    for (std::size_t c : domain_cell_counts(d)) std::cout << " " << c;
    std::cout << "\n";
    std::cout << "euler = " << euler_domain(d) << "\n";
    std::cout << "polytopal: " << (d.polytopality == Polytopality::yes ? "yes" : "unknown")
              << "\n";
    return 0;
}

int run_glue_reflect(const std::string& file) {
    const Fan fan = fan_from_json(load_document(file));
    const ClosedComplex c = reflection_glue(fan, sampling_seed());
    std::cout << "cells by dimension:";
    for (std::size_t k : closed_cell_counts(c)) std::cout << " " << k;
    std::cout << "\n";
    std::cout << "euler = " << euler_closed(c) << "\n";
    std::cout << "connected: " << (glued_connected(c) ? "yes" : "no") << "\n";
    return 0;
}

int run_glue_euler(const std::string& file) {
    const Fan fan = fan_from_json(load_document(file));
    std::cout << "euler (enumerated) = " << euler_closed(reflection_glue(fan, sampling_seed()))
              << "\n";
    std::cout << "euler (formula) = " << euler_closed_formula(fan) << "\n";
    return 0;
}

int run_tiling_validate(const std::string& file) {
    const Tiling2D t = tiling_from_json(load_document(file));
    return report_outcome(validate_tiling2d(t));
}

int run_tiling_realize(const std::string& file) {
    const Tiling2D t = tiling_from_json(load_document(file));
    const auto witness = realizable_2d(t);
    if (!witness.has_value()) {
        std::cout << "infeasible\n";
        return 1;
    }
    std::cout << "realizable\n";
    for (std::size_t c = 0; c < witness->size(); ++c)
        std::cout << "  c" << c << ": " << vec_to_string((*witness)[c]) << "\n";
    return 0;
}

int run_tiling_iso(const std::string& file_a, const std::string& file_b,
                   const std::string& iso_file) {
    const Tiling2D a = tiling_from_json(load_document(file_a));
    const Tiling2D b = tiling_from_json(load_document(file_b));
    const IsoDocument doc = iso_from_json(load_document(iso_file));
    if (doc.mono_a.has_value() != doc.mono_b.has_value())
        throw std::invalid_argument(
            "tiling iso: monodromy must be given for both tilings or neither");
    const bool ok = doc.mono_a.has_value()
                        ? verify_isomorphism(a, b, doc.candidate, *doc.mono_a, *doc.mono_b)
                        : verify_isomorphism(a, b, doc.candidate);
    std::cout << (ok ? "isomorphic\n" : "not isomorphic\n");
    return ok ? 0 : 1;
}

int run_mono_check(const std::string& file) {
    const auto [spec, points] = monodromy_from_json(load_document(file));
    return report_outcome(check_M1_M2(spec, points));
}

int run_hert_degree(int h, int e, int r, int t, int n) {
    if (!validate_hert(h, e, r, t, n)) {
        std::cout << "invalid: (" << h << ", " << e << ", " << r << ", " << t
                  << ") is not a valid quadruple for n = " << n << "\n";
        return 1;
    }
    std::cout << toric_degree(HERT{h, e, r, t}, n) << "\n";
    return 0;
}

int run_graph_classify(const std::string& file) {
    const auto [graph, n] = marked_graph_from_json(load_document(file));
    const ValidationReport report = validate_marked_graph(graph, n);
    if (!report.valid()) return report_outcome(report);
    const GraphClass result = classify_marked_graph(graph, n);
    std::cout << "case " << result.case_letter;
    if (!result.manifold.empty()) std::cout << ": " << result.manifold;
    std::cout << "\n";
    return 0;
}

int run_quotient_validate(const std::string& file) {
    const TypedQuotient q = typed_quotient_from_json(load_document(file));
    return report_outcome(validate_typed_quotient(q));
}

int run_reduce_validate(const std::string& file) {
    const auto [quotient, data] = reduction_from_json(load_document(file));
    return report_outcome(validate_reduction_data(quotient, data));
}

int run_plot(const std::string& file, const std::string& out_path) {
    const json doc = load_document(file);
    const std::string kind = document_kind(doc);
    std::string svg;
    if (kind == "fan")
        svg = fan_svg(fan_from_json(doc));
    else if (kind == "tiling2d")
        svg = tiling_svg(tiling_from_json(doc));
    else
        throw std::invalid_argument("plot: cannot draw documents of kind \"" + kind + "\"");
    write_file(out_path, svg);
    std::cout << "wrote " << out_path << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact combinatorics of complete fans, reflection gluings and surface tilings"};
    app.require_subcommand(1);

    std::string file, file_b, iso_file, vector_arg, out_path;
    std::vector<int> hert_args;
    int rc = 0;

    CLI::App* fan_cmd = app.add_subcommand("fan", "complete simplicial fans");
    fan_cmd->require_subcommand(1);
    CLI::App* fan_validate = fan_cmd->add_subcommand("validate", "check all fan conditions");
    fan_validate->add_option("file", file, "fan document")->required();
    fan_validate->callback([&] { rc = run_fan_validate(file); });
    CLI::App* fan_locate =
        fan_cmd->add_subcommand("locate", "find the cone whose relative interior holds a vector");
    fan_locate->add_option("file", file, "fan document")->required();
    fan_locate->add_option("vector", vector_arg, "comma-separated rational coordinates")
        ->required();
    fan_locate->callback([&] { rc = run_fan_locate(file, vector_arg); });
    CLI::App* fan_dual = fan_cmd->add_subcommand("dual", "list the derived cones");
    fan_dual->add_option("file", file, "fan document")->required();
    fan_dual->callback([&] { rc = run_fan_dual(file); });

    CLI::App* domain_cmd = app.add_subcommand("domain", "closed domains dual to fans");
    domain_cmd->require_subcommand(1);
    CLI::App* domain_build = domain_cmd->add_subcommand("build", "build the domain complex");
    domain_build->add_option("file", file, "fan document")->required();
    domain_build->callback([&] { rc = run_domain_build(file); });

    CLI::App* glue_cmd = app.add_subcommand("glue", "reflection gluings of domains");
    glue_cmd->require_subcommand(1);
    CLI::App* glue_reflect = glue_cmd->add_subcommand("reflect", "glue 2^m reflected copies");
    glue_reflect->add_option("file", file, "fan document")->required();
    glue_reflect->callback([&] { rc = run_glue_reflect(file); });
    CLI::App* glue_euler =
        glue_cmd->add_subcommand("euler", "Euler characteristic, enumerated and closed-form");
    glue_euler->add_option("file", file, "fan document")->required();
    glue_euler->callback([&] { rc = run_glue_euler(file); });

    CLI::App* tiling_cmd = app.add_subcommand("tiling", "curve tilings of closed surfaces");
    tiling_cmd->require_subcommand(1);
    CLI::App* tiling_validate = tiling_cmd->add_subcommand("validate", "check a realized tiling");
    tiling_validate->add_option("file", file, "tiling document")->required();
    tiling_validate->callback([&] { rc = run_tiling_validate(file); });
    CLI::App* tiling_realize =
        tiling_cmd->add_subcommand("realize", "search for realizing direction vectors");
    tiling_realize->add_option("file", file, "tiling document")->required();
    tiling_realize->callback([&] { rc = run_tiling_realize(file); });
    CLI::App* tiling_iso = tiling_cmd->add_subcommand("iso", "verify a proposed isomorphism");
    tiling_iso->add_option("fileA", file, "first tiling document")->required();
    tiling_iso->add_option("fileB", file_b, "second tiling document")->required();
    tiling_iso->add_option("iso-file", iso_file, "candidate identification document")->required();
    tiling_iso->callback([&] { rc = run_tiling_iso(file, file_b, iso_file); });

    CLI::App* mono_cmd = app.add_subcommand("mono", "monodromy specifications");
    mono_cmd->require_subcommand(1);
    CLI::App* mono_check = mono_cmd->add_subcommand("check", "check the point conditions");
    mono_check->add_option("file", file, "monodromy document")->required();
    mono_check->callback([&] { rc = run_mono_check(file); });

    CLI::App* hert_cmd = app.add_subcommand("hert", "orbit quadruples");
    hert_cmd->require_subcommand(1);
    CLI::App* hert_degree = hert_cmd->add_subcommand("degree", "toric degree of a quadruple");
    hert_degree
        ->add_option("values", hert_args,
                     "five integers: h e r t n (the quadruple, then the ambient dimension)")
        ->expected(5)
        ->required();
    hert_degree->callback([&] {
        rc = run_hert_degree(hert_args[0], hert_args[1], hert_args[2], hert_args[3],
                             hert_args[4]);
    });

    CLI::App* graph_cmd = app.add_subcommand("graph", "marked graphs of codimension-1 quotients");
    graph_cmd->require_subcommand(1);
    CLI::App* graph_classify =
        graph_cmd->add_subcommand("classify", "validate and classify a marked graph");
    graph_classify->add_option("file", file, "marked graph document")->required();
    graph_classify->callback([&] { rc = run_graph_classify(file); });

    CLI::App* quotient_cmd =
        app.add_subcommand("quotient", "typed quotients of codimension-2 actions");
    quotient_cmd->require_subcommand(1);
    CLI::App* quotient_validate =
        quotient_cmd->add_subcommand("validate", "check the edge/vertex typing");
    quotient_validate->add_option("file", file, "typed quotient document")->required();
    quotient_validate->callback([&] { rc = run_quotient_validate(file); });

    CLI::App* reduce_cmd = app.add_subcommand("reduce", "reduction data over typed quotients");
    reduce_cmd->require_subcommand(1);
    CLI::App* reduce_validate =
        reduce_cmd->add_subcommand("validate", "check vectors, isotropy and lifts");
    reduce_validate->add_option("file", file, "reduction data document")->required();
    reduce_validate->callback([&] { rc = run_reduce_validate(file); });

    CLI::App* plot_cmd = app.add_subcommand("plot", "render a fan or tiling document as SVG");
    plot_cmd->add_option("file", file, "fan or tiling document")->required();
    plot_cmd->add_option("-o,--output", out_path, "output SVG path")->required();
    plot_cmd->callback([&] { rc = run_plot(file, out_path); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& help) {
        return app.exit(help);
    } catch (const CLI::ParseError& err) {
        app.exit(err);
        return 2;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    }
    return rc;
}
