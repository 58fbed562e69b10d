#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "citeflow/app.hpp"

namespace {

citeflow::OrderLimit parse_order_limit(const std::string& text) {
    if (text == "AUTO" || text == "auto") return citeflow::OrderLimit::automatic();
    std::size_t used = 0;
    long long v = -1;
    try {
        v = std::stoll(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size() || v < 1) throw CLI::ValidationError("--max-order", "expected AUTO or an integer >= 1");
    return citeflow::OrderLimit::at_most(static_cast<std::size_t>(v));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Higher-order citation flows between disciplines"};
    app.require_subcommand(1);

    std::string nodes, edges, membership, out;

    auto* validate = app.add_subcommand("validate", "Check input files and print the ingest report");
    validate->add_option("--nodes", nodes, "nodes.csv (id,year,month)")->required();
    validate->add_option("--edges", edges, "edges.csv (citing,cited)")->required();
    validate->add_option("--membership", membership, "membership.csv (id,discipline,weight)")->required();

    citeflow::app::RunConfig config;
    std::string max_order = "AUTO", norm = "l1", betweenness = "unweighted";
    int threads = 0;
    auto* compute = app.add_subcommand("compute", "Compute flows and write all analysis files");
    compute->add_option("--nodes", nodes, "nodes.csv (id,year,month)")->required();
    compute->add_option("--edges", edges, "edges.csv (citing,cited)")->required();
    compute->add_option("--membership", membership, "membership.csv (id,discipline,weight)")->required();
    compute->add_option("--out", out, "output directory")->required();
    compute->add_option("--max-order", max_order, "AUTO or the largest path length to include");
    compute->add_option("--norm", norm, "share column used for the SVG chart")
        ->check(CLI::IsMember({"l1", "frobenius"}));
    compute->add_option("--hi-pct", config.hi_pct, "percentile for the positive network")
        ->check(CLI::Range(0.0, 100.0));
    compute->add_option("--lo-pct", config.lo_pct, "percentile for the negative network")
        ->check(CLI::Range(0.0, 100.0));
    compute->add_option("--betweenness", betweenness, "edge lengths for betweenness")
        ->check(CLI::IsMember({"weighted", "unweighted"}));
    compute->add_option("--threads", threads, "worker threads (default: CITEFLOW_THREADS or all cores)")
        ->check(CLI::PositiveNumber);

    citeflow::refkit::SynthSpec spec;
    auto* synth = app.add_subcommand("synth", "Write a seeded random citation DAG as input files");
    synth->add_option("--n", spec.n, "publications")->required()->check(CLI::PositiveNumber);
    synth->add_option("--m", spec.target_m, "target number of citations")->required();
    synth->add_option("--k", spec.k, "disciplines")->required()->check(CLI::PositiveNumber);
    synth->add_option("--seed", spec.seed, "random seed")->required();
    synth->add_option("--month-span", spec.month_span, "number of distinct publication months")
        ->check(CLI::PositiveNumber);
    synth->add_option("--out", out, "output directory")->required();

    try {
        app.parse(argc, argv);
        if (compute->parsed()) config.max_order = parse_order_limit(max_order);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (validate->parsed()) return citeflow::app::cmd_validate(nodes, edges, membership, std::cout, std::cerr);
    if (synth->parsed()) return citeflow::app::cmd_synth(spec, out, std::cerr);

    config.nodes = nodes;
    config.edges = edges;
    config.membership = membership;
    config.out = out;
    config.norm = norm == "frobenius" ? citeflow::NormKind::Frobenius : citeflow::NormKind::EntrywiseL1;
    config.betweenness = betweenness == "weighted" ? citeflow::BetweennessMode::Weighted
                                                   : citeflow::BetweennessMode::Unweighted;
    config.threads = citeflow::app::resolve_threads(threads);
    return citeflow::app::cmd_compute(config, std::cerr);
}
