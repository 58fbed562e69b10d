#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <regex>
#include <thread>

#include "citeflow/app.hpp"
#include "citeflow/errors.hpp"
#include "citeflow/export.hpp"
#include "citeflow/kernels.hpp"

namespace citeflow::app {

namespace fs = std::filesystem;

namespace {

constexpr std::size_t kShownWarnings = 10;

void print_warnings(const std::vector<std::string>& warnings, std::ostream& err) {
    for (std::size_t i = 0; i < warnings.size() && i < kShownWarnings; ++i)
        err << "warning: " << warnings[i] << "\n";
    if (warnings.size() > kShownWarnings)
        err << "warning: ... " << warnings.size() - kShownWarnings << " more\n";
}

class StageLog {
public:
    explicit StageLog(std::ostream& out) : out_(out), start_(std::chrono::steady_clock::now()) {}

    void operator()(const std::string& what) {
        const auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_);
        char buf[32];
        std::snprintf(buf, sizeof buf, "[%8.3fs] ", elapsed.count());
        out_ << buf << what << "\n";
    }

private:
    std::ostream& out_;
    std::chrono::steady_clock::time_point start_;
};

template <class Fn>
int guarded(std::ostream& err, Fn&& fn) {
    try {
        return fn();
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const InvariantError& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
}

void clear_order_files(const fs::path& dir) {
    static const std::regex order_file(R"(M_[0-9]+\.csv)");
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.is_regular_file() && std::regex_match(entry.path().filename().string(), order_file))
            fs::remove(entry.path());
    }
}

} // namespace

int resolve_threads(int flag_value) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("CITEFLOW_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    const auto hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

Inputs load_inputs(const fs::path& nodes, const fs::path& edges, const fs::path& membership) {
    auto node_table = parse_nodes(nodes);
    auto edge_list = parse_edges(edges);
    auto [graph, report] = build_graph(node_table, edge_list);
    auto q = parse_membership(membership, graph, report.warnings);
    return {std::move(graph), std::move(report), std::move(q)};
}

int cmd_validate(const fs::path& nodes, const fs::path& edges, const fs::path& membership,
                 std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const auto inputs = load_inputs(nodes, edges, membership);
        const auto& r = inputs.report;
        print_warnings(r.warnings, err);
        out << "nodes_read=" << r.nodes_read << "\n"
            << "edges_read=" << r.edges_read << "\n"
            << "synchronous_edges_discarded=" << r.synchronous_edges_discarded << "\n"
            << "duplicate_edges_discarded=" << r.duplicate_edges_discarded << "\n"
            << "n=" << inputs.graph.node_count() << "\n"
            << "m=" << inputs.graph.edge_count() << "\n"
            << "disciplines=" << inputs.membership.discipline_count() << "\n"
            << "longest_path=" << longest_path_length(inputs.graph) << "\n"
            << "warnings=" << r.warnings.size() << "\n";
        return 0;
    });
}

void run_compute(const Inputs& inputs, const RunConfig& config, std::ostream& log_stream) {
    StageLog log(log_stream);
    const auto& labels = inputs.membership.labels;
    const auto& graph = inputs.graph;

    const CitationOperator op(graph);
    log("operator built, longest path " + std::to_string(op.nilpotency_bound()));

    const auto flows = compute_flows(op, inputs.membership, config.max_order);
    log("flow decomposition done, " + std::to_string(flows.order_count()) + " orders");

    const auto r = dependence_vector(op);
    log("dependence vector done");

    const auto l1 = order_contributions(flows, NormKind::EntrywiseL1);
    const auto frob = order_contributions(flows, NormKind::Frobenius);
    const auto& total = flows.total();
    const auto normalized = normalized_flow(total);
    const auto nets = threshold_network(normalized.normalized, config.hi_pct, config.lo_pct);
    const auto communities = detect_communities(nets.positive);
    const auto betweenness = betweenness_centrality(nets.positive, config.betweenness);
    const auto rao = rao_entropy(total);
    const auto summary = discipline_summary(total, inputs.membership.sizes());
    log("analytics done, " + std::to_string(nets.positive.edges.size()) + " positive and " +
        std::to_string(nets.negative.edges.size()) + " negative edges");

    const auto& out = config.out;
    io::write_file(out / "F.csv", io::matrix_csv(labels, total));
    io::write_file(out / "F0.csv", io::matrix_csv(labels, flows.identity_flow()));
    for (std::size_t i = 1; i <= flows.order_count(); ++i)
        io::write_file(out / ("M_" + std::to_string(i) + ".csv"),
                       io::matrix_csv(labels, flows.order_flow(i)));
    io::write_file(out / "contributions.csv", io::contributions_csv(l1, frob));
    io::write_file(out / "fhat.csv", io::matrix_csv(labels, normalized.normalized));
    io::write_file(out / "E.csv", io::matrix_csv(labels, normalized.expected));

    std::string text = "discipline,size,self_flow,incoming_flow,outgoing_flow\n";
    for (std::size_t v = 0; v < labels.size(); ++v) {
        const auto& s = summary[v];
        text += labels[v] + "," + io::format_number(s.size) + "," + io::format_number(s.self_flow) +
                "," + io::format_number(s.incoming_flow) + "," + io::format_number(s.outgoing_flow) +
                "\n";
    }
    io::write_file(out / "summary.csv", text);

    text = "id,dependence\n";
    for (NodeIndex i = 0; i < graph.node_count(); ++i)
        text += graph.id(i) + "," + io::format_number(r[i]) + "\n";
    io::write_file(out / "r.csv", text);

    text = "discipline,community\n";
    for (std::size_t v = 0; v < labels.size(); ++v)
        text += labels[v] + "," + std::to_string(communities.partition[v]) + "\n";
    io::write_file(out / "communities.csv", text);

    text = "discipline,betweenness\n";
    for (std::size_t v = 0; v < labels.size(); ++v)
        text += labels[v] + "," + io::format_number(betweenness[v]) + "\n";
    io::write_file(out / "betweenness.csv", text);

    text = "discipline,score\n";
    for (std::size_t v = 0; v < labels.size(); ++v)
        text += labels[v] + "," + io::format_number(rao.scores[v]) + "\n";
    io::write_file(out / "rao.csv", text);

    io::write_file(out / "positive.dot",
                   io::dot_graph("positive", labels, nets.positive, communities.partition));
    io::write_file(out / "negative.dot",
                   io::dot_graph("negative", labels, nets.negative, communities.partition));
    io::write_file(out / "contributions.svg",
                   io::contributions_svg(config.norm == NormKind::EntrywiseL1 ? l1 : frob));
    log("wrote outputs to " + out.string());
}

int cmd_compute(const RunConfig& config, std::ostream& err) {
    return guarded(err, [&] {
        if (!(config.hi_pct > config.lo_pct))
            throw InputError("--hi-pct must be greater than --lo-pct");
        if (config.hi_pct < 0 || config.hi_pct > 100 || config.lo_pct < 0 || config.lo_pct > 100)
            throw InputError("percentiles must lie in 0..100");
        if (config.threads > 0) kernels::set_threads(config.threads);

        StageLog log(err);
        const auto inputs = load_inputs(config.nodes, config.edges, config.membership);
        print_warnings(inputs.report.warnings, err);
        log("loaded " + std::to_string(inputs.graph.node_count()) + " publications, " +
            std::to_string(inputs.graph.edge_count()) + " citations, " +
            std::to_string(inputs.membership.discipline_count()) + " disciplines, " +
            std::to_string(kernels::max_threads()) + " threads");

        std::error_code ec;
        fs::create_directories(config.out, ec);
        if (ec || !fs::is_directory(config.out))
            throw InputError("cannot create output directory " + config.out.string());
        clear_order_files(config.out);
        run_compute(inputs, config, err);
        return 0;
    });
}

int cmd_synth(const refkit::SynthSpec& spec, const fs::path& out_dir, std::ostream& err) {
    return guarded(err, [&] {
        const auto records = refkit::random_dag_records(spec);
        print_warnings(records.warnings, err);
        std::error_code ec;
        fs::create_directories(out_dir, ec);
        if (ec || !fs::is_directory(out_dir))
            throw InputError("cannot create output directory " + out_dir.string());

        std::string text = "id,year,month\n";
        for (const auto& node : records.nodes.nodes)
            text += node.id + "," + std::to_string(node.time.year) + "," +
                    std::to_string(node.time.month) + "\n";
        io::write_file(out_dir / "nodes.csv", text);

        text = "citing,cited\n";
        for (const auto& e : records.edges) text += e.citing + "," + e.cited + "\n";
        io::write_file(out_dir / "edges.csv", text);

        text = "id,discipline,weight\n";
        char buf[32];
        for (const auto& row : records.membership) {
            std::snprintf(buf, sizeof buf, "%.17g", row.weight);
            text += row.id + "," + row.discipline + "," + buf + "\n";
        }
        io::write_file(out_dir / "membership.csv", text);
        err << "wrote " << records.nodes.nodes.size() << " nodes, " << records.edges.size()
            << " edges to " << out_dir.string() << "\n";
        return 0;
    });
}

} // namespace citeflow::app
