#include <algorithm>
#include <charconv>
#include <fstream>
#include <unordered_set>

#include "citeflow/citegraph.hpp"
#include "citeflow/errors.hpp"
#include "csv.hpp"

namespace citeflow {

namespace {

std::ifstream open_input(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path.string());
    return in;
}

std::optional<int> parse_int(std::string_view s) {
    int value = 0;
    const auto* end = s.data() + s.size();
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    const auto [ptr, ec] = std::from_chars(s.data(), end, value);
    if (s.empty() || ec != std::errc() || ptr != end) return std::nullopt;
    return value;
}

std::string at_line(std::size_t line) { return " on line " + std::to_string(line); }

} // namespace

NodeTable parse_nodes(std::istream& in) {
    detail::CsvReader reader(in, "nodes", {"id", "year", "month"});
    NodeTable table;
    std::unordered_set<std::string> seen;
    std::vector<std::string> f;
    while (reader.next(f)) {
        const auto line = reader.line();
        if (f[0].empty()) throw InputError("nodes: empty id" + at_line(line));
        if (!seen.insert(f[0]).second)
            throw InputError("duplicate node id " + f[0] + at_line(line));
        const auto year = parse_int(f[1]);
        if (!year) throw InputError("nodes: year '" + f[1] + "' is not an integer" + at_line(line));
        int month = 1;
        if (f[2].empty()) {
            table.warnings.push_back("node " + f[0] + at_line(line) + " has no month, using 1");
        } else {
            const auto m = parse_int(f[2]);
            if (!m || *m < 1 || *m > 12)
                throw InputError("nodes: month '" + f[2] + "' is not in 1..12" + at_line(line));
            month = *m;
        }
        table.nodes.push_back({std::move(f[0]), PubTime{*year, month}});
    }
    return table;
}

NodeTable parse_nodes(const std::filesystem::path& path) {
    auto in = open_input(path);
    return parse_nodes(in);
}

std::vector<EdgeRecord> parse_edges(std::istream& in) {
    detail::CsvReader reader(in, "edges", {"citing", "cited"});
    std::vector<EdgeRecord> edges;
    std::vector<std::string> f;
    while (reader.next(f)) {
        if (f[0].empty()) throw InputError("missing citing id" + at_line(reader.line()));
        if (f[1].empty()) throw InputError("missing cited id" + at_line(reader.line()));
        edges.push_back({std::move(f[0]), std::move(f[1]), reader.line()});
    }
    return edges;
}

std::vector<EdgeRecord> parse_edges(const std::filesystem::path& path) {
    auto in = open_input(path);
    return parse_edges(in);
}

std::pair<CitationGraph, IngestReport> build_graph(const NodeTable& nodes,
                                                   const std::vector<EdgeRecord>& edges) {
    if (nodes.nodes.empty()) throw InputError("node table is empty");

    CitationGraph g;
    IngestReport report;
    report.nodes_read = nodes.nodes.size();
    report.edges_read = edges.size();
    report.warnings = nodes.warnings;

    const auto n = nodes.nodes.size();
    g.ids_.reserve(n);
    g.times_.reserve(n);
    g.index_.reserve(n);
    for (const auto& rec : nodes.nodes) {
        const auto idx = static_cast<NodeIndex>(g.ids_.size());
        if (!g.index_.emplace(rec.id, idx).second)
            throw InputError("duplicate node id " + rec.id);
        g.ids_.push_back(rec.id);
        g.times_.push_back(rec.time);
    }

    auto resolve = [&](const std::string& id, const EdgeRecord& e) {
        const auto it = g.index_.find(id);
        if (it == g.index_.end()) {
            throw InputError("edge references unknown node id " + id +
                             (e.line ? at_line(e.line) : std::string()));
        }
        return it->second;
    };

    std::vector<std::pair<NodeIndex, NodeIndex>> kept;
    kept.reserve(edges.size());
    for (const auto& e : edges) {
        const auto from = resolve(e.citing, e);
        const auto to = resolve(e.cited, e);
        if (g.times_[from] <= g.times_[to]) {
            ++report.synchronous_edges_discarded;
            continue;
        }
        kept.emplace_back(from, to);
    }
    std::sort(kept.begin(), kept.end());
    const auto unique_end = std::unique(kept.begin(), kept.end());
    report.duplicate_edges_discarded = static_cast<std::size_t>(kept.end() - unique_end);
    kept.erase(unique_end, kept.end());

    g.row_ptr_.assign(n + 1, 0);
    g.cited_.reserve(kept.size());
    for (const auto& [from, to] : kept) {
        ++g.row_ptr_[from + 1];
        g.cited_.push_back(to);
    }
    for (std::size_t i = 0; i < n; ++i) g.row_ptr_[i + 1] += g.row_ptr_[i];

    if (report.edges_read != g.edge_count() + report.synchronous_edges_discarded +
                                 report.duplicate_edges_discarded)
        throw InvariantError("edge counters do not reconcile");
    return {std::move(g), std::move(report)};
}

} // namespace citeflow
