#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "citeflow/analytics.hpp"
#include "citeflow/citegraph.hpp"
#include "citeflow/dependence.hpp"
#include "citeflow/refkit.hpp"

namespace citeflow::app {

struct RunConfig {
    std::filesystem::path nodes;
    std::filesystem::path edges;
    std::filesystem::path membership;
    std::filesystem::path out;
    OrderLimit max_order = OrderLimit::automatic();
    NormKind norm = NormKind::EntrywiseL1;
    double hi_pct = 90.0;
    double lo_pct = 10.0;
    BetweennessMode betweenness = BetweennessMode::Unweighted;
    int threads = 0; // 0: leave the OpenMP default
};

struct Inputs {
    CitationGraph graph;
    IngestReport report;
    Membership membership;
};

Inputs load_inputs(const std::filesystem::path& nodes, const std::filesystem::path& edges,
                   const std::filesystem::path& membership);

// Each command returns the process exit code: 0 ok, 2 input error, 1 internal error.
int cmd_validate(const std::filesystem::path& nodes, const std::filesystem::path& edges,
                 const std::filesystem::path& membership, std::ostream& out, std::ostream& err);
int cmd_compute(const RunConfig& config, std::ostream& err);
int cmd_synth(const refkit::SynthSpec& spec, const std::filesystem::path& out_dir, std::ostream& err);

// Writes every analysis artifact for already loaded inputs.
void run_compute(const Inputs& inputs, const RunConfig& config, std::ostream& log);

// Thread count from --threads, then CITEFLOW_THREADS, then hardware concurrency.
int resolve_threads(int flag_value);

} // namespace citeflow::app
