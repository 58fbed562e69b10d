#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "citeflow/analytics.hpp"
#include "citeflow/matrix.hpp"

namespace citeflow::io {

// 12 significant digits, shortest form, never "-0".
std::string format_number(double value);

// Header "discipline,<labels...>", then one labelled row per discipline.
std::string matrix_csv(const std::vector<std::string>& labels, const DenseMatrix& m);

// Columns order,l1_norm,l1_share,frob_norm,frob_share.
std::string contributions_csv(const OrderContributions& l1, const OrderContributions& frob);

std::string dot_graph(const std::string& name, const std::vector<std::string>& labels,
                      const DisciplineNetwork& net, const Partition& communities);

// Fixed 800x400 bar chart of the shares by order.
std::string contributions_svg(const OrderContributions& contributions);

// Throws InputError if the file cannot be written.
void write_file(const std::filesystem::path& path, const std::string& contents);

} // namespace citeflow::io
