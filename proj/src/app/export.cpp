#include "citeflow/export.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>

#include "citeflow/errors.hpp"

namespace citeflow::io {

std::string format_number(double value) {
    if (value == 0.0) value = 0.0; // folds -0
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    std::string s(buf);
    if (s == "-0") s = "0";
    return s;
}

std::string matrix_csv(const std::vector<std::string>& labels, const DenseMatrix& m) {
    std::string out = "discipline";
    for (const auto& l : labels) out += "," + l;
    out += "\n";
    for (std::size_t r = 0; r < m.rows(); ++r) {
        out += labels.at(r);
        for (std::size_t c = 0; c < m.cols(); ++c) out += "," + format_number(m(r, c));
        out += "\n";
    }
    return out;
}

std::string contributions_csv(const OrderContributions& l1, const OrderContributions& frob) {
    std::string out = "order,l1_norm,l1_share,frob_norm,frob_share\n";
    for (std::size_t i = 0; i < l1.orders.size(); ++i) {
        const auto& a = l1.orders[i];
        const auto& b = frob.orders.at(i);
        out += std::to_string(a.order) + "," + format_number(a.norm) + "," + format_number(a.share) +
               "," + format_number(b.norm) + "," + format_number(b.share) + "\n";
    }
    return out;
}

namespace {

std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (const char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

} // namespace

std::string dot_graph(const std::string& name, const std::vector<std::string>& labels,
                      const DisciplineNetwork& net, const Partition& communities) {
    std::string out = "graph " + name + " {\n  node [colorscheme=set312, style=filled];\n";
    for (std::size_t v = 0; v < labels.size(); ++v) {
        const auto c = communities.at(v);
        out += "  " + quoted(labels[v]) + " [community=" + std::to_string(c) +
               ", fillcolor=" + std::to_string(c % 12 + 1) + "];\n";
    }
    for (const auto& e : net.edges) {
        const auto w = format_number(e.weight);
        out += "  " + quoted(labels.at(e.u)) + " -- " + quoted(labels.at(e.v)) + " [weight=" + w +
               ", label=\"" + w + "\"];\n";
    }
    return out + "}\n";
}

std::string contributions_svg(const OrderContributions& contributions) {
    constexpr double width = 800, height = 400, left = 60, right = 20, top = 20, bottom = 50;
    const double plot_w = width - left - right;
    const double plot_h = height - top - bottom;
    const auto& orders = contributions.orders;
    const char* norm = contributions.kind == NormKind::EntrywiseL1 ? "l1" : "frobenius";

    char buf[256];
    std::string out =
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"400\" viewBox=\"0 0 800 400\">\n"
        "<rect width=\"800\" height=\"400\" fill=\"white\"/>\n";
    std::snprintf(buf, sizeof buf,
                  "<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"black\"/>\n", left,
                  top + plot_h, left + plot_w, top + plot_h);
    out += buf;
    std::snprintf(buf, sizeof buf,
                  "<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"black\"/>\n", left, top,
                  left, top + plot_h);
    out += buf;
    for (const double tick : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        std::snprintf(buf, sizeof buf,
                      "<text x=\"%.2f\" y=\"%.2f\" font-size=\"11\" text-anchor=\"end\">%.2f</text>\n",
                      left - 6, top + plot_h - tick * plot_h + 4, tick);
        out += buf;
    }
    if (!orders.empty()) {
        const double slot = plot_w / static_cast<double>(orders.size());
        const double bar = std::max(1.0, slot * 0.8);
        for (std::size_t i = 0; i < orders.size(); ++i) {
            const double h = orders[i].share * plot_h;
            const double x = left + slot * static_cast<double>(i) + (slot - bar) / 2;
            std::snprintf(buf, sizeof buf,
                          "<rect x=\"%.2f\" y=\"%.2f\" width=\"%.2f\" height=\"%.2f\" fill=\"steelblue\"/>\n",
                          x, top + plot_h - h, bar, h);
            out += buf;
            if (orders.size() <= 40) {
                std::snprintf(buf, sizeof buf,
                              "<text x=\"%.2f\" y=\"%.2f\" font-size=\"11\" text-anchor=\"middle\">%zu</text>\n",
                              x + bar / 2, top + plot_h + 15, orders[i].order);
                out += buf;
            }
        }
    }
    std::snprintf(buf, sizeof buf,
                  "<text x=\"%.2f\" y=\"%.2f\" font-size=\"13\" text-anchor=\"middle\">order (path length)</text>\n",
                  left + plot_w / 2, height - 10);
    out += buf;
    std::snprintf(buf, sizeof buf,
                  "<text x=\"15\" y=\"%.2f\" font-size=\"13\" text-anchor=\"middle\" "
                  "transform=\"rotate(-90 15 %.2f)\">share (%s)</text>\n",
                  top + plot_h / 2, top + plot_h / 2, norm);
    out += buf;
    return out + "</svg>\n";
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw InputError("cannot write " + path.string());
    f.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!f) throw InputError("failed writing " + path.string());
}

} // namespace citeflow::io
