#include "ppc/report.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace ppc {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void CsvTable::add_row(std::vector<std::string> row) {
    if (row.size() != header.size())
        throw std::invalid_argument("CsvTable: row width != header width");
    rows.push_back(std::move(row));
}

std::string CsvTable::to_string() const {
    std::string out;
    auto line = [&out](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) out += ',';
            out += cells[i];
        }
        out += '\n';
    };
    line(header);
    for (const auto& r : rows) line(r);
    return out;
}

void CsvTable::write(const std::string& path) const {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path);
    f << to_string();
}

void write_svg_histogram(const std::string& path, const Histogram& hist,
                         const std::vector<double>& overlay,
                         const std::string& title) {
    const int W = 720, H = 420, ml = 60, mr = 20, mt = 40, mb = 40;
    const int pw = W - ml - mr, ph = H - mt - mb;
    const std::size_t nb = hist.masses.size();
    double ymax = 1e-12;
    for (double m : hist.masses) ymax = std::max(ymax, m);
    for (double m : overlay) ymax = std::max(ymax, m);
    ymax *= 1.08;

    std::string s;
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(W) +
         "\" height=\"" + std::to_string(H) + "\">\n";
    s += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    s += "<text x=\"" + std::to_string(W / 2) + "\" y=\"24\" text-anchor=\"middle\" "
         "font-family=\"sans-serif\" font-size=\"15\">" + title + "</text>\n";
    // axes
    auto px = [&](double t) { return ml + t / hist.t_max * pw; };
    auto py = [&](double v) { return mt + (1.0 - v / ymax) * ph; };
    s += "<line x1=\"" + std::to_string(ml) + "\" y1=\"" + std::to_string(mt + ph) +
         "\" x2=\"" + std::to_string(ml + pw) + "\" y2=\"" + std::to_string(mt + ph) +
         "\" stroke=\"black\"/>\n";
    s += "<line x1=\"" + std::to_string(ml) + "\" y1=\"" + std::to_string(mt) +
         "\" x2=\"" + std::to_string(ml) + "\" y2=\"" + std::to_string(mt + ph) +
         "\" stroke=\"black\"/>\n";
    for (int i = 0; i <= 5; ++i) {
        double t = hist.t_max * i / 5.0;
        s += "<text x=\"" + format_double(px(t)) + "\" y=\"" + std::to_string(mt + ph + 16) +
             "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" +
             format_double(t) + "</text>\n";
        double v = ymax * i / 5.0;
        char lbl[32];
        std::snprintf(lbl, sizeof lbl, "%.3g", v);
        s += "<text x=\"" + std::to_string(ml - 6) + "\" y=\"" + format_double(py(v) + 4) +
             "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" +
             std::string(lbl) + "</text>\n";
    }
    // bars
    for (std::size_t i = 0; i < nb; ++i) {
        double x0 = px(static_cast<double>(i) * hist.bin_width);
        double x1 = px(std::min(hist.t_max, static_cast<double>(i + 1) * hist.bin_width));
        double y = py(hist.masses[i]);
        s += "<rect x=\"" + format_double(x0) + "\" y=\"" + format_double(y) + "\" width=\"" +
             format_double(std::max(0.5, x1 - x0 - 0.6)) + "\" height=\"" +
             format_double(mt + ph - y) + "\" fill=\"#7aa6d8\"/>\n";
    }
    // overlay polyline at bin midpoints
    if (!overlay.empty()) {
        s += "<polyline fill=\"none\" stroke=\"#c03030\" stroke-width=\"1.6\" points=\"";
        for (std::size_t i = 0; i < overlay.size() && i < nb; ++i) {
            double t = (static_cast<double>(i) + 0.5) * hist.bin_width;
            s += format_double(px(t)) + "," + format_double(py(overlay[i])) + " ";
        }
        s += "\"/>\n";
    }
    s += "</svg>\n";

    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path);
    f << s;
}

}  // namespace ppc
