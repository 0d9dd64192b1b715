// CSV / SVG emission helpers for the CLI.
//
// CSV: comma separator, '.' decimal, LF line endings, fixed header strings
// (documented in the README).  Doubles are written with %.17g so files are
// byte-identical across thread counts.  SVG is a minimal bar chart with an
// optional overlay curve; CSV is the artifact of record.

#pragma once

#include <string>
#include <vector>

#include "ppc/stats.hpp"

namespace ppc {

std::string format_double(double v);  // %.17g

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    void add_row(std::vector<std::string> row);
    std::string to_string() const;            // LF line endings
    void write(const std::string& path) const;
};

// Bars from `hist`, optional overlay polyline sampled at bin midpoints.
void write_svg_histogram(const std::string& path, const Histogram& hist,
                         const std::vector<double>& overlay,
                         const std::string& title);

}  // namespace ppc
