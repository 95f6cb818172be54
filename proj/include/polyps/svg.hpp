#pragma once

#include <algorithm>
#include <cmath>
#include <ostream>
#include <vector>

#include "polyps/cloud.hpp"
#include "polyps/types.hpp"

namespace polyps {

/// Scatter plot of a cloud with the unperturbed eigenvalues overlaid as
/// squares. Fixed 800x600 viewport, axes autoscaled to the padded bounding
/// box of all drawn points.
inline void write_svg_scatter(const Cloud& cloud, const std::vector<Complex>& eigenvalues,
                              std::ostream& os) {
    constexpr double width = 800.0, height = 600.0, margin = 40.0;
    double xmin = 0.0, xmax = 0.0, ymin = 0.0, ymax = 0.0;
    bool first = true;
    auto grow = [&](Complex z) {
        if (first) {
            xmin = xmax = z.real();
            ymin = ymax = z.imag();
            first = false;
        } else {
            xmin = std::min(xmin, z.real());
            xmax = std::max(xmax, z.real());
            ymin = std::min(ymin, z.imag());
            ymax = std::max(ymax, z.imag());
        }
    };
    for (const auto& p : cloud.points) grow(p.z);
    for (Complex z : eigenvalues) grow(z);
    if (first) { xmin = ymin = -1.0; xmax = ymax = 1.0; }
    const double padx = 0.1 * std::max(xmax - xmin, 1e-30);
    const double pady = 0.1 * std::max(ymax - ymin, 1e-30);
    xmin -= padx; xmax += padx;
    ymin -= pady; ymax += pady;

    auto px = [&](double x) { return margin + (x - xmin) / (xmax - xmin) * (width - 2 * margin); };
    auto py = [&](double y) { return height - margin - (y - ymin) / (ymax - ymin) * (height - 2 * margin); };

    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
       << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    os << "<rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
    // axes through zero when visible
    if (xmin < 0.0 && xmax > 0.0)
        os << "<line x1=\"" << px(0) << "\" y1=\"" << py(ymin) << "\" x2=\"" << px(0) << "\" y2=\""
           << py(ymax) << "\" stroke=\"#cccccc\"/>\n";
    if (ymin < 0.0 && ymax > 0.0)
        os << "<line x1=\"" << px(xmin) << "\" y1=\"" << py(0) << "\" x2=\"" << px(xmax)
           << "\" y2=\"" << py(0) << "\" stroke=\"#cccccc\"/>\n";
    os.precision(8);
    for (const auto& p : cloud.points)
        os << "<circle cx=\"" << px(p.z.real()) << "\" cy=\"" << py(p.z.imag())
           << "\" r=\"1\" fill=\"#1f77b4\" fill-opacity=\"0.5\"/>\n";
    for (Complex z : eigenvalues)
        os << "<rect x=\"" << px(z.real()) - 3 << "\" y=\"" << py(z.imag()) - 3
           << "\" width=\"6\" height=\"6\" fill=\"red\"/>\n";
    os << "</svg>\n";
}

} // namespace polyps
