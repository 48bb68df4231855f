#include "kirwan/svg.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace kirwan {

namespace {

// Clip a convex polygon against the halfplane p*x + q*y >= 0.
std::vector<Weight> clip_halfplane(const std::vector<Weight>& poly,
                                   const Rat& p, const Rat& q) {
    std::vector<Weight> out;
    const auto value = [&](const Weight& w) { return p * w.x + q * w.y; };
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const Weight& a = poly[i];
        const Weight& b = poly[(i + 1) % poly.size()];
        const Rat va = value(a), vb = value(b);
        if (va.sign() >= 0) out.push_back(a);
        if ((va.sign() >= 0) != (vb.sign() >= 0)) {
            // Exact intersection of the edge with the boundary line.
            const Rat t = va / (va - vb);
            out.push_back(a + (b - a) * t);
        }
    }
    return out;
}

std::string fmt(const Rat& r) {
    // Fixed-precision decimal for SVG output.
    const double v = static_cast<double>(r.num()) / static_cast<double>(r.den());
    std::ostringstream os;
    os.precision(4);
    os << std::fixed << v;
    return os.str();
}

} // namespace

std::string diagram_svg(const WeightSystem& ws, const ChamberDesc& chamber,
                        const std::set<Weight>& index) {
    // Bounding box over weights, index points and the origin, padded.
    Rat xmin(0), xmax(0), ymin(0), ymax(0);
    auto grow = [&](const Weight& w) {
        xmin = std::min(xmin, w.x);
        xmax = std::max(xmax, w.x);
        ymin = std::min(ymin, w.y);
        ymax = std::max(ymax, w.y);
    };
    for (const auto& e : ws.weights) grow(e.w);
    for (const auto& b : index) grow(b);
    const Rat pad(1);
    xmin -= pad;
    ymin -= pad;
    xmax += pad;
    ymax += pad;

    const int scale = 60;
    auto sx = [&](const Rat& x) { return fmt((x - xmin) * Rat(scale)); };
    // SVG's y axis points down.
    auto sy = [&](const Rat& y) { return fmt((ymax - y) * Rat(scale)); };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
       << fmt((xmax - xmin) * Rat(scale)) << "\" height=\""
       << fmt((ymax - ymin) * Rat(scale)) << "\">\n";

    // Chamber cone clipped to the bounding box.
    if (!chamber.halfspaces.empty()) {
        std::vector<Weight> poly = {{xmin, ymin},
                                    {xmax, ymin},
                                    {xmax, ymax},
                                    {xmin, ymax}};
        for (const auto& [p, q] : chamber.halfspaces)
            poly = clip_halfplane(poly, p, q);
        // Drop duplicate vertices the clipper leaves at corners.
        std::vector<Weight> dedup;
        for (const auto& v : poly)
            if (dedup.empty() || !(dedup.back() == v)) dedup.push_back(v);
        while (dedup.size() > 1 && dedup.front() == dedup.back())
            dedup.pop_back();
        poly = dedup;
        if (poly.size() >= 3) {
            os << "  <polygon class=\"chamber\" fill=\"#d8d8d8\" points=\"";
            for (std::size_t i = 0; i < poly.size(); ++i) {
                if (i) os << " ";
                os << sx(poly[i].x) << "," << sy(poly[i].y);
            }
            os << "\"/>\n";
        }
    }

    // Axes through the origin.
    os << "  <line x1=\"" << sx(xmin) << "\" y1=\"" << sy(Rat(0))
       << "\" x2=\"" << sx(xmax) << "\" y2=\"" << sy(Rat(0))
       << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    os << "  <line x1=\"" << sx(Rat(0)) << "\" y1=\"" << sy(ymin)
       << "\" x2=\"" << sx(Rat(0)) << "\" y2=\"" << sy(ymax)
       << "\" stroke=\"black\" stroke-width=\"1\"/>\n";

    for (const auto& e : ws.weights) {
        os << "  <circle class=\"weight\" cx=\"" << sx(e.w.x) << "\" cy=\""
           << sy(e.w.y) << "\" r=\"5\" fill=\"black\">"
           << "<title>" << e.label << " " << e.w.str();
        if (e.multiplicity > 1) os << " x" << e.multiplicity;
        os << "</title></circle>\n";
    }
    for (const auto& b : index) {
        os << "  <circle class=\"index\" cx=\"" << sx(b.x) << "\" cy=\""
           << sy(b.y)
           << "\" r=\"9\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\">"
           << "<title>" << b.str() << "</title></circle>\n";
    }
    os << "</svg>\n";
    return os.str();
}

} // namespace kirwan
