#include "pentlab/svg.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <sstream>

namespace pentlab {

std::string svg_number(const Rational& x)
{
    std::array<char, 32> buf{};
    std::snprintf(buf.data(), buf.size(), "%.12g", x.get_d());
    std::string s = buf.data();
    return s == "-0" ? "0" : s;
}

namespace {

constexpr std::array<const char*, 6> palette{"#1f4e9c", "#c0392b", "#27864a", "#8e44ad", "#d35400", "#2c3e50"};

struct Frame {
    Rational min_x, max_y, scale, pad;

    std::string x(const Rational& v) const { return svg_number((v - min_x) * scale + pad); }
    std::string y(const Rational& v) const { return svg_number((max_y - v) * scale + pad); }
    std::string pt(const Vec& p) const { return x(p[0]) + "," + y(p[1]); }
};

}  // namespace

std::string SvgScene::render(int width) const
{
    std::vector<const Vec*> all;
    for (const auto& poly : polygons)
        for (const auto& p : poly)
            all.push_back(&p);
    for (const auto& [a, b] : diagonals) {
        all.push_back(&a);
        all.push_back(&b);
    }
    for (const auto& p : dots)
        all.push_back(&p);
    if (marker)
        all.push_back(&*marker);

    Rational min_x = 0, max_x = 1, min_y = 0, max_y = 1;
    if (!all.empty()) {
        min_x = max_x = (*all.front())[0];
        min_y = max_y = (*all.front())[1];
        for (const Vec* p : all) {
            min_x = std::min(min_x, (*p)[0]);
            max_x = std::max(max_x, (*p)[0]);
            min_y = std::min(min_y, (*p)[1]);
            max_y = std::max(max_y, (*p)[1]);
        }
    }
    Rational span = std::max(max_x - min_x, max_y - min_y);
    if (span == 0)
        span = 1;
    const Rational pad = 20;
    const Rational inner = Rational(width) - 2 * pad;
    const Frame f{min_x, max_y, inner / span, pad};
    const std::string w = svg_number((max_x - min_x) * f.scale + 2 * pad);
    const std::string h = svg_number((max_y - min_y) * f.scale + 2 * pad);

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << w << "\" height=\"" << h
        << "\" viewBox=\"0 0 " << w << " " << h << "\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (const auto& [a, b] : axes)
        out << "<line x1=\"" << f.x(a[0]) << "\" y1=\"" << f.y(a[1]) << "\" x2=\"" << f.x(b[0]) << "\" y2=\""
            << f.y(b[1]) << "\" stroke=\"#999999\" stroke-width=\"0.5\"/>\n";
    for (const auto& [a, b] : diagonals)
        out << "<line x1=\"" << f.x(a[0]) << "\" y1=\"" << f.y(a[1]) << "\" x2=\"" << f.x(b[0]) << "\" y2=\""
            << f.y(b[1]) << "\" stroke=\"#777777\" stroke-width=\"0.75\" stroke-dasharray=\"4,3\"/>\n";
    for (std::size_t i = 0; i < polygons.size(); ++i) {
        out << "<polygon points=\"";
        for (std::size_t k = 0; k < polygons[i].size(); ++k)
            out << (k ? " " : "") << f.pt(polygons[i][k]);
        out << "\" fill=\"none\" stroke=\"" << palette[i % palette.size()] << "\" stroke-width=\"1.5\"/>\n";
    }
    for (const auto& p : dots)
        out << "<circle cx=\"" << f.x(p[0]) << "\" cy=\"" << f.y(p[1]) << "\" r=\"2.5\" fill=\"#1f4e9c\"/>\n";
    if (marker)
        out << "<circle cx=\"" << f.x((*marker)[0]) << "\" cy=\"" << f.y((*marker)[1])
            << "\" r=\"5\" fill=\"none\" stroke=\"#c0392b\" stroke-width=\"2\"/>\n";
    out << "</svg>\n";
    return out.str();
}

}  // namespace pentlab
