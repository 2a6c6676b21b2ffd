#include "render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

#include "upse/error.hpp"

namespace upse::cli {
namespace {

struct Canvas {
  double x;
  double y;
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::vector<Canvas> fit(const PointSet& s, const RenderSpec& spec) {
  std::vector<Canvas> out;
  if (s.empty()) return out;
  Rational minx = s[0].x, maxx = s[0].x, miny = s[0].y, maxy = s[0].y;
  for (const Point& p : s) {
    minx = std::min(minx, p.x);
    maxx = std::max(maxx, p.x);
    miny = std::min(miny, p.y);
    maxy = std::max(maxy, p.y);
  }
  const Rational inner_w(spec.width - 2 * spec.margin);
  const Rational inner_h(spec.height - 2 * spec.margin);
  Rational dx = maxx - minx;
  Rational dy = maxy - miny;
  if (dx.sign() == 0) dx = Rational(1);
  if (dy.sign() == 0) dy = Rational(1);
  const Rational scale = std::min(inner_w / dx, inner_h / dy);
  const Rational two(2);
  const Rational offx = Rational(spec.margin) + (inner_w - (maxx - minx) * scale) / two;
  const Rational offy = Rational(spec.margin) + (inner_h - (maxy - miny) * scale) / two;
  for (const Point& p : s) {
    const Rational x = offx + (p.x - minx) * scale;
    const Rational y = Rational(spec.height) - (offy + (p.y - miny) * scale);
    out.push_back({x.to_double(), y.to_double()});
  }
  return out;
}

}  // namespace

void validate(const RenderSpec& spec) {
  if (spec.width <= 0 || spec.height <= 0 || spec.radius <= 0 || spec.arrow <= 0 || spec.margin < 0) {
    throw Error(ErrorKind::InvalidArgument, "render sizes must be positive");
  }
  if (spec.width <= 2 * spec.margin || spec.height <= 2 * spec.margin) {
    throw Error(ErrorKind::InvalidArgument, "margin leaves no drawing area");
  }
}

std::string render_svg(const Digraph& g, const PointSet& s, const std::optional<Mapping>& m,
                       const RenderSpec& spec) {
  validate(spec);
  if (m) {
    if (m->size() != g.vertex_count()) {
      throw Error(ErrorKind::SizeMismatch, "mapping does not cover the graph");
    }
    for (std::size_t v = 0; v < m->size(); ++v) {
      if ((*m)[v] >= s.size()) {
        throw Error(ErrorKind::InvalidMapping, "vertex '" + g.label(v) + "' mapped outside the point set");
      }
    }
  }
  const auto at = fit(s, spec);
  const double r = static_cast<double>(spec.radius);
  const double head = static_cast<double>(spec.arrow);

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << spec.width << "\" height=\""
      << spec.height << "\" viewBox=\"0 0 " << spec.width << ' ' << spec.height << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  if (m) {
    svg << "<g class=\"arcs\" stroke=\"black\" stroke-width=\"1.5\" fill=\"black\">\n";
    for (const Arc& a : g.arcs()) {
      const Canvas p = at[(*m)[a.tail]];
      const Canvas q = at[(*m)[a.head]];
      const double len = std::hypot(q.x - p.x, q.y - p.y);
      if (len <= 2 * r) {
        svg << "<line x1=\"" << num(p.x) << "\" y1=\"" << num(p.y) << "\" x2=\"" << num(q.x)
            << "\" y2=\"" << num(q.y) << "\"/>\n";
        continue;
      }
      const double ux = (q.x - p.x) / len;
      const double uy = (q.y - p.y) / len;
      const Canvas start{p.x + ux * r, p.y + uy * r};
      const Canvas tip{q.x - ux * r, q.y - uy * r};
      const double h = std::min(head, len - 2 * r);
      const Canvas base{tip.x - ux * h, tip.y - uy * h};
      svg << "<line x1=\"" << num(start.x) << "\" y1=\"" << num(start.y) << "\" x2=\"" << num(base.x)
          << "\" y2=\"" << num(base.y) << "\"/>\n";
      svg << "<polygon points=\"" << num(tip.x) << ',' << num(tip.y) << ' '
          << num(base.x - uy * h / 2) << ',' << num(base.y + ux * h / 2) << ' '
          << num(base.x + uy * h / 2) << ',' << num(base.y - ux * h / 2) << "\"/>\n";
    }
    svg << "</g>\n";
  }

  svg << "<g class=\"points\" fill=\"#1f4e8c\">\n";
  for (const Canvas& c : at) {
    svg << "<circle cx=\"" << num(c.x) << "\" cy=\"" << num(c.y) << "\" r=\"" << spec.radius << "\"/>\n";
  }
  svg << "</g>\n";

  if (spec.labels) {
    std::vector<std::string> text(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) text[i] = std::to_string(i);
    if (m) {
      for (std::size_t i = 0; i < s.size(); ++i) text[i].clear();
      for (std::size_t v = 0; v < m->size(); ++v) {
        auto& t = text[(*m)[v]];
        t += (t.empty() ? "" : ",") + g.label(v);
      }
    }
    svg << "<g class=\"labels\" font-family=\"sans-serif\" font-size=\"" << num(2.4 * r) << "\">\n";
    for (std::size_t i = 0; i < s.size(); ++i) {
      svg << "<text x=\"" << num(at[i].x + 1.5 * r) << "\" y=\"" << num(at[i].y - 1.5 * r) << "\">"
          << escape(text[i]) << "</text>\n";
    }
    svg << "</g>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace upse::cli
