#include "ortho/svg.hpp"

#include <charconv>
#include <sstream>

namespace ortho {

namespace {

// Locale-independent fixed formatting keeps the output byte-stable.
std::string num(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, 2);
  return std::string(buf, res.ptr);
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
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

}  // namespace

std::string emit_svg(const Drawing& drawing, const SvgStyle& style, const SvgDebugData* debug) {
  Rect b = drawing.content_bounds().inflated(style.padding);
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" << num(b.x0)
      << " " << num(b.y0) << " " << num(b.width()) << " " << num(b.height()) << "\">\n";

  if (style.debug_layers && debug != nullptr) {
    out << "  <g id=\"channels\" fill=\"#ffa50033\" stroke=\"none\">\n";
    for (const Channel& c : debug->channels) {
      out << "    <rect x=\"" << num(c.rect.x0) << "\" y=\"" << num(c.rect.y0) << "\" width=\""
          << num(c.rect.width()) << "\" height=\"" << num(c.rect.height()) << "\"/>\n";
    }
    out << "  </g>\n";
    out << "  <g id=\"representatives\" stroke=\"#d04040\" stroke-width=\"0.8\" "
           "stroke-dasharray=\"3,2\">\n";
    for (const Representative& r : debug->representatives) {
      Point a = r.seg.low_end(), z = r.seg.high_end();
      out << "    <line x1=\"" << num(a.x) << "\" y1=\"" << num(a.y) << "\" x2=\"" << num(z.x)
          << "\" y2=\"" << num(z.y) << "\"/>\n";
    }
    out << "  </g>\n";
  }

  out << "  <g id=\"edges\" fill=\"none\" stroke=\"#3060c0\" stroke-width=\"1.2\">\n";
  for (const RoutedPath& p : drawing.paths) {
    out << "    <polyline points=\"";
    for (size_t i = 0; i < p.pts.size(); ++i) {
      if (i) out << " ";
      out << num(p.pts[i].x) << "," << num(p.pts[i].y);
    }
    out << "\"/>\n";
  }
  out << "  </g>\n";

  out << "  <g id=\"vertices\" fill=\"#f2f2f2\" stroke=\"#202020\" stroke-width=\"1\">\n";
  for (size_t v = 0; v < drawing.boxes.size(); ++v) {
    Rect r = drawing.boxes[v].rect();
    out << "    <rect x=\"" << num(r.x0) << "\" y=\"" << num(r.y0) << "\" width=\""
        << num(r.width()) << "\" height=\"" << num(r.height()) << "\"/>\n";
  }
  out << "  </g>\n";

  out << "  <g id=\"labels\" font-family=\"monospace\" font-size=\"" << num(style.font_size)
      << "\" text-anchor=\"middle\" dominant-baseline=\"central\" fill=\"#202020\" "
         "stroke=\"none\">\n";
  for (size_t v = 0; v < drawing.boxes.size(); ++v) {
    const auto& label = drawing.labels[v];
    if (!label || label->empty()) continue;
    Point c = drawing.boxes[v].center;
    out << "    <text x=\"" << num(c.x) << "\" y=\"" << num(c.y) << "\">" << escape(*label)
        << "</text>\n";
  }
  out << "  </g>\n";
  out << "</svg>\n";
  return out.str();
}

}  // namespace ortho
