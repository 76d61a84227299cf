#include "zcol/svg.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace zcol {
namespace {

// Fixed stroke palette, indexed by the rank of an arc's color among the
// sorted distinct colors of the coloring (cycled when more than 10 colors).
const char* kStrokes[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                          "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f"};
constexpr int kStrokeCount = 10;

constexpr int kColWidth = 60;   // x span of one crossing column
constexpr int kRowHeight = 40;  // y gap between strand positions
constexpr int kRailGap = 14;    // spacing between nested closure rails
constexpr int kMargin = 40;     // outer margin around the rails

struct Painter {
  const Diagram& d;
  const BigVec& colors;
  std::vector<BigInt> palette;  // sorted distinct colors
  std::ostringstream body;
  int xL, xR, yTop, yBot, width, height;

  Painter(const Diagram& d_, const BigVec& colors_) : d(d_), colors(colors_) {
    palette.assign(colors.begin(), colors.end());
    std::sort(palette.begin(), palette.end());
    palette.erase(std::unique(palette.begin(), palette.end()), palette.end());
    int rails = kRailGap * d.word.strands;
    xL = kMargin + rails;
    xR = xL + kColWidth * std::max<int>(1, (int)d.word.letters.size());
    yTop = kMargin + rails;
    yBot = yTop + kRowHeight * (d.word.strands - 1);
    width = xR + rails + kMargin;
    height = yBot + rails + kMargin;
  }

  const char* stroke_for(int arc) const {
    size_t idx = (size_t)(std::lower_bound(palette.begin(), palette.end(), colors[(size_t)arc]) -
                          palette.begin());
    return kStrokes[idx % kStrokeCount];
  }

  void line(double x1, double y1, double x2, double y2, const char* stroke) {
    body << "  <line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2
         << "\" stroke=\"" << stroke << "\"/>\n";
  }

  int y_of(int pos) const { return yTop + kRowHeight * pos; }

  void draw_column(int t) {
    int l = d.word.letters[(size_t)t];
    int k = l > 0 ? l : -l;
    double x1 = xL + kColWidth * t, x2 = x1 + kColWidth;
    for (int p = 0; p < d.word.strands; ++p) {
      if (p == k - 1 || p == k) continue;
      line(x1, y_of(p), x2, y_of(p), stroke_for(d.pos_arc[(size_t)t][(size_t)p]));
    }
    int over_from = l > 0 ? k - 1 : k;
    int under_from = l > 0 ? k : k - 1;
    int over_to = l > 0 ? k : k - 1;
    int under_to = l > 0 ? k - 1 : k;
    // The under strand breaks at the crossing: its incoming arc stops short of
    // the center and the outgoing arc resumes past it.
    double yu1 = y_of(under_from), yu2 = y_of(under_to);
    line(x1, yu1, x1 + 0.38 * kColWidth, yu1 + 0.38 * (yu2 - yu1),
         stroke_for(d.pos_arc[(size_t)t][(size_t)under_from]));
    line(x1 + 0.62 * kColWidth, yu1 + 0.62 * (yu2 - yu1), x2, yu2,
         stroke_for(d.pos_arc[(size_t)(t + 1)][(size_t)under_to]));
    line(x1, y_of(over_from), x2, y_of(over_to),
         stroke_for(d.pos_arc[(size_t)t][(size_t)over_from]));
  }

  void draw_closure(int pos) {
    // Nested rectangular rail from the right edge back to the left edge; the
    // top strand takes the outermost ring so rails never touch.
    int ring = kRailGap * (d.word.strands - pos);
    const char* s = stroke_for(d.pos_arc[0][(size_t)pos]);
    int y = y_of(pos);
    line(xR, y, xR + ring, y, s);
    line(xR + ring, y, xR + ring, yBot + ring, s);
    line(xR + ring, yBot + ring, xL - ring, yBot + ring, s);
    line(xL - ring, yBot + ring, xL - ring, y, s);
    line(xL - ring, y, xL, y, s);
  }

  void draw_labels() {
    for (int p = 0; p < d.word.strands; ++p)
      body << "  <text x=\"" << xL + 6 << "\" y=\"" << y_of(p) - 6 << "\" fill=\"#202020\">"
           << colors[(size_t)d.left_ends[(size_t)p]] << "</text>\n";
  }

  std::string finish() {
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n"
        << "<g fill=\"none\" stroke-width=\"3\" stroke-linecap=\"round\" "
           "font-family=\"monospace\" font-size=\"13\">\n"
        << body.str() << "</g>\n</svg>\n";
    return out.str();
  }
};

}  // namespace

std::string render_svg(const Diagram& d, const BigVec& colors) {
  if ((long long)colors.size() != d.n_arcs)
    fail(errc::InvalidColoring, "coloring length " + std::to_string(colors.size()) +
                                    " does not match arc count " + std::to_string(d.n_arcs));
  if (!is_valid_coloring(d, colors))
    fail(errc::InvalidColoring, "coloring violates a crossing relation");
  Painter painter(d, colors);
  for (int t = 0; t < (int)d.word.letters.size(); ++t) painter.draw_column(t);
  if (d.word.letters.empty())
    for (int p = 0; p < d.word.strands; ++p)
      painter.line(painter.xL, painter.y_of(p), painter.xR, painter.y_of(p),
                   painter.stroke_for(d.pos_arc[0][(size_t)p]));
  for (int p = 0; p < d.word.strands; ++p) painter.draw_closure(p);
  painter.draw_labels();
  return painter.finish();
}

void write_svg(const Diagram& d, const BigVec& colors, const std::string& path) {
  std::string doc = render_svg(d, colors);
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(errc::IoFailure, "cannot open " + path + " for writing");
  out << doc;
  out.flush();
  if (!out.good()) fail(errc::IoFailure, "failed writing " + path);
}

}  // namespace zcol
