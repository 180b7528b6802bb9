#include "wpp/render.hpp"

#include "wpp/rulings.hpp"

#include <sstream>
#include <stdexcept>

namespace wpp::render {

using resolution::ResolutionPair;

What parse_what(const std::string& s) {
  if (s == "polygon") return What::Polygon;
  if (s == "strings") return What::Strings;
  if (s == "ruling") return What::Ruling;
  throw std::invalid_argument("unknown --what '" + s + "'");
}

Format parse_format(const std::string& s) {
  if (s == "svg") return Format::Svg;
  if (s == "tikz") return Format::Tikz;
  throw std::invalid_argument("unknown --format '" + s + "'");
}

namespace {

std::string title(const ResolutionPair& R) {
  std::ostringstream os;
  os << "CP(" << R.weights.a << "," << R.weights.b << "," << R.weights.c << ") T" << R.presentation;
  return os.str();
}

std::string tikz_frac(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return "(" + r.get_num().get_str() + "/" + r.get_den().get_str() + ")";
}

std::string svg_escape(const std::string& s) {
  std::string o;
  for (char c : s) {
    if (c == '<') o += "&lt;";
    else if (c == '>') o += "&gt;";
    else if (c == '&') o += "&amp;";
    else o += c;
  }
  return o;
}

struct Node {
  std::string label;
  std::int64_t selfint;
};

// Shared layout for string diagrams: rows of nodes joined by edges.
struct Diagram {
  std::vector<std::vector<Node>> rows;
  std::vector<std::string> row_titles;
  // (row, index) pairs to mark, with a caption.
  std::vector<std::pair<std::pair<std::size_t, double>, std::string>> marks;
  bool close_cycle = false;
};

std::string diagram_svg(const Diagram& D, const std::string& head) {
  const int dx = 70, dy = 90, r = 16, left = 120;
  std::size_t width = 0;
  for (const auto& row : D.rows) width = std::max(width, row.size());
  const long W = left + long(width) * dx + 40, H = long(D.rows.size()) * dy + 60;
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << W << "\" height=\"" << H
     << "\" viewBox=\"0 0 " << W << " " << H << "\">\n"
     << "<title>" << svg_escape(head) << "</title>\n"
     << "<g font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">\n";
  for (std::size_t i = 0; i < D.rows.size(); ++i) {
    const long y = 50 + long(i) * dy;
    const auto& row = D.rows[i];
    os << "<text x=\"10\" y=\"" << y + 4 << "\" text-anchor=\"start\">" << svg_escape(D.row_titles[i]) << "</text>\n";
    for (std::size_t j = 0; j + 1 < row.size(); ++j)
      os << "<line x1=\"" << left + long(j) * dx << "\" y1=\"" << y << "\" x2=\"" << left + long(j + 1) * dx
         << "\" y2=\"" << y << "\" stroke=\"black\"/>\n";
    if (D.close_cycle && row.size() > 1)
      os << "<path d=\"M " << left + long(row.size() - 1) * dx << " " << y << " C "
         << left + long(row.size() - 1) * dx << " " << y + 35 << " " << left << " " << y + 35 << " " << left << " "
         << y << "\" fill=\"none\" stroke=\"black\" stroke-dasharray=\"4 3\"/>\n";
    for (std::size_t j = 0; j < row.size(); ++j) {
      const long x = left + long(j) * dx;
      const bool conn = row[j].label.rfind("N_", 0) == 0;
      os << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"" << r << "\" fill=\"" << (conn ? "#ddd" : "white")
         << "\" stroke=\"black\"/>\n"
         << "<text x=\"" << x << "\" y=\"" << y + 4 << "\">" << row[j].selfint << "</text>\n"
         << "<text x=\"" << x << "\" y=\"" << y - r - 6 << "\">" << svg_escape(row[j].label) << "</text>\n";
    }
  }
  for (const auto& [pos, caption] : D.marks) {
    const double x = left + pos.second * dx;
    const long y = 50 + long(pos.first) * dy;
    os << "<path d=\"M " << x - 6 << " " << y + 22 << " L " << x << " " << y + 30 << " L " << x + 6 << " " << y + 22
       << "\" fill=\"none\" stroke=\"red\" stroke-width=\"2\"/>\n"
       << "<text x=\"" << x << "\" y=\"" << y + 44 << "\" fill=\"red\">" << svg_escape(caption) << "</text>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

std::string diagram_tikz(const Diagram& D, const std::string& head) {
  std::ostringstream os;
  os << "\\documentclass[tikz]{standalone}\n\\begin{document}\n"
     << "% " << head << "\n"
     << "\\begin{tikzpicture}[x=1.2cm,y=-1.5cm,comp/.style={circle,draw,minimum size=7mm,inner sep=0pt,font=\\small},"
        "conn/.style={comp,fill=gray!25}]\n";
  for (std::size_t i = 0; i < D.rows.size(); ++i) {
    const auto& row = D.rows[i];
    os << "\\node[anchor=east] at (-0.6," << i << ") {" << D.row_titles[i] << "};\n";
    for (std::size_t j = 0; j < row.size(); ++j) {
      const bool conn = row[j].label.rfind("N_", 0) == 0;
      std::string label = row[j].label;
      if (conn) label = "N_{" + label.substr(2) + "}";
      os << "\\node[" << (conn ? "conn" : "comp") << ",label=above:{\\scriptsize $" << label << "$}] (n" << i << "_"
         << j << ") at (" << j << "," << i << ") {$" << row[j].selfint << "$};\n";
    }
    for (std::size_t j = 0; j + 1 < row.size(); ++j) os << "\\draw (n" << i << "_" << j << ") -- (n" << i << "_" << j + 1 << ");\n";
    if (D.close_cycle && row.size() > 1)
      os << "\\draw[dashed] (n" << i << "_" << row.size() - 1 << ") to[out=-60,in=-120] (n" << i << "_0);\n";
  }
  for (const auto& [pos, caption] : D.marks)
    os << "\\draw[red,thick] (" << pos.second << "," << pos.first << ") ++(-0.1,0.35) -- ++(0.1,0.1) -- ++(0.1,-0.1);\n"
       << "\\node[red,font=\\scriptsize] at (" << pos.second << "," << pos.first + 0.65 << ") {" << caption << "};\n";
  os << "\\end{tikzpicture}\n\\end{document}\n";
  return os.str();
}

Diagram strings_diagram(const ResolutionPair& R) {
  Diagram D;
  D.close_cycle = true;
  std::vector<Node> row;
  auto add_string = [&](int i) {
    for (std::size_t j = 0; j < R.strings[i].length(); ++j)
      row.push_back({std::string(1, char('A' + i)) + std::to_string(j + 1), R.strings[i].selfints[j]});
  };
  auto add_conn = [&](int i) { row.push_back({std::string("N_") + char('a' + i), R.connectors[i].selfint}); };
  add_conn(2);
  add_string(0);
  add_conn(1);
  add_string(2);
  add_conn(0);
  add_string(1);
  D.rows.push_back(std::move(row));
  D.row_titles.push_back("cycle");
  return D;
}

Diagram ruling_diagram(const ResolutionPair& R) {
  auto [sac, sbc] = rulings::combined_strings(R);
  auto rd = rulings::ruling(R);
  Diagram D;
  for (const auto* s : {&sac, &sbc}) {
    std::vector<Node> row;
    for (std::size_t j = 0; j < s->string.length(); ++j) row.push_back({s->labels[j], s->string.selfints[j]});
    D.rows.push_back(std::move(row));
  }
  D.row_titles = {"S_ac", "S_bc"};
  auto pos_of = [](const rulings::CombinedString& s, std::size_t c) {
    for (std::size_t j = 0; j < s.target_index.size(); ++j)
      if (s.target_index[j] == int(c)) return double(j);
    return 0.0;
  };
  std::ostringstream pq;
  if (rd.kind == rulings::RulingCase::Unicuspidal) {
    pq << "(" << rd.pa << "," << rd.qa << ")-cusp";
    D.marks.push_back({{0, pos_of(sac, rd.nu_a) + 0.5}, pq.str()});
    D.marks.push_back({{1, pos_of(sbc, rd.nu_b) + 0.5}, pq.str()});
  } else {
    D.marks.push_back({{0, pos_of(sac, *rd.meet_component)}, "fiber meets"});
    D.marks.push_back({{1, pos_of(sbc, *rd.meet_component)}, "fiber meets"});
  }
  return D;
}

std::string polygon_svg(const ResolutionPair& R) {
  const auto& P = R.polygon;
  Int L = 1;
  for (const auto& v : P.vertices) {
    mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), v.x.get_den_mpz_t());
    mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), v.y.get_den_mpz_t());
  }
  const Int base = 20;
  const Int scale = L * base;  // user units per lattice unit
  Rational minx = P.vertices[0].x, maxx = minx, miny = P.vertices[0].y, maxy = miny;
  for (const auto& v : P.vertices) {
    minx = std::min(minx, v.x);
    maxx = std::max(maxx, v.x);
    miny = std::min(miny, v.y);
    maxy = std::max(maxy, v.y);
  }
  auto X = [&](const Rational& x) { Rational s = (x - minx) * Rational(scale); return s.get_num(); };
  // SVG y grows downward.
  auto Y = [&](const Rational& y) { Rational s = (maxy - y) * Rational(scale); return s.get_num(); };
  Rational wr = (maxx - minx) * Rational(scale), hr = (maxy - miny) * Rational(scale);
  const Int pad = scale;
  const Int W = wr.get_num() + 2 * pad, H = hr.get_num() + 2 * pad;
  const double px = 600.0 / std::max(W.get_d(), H.get_d());
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << long(W.get_d() * px + 0.5)
     << "\" height=\"" << long(H.get_d() * px + 0.5) << "\" viewBox=\"" << -pad << " " << -pad << " " << W << " "
     << H << "\">\n"
     << "<title>" << title(R) << " resolved moment polygon</title>\n"
     << "<desc>scale " << scale << " user units per lattice unit; origin (" << to_string(minx) << ","
     << to_string(maxy) << ")</desc>\n";
  // Lattice points of the bounding box, when few enough to draw.
  Int x0 = floor_div(minx.get_num(), minx.get_den()), y0 = floor_div(miny.get_num(), miny.get_den());
  Int x1 = -floor_div(-maxx.get_num(), maxx.get_den()), y1 = -floor_div(-maxy.get_num(), maxy.get_den());
  if ((x1 - x0 + 1) * (y1 - y0 + 1) <= 4000) {
    os << "<g fill=\"#999\">\n";
    const Int dot = std::max<Int>(scale / 12, Int(1));
    for (Int x = x0; x <= x1; ++x)
      for (Int y = y0; y <= y1; ++y)
        os << "<circle cx=\"" << X(Rational(x)) << "\" cy=\"" << Y(Rational(y)) << "\" r=\"" << dot << "\"/>\n";
    os << "</g>\n";
  }
  os << "<polygon points=\"";
  for (const auto& v : P.vertices) os << X(v.x) << "," << Y(v.y) << " ";
  os << "\" fill=\"#eef\" stroke=\"black\" stroke-width=\"" << std::max<Int>(scale / 20, Int(1)) << "\"/>\n";
  const Int fs = std::max<Int>(scale / 2, Int(1));
  os << "<g font-family=\"sans-serif\" font-size=\"" << fs << "\" text-anchor=\"middle\">\n";
  for (std::size_t i = 0; i < P.size(); ++i) {
    const auto& a = P.vertices[i];
    const auto& b = P.vertices[P.next(i)];
    Rational mx = (a.x + b.x) / Rational(2), my = (a.y + b.y) / Rational(2);
    os << "<text x=\"" << X(mx).get_d() << "\" y=\"" << Y(my).get_d() << "\">" << svg_escape(P.edges[i].label)
       << " (" << polygon::edge_selfint(P, i) << ")</text>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

std::string polygon_tikz(const ResolutionPair& R) {
  const auto& P = R.polygon;
  Rational span = 0;
  for (const auto& v : P.vertices) span = std::max({span, Rational(abs(v.x)), Rational(abs(v.y))});
  const double scale = 10.0 / std::max(1.0, span.get_d());
  std::ostringstream os;
  os << "\\documentclass[tikz]{standalone}\n\\begin{document}\n"
     << "% " << title(R) << " resolved moment polygon; coordinates are exact, scale " << scale << "\n"
     << "\\begin{tikzpicture}[scale=" << scale << "]\n\\draw[fill=blue!8] ";
  for (const auto& v : P.vertices) os << "(" << tikz_frac(v.x) << "," << tikz_frac(v.y) << ") -- ";
  os << "cycle;\n";
  for (std::size_t i = 0; i < P.size(); ++i) {
    const auto& a = P.vertices[i];
    const auto& b = P.vertices[P.next(i)];
    std::string label = P.edges[i].label;
    if (label.rfind("N_", 0) == 0) label = "N_{" + label.substr(2) + "}";
    os << "\\node[font=\\tiny] at ($(" << tikz_frac(a.x) << "," << tikz_frac(a.y) << ")!0.5!(" << tikz_frac(b.x)
       << "," << tikz_frac(b.y) << ")$) {$" << label << "\\,(" << polygon::edge_selfint(P, i) << ")$};\n";
  }
  os << "\\end{tikzpicture}\n\\end{document}\n";
  std::string s = os.str();
  // calc library for the midpoint syntax
  s.insert(s.find("\\begin{document}"), "\\usetikzlibrary{calc}\n");
  return s;
}

}  // namespace

std::string render(const ResolutionPair& R, What what, Format format) {
  switch (what) {
    case What::Polygon: return format == Format::Svg ? polygon_svg(R) : polygon_tikz(R);
    case What::Strings: {
      auto D = strings_diagram(R);
      auto head = title(R) + " boundary cycle";
      return format == Format::Svg ? diagram_svg(D, head) : diagram_tikz(D, head);
    }
    case What::Ruling: {
      auto D = ruling_diagram(R);
      auto head = title(R) + " ruling";
      return format == Format::Svg ? diagram_svg(D, head) : diagram_tikz(D, head);
    }
  }
  return {};
}

}  // namespace wpp::render
