#include "qcolor/coloring.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "qcolor/errors.hpp"

namespace qcolor {

Coloring::Coloring(std::size_t n, Color palette_bound)
    : assignment_(n, kUncolored), classes_(static_cast<std::size_t>(palette_bound) + 1),
      palette_bound_(palette_bound) {}

void Coloring::assign(Vertex v, Color c) {
  if (v >= assignment_.size()) throw UsageError("assign: vertex out of range");
  if (c == kUncolored || c > palette_bound_)
    throw UsageError("assign: color " + std::to_string(c) + " outside palette [1, " +
                     std::to_string(palette_bound_) + "]");
  if (assignment_[v] != kUncolored) throw UsageError("assign: vertex already colored");
  assignment_[v] = c;
  classes_[c].push_back(v);
  ++colored_;
}

std::size_t Coloring::colors_used() const {
  return static_cast<std::size_t>(
      std::count_if(classes_.begin() + 1, classes_.end(), [](const auto& cls) { return !cls.empty(); }));
}

VerifyReport verify_coloring(const Graph& graph, const Coloring& coloring, std::size_t bound) {
  if (coloring.n() != graph.n()) throw UsageError("verify_coloring: size mismatch");
  Color max_color = 0;
  for (std::size_t v = 0; v < graph.n(); ++v) {
    Color c = coloring.color(static_cast<Vertex>(v));
    if (c == kUncolored)
      throw IncompleteColoringError("vertex " + std::to_string(v) + " is uncolored");
    max_color = std::max(max_color, c);
  }
  VerifyReport report;
  report.proper = true;
  for (const Edge& e : graph.canonical_edges()) {
    if (coloring.color(e.first) == coloring.color(e.second)) {
      report.proper = false;
      report.violation = e;
      break;
    }
  }
  report.colors_used = coloring.colors_used();
  report.within_bound = report.colors_used <= bound && max_color <= bound;
  return report;
}

void save_coloring(const Coloring& coloring, std::ostream& out) {
  out << coloring.n() << ' ' << coloring.palette_bound() << '\n';
  for (std::size_t v = 0; v < coloring.n(); ++v)
    out << v << ' ' << coloring.color(static_cast<Vertex>(v)) << '\n';
}

Coloring load_coloring(std::istream& in) {
  std::string line;
  std::size_t line_no = 1;
  if (!std::getline(in, line)) throw ParseError(1, "missing header \"n palette_bound\"");
  std::istringstream header(line);
  long long n = -1, bound = -1;
  std::string extra;
  if (!(header >> n >> bound) || (header >> extra) || n < 1 || bound < 1)
    throw ParseError(line_no, "malformed header, expected \"n palette_bound\"");
  Coloring coloring(static_cast<std::size_t>(n), static_cast<Color>(bound));
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ss(line);
    long long v = -1, c = -1;
    if (!(ss >> v >> c) || (ss >> extra)) throw ParseError(line_no, "malformed line, expected \"vertex color\"");
    if (v < 0 || v >= n) throw ParseError(line_no, "vertex out of range");
    if (c < 1 || c > bound) throw ParseError(line_no, "color outside palette");
    if (coloring.is_colored(static_cast<Vertex>(v))) throw ParseError(line_no, "vertex listed twice");
    coloring.assign(static_cast<Vertex>(v), static_cast<Color>(c));
  }
  return coloring;
}

}  // namespace qcolor
