#include "booldiff/render.hpp"

#include <string_view>

namespace booldiff {

namespace {

constexpr std::string_view kHeader = "x\ty\tmarker\n";

void append_points(std::string& out, const Digraph& g, std::string_view marker) {
  for (const Edge& e : g.edges()) {
    out += std::to_string(index_of(e.first, g.dim()));
    out += '\t';
    out += std::to_string(index_of(e.second, g.dim()));
    out += '\t';
    out += marker;
    out += '\n';
  }
}

}  // namespace

std::string render_digraph(const Digraph& g) {
  std::string out(kHeader);
  append_points(out, g, "point");
  return out;
}

std::string render_product(const Digraph& first, const Digraph& second, const Digraph& product) {
  std::string out(kHeader);
  append_points(out, first, "triangle");
  append_points(out, second, "circle");
  append_points(out, product, "star");
  return out;
}

}  // namespace booldiff
