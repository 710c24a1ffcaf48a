#include "ecg/io.hpp"

#include <array>
#include <fstream>
#include <sstream>

namespace ecg {

EdgeColouredGraph read_ecg(std::istream& in) {
  long long n = 0, m = 0;
  if (!(in >> n >> m)) throw error(Errc::parse_error, "bad header, expected 'n m'");
  if (n < 0 || m < 0) throw error(Errc::parse_error, "negative counts in header");
  EdgeColouredGraph g(static_cast<int>(n));
  for (long long i = 0; i < m; ++i) {
    long long u, v, c;
    if (!(in >> u >> v >> c))
      throw error(Errc::parse_error, "bad edge line " + std::to_string(i + 1));
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw error(Errc::parse_error, "vertex out of range on edge line " + std::to_string(i + 1));
    if (c < 0) throw error(Errc::parse_error, "negative colour on edge line " + std::to_string(i + 1));
    try {
      g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v), static_cast<Colour>(c));
    } catch (const error& e) {
      throw error(Errc::parse_error,
                  std::string(e.what()) + " on edge line " + std::to_string(i + 1));
    }
  }
  return g;
}

EdgeColouredGraph read_ecg_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error(Errc::parse_error, "cannot open " + path);
  return read_ecg(in);
}

void write_ecg(std::ostream& out, const EdgeColouredGraph& g) {
  out << g.n() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v, c] : g.edges()) out << u << ' ' << v << ' ' << c << '\n';
}

void write_ecg_file(const std::string& path, const EdgeColouredGraph& g) {
  std::ofstream out(path);
  if (!out) throw error(Errc::parse_error, "cannot open " + path + " for writing");
  write_ecg(out, g);
}

std::string to_ecg_string(const EdgeColouredGraph& g) {
  std::ostringstream os;
  write_ecg(os, g);
  return os.str();
}

void write_dot(std::ostream& out, const EdgeColouredGraph& g) {
  static const std::array<const char*, 12> palette = {
      "blue",   "red",    "green",  "orange", "purple",  "brown",
      "cyan",   "magenta", "olive",  "navy",   "darkgreen", "gray"};
  out << "graph ecg {\n";
  for (Vertex v = 0; v < g.n(); ++v) out << "  " << v << ";\n";
  for (const auto& [u, v, c] : g.edges())
    out << "  " << u << " -- " << v << " [color=" << palette[c % palette.size()]
        << ", label=\"" << c << "\"];\n";
  out << "}\n";
}

}  // namespace ecg
