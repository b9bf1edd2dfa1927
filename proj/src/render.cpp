#include "ikg/render.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <sstream>

namespace ikg {

namespace {

std::string fixed(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

double as_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

// Greedy first-fit rows within each class so intervals of one class never overlap on a row.
std::vector<std::vector<std::vector<int>>> tracks(const IntervalKRep& rep) {
  std::vector<std::vector<std::vector<int>>> out(rep.k);
  std::vector<int> order(rep.size());
  for (int v = 0; v < rep.size(); ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return rep.intervals[a].left < rep.intervals[b].left;
  });
  for (int v : order) {
    auto& rows = out[rep.classes[v]];
    bool placed = false;
    for (auto& row : rows) {
      if (!rep.intervals[row.back()].intersects(rep.intervals[v])) {
        row.push_back(v);
        placed = true;
        break;
      }
    }
    if (!placed) rows.push_back({v});
  }
  return out;
}

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};

}  // namespace

std::string render_intervals(const IntervalKRep& rep, RenderFormat format) {
  const auto layout = tracks(rep);
  if (format == RenderFormat::ascii) {
    std::map<Rational, int> column;
    for (const auto& iv : rep.intervals) {
      column[iv.left] = 0;
      column[iv.right] = 0;
    }
    int c = 0;
    for (auto& [value, col] : column) col = 4 * c++;
    std::ostringstream os;
    for (int cls = 0; cls < rep.k; ++cls) {
      for (std::size_t r = 0; r < std::max<std::size_t>(layout[cls].size(), 1); ++r) {
        std::string line(column.empty() ? 0 : column.rbegin()->second + 1, ' ');
        if (r < layout[cls].size()) {
          for (int v : layout[cls][r]) {
            int a = column[rep.intervals[v].left];
            int b = column[rep.intervals[v].right];
            for (int x = a; x <= b; ++x) line[x] = '=';
            line[a] = '[';
            line[b] = ']';
          }
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        os << "class " << cls << " | " << line << '\n';
      }
    }
    for (int v = 0; v < rep.size(); ++v) {
      os << rep.name(v) << ": [" << to_string(rep.intervals[v].left) << ", "
         << to_string(rep.intervals[v].right) << "] class " << rep.classes[v] << '\n';
    }
    return os.str();
  }

  double lo = 0;
  double hi = 1;
  if (rep.size() > 0) {
    lo = as_double(rep.intervals[0].left);
    hi = as_double(rep.intervals[0].right);
    for (const auto& iv : rep.intervals) {
      lo = std::min(lo, as_double(iv.left));
      hi = std::max(hi, as_double(iv.right));
    }
    if (hi - lo < 1e-9) hi = lo + 1;
  }
  const double width = 600;
  auto x = [&](const Rational& r) { return 80 + (as_double(r) - lo) / (hi - lo) * width; };
  int rows = 0;
  for (const auto& t : layout) rows += static_cast<int>(std::max<std::size_t>(t.size(), 1));
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fixed(width + 120) << "\" height=\""
     << 30 * rows + 40 << "\">\n";
  int row = 0;
  for (int cls = 0; cls < rep.k; ++cls) {
    const char* colour = kPalette[cls % 8];
    os << "  <text x=\"4\" y=\"" << 30 * row + 32 << "\" font-size=\"12\">class " << cls << "</text>\n";
    for (const auto& track : layout[cls]) {
      const int y = 30 * row + 28;
      for (int v : track) {
        const auto& iv = rep.intervals[v];
        os << "  <line x1=\"" << fixed(x(iv.left)) << "\" y1=\"" << y << "\" x2=\"" << fixed(x(iv.right))
           << "\" y2=\"" << y << "\" stroke=\"" << colour << "\" stroke-width=\"4\"/>\n";
        os << "  <circle cx=\"" << fixed(x(iv.left)) << "\" cy=\"" << y << "\" r=\"3\" fill=\"" << colour << "\"/>\n";
        os << "  <circle cx=\"" << fixed(x(iv.right)) << "\" cy=\"" << y << "\" r=\"3\" fill=\"" << colour << "\"/>\n";
        os << "  <text x=\"" << fixed(x(iv.left)) << "\" y=\"" << y - 6 << "\" font-size=\"11\">" << rep.name(v)
           << "</text>\n";
      }
      ++row;
    }
    if (layout[cls].empty()) ++row;
  }
  os << "</svg>\n";
  return os.str();
}

std::string render_hasse(const Poset& p) {
  // Layer = length of the longest chain ending at the element.
  std::vector<int> layer(p.size(), 0);
  for (int round = 0; round < p.size(); ++round)
    for (auto [i, j] : hasse_edges(p)) layer[j] = std::max(layer[j], layer[i] + 1);
  const int layers = p.size() ? *std::max_element(layer.begin(), layer.end()) + 1 : 1;
  std::vector<int> slot(p.size(), 0), used(layers, 0);
  for (int v = 0; v < p.size(); ++v) slot[v] = used[layer[v]]++;
  const int widest = std::max(1, *std::max_element(used.begin(), used.end()));
  auto x = [&](int v) { return 40.0 + 70.0 * slot[v] + 35.0 * (widest - used[layer[v]]); };
  auto y = [&](int v) { return 30.0 + 70.0 * (layers - 1 - layer[v]); };
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fixed(70.0 * widest + 20) << "\" height=\""
     << fixed(70.0 * layers) << "\">\n";
  for (auto [i, j] : hasse_edges(p)) {
    os << "  <line x1=\"" << fixed(x(i)) << "\" y1=\"" << fixed(y(i)) << "\" x2=\"" << fixed(x(j)) << "\" y2=\""
       << fixed(y(j)) << "\" stroke=\"#444444\"/>\n";
  }
  for (int v = 0; v < p.size(); ++v) {
    os << "  <circle cx=\"" << fixed(x(v)) << "\" cy=\"" << fixed(y(v)) << "\" r=\"5\" fill=\"#1f77b4\"/>\n";
    os << "  <text x=\"" << fixed(x(v) + 8) << "\" y=\"" << fixed(y(v) + 4) << "\" font-size=\"12\">" << p.name(v)
       << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string render_curves(const FunctionRep& rep) {
  double lo = 0;
  double hi = 1;
  bool first = true;
  for (const auto& curve : rep.abscissae) {
    for (const auto& a : curve) {
      double d = as_double(a);
      lo = first ? d : std::min(lo, d);
      hi = first ? d : std::max(hi, d);
      first = false;
    }
  }
  if (hi - lo < 1e-9) hi = lo + 1;
  const double width = 600;
  const double level_gap = 60;
  auto x = [&](const Rational& r) { return 40 + (as_double(r) - lo) / (hi - lo) * width; };
  auto y = [&](int level) { return 20 + level_gap * (rep.k - level); };
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fixed(width + 80) << "\" height=\""
     << fixed(level_gap * rep.k + 40) << "\">\n";
  for (int h = 0; h <= rep.k; ++h) {
    os << "  <line x1=\"20\" y1=\"" << fixed(y(h)) << "\" x2=\"" << fixed(width + 60) << "\" y2=\"" << fixed(y(h))
       << "\" stroke=\"#bbbbbb\"/>\n";
    os << "  <text x=\"2\" y=\"" << fixed(y(h) + 4) << "\" font-size=\"11\">L" << h << "</text>\n";
  }
  for (int v = 0; v < rep.size(); ++v) {
    os << "  <polyline fill=\"none\" stroke=\"" << kPalette[v % 8] << "\" points=\"";
    for (int h = 0; h <= rep.k; ++h) os << (h ? " " : "") << fixed(x(rep.abscissae[v][h])) << ',' << fixed(y(h));
    os << "\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace ikg
