#include "ocdc/embedding.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ocdc/error.hpp"
#include "ocdc/families.hpp"

namespace ocdc {

Vertex RotationSystem::successor(Vertex v, Vertex from) const {
  const auto& r = around(v);
  auto it = std::find(r.begin(), r.end(), from);
  if (it == r.end()) throw ValidationError("vertex " + std::to_string(from) + " missing from rotation at " + std::to_string(v));
  ++it;
  return it == r.end() ? r.front() : *it;
}

void RotationSystem::validate(const Graph& g) const {
  if (static_cast<int>(rotation_.size()) != g.order()) throw ValidationError("rotation system has the wrong vertex count");
  for (Vertex v = 0; v < g.order(); ++v) {
    std::vector<Vertex> r = around(v);
    std::sort(r.begin(), r.end());
    const auto nb = g.neighbors(v);
    if (!std::equal(r.begin(), r.end(), nb.begin(), nb.end()))
      throw ValidationError("rotation at vertex " + std::to_string(v) + " is not a permutation of its neighbors");
  }
}

RotationSystem rotation_from_coordinates(const Graph& g, const std::vector<std::pair<double, double>>& xy) {
  if (static_cast<int>(xy.size()) != g.order()) throw ValidationError("coordinate count does not match the graph");
  std::vector<std::vector<Vertex>> rot(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) {
    auto& r = rot[static_cast<std::size_t>(v)];
    r.assign(g.neighbors(v).begin(), g.neighbors(v).end());
    const auto [x0, y0] = xy[static_cast<std::size_t>(v)];
    auto angle = [&](Vertex w) {
      const auto [x, y] = xy[static_cast<std::size_t>(w)];
      return std::atan2(y - y0, x - x0);
    };
    std::sort(r.begin(), r.end(), [&](Vertex a, Vertex b) { return angle(a) < angle(b); });
  }
  return RotationSystem(std::move(rot));
}

std::vector<std::vector<Vertex>> faces(const Graph& g, const RotationSystem& rot) {
  rot.validate(g);
  std::vector<char> seen(static_cast<std::size_t>(g.arc_count()), 0);
  std::vector<std::vector<Vertex>> out;
  for (int start = 0; start < g.arc_count(); ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<Vertex> walk;
    Arc a = g.arc(start);
    while (!seen[static_cast<std::size_t>(g.arc_index(a))]) {
      seen[static_cast<std::size_t>(g.arc_index(a))] = 1;
      walk.push_back(a.tail);
      a = Arc{a.head, rot.successor(a.head, a.tail)};
    }
    out.push_back(std::move(walk));
  }
  return out;
}

namespace {

std::vector<std::pair<double, double>> on_circle(int n, double radius) {
  std::vector<std::pair<double, double>> xy;
  for (int i = 0; i < n; ++i) {
    const double t = 2.0 * std::numbers::pi * i / n;
    xy.emplace_back(radius * std::cos(t), radius * std::sin(t));
  }
  return xy;
}

}  // namespace

PlanarFixture planar_fixture(std::string_view name) {
  const FamilySpec spec = parse_family(name == "cube" ? "hypercube:3" : name == "k4" ? "complete:4" : name);
  std::vector<std::pair<double, double>> xy;
  Graph g = generate(spec);
  const int n = g.order();
  if (spec.name == "hypercube" && n == 8) {
    // outer face 0-1-3-2, inner square 4-5-7-6
    xy = {{-2, -2}, {2, -2}, {-2, 2}, {2, 2}, {-1, -1}, {1, -1}, {-1, 1}, {1, 1}};
  } else if (spec.name == "complete" && n <= 4) {
    xy = on_circle(std::min(n, 3), 2.0);
    if (n == 4) xy.emplace_back(0.0, 0.0);
    xy.resize(static_cast<std::size_t>(n));
  } else if (spec.name == "cycle") {
    xy = on_circle(n, 1.0);
  } else if (spec.name == "wheel") {
    xy = on_circle(n - 1, 1.0);
    xy.emplace_back(0.0, 0.0);
  } else if (spec.name == "prism") {
    const auto outer = on_circle(n / 2, 2.0);
    const auto inner = on_circle(n / 2, 1.0);
    for (int i = 0; i < n / 2; ++i) {
      xy.push_back(outer[static_cast<std::size_t>(i)]);
      xy.push_back(inner[static_cast<std::size_t>(i)]);
    }
  } else {
    throw DomainError("no planar fixture for '" + std::string(name) + "'");
  }
  RotationSystem rot = rotation_from_coordinates(g, xy);
  return {std::move(g), std::move(rot)};
}

}  // namespace ocdc
