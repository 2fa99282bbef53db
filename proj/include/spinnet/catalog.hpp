#pragma once

// Built-in networks: constructible graph families (cycles, binary cubes,
// subset-overlap graphs) plus verbatim coefficient presets for networks whose
// graphs are not built here.

#include <string>
#include <variant>
#include <vector>

#include "spinnet/graph.hpp"

namespace spinnet {
namespace catalog {

Graph cycle(int n);        // n >= 3
Graph hypercube(int d);    // 1 <= d <= 14
Graph johnson(int n, int k);  // 1 <= k < n, C(n, k) <= 1e5

// Closed forms the graph extraction must reproduce exactly.
SzegoJacobi cycle_formula(int m);      // even cycle C_{2m}
SzegoJacobi hypercube_formula(int d);

// Named coefficient presets: example1, tchebichef:<d>, hadamard, do4, j84,
// wells. Values are stored verbatim; see the provenance notes in entries().
SzegoJacobi preset(const std::string& name);

struct Entry {
  std::string name;
  bool constructible = false;
  std::string note;
};

// Canonical listing used by the command line and the test sweeps.
std::vector<Entry> entries();

// Resolves "family:params" or a preset name to a graph or raw coefficients.
std::variant<Graph, SzegoJacobi> resolve(const std::string& spec);

}  // namespace catalog
}  // namespace spinnet
