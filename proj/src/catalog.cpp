#include "spinnet/catalog.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

namespace spinnet {
namespace catalog {

namespace {

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long acc = 1;
  for (int i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
    if (acc > 1'000'000'000LL) return acc;  // caller guards anyway
  }
  return acc;
}

SzegoJacobi tchebichef(int d) {
  if (d < 1) throw TooSmall("tchebichef depth must be at least 1");
  SzegoJacobi c;
  c.alpha.assign(d + 1, 0.0);
  c.omega.assign(d, 2.0);
  c.omega[0] = 4.0;
  return c;
}

SzegoJacobi make(std::vector<double> omega, std::vector<double> alpha) {
  SzegoJacobi c;
  c.omega = std::move(omega);
  c.alpha = std::move(alpha);
  return c;
}

// "johnson:8,4" -> {"8", "4"}; empty when no colon.
std::vector<std::string> split_params(const std::string& spec, std::string& family) {
  auto colon = spec.find(':');
  family = spec.substr(0, colon);
  std::vector<std::string> params;
  if (colon == std::string::npos) return params;
  std::string rest = spec.substr(colon + 1);
  std::size_t pos = 0;
  while (pos <= rest.size()) {
    auto comma = rest.find(',', pos);
    if (comma == std::string::npos) {
      params.push_back(rest.substr(pos));
      break;
    }
    params.push_back(rest.substr(pos, comma - pos));
    pos = comma + 1;
  }
  return params;
}

int parse_int(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError("bad " + what + " parameter: '" + s + "'");
  }
}

}  // namespace

Graph cycle(int n) {
  if (n < 3) throw TooSmall("cycle needs at least 3 vertices");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(n);
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return build_graph(n, edges);
}

Graph hypercube(int d) {
  if (d < 1) throw TooSmall("hypercube dimension must be at least 1");
  if (d > 14) throw TooLarge("hypercube dimension capped at 14");
  const int n = 1 << d;
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(n) * d / 2);
  for (int m = 0; m < n; ++m)
    for (int b = 0; b < d; ++b) {
      int other = m ^ (1 << b);
      if (m < other) edges.emplace_back(m, other);
    }
  return build_graph(n, edges);
}

Graph johnson(int n, int k) {
  if (k < 1 || k >= n)
    throw Error(ErrorKind::InvalidInput, "subset size must satisfy 1 <= k < n");
  if (n > 62) throw TooLarge("subset universe capped at 62 elements");
  if (binomial(n, k) > 100'000)
    throw TooLarge("subset-overlap graph exceeds the vertex budget");

  // k-subsets as bit masks in lexicographic order (Gosper's hack).
  std::vector<std::uint64_t> masks;
  const std::uint64_t limit = 1ULL << n;
  for (std::uint64_t m = (1ULL << k) - 1; m < limit;) {
    masks.push_back(m);
    const std::uint64_t c = m & (~m + 1);
    const std::uint64_t r = m + c;
    m = (((r ^ m) >> 2) / c) | r;
  }

  const int nv = static_cast<int>(masks.size());
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < nv; ++a)
    for (int b = a + 1; b < nv; ++b)
      if (std::popcount(masks[a] & masks[b]) == k - 1) edges.emplace_back(a, b);
  return build_graph(nv, edges);
}

SzegoJacobi cycle_formula(int m) {
  if (m < 2) throw TooSmall("even cycle formula needs m >= 2");
  SzegoJacobi c;
  c.alpha.assign(m + 1, 0.0);
  c.omega.assign(m, 1.0);
  c.omega.front() = 2.0;
  c.omega.back() = 2.0;
  return c;
}

SzegoJacobi hypercube_formula(int d) {
  if (d < 1) throw TooSmall("hypercube formula needs d >= 1");
  SzegoJacobi c;
  c.alpha.assign(d + 1, 0.0);
  c.omega.resize(d);
  for (int i = 1; i <= d; ++i)
    c.omega[i - 1] = static_cast<double>(i) * (d - i + 1);
  return c;
}

SzegoJacobi preset(const std::string& name) {
  std::string family;
  auto params = split_params(name, family);
  if (family == "tchebichef") {
    if (params.size() != 1) throw ParseError("tchebichef takes one parameter");
    return tchebichef(parse_int(params[0], "tchebichef"));
  }
  if (!params.empty()) throw UnknownPreset("unknown preset '" + name + "'");

  if (family == "example1")
    return make({4, 2, 2, 4}, {0, 0, 0, 0, 0});
  if (family == "hadamard")
    return make({12, 66, 66, 12}, {0, 0, 0, 0, 0});
  if (family == "do4")
    return make({16, 36, 36, 16}, {0, 6, 8, 6, 0});
  if (family == "j84")
    return make({4, 3, 6, 4, 6, 3, 4}, {0, 0, 0, 0, 0, 0, 0, 0});
  if (family == "wells")
    return make({5, 4, 4, 5}, {0, 0, 3, 0, 0});
  throw UnknownPreset("unknown preset '" + name + "'");
}

std::vector<Entry> entries() {
  std::vector<Entry> out;
  auto graph = [&](const std::string& n) { out.push_back({n, true, ""}); };
  graph("cycle:3");
  graph("cycle:4");
  graph("cycle:5");
  graph("cycle:6");
  graph("cycle:8");
  graph("hypercube:1");
  graph("hypercube:2");
  graph("hypercube:3");
  graph("hypercube:4");
  graph("johnson:4,2");
  graph("johnson:5,2");
  graph("johnson:6,3");
  out.push_back({"example1", false, "mirror symmetric five-stratum network"});
  out.push_back({"tchebichef:5", false, "first-kind quadrature network, depth 5"});
  out.push_back({"hadamard", false, "verbatim coefficients"});
  out.push_back(
      {"do4", false,
       "verbatim coefficients; differ from the extraction off the standard "
       "double-odd graph, kept as published"});
  out.push_back(
      {"j84", false,
       "verbatim coefficients; differ from the extraction off johnson:8,4 "
       "(depth 7 vs 4), kept as published"});
  out.push_back({"wells", false, "verbatim coefficients"});
  return out;
}

std::variant<Graph, SzegoJacobi> resolve(const std::string& spec) {
  std::string family;
  auto params = split_params(spec, family);
  if (family == "cycle") {
    if (params.size() != 1) throw ParseError("cycle takes one parameter");
    return cycle(parse_int(params[0], "cycle"));
  }
  if (family == "hypercube") {
    if (params.size() != 1) throw ParseError("hypercube takes one parameter");
    return hypercube(parse_int(params[0], "hypercube"));
  }
  if (family == "johnson") {
    if (params.size() != 2) throw ParseError("johnson takes two parameters");
    return johnson(parse_int(params[0], "johnson"), parse_int(params[1], "johnson"));
  }
  return preset(spec);
}

}  // namespace catalog
}  // namespace spinnet
