#include "spinnet/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

namespace spinnet {

namespace {

// Strips comments and returns whitespace tokens line by line.
std::vector<long long> numeric_tokens(std::istream& in) {
  std::vector<long long> tokens;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) {
      try {
        std::size_t used = 0;
        tokens.push_back(std::stoll(tok, &used));
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw ParseError("edge list: expected an integer, got '" + tok + "'");
      }
    }
  }
  return tokens;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  const auto tokens = numeric_tokens(in);
  if (tokens.size() < 2) throw ParseError("edge list: missing 'n m' header");
  const long long n = tokens[0], m = tokens[1];
  if (n <= 0) throw ParseError("edge list: vertex count must be positive");
  if (m < 0 || tokens.size() != static_cast<std::size_t>(2 + 2 * m))
    throw ParseError("edge list: expected " + std::to_string(m) +
                     " edge lines after the header");

  std::vector<std::pair<long long, long long>> raw(m);
  for (long long e = 0; e < m; ++e) raw[e] = {tokens[2 + 2 * e], tokens[3 + 2 * e]};

  // Labels already dense and 0-based pass through; anything else (1-based
  // files, sparse ids) is remapped by sorted distinct label.
  bool dense = true;
  for (const auto& [u, v] : raw)
    if (u < 0 || u >= n || v < 0 || v >= n) dense = false;

  std::vector<std::pair<int, int>> edges;
  edges.reserve(raw.size());
  if (dense) {
    for (const auto& [u, v] : raw)
      edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  } else {
    std::map<long long, int> ids;
    for (const auto& [u, v] : raw) {
      ids.emplace(u, 0);
      ids.emplace(v, 0);
    }
    if (ids.size() > static_cast<std::size_t>(n))
      throw ParseError("edge list: more labels than the declared vertex count");
    int next = 0;
    for (auto& [label, id] : ids) id = next++;
    for (const auto& [u, v] : raw) edges.emplace_back(ids[u], ids[v]);
  }
  return build_graph(static_cast<int>(n), edges);
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open edge list file '" + path + "'");
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < g.n; ++u)
    for (int v = u + 1; v < g.n; ++v)
      if (g.adjacency(u, v)) edges.emplace_back(u, v);
  out << g.n << ' ' << edges.size() << '\n';
  for (const auto& [u, v] : edges) out << u << ' ' << v << '\n';
}

SzegoJacobi read_coefficients(std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("coefficient file: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("omega"))
    throw ParseError("coefficient file: expected an object with an 'omega' array");

  SzegoJacobi c;
  try {
    c.omega = doc.at("omega").get<std::vector<double>>();
    if (doc.contains("alpha"))
      c.alpha = doc.at("alpha").get<std::vector<double>>();
    else
      c.alpha.assign(c.omega.size() + 1, 0.0);  // zeros when omitted
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("coefficient file: ") + e.what());
  }
  if (c.alpha.size() != c.omega.size() + 1)
    throw ParseError("coefficient file: alpha must hold one more entry than omega");
  return c;
}

SzegoJacobi read_coefficients_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open coefficient file '" + path + "'");
  return read_coefficients(in);
}

void write_coefficients(std::ostream& out, const SzegoJacobi& c) {
  JsonWriter w(out);
  w.begin_object();
  w.key("omega").begin_array();
  for (double v : c.omega) w.value(v);
  w.end_array();
  w.key("alpha").begin_array();
  for (double v : c.alpha) w.value(v);
  w.end_array();
  w.end_object();
  w.finish();
}

std::string format_number(double v) {
  if (!std::isfinite(v)) return "null";
  if (v == 0.0) v = 0.0;  // normalize -0
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

void JsonWriter::element_prefix() {
  if (after_key_) {
    after_key_ = false;
    return;
  }
  if (!has_items_.empty()) {
    if (has_items_.back()) out_ << ',';
    has_items_.back() = true;
    out_ << '\n';
    indent();
  }
}

void JsonWriter::indent() {
  for (std::size_t i = 0; i < has_items_.size(); ++i) out_ << "  ";
}

JsonWriter& JsonWriter::begin_object() {
  element_prefix();
  out_ << '{';
  has_items_.push_back(false);
  return *this;
}

JsonWriter& JsonWriter::end_object() {
  const bool had = has_items_.back();
  has_items_.pop_back();
  if (had) {
    out_ << '\n';
    indent();
  }
  out_ << '}';
  return *this;
}

JsonWriter& JsonWriter::begin_array() {
  element_prefix();
  out_ << '[';
  has_items_.push_back(false);
  return *this;
}

JsonWriter& JsonWriter::end_array() {
  const bool had = has_items_.back();
  has_items_.pop_back();
  if (had) {
    out_ << '\n';
    indent();
  }
  out_ << ']';
  return *this;
}

JsonWriter& JsonWriter::key(const std::string& k) {
  element_prefix();
  out_ << '"' << k << "\": ";
  after_key_ = true;
  return *this;
}

JsonWriter& JsonWriter::value(double v) {
  element_prefix();
  out_ << format_number(v);
  return *this;
}

JsonWriter& JsonWriter::value(int v) {
  element_prefix();
  out_ << v;
  return *this;
}

JsonWriter& JsonWriter::value(long long v) {
  element_prefix();
  out_ << v;
  return *this;
}

JsonWriter& JsonWriter::value(bool v) {
  element_prefix();
  out_ << (v ? "true" : "false");
  return *this;
}

JsonWriter& JsonWriter::value(const std::string& v) {
  element_prefix();
  out_ << '"';
  for (char ch : v) {
    switch (ch) {
      case '"': out_ << "\\\""; break;
      case '\\': out_ << "\\\\"; break;
      case '\n': out_ << "\\n"; break;
      case '\t': out_ << "\\t"; break;
      default: out_ << ch;
    }
  }
  out_ << '"';
  return *this;
}

JsonWriter& JsonWriter::null_value() {
  element_prefix();
  out_ << "null";
  return *this;
}

void JsonWriter::finish() { out_ << '\n'; }

}  // namespace spinnet
