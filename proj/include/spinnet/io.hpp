#pragma once

// File formats and deterministic serialization. Edge lists are plain text
// ("n m" header, one "u v" pair per line, '#' comments); coefficients travel
// as JSON objects {"omega": [...], "alpha": [...]}. All emitted numbers use
// 12 significant digits with '.' as the decimal separator.

#include <iosfwd>
#include <string>
#include <vector>

#include "spinnet/graph.hpp"

namespace spinnet {

Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);

SzegoJacobi read_coefficients(std::istream& in);
SzegoJacobi read_coefficients_file(const std::string& path);
void write_coefficients(std::ostream& out, const SzegoJacobi& c);

// 12 significant digits, shortest form, C locale regardless of environment.
std::string format_number(double v);

// Minimal streaming JSON emitter with deterministic formatting.
class JsonWriter {
 public:
  explicit JsonWriter(std::ostream& out) : out_(out) {}

  JsonWriter& begin_object();
  JsonWriter& end_object();
  JsonWriter& begin_array();
  JsonWriter& end_array();
  JsonWriter& key(const std::string& k);
  JsonWriter& value(double v);
  JsonWriter& value(int v);
  JsonWriter& value(long long v);
  JsonWriter& value(bool v);
  JsonWriter& value(const std::string& v);
  JsonWriter& null_value();
  void finish();  // trailing newline

 private:
  void element_prefix();
  void indent();

  std::ostream& out_;
  std::vector<bool> has_items_;  // one flag per open scope
  bool after_key_ = false;
};

}  // namespace spinnet
