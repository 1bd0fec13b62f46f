#ifndef SOSW_IO_HPP
#define SOSW_IO_HPP

#include <json.hpp>

#include <fstream>
#include <optional>
#include <string>

#include "sosw/graph.hpp"
#include "sosw/numeric.hpp"
#include "sosw/pseudo_expectation.hpp"

namespace sosw {

using Json = nlohmann::ordered_json;

// Writes via a temp file + rename so a crashed run never leaves a half-written
// artifact behind.
void atomic_write_text(const std::string& path, const std::string& content);

std::string read_text_file(const std::string& path);

// Report schema "v1": command, resolved config, results, timestamp. Reports
// are byte-identical across reruns apart from the timestamp line.
Json make_report(const std::string& command, Json config, Json results);

void write_report(const std::string& path, const Json& report);

// Pseudo-expectation file: n, d, mode, graph hash, and a map from
// comma-separated sorted 1-based vertex lists (empty string = emptyset) to
// value strings ("1/4" in rational mode, decimals in float mode; both parse).
template <typename T>
Json pe_to_json(const PseudoExpectation<T>& pe, const std::string& ghash) {
  Json values = Json::object();
  for (const auto& [m, v] : pe.values) values[m.str()] = format_scalar(v);
  Json doc;
  doc["format"] = "pe-v1";
  doc["n"] = pe.n;
  doc["d"] = pe.d;
  doc["mode"] = scalar_mode_name<T>();
  doc["graph_hash"] = ghash;
  doc["values"] = std::move(values);
  return doc;
}

template <typename T>
void write_pe(const std::string& path, const PseudoExpectation<T>& pe,
              const std::string& ghash) {
  atomic_write_text(path, pe_to_json(pe, ghash).dump(2) + "\n");
}

struct PeFileHeader {
  int n = 0;
  int d = 0;
  std::string mode;
  std::string graph_hash;
};

PeFileHeader read_pe_header(const std::string& path);

// Load with invariant checks: value(empty) must equal 1, and when the graph is
// supplied, the hash must match and entries on non-independent sets must be 0.
template <typename T>
PseudoExpectation<T> read_pe(const std::string& path, const Graph* graph = nullptr) {
  Json doc = Json::parse(read_text_file(path));
  if (doc.value("format", "") != "pe-v1")
    throw std::invalid_argument("pe file: unknown format tag");
  PseudoExpectation<T> pe(doc.at("n").get<int>(), doc.at("d").get<int>());
  for (const auto& [key, val] : doc.at("values").items()) {
    Monomial m = Monomial::parse(key);
    for (int v : m.vars)
      if (v < 1 || v > pe.n) throw std::invalid_argument("pe file: vertex out of range");
    if (m.degree() > pe.d) throw std::invalid_argument("pe file: entry above degree bound");
    pe.set(m, parse_scalar<T>(val.template get<std::string>()));
  }
  if (!pe.normalized()) throw std::invalid_argument("pe file: value(emptyset) != 1");
  if (graph) {
    if (graph_hash(*graph) != doc.value("graph_hash", ""))
      throw std::invalid_argument("pe file: graph hash mismatch");
    for (const auto& [m, v] : pe.values)
      if (!monomial_independent(*graph, m))
        throw std::invalid_argument("pe file: nonzero value on a non-independent set");
  }
  return pe;
}

}  // namespace sosw

#endif  // SOSW_IO_HPP
