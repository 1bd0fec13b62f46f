#include "sosw/io.hpp"

#include <chrono>
#include <filesystem>
#include <sstream>

namespace sosw {

void atomic_write_text(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << content;
    if (!out.flush()) throw std::runtime_error("write failed for " + tmp.string());
  }
  fs::rename(tmp, target);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json make_report(const std::string& command, Json config, Json results) {
  Json report;
  report["schema"] = "v1";
  report["command"] = command;
  report["timestamp"] = static_cast<long>(
      std::chrono::duration_cast<std::chrono::seconds>(
          std::chrono::system_clock::now().time_since_epoch())
          .count());
  report["config"] = std::move(config);
  report["results"] = std::move(results);
  return report;
}

void write_report(const std::string& path, const Json& report) {
  atomic_write_text(path, report.dump(2) + "\n");
}

PeFileHeader read_pe_header(const std::string& path) {
  Json doc = Json::parse(read_text_file(path));
  PeFileHeader h;
  h.n = doc.at("n").get<int>();
  h.d = doc.at("d").get<int>();
  h.mode = doc.value("mode", "");
  h.graph_hash = doc.value("graph_hash", "");
  return h;
}

}  // namespace sosw
