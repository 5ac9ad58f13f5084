#include "stsmc/trace.hpp"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace stsmc {

namespace {

constexpr const char* kHeader = "t,vC,iL,e,edot,S,u,k_c,r_v,vin,R";

void append_field(std::string& line, double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  line += buf;
}

}  // namespace

void write_trace_csv(const Trace& tr, const std::string& path) {
  if (path.empty()) {
    throw std::runtime_error("write_trace_csv: empty destination path");
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("write_trace_csv: cannot open '" + path + "'");
  }
  out << kHeader << '\n';
  std::string line;
  for (const auto& r : tr.rows) {
    line.clear();
    const std::array<double, 11> fields = {r.t, r.vC,  r.iL,  r.e,   r.edot, r.S,
                                           r.u, r.k_c, r.r_v, r.vin, r.R};
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i) line += ',';
      append_field(line, fields[i]);
    }
    line += '\n';
    out << line;
  }
  out.flush();
  if (!out) {
    throw std::runtime_error("write_trace_csv: write failed for '" + path + "'");
  }
}

Trace read_trace_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("read_trace_csv: cannot open '" + path + "'");
  }
  std::string line;
  if (!std::getline(in, line) || line != kHeader) {
    throw std::runtime_error("read_trace_csv: bad header in '" + path + "'");
  }
  Trace tr;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::array<double, 11> f{};
    const char* p = line.c_str();
    for (std::size_t i = 0; i < f.size(); ++i) {
      char* end = nullptr;
      f[i] = std::strtod(p, &end);
      if (end == p || (i + 1 < f.size() && *end != ',')) {
        std::ostringstream msg;
        msg << "read_trace_csv: malformed row " << lineno << " in '" << path << "'";
        throw std::runtime_error(msg.str());
      }
      p = (i + 1 < f.size()) ? end + 1 : end;
    }
    tr.rows.push_back({f[0], f[1], f[2], f[3], f[4], f[5], f[6], f[7], f[8], f[9], f[10]});
  }
  return tr;
}

}  // namespace stsmc
