#ifndef STSMC_TRACE_HPP_
#define STSMC_TRACE_HPP_

#include <string>
#include <vector>

namespace stsmc {

/// One closed-loop sample. Baseline controllers record k_c = 1 and r_v = 0.
struct TraceRecord {
  double t = 0.0;
  double vC = 0.0;
  double iL = 0.0;
  double e = 0.0;
  double edot = 0.0;
  double S = 0.0;
  double u = 0.0;
  double k_c = 1.0;
  double r_v = 0.0;
  double vin = 0.0;
  double R = 0.0;
};

struct Trace {
  std::vector<TraceRecord> rows;

  std::size_t size() const { return rows.size(); }
  bool empty() const { return rows.empty(); }
};

/// CSV with header t,vC,iL,e,edot,S,u,k_c,r_v,vin,R and one row per sample,
/// 9 significant digits. Byte-deterministic for identical traces.
/// Throws std::runtime_error naming the path on I/O failure.
void write_trace_csv(const Trace& tr, const std::string& path);

/// Reads a file produced by write_trace_csv. Throws std::runtime_error on a
/// missing file or malformed row.
Trace read_trace_csv(const std::string& path);

}  // namespace stsmc

#endif  // STSMC_TRACE_HPP_
