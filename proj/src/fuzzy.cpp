#include "stsmc/fuzzy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace stsmc {

double triangular_membership(double x, const TriangularSet& set) {
  return std::max(0.0, 1.0 - std::abs(x - set.center) / set.half_width);
}

std::size_t Partition::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (sets[i].label == label) return i;
  }
  throw std::invalid_argument("partition has no set labeled '" + label + "'");
}

Partition make_uniform_partition(const std::vector<std::string>& labels,
                                 double lo, double hi) {
  if (labels.size() < 2) {
    throw std::invalid_argument("uniform partition needs at least 2 labels");
  }
  if (!(lo < hi)) {
    throw std::invalid_argument("uniform partition needs lo < hi");
  }
  const std::size_t n = labels.size();
  const double spacing = (hi - lo) / static_cast<double>(n - 1);
  Partition p;
  p.lo = lo;
  p.hi = hi;
  p.sets.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    double center = lo + spacing * static_cast<double>(i);
    if (i == n - 1) center = hi;  // pin the last center to the bound exactly
    p.sets.push_back({labels[i], center, spacing});
  }
  return p;
}

std::vector<double> fuzzify(double x, const Partition& p) {
  const double xc = std::clamp(x, p.lo, p.hi);
  std::vector<double> mu(p.sets.size());
  for (std::size_t i = 0; i < p.sets.size(); ++i) {
    mu[i] = triangular_membership(xc, p.sets[i]);
  }
  return mu;
}

void validate(const FisConfig& cfg) {
  if (!(cfg.output_gain > 0.0)) {
    throw std::invalid_argument("FIS output_gain must be positive");
  }
  const std::size_t rows = cfg.rules.row_labels.size();
  const std::size_t cols = cfg.rules.col_labels.size();
  if (rows != cfg.in1.size() || cols != cfg.in2.size()) {
    throw std::invalid_argument("rule grid shape does not match input partitions");
  }
  if (cfg.rules.entries.size() != rows * cols) {
    throw std::invalid_argument("rule grid is incomplete");
  }
  for (std::size_t i = 0; i < rows; ++i) {
    if (cfg.rules.row_labels[i] != cfg.in1.sets[i].label) {
      throw std::invalid_argument("rule row labels disagree with input 1 partition");
    }
  }
  for (std::size_t j = 0; j < cols; ++j) {
    if (cfg.rules.col_labels[j] != cfg.in2.sets[j].label) {
      throw std::invalid_argument("rule column labels disagree with input 2 partition");
    }
  }
  for (const auto& label : cfg.rules.entries) {
    cfg.out.index_of(label);  // throws on unknown consequent
  }
}

double mamdani_evaluate(double x1, double x2, const FisConfig& cfg) {
  const std::vector<double> mu1 = fuzzify(x1, cfg.in1);
  const std::vector<double> mu2 = fuzzify(x2, cfg.in2);

  // Aggregate firing strengths per output label by max.
  std::vector<double> agg(cfg.out.size(), 0.0);
  const std::size_t cols = cfg.in2.size();
  for (std::size_t i = 0; i < mu1.size(); ++i) {
    if (mu1[i] == 0.0) continue;
    for (std::size_t j = 0; j < cols; ++j) {
      if (mu2[j] == 0.0) continue;
      const double strength = std::min(mu1[i], mu2[j]);
      const std::size_t k = cfg.out.index_of(cfg.rules.entry(i, j));
      agg[k] = std::max(agg[k], strength);
    }
  }

  double num = 0.0;
  double den = 0.0;
  for (std::size_t k = 0; k < agg.size(); ++k) {
    num += agg[k] * cfg.out.sets[k].center;
    den += agg[k];
  }
  if (den <= 0.0) {
    throw std::logic_error("mamdani_evaluate: no rule fired");
  }
  return cfg.output_gain * (num / den);
}

}  // namespace stsmc
