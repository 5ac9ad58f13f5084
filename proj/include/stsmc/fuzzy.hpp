#ifndef STSMC_FUZZY_HPP_
#define STSMC_FUZZY_HPP_

#include <string>
#include <vector>

namespace stsmc {

/// One triangular membership function: peak 1 at `center`, reaching 0 at
/// `center +- half_width`, linear in between.
struct TriangularSet {
  std::string label;
  double center = 0.0;
  double half_width = 1.0;
};

double triangular_membership(double x, const TriangularSet& set);

/// Ordered family of triangular sets covering [lo, hi]. Uniform partitions
/// built by make_uniform_partition() overlap at 50% and sum to 1 everywhere
/// on the universe.
struct Partition {
  double lo = 0.0;
  double hi = 1.0;
  std::vector<TriangularSet> sets;

  std::size_t size() const { return sets.size(); }
  /// Index of the set with the given label; throws std::invalid_argument if absent.
  std::size_t index_of(const std::string& label) const;
};

/// Centers uniformly spaced from lo to hi, half_width equal to the spacing.
/// Throws std::invalid_argument unless lo < hi and labels.size() >= 2.
Partition make_uniform_partition(const std::vector<std::string>& labels,
                                 double lo, double hi);

/// Membership degree of x in every set. x is clamped to [lo, hi] first, so
/// the degrees always sum to 1 with at most two adjacent nonzero entries.
std::vector<double> fuzzify(double x, const Partition& p);

/// Complete two-input rule grid, row-major: entries[i * col_labels.size() + j]
/// is the output label for (row_labels[i], col_labels[j]).
struct RuleTable {
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
  std::vector<std::string> entries;

  const std::string& entry(std::size_t row, std::size_t col) const {
    return entries[row * col_labels.size() + col];
  }
};

/// Two-input one-output Mamdani system: min AND, max aggregation,
/// center-of-sets defuzzification, result scaled by output_gain.
struct FisConfig {
  Partition in1;
  Partition in2;
  Partition out;
  RuleTable rules;
  double output_gain = 1.0;
};

/// Throws std::invalid_argument on an inconsistent config (incomplete rule
/// grid, unknown consequent label, label mismatch with the input partitions,
/// nonpositive output_gain).
void validate(const FisConfig& cfg);

/// Crisp output for crisp inputs. Inputs outside their universes are clamped.
/// Throws std::logic_error if no rule fires (impossible for a valid config
/// with partition-of-unity inputs).
double mamdani_evaluate(double x1, double x2, const FisConfig& cfg);

}  // namespace stsmc

#endif  // STSMC_FUZZY_HPP_
