#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace rcorona {

inline constexpr double kDefaultTolerance = 1e-8;

/// Multiset of real eigenvalues kept sorted non-decreasing.
class Spectrum {
 public:
  Spectrum() = default;
  /// Sorts `values`.
  explicit Spectrum(std::vector<double> values, std::string source = {});

  const std::vector<double>& values() const noexcept { return values_; }
  const std::string& source() const noexcept { return source_; }
  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }
  double operator[](std::size_t i) const noexcept { return values_[i]; }

  double sum() const;
  /// Number of values with |v - target| <= tol.
  std::size_t count_near(double target, double tol) const;

 private:
  std::vector<double> values_;
  std::string source_;
};

struct SpectrumGroup {
  double value = 0.0;
  std::size_t multiplicity = 0;
};

using SpectrumSummary = std::vector<SpectrumGroup>;

struct ComparisonReport {
  bool match = false;
  bool length_mismatch = false;
  double max_deviation = 0.0;
  std::size_t worst_index = 0;
};

/// Pairwise comparison of the sorted values. Requires tol > 0.
ComparisonReport compare_spectra(const Spectrum& a, const Spectrum& b, double tol = kDefaultTolerance);

/// Greedy left-to-right clustering: a value joins the current group when it is
/// within tol of the previous value. Representative is the group mean.
SpectrumSummary summarize(const Spectrum& s, double tol = kDefaultTolerance);

nlohmann::json spectrum_to_json(const Spectrum& s);
/// One value per line, 17 significant digits.
std::string spectrum_to_csv(const Spectrum& s);
nlohmann::json summary_to_json(const SpectrumSummary& summary);

/// printf("%.17g").
std::string format_real(double v);

}  // namespace rcorona
