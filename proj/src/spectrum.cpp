#include "rcorona/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "rcorona/error.hpp"

namespace rcorona {

Spectrum::Spectrum(std::vector<double> values, std::string source)
    : values_(std::move(values)), source_(std::move(source)) {
  std::sort(values_.begin(), values_.end());
}

double Spectrum::sum() const {
  double s = 0.0;
  double c = 0.0;
  for (double v : values_) {
    const double y = v - c;
    const double t = s + y;
    c = (t - s) - y;
    s = t;
  }
  return s;
}

std::size_t Spectrum::count_near(double target, double tol) const {
  return static_cast<std::size_t>(
      std::count_if(values_.begin(), values_.end(), [&](double v) { return std::abs(v - target) <= tol; }));
}

ComparisonReport compare_spectra(const Spectrum& a, const Spectrum& b, double tol) {
  if (!(tol > 0.0)) throw InputError("compare_spectra: tolerance must be positive");
  ComparisonReport report;
  if (a.size() != b.size()) {
    report.length_mismatch = true;
    report.max_deviation = std::numeric_limits<double>::infinity();
    return report;
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = std::abs(a[i] - b[i]);
    if (d > report.max_deviation) {
      report.max_deviation = d;
      report.worst_index = i;
    }
  }
  report.match = report.max_deviation <= tol;
  return report;
}

SpectrumSummary summarize(const Spectrum& s, double tol) {
  if (!(tol > 0.0)) throw InputError("summarize: tolerance must be positive");
  SpectrumSummary out;
  std::size_t start = 0;
  for (std::size_t i = 1; i <= s.size(); ++i) {
    if (i < s.size() && s[i] - s[i - 1] <= tol) continue;
    if (i > start) {
      double sum = 0.0;
      for (std::size_t k = start; k < i; ++k) sum += s[k];
      out.push_back({sum / static_cast<double>(i - start), i - start});
    }
    start = i;
  }
  return out;
}

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

nlohmann::json spectrum_to_json(const Spectrum& s) { return nlohmann::json(s.values()); }

std::string spectrum_to_csv(const Spectrum& s) {
  std::string out;
  for (double v : s.values()) {
    out += format_real(v);
    out += '\n';
  }
  return out;
}

nlohmann::json summary_to_json(const SpectrumSummary& summary) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& g : summary) a.push_back({{"value", g.value}, {"mult", g.multiplicity}});
  return a;
}

}  // namespace rcorona
