#include "mhp/figures.hpp"

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <cmath>
#include <sstream>

#include "mhp/cost.hpp"
#include "mhp/errors.hpp"

namespace mhp {

namespace {

std::string fmt(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

CurveTable sweep(const std::vector<CostFunction>& costs, std::vector<std::string> labels, std::size_t points) {
  if (points < 2) throw InputError("figures: need at least two grid points");
  CurveTable t;
  t.header.push_back("p");
  for (auto& l : labels) t.header.push_back(std::move(l));
  for (std::size_t i = 0; i < points; ++i) t.p.push_back(static_cast<double>(i) / static_cast<double>(points - 1));
  for (const auto& c : costs) {
    std::vector<double> col;
    col.reserve(points);
    for (double p : t.p) col.push_back(cost_at_high_mass(c, p));
    t.columns.push_back(std::move(col));
  }
  return t;
}

}  // namespace

CurveTable alpha_sweep(std::span<const double> alphas, double beta, std::size_t points) {
  std::vector<CostFunction> costs;
  std::vector<std::string> labels;
  for (double a : alphas) {
    costs.push_back(CostFunction::quadratic1d(a, beta));
    labels.push_back("alpha=" + fmt(a));
  }
  return sweep(costs, std::move(labels), points);
}

CurveTable beta_sweep(std::span<const double> betas, double alpha, std::size_t points) {
  std::vector<CostFunction> costs;
  std::vector<std::string> labels;
  for (double b : betas) {
    costs.push_back(CostFunction::quadratic1d(alpha, b));
    labels.push_back("beta=" + fmt(b));
  }
  return sweep(costs, std::move(labels), points);
}

std::string to_csv(const CurveTable& t) {
  std::ostringstream out;
  for (std::size_t j = 0; j < t.header.size(); ++j) out << (j ? "," : "") << t.header[j];
  out << '\n';
  for (std::size_t i = 0; i < t.p.size(); ++i) {
    out << fmt(t.p[i]);
    for (const auto& col : t.columns) out << ',' << fmt(col[i]);
    out << '\n';
  }
  return out.str();
}

std::vector<double> parse_range(const std::string& text) {
  std::vector<double> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t colon = text.find(':', start);
    const std::string tok = text.substr(start, colon == std::string::npos ? std::string::npos : colon - start);
    double x = 0.0;
    auto res = std::from_chars(tok.data(), tok.data() + tok.size(), x);
    if (tok.empty() || res.ec != std::errc() || res.ptr != tok.data() + tok.size())
      throw InputError("range '" + text + "': expected lo:step:hi");
    parts.push_back(x);
    if (colon == std::string::npos) break;
    start = colon + 1;
  }
  if (parts.size() == 1) return parts;
  if (parts.size() != 3) throw InputError("range '" + text + "': expected lo:step:hi");
  const double lo = parts[0];
  const double step = parts[1];
  const double hi = parts[2];
  if (!(step > 0.0) || !(hi >= lo)) throw InputError("range '" + text + "': need step > 0 and hi >= lo");
  const double count = std::floor((hi - lo) / step + 1e-9);
  if (count > 1e6) throw SizeError("range '" + text + "': too many values");
  std::vector<double> out;
  // Snap to 12 significant digits so 1.0:0.1:5 yields 1.7 rather than
  // 1.7000000000000002.
  char buf[32];
  for (long k = 0; k <= static_cast<long>(count); ++k) {
    std::snprintf(buf, sizeof buf, "%.12g", lo + static_cast<double>(k) * step);
    out.push_back(std::strtod(buf, nullptr));
  }
  return out;
}

}  // namespace mhp
