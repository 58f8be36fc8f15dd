#include <algorithm>

#include "mixspin/analysis.hpp"
#include "mixspin/errors.hpp"

namespace mixspin {

std::vector<Plateau> detect_plateau(std::span<const SeriesPoint> series, double value_tol, double epsilon) {
  if (series.size() < 8) throw ArgumentError("detect_plateau: need at least 8 points");
  for (std::size_t i = 1; i < series.size(); ++i)
    if (!(series[i].x > series[i - 1].x)) throw ArgumentError("detect_plateau: x must be strictly increasing");

  std::vector<Plateau> out;
  std::size_t i = 0;
  while (i < series.size()) {
    if (!(series[i].n > epsilon)) {
      ++i;
      continue;
    }
    double lo = series[i].n;
    double hi = series[i].n;
    double sum = series[i].n;
    std::size_t j = i + 1;
    for (; j < series.size(); ++j) {
      const double n = series[j].n;
      if (!(n > epsilon)) break;
      const double new_lo = std::min(lo, n);
      const double new_hi = std::max(hi, n);
      if (new_hi - new_lo > value_tol) break;
      lo = new_lo;
      hi = new_hi;
      sum += n;
    }
    const std::size_t len = j - i;
    if (len >= kMinPlateauPoints)
      out.push_back({i, j - 1, series[i].x, series[j - 1].x, sum / static_cast<double>(len)});
    i = j;
  }
  return out;
}

}  // namespace mixspin
