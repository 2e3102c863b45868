#include "ceseplast/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace ceseplast {

namespace {

double median(std::vector<double> v) {
  if (v.empty()) return 0.0;
  const auto mid = v.begin() + static_cast<std::ptrdiff_t>(v.size() / 2);
  std::nth_element(v.begin(), mid, v.end());
  return *mid;
}

// Absolute floor on |dT11/dx| [Pa/m] so round-off on a uniform field is
// never reported as a front.
constexpr double kMinGradient = 1.0;

}  // namespace

std::vector<FrontLocation> locate_fronts(const Snapshot& snap, const FrontDetectionParams& params) {
  const auto& rows = snap.rows;
  const std::size_t n = rows.size();
  if (n < 3) return {};

  std::vector<double> g(n, 0.0), a(n, 0.0);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    g[i] = (rows[i + 1].t11 - rows[i - 1].t11) / (rows[i + 1].x - rows[i - 1].x);
    a[i] = std::abs(g[i]);
  }
  const double peak = *std::max_element(a.begin(), a.end());
  const double threshold =
      std::max({params.median_factor * median({a.begin() + 1, a.end() - 1}),
                params.floor_fraction * peak, kMinGradient});

  std::vector<std::size_t> kept;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (!(a[i] >= threshold && a[i] >= a[i - 1] && a[i] > a[i + 1])) continue;
    if (!kept.empty()) {
      const std::size_t j = kept.back();
      const double valley = *std::min_element(a.begin() + static_cast<std::ptrdiff_t>(j),
                                              a.begin() + static_cast<std::ptrdiff_t>(i) + 1);
      if (i - j < params.min_separation ||
          valley > params.valley_ratio * std::min(a[i], a[j])) {
        if (a[i] > a[j]) kept.back() = i;
        continue;
      }
    }
    kept.push_back(i);
  }

  std::vector<FrontLocation> out;
  out.reserve(kept.size());
  for (const std::size_t i : kept) {
    const double curvature = a[i - 1] - 2.0 * a[i] + a[i + 1];
    double shift = curvature != 0.0 ? 0.5 * (a[i - 1] - a[i + 1]) / curvature : 0.0;
    shift = std::clamp(shift, -0.5, 0.5);
    const double h = 0.5 * (rows[i + 1].x - rows[i - 1].x);
    out.push_back({rows[i].x + shift * h, g[i]});
  }
  return out;
}

std::vector<FrontTrack> detect_fronts(const std::vector<Snapshot>& snaps,
                                      const FrontDetectionParams& params) {
  if (snaps.size() < 2) return {};
  std::vector<const Snapshot*> order;
  for (const auto& s : snaps) order.push_back(&s);
  std::stable_sort(order.begin(), order.end(),
                   [](const Snapshot* a, const Snapshot* b) { return a->time < b->time; });

  std::vector<std::vector<FrontLocation>> found;
  for (const Snapshot* s : order) found.push_back(locate_fronts(*s, params));

  std::vector<FrontTrack> tracks;
  for (const int sign : {-1, 1}) {
    std::vector<std::vector<double>> xs;
    for (const auto& f : found) {
      xs.emplace_back();
      for (const auto& loc : f) {
        if ((loc.gradient > 0.0 ? 1 : -1) == sign) xs.back().push_back(loc.x);
      }
    }
    const std::size_t count = xs.back().size();
    if (count == 0) continue;
    std::size_t first = xs.size() - 1;
    while (first > 0 && xs[first - 1].size() == count) --first;
    if (xs.size() - first < std::max<std::size_t>(2, params.min_track_length)) continue;

    for (std::size_t r = 0; r < count; ++r) {
      FrontTrack t;
      t.sign = sign;
      for (std::size_t k = first; k < xs.size(); ++k) {
        t.times.push_back(order[k]->time);
        t.positions.push_back(xs[k][r]);
      }
      t.speed = fit_line(t.times, t.positions).slope;
      tracks.push_back(std::move(t));
    }
  }
  std::sort(tracks.begin(), tracks.end(), [](const FrontTrack& a, const FrontTrack& b) {
    return a.final_position() < b.final_position();
  });
  return tracks;
}

Moments moments(const std::vector<double>& values) {
  Moments m;
  if (values.empty()) return m;
  const double n = static_cast<double>(values.size());
  m.mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
  double ss = 0.0;
  for (double v : values) ss += (v - m.mean) * (v - m.mean);
  m.stddev = std::sqrt(ss / n);
  return m;
}

PlateauStats plateau_stats(const Snapshot& snap, double x_begin, double x_end) {
  if (x_begin > x_end) std::swap(x_begin, x_end);
  PlateauStats s;
  s.x_begin = x_begin;
  s.x_end = x_end;
  std::vector<double> rho, v, t11, p;
  for (const auto& r : snap.rows) {
    if (r.x < x_begin || r.x > x_end) continue;
    rho.push_back(r.rho);
    v.push_back(r.v);
    t11.push_back(r.t11);
    p.push_back(r.p);
  }
  s.count = rho.size();
  s.rho = moments(rho);
  s.v = moments(v);
  s.t11 = moments(t11);
  s.p = moments(p);
  return s;
}

PlateauStats plateau_between(const Snapshot& snap, double front_a, double front_b, double keep) {
  const double mid = 0.5 * (front_a + front_b);
  const double half = 0.5 * std::abs(front_b - front_a) * std::clamp(keep, 0.0, 1.0);
  return plateau_stats(snap, mid - half, mid + half);
}

PlateauStats flattest_window(const Snapshot& snap, double front_a, double front_b,
                             std::size_t nodes) {
  const double lo = std::min(front_a, front_b);
  const double hi = std::max(front_a, front_b);
  std::vector<std::size_t> inside;
  for (std::size_t i = 0; i < snap.rows.size(); ++i) {
    if (snap.rows[i].x > lo && snap.rows[i].x < hi) inside.push_back(i);
  }
  nodes = std::max<std::size_t>(nodes, 1);
  if (inside.size() < nodes) return plateau_stats(snap, lo, hi);

  std::size_t best = 0;
  double best_spread = INFINITY;
  for (std::size_t k = 0; k + nodes <= inside.size(); ++k) {
    double mn = INFINITY, mx = -INFINITY;
    for (std::size_t j = k; j < k + nodes; ++j) {
      mn = std::min(mn, snap.rows[inside[j]].t11);
      mx = std::max(mx, snap.rows[inside[j]].t11);
    }
    if (mx - mn < best_spread) {
      best_spread = mx - mn;
      best = k;
    }
  }
  return plateau_stats(snap, snap.rows[inside[best]].x, snap.rows[inside[best + nodes - 1]].x);
}

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw std::invalid_argument("fit_line: need two or more (x, y) pairs");
  }
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx == 0.0) throw std::invalid_argument("fit_line: x values are all equal");
  const double slope = sxy / sxx;
  return {slope, my - slope * mx};
}

double harmonic_amplitude(const std::vector<double>& samples, double sample_dt, double t0,
                          double omega, int harmonic) {
  if (samples.empty()) return 0.0;
  double c = 0.0, s = 0.0;
  const double w = omega * harmonic;
  for (std::size_t k = 0; k < samples.size(); ++k) {
    const double t = t0 + static_cast<double>(k) * sample_dt;
    c += samples[k] * std::cos(w * t);
    s += samples[k] * std::sin(w * t);
  }
  return 2.0 * std::hypot(c, s) / static_cast<double>(samples.size());
}

double l2_difference(const std::vector<double>& a, const std::vector<double>& b, double dx) {
  if (a.size() != b.size()) throw std::invalid_argument("l2_difference: size mismatch");
  double ss = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) ss += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(ss * dx);
}

double observed_order(double e_coarse, double e_fine, double refinement) {
  return std::log(e_coarse / e_fine) / std::log(refinement);
}

}  // namespace ceseplast
