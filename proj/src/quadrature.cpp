#include "lgmk/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <thread>
#include <vector>

#include "lgmk/error.hpp"

namespace lgmk {

std::string QuadConfig::digest() const {
  char buf[160];
  std::snprintf(buf, sizeof buf, "simpson;panels=%d;half_width=%.6g;tol=%.3g", panels, half_width, tol);
  return buf;
}

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("LGMK_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

namespace {

double simpson_weight(int i, int intervals) {
  if (i == 0 || i == intervals) return 1.0;
  return i % 2 ? 4.0 : 2.0;
}

struct Pass {
  double fine = 0, coarse = 0, peak = 0, boundary = 0;
};

Pass run_pass(const std::function<double(const double*)>& f, int dim, double u, int intervals, int threads) {
  const int nodes = intervals + 1;
  const double h = 2 * u / intervals;
  const int half = intervals / 2;
  // Per-row partial sums are combined in row order, so the result does not
  // depend on the thread count.
  const int rows = dim == 1 ? 1 : nodes;
  std::vector<Pass> partial(rows);

  auto do_row = [&](int row) {
    Pass p;
    double x[2];
    if (dim == 1) {
      for (int i = 0; i < nodes; ++i) {
        x[0] = -u + i * h;
        const double v = f(x);
        p.fine += simpson_weight(i, intervals) * v;
        if (i % 2 == 0) p.coarse += simpson_weight(i / 2, half) * v;
        p.peak = std::max(p.peak, std::abs(v));
        if (i == 0 || i == intervals) p.boundary = std::max(p.boundary, std::abs(v));
      }
    } else {
      x[0] = -u + row * h;
      const double wr = simpson_weight(row, intervals);
      const double wr2 = row % 2 == 0 ? simpson_weight(row / 2, half) : 0.0;
      const bool edge_row = row == 0 || row == intervals;
      for (int i = 0; i < nodes; ++i) {
        x[1] = -u + i * h;
        const double v = f(x);
        p.fine += wr * simpson_weight(i, intervals) * v;
        if (wr2 != 0 && i % 2 == 0) p.coarse += wr2 * simpson_weight(i / 2, half) * v;
        p.peak = std::max(p.peak, std::abs(v));
        if (edge_row || i == 0 || i == intervals) p.boundary = std::max(p.boundary, std::abs(v));
      }
    }
    partial[row] = p;
  };

  const int nt = std::max(1, std::min(threads, rows));
  if (nt == 1) {
    for (int r = 0; r < rows; ++r) do_row(r);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < nt; ++t)
      pool.emplace_back([&, t] {
        for (int r = t; r < rows; r += nt) do_row(r);
      });
    for (auto& th : pool) th.join();
  }

  Pass total;
  for (const auto& p : partial) {
    total.fine += p.fine;
    total.coarse += p.coarse;
    total.peak = std::max(total.peak, p.peak);
    total.boundary = std::max(total.boundary, p.boundary);
  }
  const double scale = std::pow(h / 3, dim);
  total.fine *= scale;
  total.coarse *= std::pow(2 * h / 3, dim);
  return total;
}

int round_up4(int v) { return std::max(4, (v + 3) / 4 * 4); }

}  // namespace

QuadResult integrate_box(const std::function<double(const double*)>& f, int dim, const QuadConfig& cfg) {
  if (dim != 1 && dim != 2) throw UnsupportedError("quadrature is implemented for dimension 1 and 2");
  if (!(cfg.half_width > 0)) throw DomainError("half width must be positive");
  const int threads = resolve_threads(cfg.threads);
  double u = cfg.half_width;
  for (;;) {
    const int intervals = cfg.panels > 0 ? round_up4(cfg.panels) : round_up4(static_cast<int>(std::ceil(2 * u / 0.05)));
    const Pass p = run_pass(f, dim, u, intervals, threads);
    if (!std::isfinite(p.fine)) throw DomainError("integrand is not finite on the quadrature box");
    if (p.peak == 0 || p.boundary < 1e-16 * p.peak) {
      QuadResult r;
      r.value = p.fine;
      r.error = std::abs(p.fine - p.coarse);
      r.half_width = u;
      r.panels = intervals;
      r.flagged = r.error > cfg.tol * std::abs(r.value);
      return r;
    }
    if (u >= 200) throw DomainError("integrand does not decay on [-200, 200]^n; divergent integral");
    u = std::min(200.0, u * 1.5);
  }
}

}  // namespace lgmk
