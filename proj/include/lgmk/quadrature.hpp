#pragma once

#include <functional>
#include <string>

namespace lgmk {

struct QuadConfig {
  int panels = 0;           // intervals per axis; 0 picks a spacing near 0.05
  double half_width = 8.0;  // initial U of the box [-U, U]^n, grown as needed
  double tol = 1e-8;        // relative panel-halving tolerance used for flagging
  int threads = 0;          // 0 reads LGMK_THREADS, then hardware concurrency
  std::string digest() const;
};

struct QuadResult {
  double value = 0;
  double error = 0;  // |fine - coarse| with coarse = half the panels
  double half_width = 0;
  int panels = 0;
  bool flagged = false;  // error above tol * |value|
};

/// Composite Simpson rule on [-U, U]^dim (dim 1 or 2). U starts at
/// cfg.half_width and grows until the boundary magnitude is below 1e-16 of the
/// peak; throws DomainError when no such U <= 200 exists.
QuadResult integrate_box(const std::function<double(const double*)>& f, int dim, const QuadConfig& cfg);

int resolve_threads(int requested);

}  // namespace lgmk
