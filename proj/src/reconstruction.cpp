#include "adflux/reconstruction.hpp"

namespace adflux {

namespace {

// Symmetric van Leer limited difference: harmonic mean when the one-sided
// differences agree in sign, zero at extrema.
inline double limited_pair(double dm, double dp) {
  const double prod = dm * dp;
  return prod > 0.0 ? 2.0 * prod / (dm + dp) : 0.0;
}

struct Extrapolation {
  double left, right;
};

inline Extrapolation face_deltas(double wm2, double wm1, double w0, double wp1,
                                 const ReconstructionConfig& cfg) {
  // Left state extrapolated from cell m1, right state from cell 0.
  const double k = cfg.kappa;
  double dml = wm1 - wm2, dpl = w0 - wm1;
  double dmr = w0 - wm1, dpr = wp1 - w0;
  if (cfg.limiter == Limiter::van_leer) {
    const double hl = limited_pair(dml, dpl);
    const double hr = limited_pair(dmr, dpr);
    dml = dpl = hl;
    dmr = dpr = hr;
  }
  Extrapolation e;
  e.left = wm1 + 0.25 * ((1.0 - k) * dml + (1.0 + k) * dpl);
  e.right = w0 - 0.25 * ((1.0 + k) * dmr + (1.0 - k) * dpr);
  return e;
}

}  // namespace

void muscl_reconstruct_line(const std::vector<double>& w, int n,
                            const ReconstructionConfig& cfg, std::vector<double>& wl,
                            std::vector<double>& wr) {
  wl.resize(n + 1);
  wr.resize(n + 1);
  if (cfg.order <= 1) {
    for (int f = 0; f <= n; ++f) {
      wl[f] = w[f + 1];
      wr[f] = w[f + 2];
    }
    return;
  }
  for (int f = 0; f <= n; ++f) {
    const Extrapolation e =
        face_deltas(w[f], w[f + 1], w[f + 2], w[f + 3], cfg);
    wl[f] = e.left;
    wr[f] = e.right;
  }
}

void muscl_reconstruct_primitives(const std::vector<Primitive>& w, int n,
                                  const ReconstructionConfig& cfg,
                                  std::vector<Primitive>& wl,
                                  std::vector<Primitive>& wr) {
  wl.resize(n + 1);
  wr.resize(n + 1);
  if (cfg.order <= 1) {
    for (int f = 0; f <= n; ++f) {
      wl[f] = w[f + 1];
      wr[f] = w[f + 2];
    }
    return;
  }
  auto component = [&](double Primitive::* m, int f, Extrapolation& e) {
    e = face_deltas(w[f].*m, w[f + 1].*m, w[f + 2].*m, w[f + 3].*m, cfg);
  };
  for (int f = 0; f <= n; ++f) {
    Extrapolation e;
    component(&Primitive::rho, f, e);
    wl[f].rho = e.left;
    wr[f].rho = e.right;
    component(&Primitive::u, f, e);
    wl[f].u = e.left;
    wr[f].u = e.right;
    component(&Primitive::v, f, e);
    wl[f].v = e.left;
    wr[f].v = e.right;
    component(&Primitive::p, f, e);
    wl[f].p = e.left;
    wr[f].p = e.right;
  }
}

}  // namespace adflux
