#ifndef ADFLUX_RECONSTRUCTION_HPP
#define ADFLUX_RECONSTRUCTION_HPP

#include <vector>

#include "adflux/euler.hpp"

namespace adflux {

enum class Limiter { none, van_leer };

struct ReconstructionConfig {
  int order = 1;  // 1 = cell values, 2 = MUSCL kappa scheme
  double kappa = 1.0 / 3.0;
  Limiter limiter = Limiter::van_leer;
};

/// kappa-scheme face extrapolation for one scalar line. `w` holds n cell
/// values plus two ghosts on each side (length n + 4, cell c at w[c + 2]).
/// Face f (0..n) sits between cells f-1 and f; outputs are the left and
/// right face states.
void muscl_reconstruct_line(const std::vector<double>& w, int n,
                            const ReconstructionConfig& cfg, std::vector<double>& wl,
                            std::vector<double>& wr);

/// Same scheme applied componentwise to a line of primitive states.
void muscl_reconstruct_primitives(const std::vector<Primitive>& w, int n,
                                  const ReconstructionConfig& cfg,
                                  std::vector<Primitive>& wl,
                                  std::vector<Primitive>& wr);

}  // namespace adflux

#endif
