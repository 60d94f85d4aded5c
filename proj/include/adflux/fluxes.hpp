#ifndef ADFLUX_FLUXES_HPP
#define ADFLUX_FLUXES_HPP

#include <optional>
#include <string>
#include <vector>

#include "adflux/euler.hpp"

namespace adflux {

/// Interface flux schemes. All are of the form "HLL flux plus anti-diffusion
/// terms for the linearly degenerate waves and the face-normal velocity
/// jump"; they differ only in the anti-diffusion coefficients and, for the
/// convection-pressure-split family, in how the convective flux is upwinded.
enum class Scheme {
  hlle,            // no anti-diffusion
  hllem_einfeldt,  // contact speed |(SR+SL)/2|
  hllem,           // Park-Kwon contact speed |u~n| (the usual HLLEM)
  hllec,           // contact wave only
  hlles,           // shear wave only
  hlle_plus,       // 0.5 coefficients around shocks
  hllcps,          // convection-pressure split, delta2=1, delta3=deltan=(g-1)/g
  hllem_fp,        // HLLEM with pressure-function scaling + normal term
  hllcps_fp,       // split scheme with the same improved coefficients
  hllcps_fp_alt,   // less dissipative variant: delta2=delta3=fp1
};

const std::vector<std::pair<std::string, Scheme>>& scheme_names();
Scheme scheme_from_name(const std::string& name);  // throws listing valid names
std::string scheme_name(Scheme s);

/// True for schemes whose coefficients involve the fp1 pressure function.
bool scheme_uses_sensor(Scheme s);
/// Split-flux family (convective upwinding + pressure HLL).
bool scheme_is_split(Scheme s);
/// Averaging used for the tilde/bar interface quantities.
Averaging scheme_averaging(Scheme s);

struct SchemeConfig {
  Scheme scheme = Scheme::hllem_fp;
  // Test and experiment knobs; unset in production runs.
  std::optional<double> force_fp1;      // replaces the fp1 sensor value
  std::optional<double> force_mach_fn;  // replaces f(M) in delta_n
  std::optional<double> force_delta_n;  // replaces delta_n outright
};

/// Fastest left/right signal speeds, sl <= 0 <= sr.
struct WaveSpeeds {
  double sl = 0.0;
  double sr = 0.0;
};

/// sl = min(0, unL - aL, un~ - a~), sr = max(0, unR + aR, un~ + a~).
WaveSpeeds einfeldt_wave_speeds(const FaceState& l, const FaceState& r,
                                const InterfaceAverage& avg, const GasModel& gas);

/// Anti-diffusion coefficients, each in [0, 1].
struct AntiDiffusionCoeffs {
  double d2 = 0.0;  // contact wave
  double d3 = 0.0;  // shear wave
  double dn = 0.0;  // face-normal velocity jump
};

/// Sensor values entering the anti-diffusion coefficients at one face. fp1
/// is the five-face pressure function scaling the contact/shear waves;
/// fp1_dn gates the face-normal coefficient. For the HLL-form schemes the
/// solver widens fp1_dn by one face in the face-normal direction so that
/// delta_n stays off across a shock sitting on a single interface; the two
/// values coincide for the split family, away from shocks, and in 1D.
struct FaceSensors {
  double fp1 = 1.0;
  double fp1_dn = 1.0;
  FaceSensors() = default;
  FaceSensors(double v) : fp1(v), fp1_dn(v) {}  // NOLINT: deliberate implicit
  FaceSensors(double v, double vdn) : fp1(v), fp1_dn(vdn) {}
};

/// Coefficients for the given scheme at this interface. mach_l/mach_r are the
/// local Mach numbers |q|/a of the two adjacent cells (rotation invariant, so
/// they can be evaluated from face-frame states). The sensors are ignored by
/// schemes that do not use them.
AntiDiffusionCoeffs anti_diffusion_coeffs(const SchemeConfig& cfg,
                                          const InterfaceAverage& avg, double mach_l,
                                          double mach_r, const FaceSensors& sensors,
                                          const GasModel& gas);

/// B dU = d2*alpha2*R2 + d3*alpha3*R3 + dn*rho~*dun*(0,1,0,un~)^T with
/// alpha2 = drho - dp/a~^2, alpha3 = rho~*dut,
/// R2 = (1, un~, ut~, q2~/2)^T, R3 = (0, 0, 1, ut~)^T and d(.) = (.)R - (.)L.
Flux4 anti_diffusion_term(const AntiDiffusionCoeffs& c, const InterfaceAverage& avg,
                          const FaceState& l, const FaceState& r);

/// HLL-form flux: (sr*FL - sl*FR)/(sr-sl) + sr*sl/(sr-sl)*(dU - BdU).
Flux4 hll_family_flux(const FaceState& l, const FaceState& r, const SchemeConfig& cfg,
                      const FaceSensors& sensors, const GasModel& gas);

/// Convection-pressure split flux: upwinded convective part plus the HLL
/// pressure flux with anti-diffusion. Arithmetic interface averages.
Flux4 hllcps_flux(const FaceState& l, const FaceState& r, const SchemeConfig& cfg,
                  const FaceSensors& sensors, const GasModel& gas);

/// Original HLL-CPS evaluated through the explicit pressure-jump dissipation
/// vector (the Zha-Bilgen split form). Algebraically identical to
/// hllcps_flux with the original coefficients; kept as the second route for
/// the equivalence check.
Flux4 hllcps_flux_pressure_jump_form(const FaceState& l, const FaceState& r,
                                     const GasModel& gas);

/// Dispatch on the scheme family.
Flux4 interface_flux(const FaceState& l, const FaceState& r, const SchemeConfig& cfg,
                     const FaceSensors& sensors, const GasModel& gas);

/// All-Mach correction applied additively to the original HLLEM flux. Equals
/// hll_family_flux with Scheme::hllem_fp.
Flux4 all_mach_additive_flux(const FaceState& l, const FaceState& r,
                             const SchemeConfig& cfg, const FaceSensors& sensors,
                             const GasModel& gas);

/// Split of a scheme's flux into a central part and numerical dissipation,
/// D = F(l,r) - (F(l)+F(r))/2. For split schemes the convective and pressure
/// contributions are reported separately as well.
struct DissipationSplit {
  Flux4 central{};
  Flux4 dissipation{};
  bool has_parts = false;
  Flux4 convective_dissipation{};
  Flux4 pressure_dissipation{};
};

DissipationSplit dissipation_split(const FaceState& l, const FaceState& r,
                                   const SchemeConfig& cfg, const FaceSensors& sensors,
                                   const GasModel& gas);

}  // namespace adflux

#endif
