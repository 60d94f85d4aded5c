#include "adflux/fluxes.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace adflux {

namespace {

double local_mach(const FaceState& w, const GasModel& gas) {
  return std::sqrt(w.un * w.un + w.ut * w.ut) / gas.sound_speed(w.rho, w.p);
}

Flux4 conserved_jump(const FaceState& l, const FaceState& r, const GasModel& gas) {
  return {r.rho - l.rho, r.rho * r.un - l.rho * l.un, r.rho * r.ut - l.rho * l.ut,
          face_total_energy(r, gas) - face_total_energy(l, gas)};
}

// Anti-diffusion coefficients with the wave speeds available (needed only by
// the original Einfeldt contact-speed estimate).
AntiDiffusionCoeffs coeffs_impl(const SchemeConfig& cfg, const InterfaceAverage& avg,
                                double mach_l, double mach_r, FaceSensors sensors,
                                const GasModel& gas, const WaveSpeeds* ws) {
  if (cfg.force_fp1) sensors = FaceSensors(*cfg.force_fp1);
  const double fp1 = sensors.fp1;
  double f_mach = std::min(std::max(mach_r, mach_l), 1.0);
  if (cfg.force_mach_fn) f_mach = *cfg.force_mach_fn;

  const double park = avg.a / (avg.a + std::abs(avg.un));
  const double cps3 = (gas.gamma - 1.0) / gas.gamma;

  AntiDiffusionCoeffs c;
  switch (cfg.scheme) {
    case Scheme::hlle:
      break;
    case Scheme::hllem_einfeldt: {
      if (!ws)
        throw std::logic_error("hllem_einfeldt coefficients need the wave speeds");
      const double ubar = std::abs(0.5 * (ws->sr + ws->sl));
      c.d2 = c.d3 = avg.a / (avg.a + ubar);
      break;
    }
    case Scheme::hllem:
      c.d2 = c.d3 = park;
      break;
    case Scheme::hllec:
      c.d2 = park;
      break;
    case Scheme::hlles:
      c.d3 = park;
      break;
    case Scheme::hlle_plus:
      // Constant 0.5 near shocks; smooth regions keep the contact-speed form.
      c.d2 = c.d3 = (fp1 < 0.9) ? 0.5 : park;
      break;
    case Scheme::hllcps:
      c.d2 = 1.0;
      c.d3 = cps3;
      c.dn = cps3;
      break;
    case Scheme::hllem_fp:
    case Scheme::hllcps_fp:
      c.d2 = c.d3 = park * fp1;
      c.dn = (1.0 - f_mach) * sensors.fp1_dn;
      break;
    case Scheme::hllcps_fp_alt:
      c.d2 = c.d3 = fp1;
      c.dn = (1.0 - f_mach) * sensors.fp1_dn;
      break;
  }
  if (cfg.force_delta_n) c.dn = *cfg.force_delta_n;
  return c;
}

Flux4 split_convective_flux(const FaceState& l, const FaceState& r,
                            const WaveSpeeds& ws, double ubar, const GasModel& gas) {
  // Upwinded convective flux M_nK*(rho, rho*un, rho*ut, rho*E)_K*a_K. The
  // denominators cannot vanish: ubar >= 0 forces sl < 0 unless ubar > 0.
  if (ubar >= 0.0) {
    const double scale = ubar / (ubar - ws.sl) * (l.un - ws.sl);
    return {scale * l.rho, scale * l.rho * l.un, scale * l.rho * l.ut,
            scale * face_total_energy(l, gas)};
  }
  const double scale = ubar / (ubar - ws.sr) * (r.un - ws.sr);
  return {scale * r.rho, scale * r.rho * r.un, scale * r.rho * r.ut,
          scale * face_total_energy(r, gas)};
}

void check_spread(const WaveSpeeds& ws) {
  if (!(ws.sr - ws.sl > 1e-12))
    throw std::runtime_error("flux: degenerate wave-speed spread");
}

}  // namespace

const std::vector<std::pair<std::string, Scheme>>& scheme_names() {
  static const std::vector<std::pair<std::string, Scheme>> names = {
      {"hlle", Scheme::hlle},
      {"hllem_einfeldt", Scheme::hllem_einfeldt},
      {"hllem", Scheme::hllem},
      {"hllec", Scheme::hllec},
      {"hlles", Scheme::hlles},
      {"hlle_plus", Scheme::hlle_plus},
      {"hllcps", Scheme::hllcps},
      {"hllem_fp", Scheme::hllem_fp},
      {"hllcps_fp", Scheme::hllcps_fp},
      {"hllcps_fp_alt", Scheme::hllcps_fp_alt},
  };
  return names;
}

Scheme scheme_from_name(const std::string& name) {
  if (name == "hllem_park") return Scheme::hllem;  // explicit-variant alias
  for (const auto& [n, s] : scheme_names())
    if (n == name) return s;
  std::ostringstream msg;
  msg << "unknown scheme '" << name << "'; valid schemes:";
  for (const auto& [n, s] : scheme_names()) msg << " " << n;
  throw std::invalid_argument(msg.str());
}

std::string scheme_name(Scheme s) {
  for (const auto& [n, v] : scheme_names())
    if (v == s) return n;
  return "?";
}

bool scheme_uses_sensor(Scheme s) {
  switch (s) {
    case Scheme::hlle_plus:
    case Scheme::hllem_fp:
    case Scheme::hllcps_fp:
    case Scheme::hllcps_fp_alt:
      return true;
    default:
      return false;
  }
}

bool scheme_is_split(Scheme s) {
  return s == Scheme::hllcps || s == Scheme::hllcps_fp || s == Scheme::hllcps_fp_alt;
}

Averaging scheme_averaging(Scheme s) {
  return scheme_is_split(s) ? Averaging::arithmetic : Averaging::roe;
}

WaveSpeeds einfeldt_wave_speeds(const FaceState& l, const FaceState& r,
                                const InterfaceAverage& avg, const GasModel& gas) {
  const double al = gas.sound_speed(l.rho, l.p);
  const double ar = gas.sound_speed(r.rho, r.p);
  WaveSpeeds ws;
  ws.sl = std::min({0.0, l.un - al, avg.un - avg.a});
  ws.sr = std::max({0.0, r.un + ar, avg.un + avg.a});
  return ws;
}

AntiDiffusionCoeffs anti_diffusion_coeffs(const SchemeConfig& cfg,
                                          const InterfaceAverage& avg, double mach_l,
                                          double mach_r, const FaceSensors& sensors,
                                          const GasModel& gas) {
  return coeffs_impl(cfg, avg, mach_l, mach_r, sensors, gas, nullptr);
}

Flux4 anti_diffusion_term(const AntiDiffusionCoeffs& c, const InterfaceAverage& avg,
                          const FaceState& l, const FaceState& r) {
  const double drho = r.rho - l.rho;
  const double dp = r.p - l.p;
  const double dun = r.un - l.un;
  const double dut = r.ut - l.ut;
  const double alpha2 = drho - dp / (avg.a * avg.a);
  const double alpha3 = avg.rho * dut;
  const double w2 = c.d2 * alpha2;
  const double w3 = c.d3 * alpha3;
  const double wn = c.dn * avg.rho * dun;
  return {w2, w2 * avg.un + wn, w2 * avg.ut + w3,
          w2 * 0.5 * avg.q2 + w3 * avg.ut + wn * avg.un};
}

Flux4 hll_family_flux(const FaceState& l, const FaceState& r, const SchemeConfig& cfg,
                      const FaceSensors& sensors, const GasModel& gas) {
  const InterfaceAverage avg =
      interface_average(l, r, scheme_averaging(cfg.scheme), gas);
  const WaveSpeeds ws = einfeldt_wave_speeds(l, r, avg, gas);
  check_spread(ws);

  const AntiDiffusionCoeffs c = coeffs_impl(cfg, avg, local_mach(l, gas),
                                            local_mach(r, gas), sensors, gas, &ws);
  const Flux4 fl = physical_flux(l, gas);
  const Flux4 fr = physical_flux(r, gas);
  const Flux4 du = conserved_jump(l, r, gas);
  const Flux4 bdu = anti_diffusion_term(c, avg, l, r);

  const double inv = 1.0 / (ws.sr - ws.sl);
  const double diff = ws.sr * ws.sl * inv;
  Flux4 f;
  for (int k = 0; k < 4; ++k)
    f[k] = (ws.sr * fl[k] - ws.sl * fr[k]) * inv + diff * (du[k] - bdu[k]);
  return f;
}

Flux4 hllcps_flux(const FaceState& l, const FaceState& r, const SchemeConfig& cfg,
                  const FaceSensors& sensors, const GasModel& gas) {
  // Anti-diffusion terms and the convective upwinding use arithmetic means
  // (that is what makes the pressure-jump identity exact); the signal-speed
  // estimates keep the Roe-averaged slots of the HLL construction.
  const InterfaceAverage avg = interface_average(l, r, Averaging::arithmetic, gas);
  const WaveSpeeds ws =
      einfeldt_wave_speeds(l, r, interface_average(l, r, Averaging::roe, gas), gas);
  check_spread(ws);

  const Flux4 conv = split_convective_flux(l, r, ws, avg.un, gas);
  const AntiDiffusionCoeffs c = coeffs_impl(cfg, avg, local_mach(l, gas),
                                            local_mach(r, gas), sensors, gas, &ws);
  const Flux4 f2l = {0.0, l.p, 0.0, l.p * l.un};
  const Flux4 f2r = {0.0, r.p, 0.0, r.p * r.un};
  const Flux4 du = conserved_jump(l, r, gas);
  const Flux4 bdu = anti_diffusion_term(c, avg, l, r);

  const double inv = 1.0 / (ws.sr - ws.sl);
  const double diff = ws.sr * ws.sl * inv;
  Flux4 f;
  for (int k = 0; k < 4; ++k)
    f[k] = conv[k] + (ws.sr * f2l[k] - ws.sl * f2r[k]) * inv + diff * (du[k] - bdu[k]);
  return f;
}

Flux4 hllcps_flux_pressure_jump_form(const FaceState& l, const FaceState& r,
                                     const GasModel& gas) {
  const InterfaceAverage avg = interface_average(l, r, Averaging::arithmetic, gas);
  const WaveSpeeds ws =
      einfeldt_wave_speeds(l, r, interface_average(l, r, Averaging::roe, gas), gas);
  check_spread(ws);

  const Flux4 conv = split_convective_flux(l, r, ws, avg.un, gas);
  const double a2 = avg.a * avg.a;
  const double g1 = gas.gamma - 1.0;
  const double ql2 = l.un * l.un + l.ut * l.ut;
  const double qr2 = r.un * r.un + r.ut * r.ut;
  const Flux4 dissip = {(r.p - l.p) / a2, (r.p * r.un - l.p * l.un) / a2,
                        (r.p * r.ut - l.p * l.ut) / a2,
                        (r.p - l.p) / g1 + (r.p * qr2 - l.p * ql2) / (2.0 * a2)};
  const Flux4 f2l = {0.0, l.p, 0.0, l.p * l.un};
  const Flux4 f2r = {0.0, r.p, 0.0, r.p * r.un};

  const double inv = 1.0 / (ws.sr - ws.sl);
  const double diff = ws.sr * ws.sl * inv;
  Flux4 f;
  for (int k = 0; k < 4; ++k)
    f[k] = conv[k] + (ws.sr * f2l[k] - ws.sl * f2r[k]) * inv + diff * dissip[k];
  return f;
}

Flux4 interface_flux(const FaceState& l, const FaceState& r, const SchemeConfig& cfg,
                     const FaceSensors& sensors, const GasModel& gas) {
  return scheme_is_split(cfg.scheme) ? hllcps_flux(l, r, cfg, sensors, gas)
                                     : hll_family_flux(l, r, cfg, sensors, gas);
}

Flux4 all_mach_additive_flux(const FaceState& l, const FaceState& r,
                             const SchemeConfig& cfg, const FaceSensors& sensors,
                             const GasModel& gas) {
  SchemeConfig base;
  base.scheme = Scheme::hllem;
  Flux4 f = hll_family_flux(l, r, base, FaceSensors(1.0), gas);

  const InterfaceAverage avg = interface_average(l, r, Averaging::roe, gas);
  const WaveSpeeds ws = einfeldt_wave_speeds(l, r, avg, gas);
  check_spread(ws);

  double fp1 = sensors.fp1;
  double fp1_dn = sensors.fp1_dn;
  if (cfg.force_fp1) fp1 = fp1_dn = *cfg.force_fp1;
  double f_mach = std::min(std::max(local_mach(l, gas), local_mach(r, gas)), 1.0);
  if (cfg.force_mach_fn) f_mach = *cfg.force_mach_fn;
  double dn = (1.0 - f_mach) * fp1_dn;
  if (cfg.force_delta_n) dn = *cfg.force_delta_n;

  const double park = avg.a / (avg.a + std::abs(avg.un));
  const double drho = r.rho - l.rho;
  const double dp = r.p - l.p;
  const double dun = r.un - l.un;
  const double dut = r.ut - l.ut;
  const double alpha2 = park * (drho - dp / (avg.a * avg.a));
  const double alpha3 = park * avg.rho * dut;
  const double wn = dn * avg.rho * dun;

  // Correction that removes a (1 - fp1) share of the original anti-diffusion
  // and adds the face-normal term; jumps enter so that the result matches the
  // directly assembled FP flux.
  const double s = 1.0 - fp1;
  const Flux4 corr = {s * alpha2, s * alpha2 * avg.un - wn,
                      s * (alpha2 * avg.ut + alpha3),
                      s * (alpha2 * 0.5 * avg.q2 + alpha3 * avg.ut) - wn * avg.un};
  const double diff = ws.sr * ws.sl / (ws.sr - ws.sl);
  for (int k = 0; k < 4; ++k) f[k] += diff * corr[k];
  return f;
}

DissipationSplit dissipation_split(const FaceState& l, const FaceState& r,
                                   const SchemeConfig& cfg, const FaceSensors& sensors,
                                   const GasModel& gas) {
  DissipationSplit out;
  const Flux4 fl = physical_flux(l, gas);
  const Flux4 fr = physical_flux(r, gas);
  const Flux4 f = interface_flux(l, r, cfg, sensors, gas);
  for (int k = 0; k < 4; ++k) {
    out.central[k] = 0.5 * (fl[k] + fr[k]);
    out.dissipation[k] = f[k] - out.central[k];
  }
  if (scheme_is_split(cfg.scheme)) {
    out.has_parts = true;
    const InterfaceAverage avg = interface_average(l, r, Averaging::arithmetic, gas);
    const WaveSpeeds ws = einfeldt_wave_speeds(l, r, avg, gas);
    const Flux4 conv = split_convective_flux(l, r, ws, avg.un, gas);
    const double el = face_total_energy(l, gas);
    const double er = face_total_energy(r, gas);
    const Flux4 c1l = {l.rho * l.un, l.rho * l.un * l.un, l.rho * l.un * l.ut,
                       el * l.un};
    const Flux4 c1r = {r.rho * r.un, r.rho * r.un * r.un, r.rho * r.un * r.ut,
                       er * r.un};
    for (int k = 0; k < 4; ++k) {
      out.convective_dissipation[k] = conv[k] - 0.5 * (c1l[k] + c1r[k]);
      out.pressure_dissipation[k] =
          out.dissipation[k] - out.convective_dissipation[k];
    }
  }
  return out;
}

}  // namespace adflux
