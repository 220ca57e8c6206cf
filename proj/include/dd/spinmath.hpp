#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <numbers>

// 2x2 unitary algebra for an effective two-level spin (the m_s = 0 <-> +1
// manifold driven as a qubit). Spin operators are S = sigma/2 throughout.
//
// Unit conventions:
//   - angles and phases: radians
//   - frequencies: Hz at API boundaries; rad_per_s_from_hz() below is the
//     single place where Hz becomes angular frequency
//   - times: seconds

namespace dd {

inline constexpr double k_pi = std::numbers::pi;
inline constexpr double k_two_pi = 2.0 * std::numbers::pi;

inline constexpr double rad_per_s_from_hz(double hz) { return k_two_pi * hz; }
inline constexpr double deg_to_rad(double deg) { return deg * (k_pi / 180.0); }
inline constexpr double rad_to_deg(double rad) { return rad * (180.0 / k_pi); }

using cplx = std::complex<double>;
using State2 = std::array<cplx, 2>;  // spinor, |0> = {1, 0}

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
  double norm() const { return std::sqrt(x * x + y * y + z * z); }
};

// unit vector in the equatorial plane at azimuth `phase`
inline Vec3 in_plane_axis(double phase) {
  return {std::cos(phase), std::sin(phase), 0.0};
}

// Bloch vector (x, y, z) of a near-pure state; pure states have norm 1.
struct BlochVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
  double norm() const { return std::sqrt(x * x + y * y + z * z); }
};

// Row-major 2x2 complex matrix. All factories in this module produce exact
// closed-form unitaries; products of unitaries stay unitary to roundoff.
struct Unitary2 {
  cplx u00{1.0, 0.0}, u01{0.0, 0.0};
  cplx u10{0.0, 0.0}, u11{1.0, 0.0};

  static Unitary2 identity() { return {}; }

  Unitary2 adjoint() const {
    return {std::conj(u00), std::conj(u10), std::conj(u01), std::conj(u11)};
  }
  cplx det() const { return u00 * u11 - u01 * u10; }

  // max elementwise |U U^dag - I|
  double unitarity_defect() const;
};

Unitary2 operator*(const Unitary2& a, const Unitary2& b);

State2 apply_state(const Unitary2& u, const State2& s);

inline double expect_sz(const State2& s) {
  return std::norm(s[0]) - std::norm(s[1]);
}

// One imperfect rotation pulse. The intended rotation axis is
// k = (cos phase, sin phase, 0); the actual axis may tilt out of plane.
// The delivered rotation angle is nominal_angle * (1 + epsilon).
struct PulseSpec {
  double nominal_angle;  // radians: pi for refocusing, pi/2 for prep/readout
  double phase;          // radians, intended in-plane axis azimuth
  double epsilon;        // fractional angle error, > -1
  Vec3 axis;             // actual rotation axis, unit norm within 1e-12

  PulseSpec(double nominal_angle, double phase, double epsilon, const Vec3& axis);

  static PulseSpec ideal(double nominal_angle, double phase) {
    return {nominal_angle, phase, 0.0, in_plane_axis(phase)};
  }
  static PulseSpec ideal_pi(double phase) { return ideal(k_pi, phase); }

  // rotate the intended axis (and the actual axis with it) about z
  PulseSpec with_phase_offset(double dphi) const;
  // scale the delivered angle: (1 + epsilon) -> scale * (1 + epsilon)
  PulseSpec with_angle_scale(double scale) const;

  double effective_angle() const { return nominal_angle * (1.0 + epsilon); }
};

// U = exp{-i Theta [S . n]} with Theta = nominal_angle * (1 + epsilon),
// evaluated in closed form: cos(Theta/2) I - i sin(Theta/2) (n . sigma).
Unitary2 rotation_operator(const PulseSpec& p);

// U_d = exp(-i delta tau S_z) = diag(e^{-i delta tau / 2}, e^{+i delta tau / 2})
Unitary2 free_evolution(double delta_rad_per_s, double tau_s);

// same, parameterized directly by the accumulated phase integral(delta dt)
Unitary2 free_evolution_phase(double phase);

// Constant off-resonant drive mapped onto (epsilon, n) form. The pulse
// duration is the on-resonance value t_p = nominal_angle / (2 pi rabi_hz);
// the generalized Rabi frequency sqrt(rabi^2 + detuning^2) then sets the
// delivered angle and the axis tilt n_z = detuning / generalized_rabi.
PulseSpec finite_pulse_params(double rabi_hz, double detuning_hz,
                              double nominal_angle, double phase = 0.0);

// variant with an explicit pulse duration (deliberate miscalibration)
PulseSpec finite_pulse_params_with_duration(double rabi_hz, double detuning_hz,
                                            double nominal_angle,
                                            double pulse_duration_s,
                                            double phase = 0.0);

// Bloch vector of U rho U^dag for rho = (I + s . sigma) / 2
BlochVector apply(const Unitary2& u, const BlochVector& s);

}  // namespace dd
