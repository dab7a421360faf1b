#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "magsym/fields.hpp"
#include "magsym/observables.hpp"

namespace magsym {

/// Time-sampled solution of Hamilton's equations for Eq.-of-motion checks
/// and conserved-quantity monitoring.
struct Trajectory {
  std::vector<double> t;
  std::vector<PhasePoint> states;
  std::string gauge_label;
  PhysicalConstants consts;

  size_t size() const { return t.size(); }
};

/// H = |p - (e/c) A(x)|^2 / 2m.
double hamiltonian(const PhasePoint& state, const GaugePotential& A,
                   const PhysicalConstants& consts);

/// 2 pi m c / (e |B|), the orbital period in a uniform field of magnitude B.
double cyclotron_period(const PhysicalConstants& consts, double B_magnitude);

/// Fixed-step 4th-order integration of the canonical equations of H over
/// [0, T]. dt <= 0 selects T_c/2000 from the field magnitude at the start;
/// that fallback requires B(start) != 0.
Trajectory integrate_trajectory(const PhasePoint& start, const GaugePotential& A,
                                const PhysicalConstants& consts, double T, double dt = 0.0);

/// max_t |O(t) - O(0)| / max(1, |O(0)|).
double drift(const Trajectory& traj, const NumericObservable& obs);
double drift(const Trajectory& traj, const PolyObservable& obs);

/// Kinematical momentum along a trajectory sample.
Vec3 kinematical_momentum(const PhasePoint& state, const GaugePotential& A,
                          const PhysicalConstants& consts);

/// CSV columns: t, x1..x3, p1..p3, pi1..pi3, H, then one column per monitor.
void write_csv(const Trajectory& traj, const GaugePotential& A,
               const std::vector<NumericObservable>& monitors, std::ostream& out);

}  // namespace magsym
