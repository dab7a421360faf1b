#pragma once

#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "magsym/observables.hpp"

namespace magsym {

/// Time-ordered samples of a one-parameter canonical flow.
struct FlowPath {
  std::string generator_label;
  std::vector<double> s;
  std::vector<PhasePoint> states;
  std::string method = "rk4";
  double step = 0.0;
};

/// Integrate dx_i/ds = dG/dp_i, dp_i/ds = -dG/dx_i from s=0 to s with a
/// fixed-step classical 4th-order scheme. step <= 0 selects |s|/1000.
/// Generators linear in (x, p) have constant flow velocity, so the result
/// matches the closed-form affine map to rounding.
PhasePoint flow(const PolyObservable& G, double s, const PhasePoint& start, double step = 0.0);
PhasePoint flow(const NumericObservable& G, double s, const PhasePoint& start, double step = 0.0);

FlowPath flow_path(const PolyObservable& G, double s, const PhasePoint& start, int samples,
                   double step = 0.0, const std::string& label = "");

/// x_i(s) = x_i + s delta_ik, pi unchanged,
/// p_i(s) = p_i + (e/c) [A_i(x(s)) - A_i(x)].
PhasePoint finite_passive_translation(const PhasePoint& start, int axis_k, double s,
                                      const GaugePotential& A, const PhysicalConstants& consts);

using PhaseMap = std::function<PhasePoint(const PhasePoint&)>;

/// Residuals of the fundamental brackets under a phase-space map, estimated
/// with central differences of the map at each probe point:
/// xp[i][j] = {x_i', p_j'} - delta_ij, xx[i][j] = {x_i', x_j'},
/// pp[i][j] = {p_i', p_j'}.
struct CanonicityReport {
  struct PointResult {
    PhasePoint at;
    std::array<std::array<double, 3>, 3> xx{}, xp{}, pp{};
    double max_residual = 0.0;
  };
  std::vector<PointResult> points;
  double max_residual = 0.0;
};

CanonicityReport canonicity_report(const PhaseMap& map, std::span<const PhasePoint> points,
                                   double h = 1e-5);

/// Euclidean phase-space distance between the two orderings of the flows of
/// G1 and G2. Constant brackets imply a zero gap.
double flow_commutator_gap(const PolyObservable& G1, const PolyObservable& G2, double s1,
                           double s2, const PhasePoint& start, double step = 0.0);
double flow_commutator_gap(const NumericObservable& G1, const NumericObservable& G2, double s1,
                           double s2, const PhasePoint& start, double step = 0.0);

double phase_distance(const PhasePoint& a, const PhasePoint& b);

/// CSV columns: s, x1..x3, p1..p3, pi1..pi3.
void write_csv(const FlowPath& path, const GaugePotential& A, const PhysicalConstants& consts,
               std::ostream& out);

}  // namespace magsym
