#pragma once

#include <array>
#include <complex>
#include <functional>
#include <iosfwd>
#include <vector>

#include "magsym/constants.hpp"

namespace magsym::qgrid {

using Complex = std::complex<double>;

struct GridSpec {
  int n = 0;                          // samples per side
  double h = 0.0;                     // spacing
  std::array<double, 2> origin{};     // physical coordinates of sample (0,0)
};

/// Complex amplitudes on a uniform N x N grid, immutable after construction.
/// The grid plane is (x1, x2); a uniform field B points along x3.
class Wavefunction2D {
 public:
  Wavefunction2D(GridSpec spec, std::vector<Complex> amplitudes);

  static Wavefunction2D zeros(const GridSpec& spec);

  const GridSpec& grid() const { return spec_; }
  int n() const { return spec_.n; }
  double h() const { return spec_.h; }

  const Complex& at(int i, int j) const { return amp_[static_cast<size_t>(i) * spec_.n + j]; }
  const std::vector<Complex>& amplitudes() const { return amp_; }

  std::array<double, 2> coords(int i, int j) const {
    return {spec_.origin[0] + i * spec_.h, spec_.origin[1] + j * spec_.h};
  }

  /// Discrete L2 norm sqrt(h^2 sum |psi|^2), cached.
  double norm() const { return norm_; }
  double peak() const { return peak_; }

  /// Largest amplitude on the outer band of the given cell width, relative
  /// to the overall peak.
  double margin_peak_ratio(int band_cells) const;

 private:
  GridSpec spec_;
  std::vector<Complex> amp_;
  double norm_ = 0.0;
  double peak_ = 0.0;
};

/// Integer lattice displacement; the physical shift is (m1 h, m2 h, 0).
struct LatticeShift {
  int m1 = 0;
  int m2 = 0;

  friend LatticeShift operator+(const LatticeShift& a, const LatticeShift& b) {
    return {a.m1 + b.m1, a.m2 + b.m2};
  }
  friend LatticeShift operator-(const LatticeShift& a) { return {-a.m1, -a.m2}; }
};

enum class Family { passive, active };

/// Normalized Gaussian exp(-|r-c|^2/(4 sigma^2) + i k0.(r-c)). The center
/// and the 6-sigma support must stay inside the grid minus margin_cells.
Wavefunction2D gaussian_packet(const GridSpec& spec, std::array<double, 2> center, double sigma,
                               std::array<double, 2> k0, int margin_cells = 0);

/// Passive magnetic translation for uniform B = (0,0,B) in symmetric gauge:
/// psi'(r) = exp(-i (e/2 hbar c) r.(a x B)) psi(r - a). Sample shift plus an
/// exact phase, so no interpolation error; refuses when the margin band of
/// width max(|m1|,|m2|) carries more than 1e-12 of the peak.
Wavefunction2D translate_passive(const Wavefunction2D& psi, const LatticeShift& a, double B,
                                 const PhysicalConstants& consts);

/// Active translation: the same map with the opposite-sign linear phase.
Wavefunction2D translate_active(const Wavefunction2D& psi, const LatticeShift& a, double B,
                                const PhysicalConstants& consts);

struct ComposePhaseResult {
  double phi = 0.0;       // arg <T(a+b) psi, T(a) T(b) psi>, in (-pi, pi]
  double fidelity = 0.0;  // |<v,u>| / (|u| |v|)
  bool comparable = false;  // fidelity >= 0.99, i.e. the states are proportional
};

/// Measure the ray-representation phase of the composition law.
ComposePhaseResult compose_phase(const Wavefunction2D& psi, const LatticeShift& a,
                                 const LatticeShift& b, double B, const PhysicalConstants& consts,
                                 Family which);

/// (1/2m)(-i hbar grad - (e/c) A)^2 psi in symmetric gauge with second-order
/// central differences; the first-derivative part is applied in the
/// symmetrized form (A.D + D.A)/... so the discrete operator is Hermitian.
Wavefunction2D apply_hamiltonian(const Wavefunction2D& psi, double B,
                                 const PhysicalConstants& consts);

/// || H(T psi) - T(H psi) || / || H psi ||.
double invariance_residual(const Wavefunction2D& psi, const LatticeShift& a, double B,
                           const PhysicalConstants& consts, Family which = Family::passive);

double inner_abs(const Wavefunction2D& a, const Wavefunction2D& b);
Complex inner(const Wavefunction2D& a, const Wavefunction2D& b);

std::array<double, 2> mean_position(const Wavefunction2D& psi);
/// <-i hbar d/dx_i> via the discrete Fourier moment (spectrally accurate for
/// margin-compliant packets).
std::array<double, 2> mean_momentum(const Wavefunction2D& psi, const PhysicalConstants& consts);
/// <p> - (e/c) <A(r)> in symmetric gauge.
std::array<double, 2> mean_kinematical_momentum(const Wavefunction2D& psi, double B,
                                                const PhysicalConstants& consts);
double mean_energy(const Wavefunction2D& psi, double B, const PhysicalConstants& consts);

/// Flux of B3 through the triangle with vertices 0, a, a+b by recursive
/// midpoint quadrature; the independent check of the ray phase.
double triangle_flux(const std::function<double(double, double)>& B3, std::array<double, 2> a,
                     std::array<double, 2> b, int levels = 6);

/// CSV rows (i, j, re, im) next to a JSON header {n, h, origin}.
void write_csv(const Wavefunction2D& psi, std::ostream& data, std::ostream& header);

}  // namespace magsym::qgrid
