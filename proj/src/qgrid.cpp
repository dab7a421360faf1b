#include "magsym/qgrid.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <ostream>
#include <stdexcept>

namespace magsym::qgrid {

namespace {

constexpr double kMarginCeiling = 1e-12;
constexpr double kPi = 3.14159265358979323846;

void check_spec(const GridSpec& spec) {
  if (spec.n < 8) throw std::invalid_argument("grid too small");
  if (spec.h <= 0.0) throw std::invalid_argument("grid spacing must be positive");
}

void check_shift(const Wavefunction2D& psi, const LatticeShift& a) {
  if (std::abs(a.m1) >= psi.n() / 4 || std::abs(a.m2) >= psi.n() / 4)
    throw std::invalid_argument("lattice shift must satisfy |m| < n/4");
}

void require_margin(const Wavefunction2D& psi, int band_cells, const char* what) {
  if (band_cells <= 0) return;
  const double ratio = psi.margin_peak_ratio(band_cells);
  if (ratio > kMarginCeiling)
    throw std::runtime_error(std::string(what) + ": margin band of width " +
                             std::to_string(band_cells) + " cells carries " +
                             std::to_string(ratio) + " of the peak (limit 1e-12)");
}

/// exp(i s (e/(2 hbar c)) B (x1 a2 - x2 a1)) sample shift: the factorized
/// action of exp(-(i/hbar) a.G) (s=-1) and exp(-(i/hbar) a.pi) (s=+1).
Wavefunction2D phase_shift(const Wavefunction2D& psi, const LatticeShift& a, double B,
                           const PhysicalConstants& consts, double sign) {
  const GridSpec& spec = psi.grid();
  const int n = spec.n;
  const double a1 = a.m1 * spec.h, a2 = a.m2 * spec.h;
  const double lam = to_double(consts.e) / (2.0 * to_double(consts.hbar) * to_double(consts.c));
  std::vector<Complex> out(static_cast<size_t>(n) * n, Complex(0.0, 0.0));
  for (int i = 0; i < n; ++i) {
    const int is = i - a.m1;
    if (is < 0 || is >= n) continue;
    for (int j = 0; j < n; ++j) {
      const int js = j - a.m2;
      if (js < 0 || js >= n) continue;
      const auto [x1, x2] = psi.coords(i, j);
      const double theta = sign * lam * B * (x1 * a2 - x2 * a1);
      out[static_cast<size_t>(i) * n + j] = std::polar(1.0, theta) * psi.at(is, js);
    }
  }
  return Wavefunction2D(spec, std::move(out));
}

}  // namespace

Wavefunction2D::Wavefunction2D(GridSpec spec, std::vector<Complex> amplitudes)
    : spec_(spec), amp_(std::move(amplitudes)) {
  check_spec(spec_);
  if (amp_.size() != static_cast<size_t>(spec_.n) * spec_.n)
    throw std::invalid_argument("amplitude count does not match the grid");
  double nrm2 = 0.0;
  for (const Complex& c : amp_) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
      throw std::invalid_argument("non-finite amplitude");
    const double a2 = std::norm(c);
    nrm2 += a2;
    peak_ = std::max(peak_, a2);
  }
  norm_ = std::sqrt(nrm2) * spec_.h;
  peak_ = std::sqrt(peak_);
}

Wavefunction2D Wavefunction2D::zeros(const GridSpec& spec) {
  check_spec(spec);
  return Wavefunction2D(spec, std::vector<Complex>(static_cast<size_t>(spec.n) * spec.n));
}

double Wavefunction2D::margin_peak_ratio(int band_cells) const {
  if (peak_ == 0.0) return 0.0;
  double worst = 0.0;
  const int n = spec_.n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const bool in_band = i < band_cells || i >= n - band_cells || j < band_cells || j >= n - band_cells;
      if (in_band) worst = std::max(worst, std::abs(at(i, j)));
    }
  return worst / peak_;
}

Wavefunction2D gaussian_packet(const GridSpec& spec, std::array<double, 2> center, double sigma,
                               std::array<double, 2> k0, int margin_cells) {
  check_spec(spec);
  if (sigma <= 0.0) throw std::invalid_argument("sigma must be positive");
  const double lo1 = spec.origin[0] + margin_cells * spec.h;
  const double lo2 = spec.origin[1] + margin_cells * spec.h;
  const double hi1 = spec.origin[0] + (spec.n - 1 - margin_cells) * spec.h;
  const double hi2 = spec.origin[1] + (spec.n - 1 - margin_cells) * spec.h;
  const double support = 6.0 * sigma;
  if (center[0] - support < lo1 || center[0] + support > hi1 || center[1] - support < lo2 ||
      center[1] + support > hi2)
    throw std::invalid_argument("gaussian_packet: 6-sigma support leaves the grid margin");

  std::vector<Complex> amp(static_cast<size_t>(spec.n) * spec.n);
  for (int i = 0; i < spec.n; ++i)
    for (int j = 0; j < spec.n; ++j) {
      const double x1 = spec.origin[0] + i * spec.h - center[0];
      const double x2 = spec.origin[1] + j * spec.h - center[1];
      const double envelope = std::exp(-(x1 * x1 + x2 * x2) / (4.0 * sigma * sigma));
      amp[static_cast<size_t>(i) * spec.n + j] =
          std::polar(envelope, k0[0] * x1 + k0[1] * x2);
    }
  Wavefunction2D raw(spec, std::move(amp));
  std::vector<Complex> scaled = raw.amplitudes();
  const double inv = 1.0 / raw.norm();
  for (Complex& c : scaled) c *= inv;
  return Wavefunction2D(spec, std::move(scaled));
}

Wavefunction2D translate_passive(const Wavefunction2D& psi, const LatticeShift& a, double B,
                                 const PhysicalConstants& consts) {
  check_shift(psi, a);
  require_margin(psi, std::max(std::abs(a.m1), std::abs(a.m2)), "translate_passive");
  return phase_shift(psi, a, B, consts, -1.0);
}

Wavefunction2D translate_active(const Wavefunction2D& psi, const LatticeShift& a, double B,
                                const PhysicalConstants& consts) {
  check_shift(psi, a);
  require_margin(psi, std::max(std::abs(a.m1), std::abs(a.m2)), "translate_active");
  return phase_shift(psi, a, B, consts, +1.0);
}

Complex inner(const Wavefunction2D& a, const Wavefunction2D& b) {
  if (a.n() != b.n()) throw std::invalid_argument("grid mismatch");
  Complex acc(0.0, 0.0);
  const auto& av = a.amplitudes();
  const auto& bv = b.amplitudes();
  for (size_t k = 0; k < av.size(); ++k) acc += std::conj(av[k]) * bv[k];
  return acc * (a.h() * a.h());
}

double inner_abs(const Wavefunction2D& a, const Wavefunction2D& b) { return std::abs(inner(a, b)); }

ComposePhaseResult compose_phase(const Wavefunction2D& psi, const LatticeShift& a,
                                 const LatticeShift& b, double B, const PhysicalConstants& consts,
                                 Family which) {
  const int band = std::max(std::abs(a.m1) + std::abs(b.m1), std::abs(a.m2) + std::abs(b.m2));
  require_margin(psi, band, "compose_phase");
  auto T = [&](const Wavefunction2D& w, const LatticeShift& s) {
    return which == Family::passive ? translate_passive(w, s, B, consts)
                                    : translate_active(w, s, B, consts);
  };
  const Wavefunction2D u = T(T(psi, b), a);
  const Wavefunction2D v = T(psi, a + b);
  const Complex ip = inner(v, u);
  ComposePhaseResult res;
  res.fidelity = std::abs(ip) / (u.norm() * v.norm());
  res.phi = std::arg(ip);
  res.comparable = res.fidelity >= 0.99;
  return res;
}

Wavefunction2D apply_hamiltonian(const Wavefunction2D& psi, double B,
                                 const PhysicalConstants& consts) {
  const GridSpec& spec = psi.grid();
  const int n = spec.n;
  const double h = spec.h;
  const double hbar = to_double(consts.hbar);
  const double eoc = to_double(consts.e_over_c());
  const double m = to_double(consts.m);
  const Complex ii(0.0, 1.0);

  auto amp = [&](int i, int j) -> Complex {
    if (i < 0 || i >= n || j < 0 || j >= n) return {0.0, 0.0};
    return psi.at(i, j);
  };
  auto A1 = [&](int j) { return -0.5 * B * (spec.origin[1] + j * h); };  // -B x2 / 2
  auto A2 = [&](int i) { return 0.5 * B * (spec.origin[0] + i * h); };   // B x1 / 2

  std::vector<Complex> out(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Complex c = amp(i, j);
      const Complex lap =
          (amp(i + 1, j) + amp(i - 1, j) + amp(i, j + 1) + amp(i, j - 1) - 4.0 * c) / (h * h);
      const Complex d1 = (amp(i + 1, j) - amp(i - 1, j)) / (2.0 * h);
      const Complex d2 = (amp(i, j + 1) - amp(i, j - 1)) / (2.0 * h);
      // Symmetrized A.D + D.A keeps the discrete operator Hermitian; with
      // div A = 0 it matches the continuum 2 A.grad to second order.
      const Complex ad = A1(j) * d1 + A2(i) * d2;
      const Complex da = (A1(j) * amp(i + 1, j) - A1(j) * amp(i - 1, j)) / (2.0 * h) +
                         (A2(i) * amp(i, j + 1) - A2(i) * amp(i, j - 1)) / (2.0 * h);
      const double a1 = A1(j), a2 = A2(i);
      const Complex val = -hbar * hbar * lap + ii * hbar * eoc * (ad + da) +
                          eoc * eoc * (a1 * a1 + a2 * a2) * c;
      out[static_cast<size_t>(i) * n + j] = val / (2.0 * m);
    }
  return Wavefunction2D(spec, std::move(out));
}

double invariance_residual(const Wavefunction2D& psi, const LatticeShift& a, double B,
                           const PhysicalConstants& consts, Family which) {
  const int band = std::max(std::abs(a.m1), std::abs(a.m2)) + 1;
  require_margin(psi, band, "invariance_residual");
  auto T = [&](const Wavefunction2D& w) {
    return which == Family::passive ? translate_passive(w, a, B, consts)
                                    : translate_active(w, a, B, consts);
  };
  const Wavefunction2D Hpsi = apply_hamiltonian(psi, B, consts);
  const Wavefunction2D u = apply_hamiltonian(T(psi), B, consts);
  const Wavefunction2D w = T(Hpsi);
  double num2 = 0.0;
  const auto& uv = u.amplitudes();
  const auto& wv = w.amplitudes();
  for (size_t k = 0; k < uv.size(); ++k) num2 += std::norm(uv[k] - wv[k]);
  return std::sqrt(num2) * psi.h() / Hpsi.norm();
}

std::array<double, 2> mean_position(const Wavefunction2D& psi) {
  double w = 0.0, m1 = 0.0, m2 = 0.0;
  for (int i = 0; i < psi.n(); ++i)
    for (int j = 0; j < psi.n(); ++j) {
      const double p = std::norm(psi.at(i, j));
      const auto [x1, x2] = psi.coords(i, j);
      w += p;
      m1 += p * x1;
      m2 += p * x2;
    }
  return {m1 / w, m2 / w};
}

std::array<double, 2> mean_momentum(const Wavefunction2D& psi, const PhysicalConstants& consts) {
  const int n = psi.n();
  static std::mutex plan_mutex;
  std::vector<Complex> buf = psi.amplitudes();
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(plan_mutex);
    plan = fftw_plan_dft_2d(n, n, reinterpret_cast<fftw_complex*>(buf.data()),
                            reinterpret_cast<fftw_complex*>(buf.data()), FFTW_FORWARD,
                            FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(plan_mutex);
    fftw_destroy_plan(plan);
  }
  auto freq = [&](int f) {
    const int signed_f = (f <= n / 2) ? f : f - n;
    return 2.0 * kPi * signed_f / (n * psi.h());
  };
  double w = 0.0, k1 = 0.0, k2 = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double p = std::norm(buf[static_cast<size_t>(i) * n + j]);
      w += p;
      k1 += p * freq(i);
      k2 += p * freq(j);
    }
  const double hbar = to_double(consts.hbar);
  return {hbar * k1 / w, hbar * k2 / w};
}

std::array<double, 2> mean_kinematical_momentum(const Wavefunction2D& psi, double B,
                                                const PhysicalConstants& consts) {
  const auto p = mean_momentum(psi, consts);
  const auto x = mean_position(psi);
  const double eoc = to_double(consts.e_over_c());
  // A = (-B x2/2, B x1/2) in symmetric gauge.
  return {p[0] + eoc * 0.5 * B * x[1], p[1] - eoc * 0.5 * B * x[0]};
}

double mean_energy(const Wavefunction2D& psi, double B, const PhysicalConstants& consts) {
  const Wavefunction2D Hpsi = apply_hamiltonian(psi, B, consts);
  const Complex e = inner(psi, Hpsi);
  return e.real() / (psi.norm() * psi.norm());
}

double triangle_flux(const std::function<double(double, double)>& B3, std::array<double, 2> a,
                     std::array<double, 2> b, int levels) {
  // Vertices 0, a, a+b; recursive 4-way subdivision with the midpoint rule
  // (exact for affine integrands at every level).
  struct Tri {
    std::array<double, 2> v0, v1, v2;
  };
  std::vector<Tri> tris = {{{0.0, 0.0}, a, {a[0] + b[0], a[1] + b[1]}}};
  for (int l = 0; l < levels; ++l) {
    std::vector<Tri> next;
    next.reserve(tris.size() * 4);
    for (const Tri& t : tris) {
      auto mid = [](const std::array<double, 2>& p, const std::array<double, 2>& q) {
        return std::array<double, 2>{(p[0] + q[0]) / 2, (p[1] + q[1]) / 2};
      };
      const auto m01 = mid(t.v0, t.v1), m12 = mid(t.v1, t.v2), m02 = mid(t.v0, t.v2);
      next.push_back({t.v0, m01, m02});
      next.push_back({m01, t.v1, m12});
      next.push_back({m02, m12, t.v2});
      next.push_back({m01, m12, m02});
    }
    tris = std::move(next);
  }
  double flux = 0.0;
  for (const Tri& t : tris) {
    const double area = 0.5 * std::abs((t.v1[0] - t.v0[0]) * (t.v2[1] - t.v0[1]) -
                                       (t.v2[0] - t.v0[0]) * (t.v1[1] - t.v0[1]));
    const double cx = (t.v0[0] + t.v1[0] + t.v2[0]) / 3.0;
    const double cy = (t.v0[1] + t.v1[1] + t.v2[1]) / 3.0;
    flux += area * B3(cx, cy);
  }
  return flux;
}

void write_csv(const Wavefunction2D& psi, std::ostream& data, std::ostream& header) {
  header.precision(17);
  data.precision(17);
  header << "{\"n\": " << psi.n() << ", \"h\": " << psi.h() << ", \"origin\": ["
         << psi.grid().origin[0] << ", " << psi.grid().origin[1] << "]}\n";
  data << "i,j,re,im\n";
  for (int i = 0; i < psi.n(); ++i)
    for (int j = 0; j < psi.n(); ++j)
      data << i << "," << j << "," << psi.at(i, j).real() << "," << psi.at(i, j).imag() << "\n";
}

}  // namespace magsym::qgrid
