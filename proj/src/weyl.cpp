#include "magsym/weyl.hpp"

#include <sstream>
#include <stdexcept>

namespace magsym {

namespace {

Rational binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Rational r(1);
  for (int i = 0; i < k; ++i) r = r * Rational(n - i) / Rational(i + 1);
  return r;
}

Rational factorial(int n) {
  Rational r(1);
  for (int i = 2; i <= n; ++i) r *= Rational(i);
  return r;
}

/// (-i z)^k for rational z.
CRational pow_minus_i(const Rational& z, int k) {
  Rational mag(1);
  for (int i = 0; i < k; ++i) mag *= z;
  switch (k % 4) {
    case 0: return {mag, Rational(0)};
    case 1: return {Rational(0), -mag};
    case 2: return {-mag, Rational(0)};
    default: return {Rational(0), mag};
  }
}

}  // namespace

WeylOp WeylOp::scalar(CRational c) {
  WeylOp a;
  a.add_term(Mono6{}, c);
  return a;
}

WeylOp WeylOp::position(int i, int power) {
  if (i < 0 || i > 2) throw std::out_of_range("position index");
  Mono6 e{};
  e[i] = power;
  return monomial(CRational(1), e);
}

WeylOp WeylOp::momentum(int i, int power) {
  if (i < 0 || i > 2) throw std::out_of_range("momentum index");
  Mono6 e{};
  e[3 + i] = power;
  return monomial(CRational(1), e);
}

WeylOp WeylOp::monomial(CRational c, const Mono6& e) {
  for (int k : e)
    if (k < 0) throw std::invalid_argument("negative exponent");
  WeylOp a;
  a.add_term(e, c);
  return a;
}

WeylOp WeylOp::from_poly(const PolyObservable& f) {
  WeylOp a;
  for (const auto& [e, c] : f.terms()) a.add_term(e, CRational(c));
  return a;
}

int WeylOp::degree() const {
  if (terms_.empty()) return -1;
  const Mono6& e = terms_.rbegin()->first;
  int d = 0;
  for (int k : e) d += k;
  return d;
}

CRational WeylOp::coefficient(const Mono6& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? CRational(0) : it->second;
}

bool WeylOp::is_scalar() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Mono6{});
}

void WeylOp::add_term(const Mono6& e, const CRational& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

WeylOp& WeylOp::operator+=(const WeylOp& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

WeylOp& WeylOp::operator-=(const WeylOp& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

WeylOp operator-(const WeylOp& a) {
  WeylOp r;
  for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
  return r;
}

WeylOp operator*(const CRational& s, const WeylOp& a) {
  WeylOp r;
  if (s.is_zero()) return r;
  for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, s * c);
  return r;
}

std::string WeylOp::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) out << " + ";
    first = false;
    out << "(" << c.str() << ")";
    for (int i = 0; i < 6; ++i) {
      if (e[i] == 0) continue;
      out << "*" << kPhaseSpaceNames[i];
      if (e[i] > 1) out << "^" << e[i];
    }
  }
  return out.str();
}

WeylAlgebra::WeylAlgebra(Rational hbar) : hbar_(std::move(hbar)) {
  if (hbar_ <= 0) throw std::invalid_argument("hbar must be positive");
}

WeylOp WeylAlgebra::mul(const WeylOp& a, const WeylOp& b) const {
  // (x^al p^be)(x^ga p^de): reorder p^be x^ga with
  //   p^b x^c = sum_k k! C(b,k) C(c,k) (-i hbar)^k x^(c-k) p^(b-k)
  // independently per index, then absorb the outer x^al and p^de.
  WeylOp out;
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      const int b1 = ea[3], b2 = ea[4], b3 = ea[5];
      const int g1 = eb[0], g2 = eb[1], g3 = eb[2];
      for (int k1 = 0; k1 <= std::min(b1, g1); ++k1)
        for (int k2 = 0; k2 <= std::min(b2, g2); ++k2)
          for (int k3 = 0; k3 <= std::min(b3, g3); ++k3) {
            const int ks[3] = {k1, k2, k3};
            CRational factor = ca * cb;
            for (int i = 0; i < 3; ++i) {
              if (ks[i] == 0) continue;
              factor *= CRational(factorial(ks[i]) * binomial(ea[3 + i], ks[i]) *
                                  binomial(eb[i], ks[i])) *
                        pow_minus_i(hbar_, ks[i]);
            }
            Mono6 e;
            for (int i = 0; i < 3; ++i) {
              e[i] = ea[i] + eb[i] - ks[i];
              e[3 + i] = ea[3 + i] + eb[3 + i] - ks[i];
            }
            out.add_term(e, factor);
          }
    }
  }
  return out;
}

WeylOp WeylAlgebra::commutator(const WeylOp& a, const WeylOp& b) const {
  return mul(a, b) - mul(b, a);
}

WeylOp WeylAlgebra::adjoint(const WeylOp& a) const {
  // (c x^al p^be)^dagger = conj(c) p^be x^al, then renormal-order.
  WeylOp out;
  for (const auto& [e, c] : a.terms()) {
    Mono6 xs{}, ps{};
    for (int i = 0; i < 3; ++i) {
      xs[i] = e[i];
      ps[3 + i] = e[3 + i];
    }
    out += c.conj() * mul(WeylOp::monomial(CRational(1), ps), WeylOp::monomial(CRational(1), xs));
  }
  return out;
}

WeylOp WeylAlgebra::quantize(const PolyObservable& f) const {
  // McCoy per index: W(x^a p^b) = sum_k k! C(a,k) C(b,k) (-i hbar / 2)^k
  //                               x^(a-k) p^(b-k)
  const Rational half_hbar = hbar_ / 2;
  WeylOp out;
  for (const auto& [e, c] : f.terms()) {
    std::vector<std::pair<Mono6, CRational>> acc = {{Mono6{}, CRational(c)}};
    for (int i = 0; i < 3; ++i) {
      const int a = e[i], b = e[3 + i];
      std::vector<std::pair<Mono6, CRational>> next;
      for (int k = 0; k <= std::min(a, b); ++k) {
        CRational factor = CRational(factorial(k) * binomial(a, k) * binomial(b, k)) *
                           pow_minus_i(half_hbar, k);
        for (const auto& [mono, coef] : acc) {
          Mono6 m = mono;
          m[i] = a - k;
          m[3 + i] = b - k;
          next.emplace_back(m, coef * factor);
        }
      }
      acc = std::move(next);
    }
    for (const auto& [mono, coef] : acc) out.add_term(mono, coef);
  }
  return out;
}

PolyObservable classical_symbol(const WeylOp& a) {
  PolyObservable f;
  for (const auto& [e, c] : a.terms()) {
    if (!c.is_real())
      throw std::domain_error("classical_symbol: operator has a complex coefficient: " + a.str());
    f.add_term(e, c.re);
  }
  return f;
}

QuantumOperators build_operators(const GaugePotential& A, const PhysicalConstants& consts) {
  if (!A.is_polynomial())
    throw std::invalid_argument("build_operators requires a polynomial potential");
  WeylAlgebra alg(consts.hbar);
  QuantumOperators ops;
  for (int k = 1; k <= 3; ++k)
    ops.pi[k - 1] = WeylOp::from_poly(active_translation_generator(A, k, consts));
  for (int k = 1; k <= 3; ++k) {
    GeneratorResult g = passive_translation_generator(A, k, consts);
    ops.G[k - 1] = g.exists() ? IntegrabilityResult<WeylOp>(WeylOp::from_poly(g.value()))
                              : IntegrabilityResult<WeylOp>(g.report());
    GeneratorResult l = passive_rotation_generator(A, k, consts);
    ops.L[k - 1] = l.exists() ? IntegrabilityResult<WeylOp>(WeylOp::from_poly(l.value()))
                              : IntegrabilityResult<WeylOp>(l.report());
  }
  WeylOp H;
  for (int i = 0; i < 3; ++i) H += alg.mul(ops.pi[i], ops.pi[i]);
  ops.H = CRational(Rational(1) / (2 * consts.m)) * H;
  MagneticField B = curl(A);
  for (int l = 0; l < 3; ++l) ops.B[l] = WeylOp::from_poly(obs::from_position(B.components[l]));
  return ops;
}

bool IdentityReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

namespace {

void push(IdentityReport& rep, std::string name, std::string anchor, const WeylOp& residual) {
  rep.checks.push_back(
      {std::move(name), std::move(anchor), residual.is_zero(), residual.str()});
}

}  // namespace

IdentityReport verify_identities(const GaugePotential& A, const PhysicalConstants& consts) {
  WeylAlgebra alg(consts.hbar);
  QuantumOperators ops = build_operators(A, consts);
  const CRational ih = alg.i_hbar();
  const CRational eoc = CRational(consts.e_over_c());
  IdentityReport rep;

  // [pi_i, pi_j] = i hbar (e/c) eps_ijl B_l, any gauge.
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      WeylOp expected;
      for (int l = 0; l < 3; ++l)
        if (levi_civita(i, j, l) != 0)
          expected += (CRational(Rational(levi_civita(i, j, l))) * ih * eoc) * ops.B[l];
      push(rep, "[pi" + std::to_string(i + 1) + ",pi" + std::to_string(j + 1) + "]",
           "Eq. (16)", alg.commutator(ops.pi[i], ops.pi[j]) - expected);
    }

  for (int k = 0; k < 3; ++k) {
    const std::string ks = std::to_string(k + 1);
    if (ops.G[k].exists()) {
      const WeylOp& G = ops.G[k].value();
      for (int i = 0; i < 3; ++i) {
        WeylOp expected = (i == k) ? WeylOp::scalar(ih) : WeylOp::zero();
        push(rep, "[x" + std::to_string(i + 1) + ",G" + ks + "]", "Eq. (15)",
             alg.commutator(WeylOp::position(i), G) - expected);
        push(rep, "[pi" + std::to_string(i + 1) + ",G" + ks + "]", "Eq. (15)",
             alg.commutator(ops.pi[i], G));
      }
      push(rep, "[G" + ks + ",H]", "Eq. (15) with Eq. (11)", alg.commutator(G, ops.H));
      for (int l = 0; l < 3; ++l)
        push(rep, "[G" + ks + ",B" + std::to_string(l + 1) + "]", "after Eq. (16)",
             alg.commutator(G, ops.B[l]));
      push(rep, "hermiticity of G" + ks, "Eq. (15)", alg.adjoint(G) - G);
    } else {
      // The Jacobi route: a candidate built by ignoring the obstruction
      // cannot commute with the field, which refuses existence.
      std::array<Poly3, 3> rhs;
      for (int i = 0; i < 3; ++i)
        rhs[i] = Rational(-1) * consts.e_over_c() * A.components[i].derivative(k);
      Poly3 f_candidate = path_integral(rhs, origin_basepoint());
      WeylOp Gc = WeylOp::momentum(k) + WeylOp::from_poly(obs::from_position(f_candidate));
      WeylOp worst;
      for (int l = 0; l < 3; ++l) {
        WeylOp r = alg.commutator(Gc, ops.B[l]);
        if (!r.is_zero()) worst = r;
      }
      rep.checks.push_back({"[G" + ks + "-candidate,B_l] != 0 (existence refused)",
                            "Sec. 3.1", !worst.is_zero(), worst.str()});
    }
  }

  // Jacobi sums with pi operators close exactly for every k where G exists.
  for (int k = 0; k < 3; ++k) {
    if (!ops.G[k].exists()) continue;
    const WeylOp& G = ops.G[k].value();
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) {
        WeylOp jac = alg.commutator(ops.pi[i], alg.commutator(ops.pi[j], G)) +
                     alg.commutator(ops.pi[j], alg.commutator(G, ops.pi[i])) +
                     alg.commutator(G, alg.commutator(ops.pi[i], ops.pi[j]));
        push(rep, "jacobi(pi" + std::to_string(i + 1) + ",pi" + std::to_string(j + 1) + ",G" +
                      std::to_string(k + 1) + ")",
             "Sec. 3.1", jac);
      }
  }

  // [G_i, G_j] = -i hbar (e/c) eps_ijl B_l when both exist (uniform field).
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      if (!ops.G[i].exists() || !ops.G[j].exists()) continue;
      WeylOp expected;
      for (int l = 0; l < 3; ++l)
        if (levi_civita(i, j, l) != 0)
          expected += (CRational(Rational(-levi_civita(i, j, l))) * ih * eoc) * ops.B[l];
      push(rep, "[G" + std::to_string(i + 1) + ",G" + std::to_string(j + 1) + "]", "Eq. (17)",
           alg.commutator(ops.G[i].value(), ops.G[j].value()) - expected);
    }

  // Rotation conditions for existing L_k.
  for (int k = 0; k < 3; ++k) {
    if (!ops.L[k].exists()) continue;
    const WeylOp& L = ops.L[k].value();
    const std::string ks = std::to_string(k + 1);
    for (int i = 0; i < 3; ++i) {
      WeylOp expected_x, expected_pi;
      for (int l = 0; l < 3; ++l) {
        int eps = levi_civita(i, k, l);
        if (eps == 0) continue;
        expected_x += (CRational(Rational(eps)) * ih) * WeylOp::position(l);
        expected_pi += (CRational(Rational(eps)) * ih) * ops.pi[l];
      }
      push(rep, "[x" + std::to_string(i + 1) + ",L" + ks + "]", "Eq. (21)",
           alg.commutator(WeylOp::position(i), L) - expected_x);
      push(rep, "[pi" + std::to_string(i + 1) + ",L" + ks + "]", "Eq. (21)",
           alg.commutator(ops.pi[i], L) - expected_pi);
    }
    push(rep, "[L" + ks + ",H]", "Sec. 4", alg.commutator(L, ops.H));
    push(rep, "hermiticity of L" + ks, "Eq. (21)", alg.adjoint(L) - L);
  }

  push(rep, "hermiticity of H", "Eq. (11)", alg.adjoint(ops.H) - ops.H);
  for (int i = 0; i < 3; ++i)
    push(rep, "hermiticity of pi" + std::to_string(i + 1), "Eq. (3)",
         alg.adjoint(ops.pi[i]) - ops.pi[i]);

  return rep;
}

}  // namespace magsym
