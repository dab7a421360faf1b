#include <doctest.h>

#include <random>
#include <vector>

#include "magsym/sampling.hpp"
#include "magsym/weyl.hpp"

using namespace magsym;

namespace {

// Independent oracle: operators as weighted words over the six generators
// (0..2 = x_i, 3..5 = p_i), normal-ordered by rewriting one adjacent pair
// p_i x_j -> x_j p_i - i hbar delta_ij at a time. Slow but direct.
struct Word {
  CRational coeff;
  std::vector<int> letters;
};

WeylOp normal_order_words(std::vector<Word> queue, const Rational& hbar) {
  WeylOp out;
  const CRational minus_i_hbar(Rational(0), -hbar);
  while (!queue.empty()) {
    Word w = std::move(queue.back());
    queue.pop_back();
    bool rewritten = false;
    for (size_t k = 0; k + 1 < w.letters.size(); ++k) {
      const int a = w.letters[k], b = w.letters[k + 1];
      const bool momentum_before_position = a >= 3 && b < 3;
      const bool same_slot_out_of_order = a < 3 && b < 3 && a > b;
      const bool momentum_out_of_order = a >= 3 && b >= 3 && a > b;
      if (momentum_before_position) {
        Word swapped = w;
        std::swap(swapped.letters[k], swapped.letters[k + 1]);
        queue.push_back(std::move(swapped));
        if (a - 3 == b) {
          Word contracted;
          contracted.coeff = w.coeff * minus_i_hbar;
          contracted.letters = w.letters;
          contracted.letters.erase(contracted.letters.begin() + k, contracted.letters.begin() + k + 2);
          queue.push_back(std::move(contracted));
        }
        rewritten = true;
        break;
      }
      if (same_slot_out_of_order || momentum_out_of_order) {
        // Commuting factors; sort for a unique exponent pattern.
        std::swap(w.letters[k], w.letters[k + 1]);
        queue.push_back(std::move(w));
        rewritten = true;
        break;
      }
    }
    if (rewritten) continue;
    Mono6 e{};
    for (int letter : w.letters) e[letter] += 1;
    out.add_term(e, w.coeff);
  }
  return out;
}

std::vector<Word> to_words(const WeylOp& a) {
  std::vector<Word> words;
  for (const auto& [e, c] : a.terms()) {
    Word w;
    w.coeff = c;
    for (int i = 0; i < 6; ++i)
      for (int k = 0; k < e[i]; ++k) w.letters.push_back(i);
    words.push_back(std::move(w));
  }
  return words;
}

WeylOp brute_force_mul(const WeylOp& a, const WeylOp& b, const Rational& hbar) {
  std::vector<Word> products;
  for (const Word& wa : to_words(a))
    for (const Word& wb : to_words(b)) {
      Word w;
      w.coeff = wa.coeff * wb.coeff;
      w.letters = wa.letters;
      w.letters.insert(w.letters.end(), wb.letters.begin(), wb.letters.end());
      products.push_back(std::move(w));
    }
  return normal_order_words(std::move(products), hbar);
}

WeylOp random_weyl_op(std::mt19937_64& rng, int max_degree, int terms) {
  PolyObservable p = random_polynomial<6>(rng, max_degree, terms);
  return WeylOp::from_poly(p);
}

const PhysicalConstants kUnit;

}  // namespace

TEST_SUITE("weyl") {

TEST_CASE("canonical commutation rewriting") {
  for (const Rational& hbar : {Rational(1), Rational(1, 2), Rational(137, 100)}) {
    WeylAlgebra alg(hbar);
    WeylOp lhs = alg.mul(WeylOp::momentum(0), WeylOp::position(0));
    WeylOp expected = WeylOp::monomial(CRational(1), {1, 0, 0, 1, 0, 0}) -
                      WeylOp::scalar(CRational(Rational(0), hbar));
    CHECK(lhs == expected);
    CHECK(alg.commutator(WeylOp::position(0), WeylOp::momentum(0)) ==
          WeylOp::scalar(alg.i_hbar()));
    CHECK(alg.commutator(WeylOp::position(0), WeylOp::momentum(1)).is_zero());
  }
}

TEST_CASE("two-step rewriting example") {
  WeylAlgebra alg(Rational(1));
  WeylOp xp = WeylOp::monomial(CRational(1), {1, 0, 0, 1, 0, 0});
  WeylOp product = alg.mul(xp, xp);
  WeylOp expected = WeylOp::monomial(CRational(1), {2, 0, 0, 2, 0, 0}) +
                    WeylOp::monomial(CRational(Rational(0), Rational(-1)), {1, 0, 0, 1, 0, 0});
  CHECK(product == expected);
  CHECK(product == brute_force_mul(xp, xp, Rational(1)));
}

TEST_CASE("normal-ordered product agrees with the brute-force reorderer") {
  std::mt19937_64 rng(79);
  for (const Rational& hbar : {Rational(1), Rational(2, 3)}) {
    WeylAlgebra alg(hbar);
    for (int t = 0; t < 12; ++t) {
      WeylOp a = random_weyl_op(rng, 2, 3);
      WeylOp b = random_weyl_op(rng, 2, 3);
      CHECK(alg.mul(a, b) == brute_force_mul(a, b, hbar));
    }
  }
}

TEST_CASE("associativity and distributivity") {
  std::mt19937_64 rng(83);
  WeylAlgebra alg(Rational(1, 3));
  for (int t = 0; t < 10; ++t) {
    WeylOp a = random_weyl_op(rng, 2, 3);
    WeylOp b = random_weyl_op(rng, 2, 3);
    WeylOp c = random_weyl_op(rng, 2, 3);
    CHECK(alg.mul(a, alg.mul(b, c)) == alg.mul(alg.mul(a, b), c));
    CHECK(alg.mul(a, b + c) == alg.mul(a, b) + alg.mul(a, c));
  }
}

TEST_CASE("kinematical momentum commutators match the field") {
  PhysicalConstants k(Rational(2), Rational(3), Rational(1), Rational(1, 2));
  const Rational B(5, 7);
  auto A = symmetric_gauge({Rational(0), Rational(0), B});
  WeylAlgebra alg(k.hbar);
  QuantumOperators ops = build_operators(A, k);
  const CRational factor = alg.i_hbar() * CRational(k.e_over_c() * B);
  CHECK(alg.commutator(ops.pi[0], ops.pi[1]) == WeylOp::scalar(factor));
  CHECK(alg.commutator(ops.pi[1], ops.pi[2]).is_zero());
  CHECK(alg.commutator(ops.pi[2], ops.pi[0]).is_zero());
}

TEST_CASE("passive generator commutators are scalar with the opposite sign") {
  PhysicalConstants k(Rational(3), Rational(4), Rational(1), Rational(1));
  const Rational B(2, 5);
  auto A = symmetric_gauge({Rational(0), Rational(0), B});
  WeylAlgebra alg(k.hbar);
  QuantumOperators ops = build_operators(A, k);
  WeylOp comm = alg.commutator(ops.G[0].value(), ops.G[1].value());
  CHECK(comm.is_scalar());
  CHECK(comm == WeylOp::scalar(-(alg.i_hbar() * CRational(k.e_over_c() * B))));
}

TEST_CASE("zero potential collapses to the textbook operators") {
  GaugePotential zero;
  zero.kind = FieldKind::polynomial;
  QuantumOperators ops = build_operators(zero, kUnit);
  for (int k = 0; k < 3; ++k) {
    CHECK(ops.G[k].value() == WeylOp::momentum(k));
    CHECK(ops.pi[k] == WeylOp::momentum(k));
  }
  WeylOp expected_H;
  for (int i = 0; i < 3; ++i) expected_H += WeylOp::momentum(i, 2);
  CHECK(ops.H == CRational(Rational(1, 2)) * expected_H);
}

TEST_CASE("L3 equals its gauge-independent two-form") {
  PhysicalConstants k(Rational(2), Rational(3), Rational(1), Rational(1));
  const Rational B(7, 4);
  auto A = symmetric_gauge({Rational(0), Rational(0), B});
  WeylAlgebra alg(k.hbar);
  QuantumOperators ops = build_operators(A, k);
  const WeylOp& L3 = ops.L[2].value();
  CHECK(L3 == WeylOp::monomial(CRational(1), {1, 0, 0, 0, 1, 0}) -
                  WeylOp::monomial(CRational(1), {0, 1, 0, 1, 0, 0}));
  WeylOp two_form = alg.mul(WeylOp::position(0), ops.pi[1]) -
                    alg.mul(WeylOp::position(1), ops.pi[0]) +
                    CRational(k.e_over_c() * B / 2) *
                        (WeylOp::position(0, 2) + WeylOp::position(1, 2));
  CHECK(L3 == two_form);
}

TEST_CASE("classical limits of the built operators match the classical generators") {
  PhysicalConstants k(Rational(3), Rational(2), Rational(5), Rational(1, 3));
  auto A = symmetric_gauge({Rational(0), Rational(0), Rational(9, 8)});
  QuantumOperators ops = build_operators(A, k);
  for (int axis = 1; axis <= 3; ++axis) {
    CHECK(classical_symbol(ops.G[axis - 1].value()) ==
          passive_translation_generator(A, axis, k).value());
    CHECK(classical_symbol(ops.pi[axis - 1]) ==
          active_translation_generator(A, axis, k));
  }
  CHECK(classical_symbol(ops.L[2].value()) == passive_rotation_generator(A, 3, k).value());
  // div A = 0 here, so no ordering term survives in H either.
  CHECK(classical_symbol(ops.H) == hamiltonian_observable(A, k));
}

TEST_CASE("identity suite passes in uniform and zero fields for several hbar") {
  for (const Rational& hbar : {Rational(1), Rational(1, 2), Rational(137, 100)}) {
    PhysicalConstants k(Rational(1), Rational(1), Rational(1), hbar);
    auto A = symmetric_gauge({Rational(0), Rational(0), Rational(1)});
    IdentityReport rep = verify_identities(A, k);
    CHECK(rep.all_pass());
    CHECK(rep.checks.size() >= 30);
  }
  GaugePotential zero;
  zero.kind = FieldKind::polynomial;
  CHECK(verify_identities(zero, kUnit).all_pass());
}

TEST_CASE("gradient field: the Jacobi route refuses the missing generator") {
  auto A = gradient_gauge(Rational(1), Rational(1));
  IdentityReport rep = verify_identities(A, kUnit);
  CHECK(rep.all_pass());
  bool found_refusal = false;
  for (const auto& c : rep.checks)
    if (c.name.find("existence refused") != std::string::npos) {
      found_refusal = true;
      CHECK(c.pass);
      CHECK(c.residual != "0");
    }
  CHECK(found_refusal);
}

TEST_CASE("adjoint is an involution and reverses products") {
  std::mt19937_64 rng(89);
  WeylAlgebra alg(Rational(3, 7));
  for (int t = 0; t < 10; ++t) {
    WeylOp a = random_weyl_op(rng, 2, 3);
    WeylOp b = random_weyl_op(rng, 2, 3);
    CHECK(alg.adjoint(alg.adjoint(a)) == a);
    CHECK(alg.adjoint(alg.mul(a, b)) == alg.mul(alg.adjoint(b), alg.adjoint(a)));
  }
}

TEST_CASE("built operators are Hermitian") {
  PhysicalConstants k(Rational(2), Rational(5), Rational(3), Rational(1, 2));
  auto A = gauge_transform(symmetric_gauge({Rational(0), Rational(0), Rational(2)}),
                           Rational(1, 3) * (Poly3::variable(0) * Poly3::variable(1)));
  WeylAlgebra alg(k.hbar);
  QuantumOperators ops = build_operators(A, k);
  CHECK(alg.is_hermitian(ops.H));
  for (int i = 0; i < 3; ++i) {
    CHECK(alg.is_hermitian(ops.pi[i]));
    CHECK(alg.is_hermitian(ops.G[i].value()));
    CHECK(alg.is_hermitian(ops.B[i]));
  }
}

TEST_CASE("symmetric quantization turns brackets into commutators at degree two") {
  std::mt19937_64 rng(97);
  WeylAlgebra alg(Rational(1, 2));
  CHECK(alg.quantize(obs::x(0) * obs::p(0)) ==
        WeylOp::monomial(CRational(1), {1, 0, 0, 1, 0, 0}) -
            WeylOp::scalar(CRational(Rational(0), Rational(1, 4))));
  for (int t = 0; t < 25; ++t) {
    PolyObservable f = random_polynomial<6>(rng, 2, 4);
    PolyObservable g = random_polynomial<6>(rng, 2, 4);
    WeylOp lhs = alg.commutator(alg.quantize(f), alg.quantize(g));
    WeylOp rhs = alg.i_hbar() * alg.quantize(poisson(f, g));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("classical symbol rejects complex leftovers") {
  WeylAlgebra alg(Rational(1));
  WeylOp a = alg.mul(WeylOp::momentum(0), WeylOp::position(0));
  CHECK_THROWS_AS(classical_symbol(a), std::domain_error);
}

TEST_CASE("operator pretty-printer uses the canonical order") {
  WeylAlgebra alg(Rational(1));
  WeylOp a = alg.mul(WeylOp::momentum(0), WeylOp::position(0));
  CHECK(a.str() == "(1)*x1*p1 + (-1*i)");
}

}  // TEST_SUITE
