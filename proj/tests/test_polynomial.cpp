#include <doctest.h>

#include <random>

#include "magsym/polynomial.hpp"
#include "magsym/sampling.hpp"

using namespace magsym;

TEST_SUITE("polynomial") {

TEST_CASE("normal form is unique and equality is coefficient-wise") {
  Poly3 a = Poly3::variable(0) + Poly3::variable(1) * Poly3::variable(0);
  Poly3 b = Poly3::variable(0) * Poly3::variable(1) + Poly3::variable(0);
  CHECK(a == b);
  Poly3 c = a - b;
  CHECK(c.is_zero());
  CHECK(c.degree() == -1);
}

TEST_CASE("arithmetic matches exact evaluation") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 30; ++t) {
    Poly3 f = random_polynomial<3>(rng, 3, 5);
    Poly3 g = random_polynomial<3>(rng, 3, 5);
    std::array<Rational, 3> at = {Rational(2, 3), Rational(-1, 2), Rational(5)};
    CHECK((f + g).eval_exact(at) == f.eval_exact(at) + g.eval_exact(at));
    CHECK((f - g).eval_exact(at) == f.eval_exact(at) - g.eval_exact(at));
    CHECK((f * g).eval_exact(at) == f.eval_exact(at) * g.eval_exact(at));
  }
}

TEST_CASE("derivative satisfies the product rule") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 20; ++t) {
    Poly3 f = random_polynomial<3>(rng, 3, 4);
    Poly3 g = random_polynomial<3>(rng, 3, 4);
    for (int i = 0; i < 3; ++i)
      CHECK((f * g).derivative(i) == f.derivative(i) * g + f * g.derivative(i));
  }
}

TEST_CASE("substitution is a ring homomorphism") {
  std::mt19937_64 rng(13);
  std::array<Polynomial<3>, 3> images = {random_polynomial<3>(rng, 2, 3),
                                         random_polynomial<3>(rng, 2, 3),
                                         random_polynomial<3>(rng, 2, 3)};
  Poly3 f = random_polynomial<3>(rng, 2, 4);
  Poly3 g = random_polynomial<3>(rng, 2, 4);
  CHECK((f * g).substitute<3>(images) == f.substitute<3>(images) * g.substitute<3>(images));
  CHECK((f + g).substitute<3>(images) == f.substitute<3>(images) + g.substitute<3>(images));
}

TEST_CASE("double evaluation tracks exact evaluation") {
  std::mt19937_64 rng(17);
  Poly3 f = random_polynomial<3>(rng, 3, 6);
  std::array<double, 3> at = {0.3, -1.2, 0.7};
  std::array<Rational, 3> at_exact = {Rational(3, 10), Rational(-12, 10), Rational(7, 10)};
  CHECK(f.eval(at) == doctest::Approx(to_double(f.eval_exact(at_exact))).epsilon(1e-12));
  CompiledPoly<3> cf(f);
  CHECK(cf.eval(at) == doctest::Approx(f.eval(at)).epsilon(1e-15));
}

TEST_CASE("printing uses the fixed variable order") {
  Poly3 f = Rational(-1, 2) * Poly3::variable(1) + Poly3::variable(0, 2);
  CHECK(f.str(kPositionNames) == "x1^2 - 1/2*x2");
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-6/8") == Rational(-3, 4));
  CHECK(parse_rational("5") == Rational(5));
  CHECK_THROWS_AS(parse_rational("1/abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

}  // TEST_SUITE
