#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "magsym/rational.hpp"

namespace magsym {

template <int N>
using Exponents = std::array<int, N>;

/// Graded lexicographic order: lower total degree first, ties broken
/// lexicographically. Fixes the canonical normal form used for equality.
template <int N>
struct GradedLex {
  bool operator()(const Exponents<N>& a, const Exponents<N>& b) const {
    int da = std::accumulate(a.begin(), a.end(), 0);
    int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da < db;
    return a < b;
  }
};

/// Multivariate polynomial over exact rationals in N variables.
/// Terms are kept in graded-lex normal form with zero coefficients erased,
/// so operator== is exact coefficient-wise equality.
template <int N>
class Polynomial {
 public:
  using Exp = Exponents<N>;
  using TermMap = std::map<Exp, Rational, GradedLex<N>>;

  Polynomial() = default;

  static Polynomial zero() { return {}; }

  static Polynomial constant(Rational c) {
    Polynomial p;
    p.add_term(Exp{}, std::move(c));
    return p;
  }

  static Polynomial variable(int i, int power = 1) {
    if (i < 0 || i >= N) throw std::out_of_range("variable index");
    if (power < 0) throw std::invalid_argument("negative power");
    Polynomial p;
    Exp e{};
    e[i] = power;
    p.add_term(e, Rational(1));
    return p;
  }

  static Polynomial monomial(Rational c, const Exp& e) {
    for (int k : e)
      if (k < 0) throw std::invalid_argument("negative exponent");
    Polynomial p;
    p.add_term(e, std::move(c));
    return p;
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Total degree; -1 for the zero polynomial.
  int degree() const {
    if (terms_.empty()) return -1;
    const Exp& e = terms_.rbegin()->first;
    return std::accumulate(e.begin(), e.end(), 0);
  }

  Rational coefficient(const Exp& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exp{});
  }

  Rational constant_term() const { return coefficient(Exp{}); }

  void add_term(const Exp& e, Rational c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, std::move(c));
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(const Polynomial& a) {
    Polynomial r;
    for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
    return r;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exp e;
        for (int i = 0; i < N; ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    return r;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend Polynomial operator*(const Rational& s, const Polynomial& a) {
    Polynomial r;
    if (s == 0) return r;
    for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, s * c);
    return r;
  }
  friend Polynomial operator*(const Polynomial& a, const Rational& s) { return s * a; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  Polynomial pow(int n) const {
    if (n < 0) throw std::invalid_argument("negative power");
    Polynomial r = constant(Rational(1));
    for (int k = 0; k < n; ++k) r *= *this;
    return r;
  }

  Polynomial derivative(int var) const {
    if (var < 0 || var >= N) throw std::out_of_range("variable index");
    Polynomial r;
    for (const auto& [e, c] : terms_) {
      if (e[var] == 0) continue;
      Exp d = e;
      d[var] -= 1;
      r.add_term(d, c * e[var]);
    }
    return r;
  }

  double eval(const std::array<double, N>& at) const {
    double acc = 0.0;
    for (const auto& [e, c] : terms_) {
      double t = to_double(c);
      for (int i = 0; i < N; ++i)
        for (int k = 0; k < e[i]; ++k) t *= at[i];
      acc += t;
    }
    return acc;
  }

  Rational eval_exact(const std::array<Rational, N>& at) const {
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
      Rational t = c;
      for (int i = 0; i < N; ++i)
        for (int k = 0; k < e[i]; ++k) t *= at[i];
      acc += t;
    }
    return acc;
  }

  /// Substitute an image polynomial for every variable (ring homomorphism).
  template <int M>
  Polynomial<M> substitute(const std::array<Polynomial<M>, N>& images) const {
    Polynomial<M> acc;
    for (const auto& [e, c] : terms_) {
      Polynomial<M> t = Polynomial<M>::constant(c);
      for (int i = 0; i < N; ++i)
        for (int k = 0; k < e[i]; ++k) t *= images[i];
      acc += t;
    }
    return acc;
  }

  std::string str(std::span<const std::string> names) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // Leading (highest graded-lex) terms first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      if (!first) out << (c > 0 ? " + " : " - ");
      if (first && c < 0) out << "-";
      first = false;
      Rational a = abs(c);
      bool is_const = std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
      if (a != 1 || is_const) out << a.str();
      bool printed = (a != 1 || is_const);
      for (int i = 0; i < N; ++i) {
        if (e[i] == 0) continue;
        if (printed) out << "*";
        out << names[i];
        if (e[i] > 1) out << "^" << e[i];
        printed = true;
      }
    }
    return out.str();
  }

 private:
  TermMap terms_;
};

using Poly3 = Polynomial<3>;

/// Fixed-size compiled form for fast repeated numeric evaluation.
template <int N>
class CompiledPoly {
 public:
  CompiledPoly() = default;
  explicit CompiledPoly(const Polynomial<N>& p) {
    for (const auto& [e, c] : p.terms()) terms_.push_back({to_double(c), e});
  }

  double eval(const std::array<double, N>& at) const {
    double acc = 0.0;
    for (const auto& t : terms_) {
      double v = t.c;
      for (int i = 0; i < N; ++i)
        for (int k = 0; k < t.e[i]; ++k) v *= at[i];
      acc += v;
    }
    return acc;
  }

 private:
  struct Term {
    double c;
    Exponents<N> e;
  };
  std::vector<Term> terms_;
};

inline const std::array<std::string, 3> kPositionNames = {"x1", "x2", "x3"};
inline const std::array<std::string, 6> kPhaseSpaceNames = {"x1", "x2", "x3", "p1", "p2", "p3"};

}  // namespace magsym
