#include <cmath>
#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "ffl/lfunction.hpp"

namespace ffl {

namespace {

using QPoly = std::vector<Rational>;  // constant term first

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly derivative(const QPoly& p) {
  QPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
  trim(d);
  return d;
}

std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly& b) {
  trim(a);
  QPoly quo(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
  while (a.size() >= b.size() && !a.empty()) {
    const std::size_t shift = a.size() - b.size();
    Rational c = a.back() / b.back();
    quo[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    a.pop_back();
    trim(a);
  }
  trim(quo);
  return {quo, a};
}

QPoly monic(QPoly p) {
  trim(p);
  if (p.empty()) return p;
  Rational lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

QPoly gcd(QPoly a, QPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

// Yun's square-free decomposition over Q: p = prod_i f_i^i, returns the
// nonconstant f_i.
std::vector<QPoly> squarefree_factors(const QPoly& p) {
  std::vector<QPoly> out;
  QPoly a = monic(p);
  if (a.size() <= 1) return out;
  QPoly b = derivative(a);
  QPoly c = gcd(a, b);
  QPoly w = divmod(a, c).first;
  QPoly y = divmod(b, c).first;
  for (;;) {
    QPoly z;
    {
      QPoly dw = derivative(w);
      z = y;
      if (z.size() < dw.size()) z.resize(dw.size(), Rational(0));
      for (std::size_t i = 0; i < dw.size(); ++i) z[i] -= dw[i];
      trim(z);
    }
    QPoly g = gcd(w, z);
    if (g.size() > 1) out.push_back(g);
    w = divmod(w, g).first;
    if (w.size() <= 1) break;
    y = divmod(z, g).first;
  }
  return out;
}

using Cplx = std::complex<long double>;

std::vector<Cplx> roots_of(const QPoly& f) {
  const std::size_t n = f.size() - 1;
  std::vector<long double> c(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) c[i] = static_cast<long double>(f[i].get_d());
  Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic> companion =
      Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>::Zero(n, n);
  for (std::size_t i = 1; i < n; ++i) companion(i, i - 1) = 1;
  for (std::size_t i = 0; i < n; ++i) companion(i, n - 1) = -c[i] / c[n];
  Eigen::ComplexEigenSolver<Eigen::Matrix<Cplx, Eigen::Dynamic, Eigen::Dynamic>> solver(
      companion.cast<Cplx>(), false);
  if (solver.info() != Eigen::Success) throw NumericError("eigenvalue solver did not converge");
  std::vector<Cplx> roots(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
  // Newton polish against the square-free factor.
  for (auto& z : roots) {
    for (int it = 0; it < 8; ++it) {
      Cplx p = 0, dp = 0;
      for (std::size_t i = f.size(); i-- > 0;) {
        dp = dp * z + p;
        p = p * z + c[i];
      }
      if (dp == Cplx(0)) break;
      Cplx step = p / dp;
      z -= step;
      if (std::abs(step) <= 1e-18L * std::abs(z)) break;
    }
  }
  return roots;
}

}  // namespace

RhCheck rh_root_check(const LPolynomial& L, double tol) {
  RhCheck out;
  LPolynomial Lstar = completed(L);
  QPoly p;
  for (const auto& c : Lstar.coeffs) p.emplace_back(c);
  trim(p);
  if (p.size() <= 1) return out;  // constant: no roots

  const long double target = 1.0L / std::sqrt(static_cast<long double>(L.q));
  for (const auto& f : squarefree_factors(p)) {
    for (const auto& z : roots_of(f)) {
      const long double modulus = std::abs(z);
      const long double dev = std::fabs(modulus - target) / target;
      out.root_moduli.push_back(static_cast<double>(modulus));
      out.max_deviation = std::max(out.max_deviation, static_cast<double>(dev));
    }
  }
  out.pass = out.max_deviation <= tol;
  return out;
}

}  // namespace ffl
