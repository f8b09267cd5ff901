#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace grushin {

// Exception mapped to exit code 2 by the CLI: the computation ran but did
// not meet its numerical contract (non-convergence, censoring overflow, ...).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exponent pair for the piecewise power a^(lo,hi): exponent `lo` applies for
// a <= 1, `hi` for a >= 1.
struct ExponentPair {
  double lo = 0.0;
  double hi = 0.0;
};

// a^(e.lo, e.hi) with the conventions 0^0 := 1 and 0^positive := 0.
// A negative exponent at a = 0 returns +inf (the limit value).
inline double piecewise_power(double a, ExponentPair e) {
  if (a < 0.0) throw std::invalid_argument("piecewise_power: negative base");
  const double ex = (a <= 1.0) ? e.lo : e.hi;
  if (a == 0.0) {
    if (ex == 0.0) return 1.0;
    if (ex > 0.0) return 0.0;
    return std::numeric_limits<double>::infinity();
  }
  if (ex == 0.0) return 1.0;
  return std::pow(a, ex);
}

// Degeneracy tuple (n, m, d1, d1', d2, d2'); the single source of truth for
// all weights. d1, d1' in [0,1); d2, d2' >= 0.
struct DegeneracyParams {
  int n = 1;
  int m = 0;
  double d1 = 0.0, d1p = 0.0;
  double d2 = 0.0, d2p = 0.0;

  DegeneracyParams() = default;
  DegeneracyParams(int n_, int m_, double d1_, double d1p_, double d2_, double d2p_)
      : n(n_), m(m_), d1(d1_), d1p(d1p_), d2(d2_), d2p(d2p_) {
    if (n < 1) throw std::invalid_argument("DegeneracyParams: n must be >= 1");
    if (m < 0) throw std::invalid_argument("DegeneracyParams: m must be >= 0");
    if (!(d1 >= 0.0 && d1 < 1.0) || !(d1p >= 0.0 && d1p < 1.0))
      throw std::invalid_argument("DegeneracyParams: d1, d1' must lie in [0,1)");
    if (d2 < 0.0 || d2p < 0.0)
      throw std::invalid_argument("DegeneracyParams: d2, d2' must be >= 0");
  }

  ExponentPair w1_exponents() const { return {2.0 * d1, 2.0 * d1p}; }
  ExponentPair w2_exponents() const { return {2.0 * d2, 2.0 * d2p}; }
  // leading-term weight |x1|^(2d1,2d1')
  double w1(double absx1) const { return piecewise_power(absx1, w1_exponents()); }
  // second-block weight |x1|^(2d2,2d2')
  double w2(double absx1) const { return piecewise_power(absx1, w2_exponents()); }
};

// Scaling exponents of the dilation semigroup sigma_t and the cube/ball
// geometry: alpha = (1-d1)^-1, beta = (1+d2-d1) alpha, gamma = d2/(1+d2-d1).
struct ScalingExponents {
  double alpha, alphap;
  double beta, betap;
  double gamma, gammap;
  double deltaM;

  ExponentPair a() const { return {alpha, alphap}; }
  ExponentPair b() const { return {beta, betap}; }
  ExponentPair g() const { return {gamma, gammap}; }
};

inline ScalingExponents derived_exponents(const DegeneracyParams& p) {
  ScalingExponents s{};
  s.alpha = 1.0 / (1.0 - p.d1);
  s.alphap = 1.0 / (1.0 - p.d1p);
  s.beta = (1.0 + p.d2 - p.d1) * s.alpha;
  s.betap = (1.0 + p.d2p - p.d1p) * s.alphap;
  s.gamma = p.d2 / (1.0 + p.d2 - p.d1);
  s.gammap = p.d2p / (1.0 + p.d2p - p.d1p);
  s.deltaM = std::max(std::max(p.d1, p.d1p), std::max(p.d2, p.d2p));
  return s;
}

struct Point {
  Eigen::VectorXd x1;
  Eigen::VectorXd x2;
};

inline Point make_point(const DegeneracyParams& p, std::initializer_list<double> a,
                        std::initializer_list<double> b = {}) {
  Point x;
  x.x1.resize(p.n);
  x.x2.resize(p.m);
  if (static_cast<int>(a.size()) != p.n || static_cast<int>(b.size()) != p.m)
    throw std::invalid_argument("make_point: dimension mismatch");
  int i = 0;
  for (double v : a) x.x1[i++] = v;
  i = 0;
  for (double v : b) x.x2[i++] = v;
  return x;
}

inline void require_conformal(const DegeneracyParams& p, const Point& x) {
  if (x.x1.size() != p.n || x.x2.size() != p.m)
    throw std::invalid_argument("point does not conform to params");
}

// sigma_t(x1,x2) = (t^(a,a') x1, t^(b,b') x2)
inline Point scale_point(const DegeneracyParams& p, double t, const Point& x) {
  if (!(t > 0.0)) throw std::invalid_argument("scale_point: t must be > 0");
  require_conformal(p, x);
  const ScalingExponents s = derived_exponents(p);
  Point y;
  y.x1 = piecewise_power(t, s.a()) * x.x1;
  y.x2 = piecewise_power(t, s.b()) * x.x2;
  return y;
}

// Gamma_delta density: w1(|x1|)|grad1|^2 + w2(|x1|)|grad2|^2
inline double carre_du_champ(const DegeneracyParams& p, const Eigen::VectorXd& grad1,
                             const Eigen::VectorXd& grad2, const Point& x) {
  require_conformal(p, x);
  if (grad1.size() != p.n || grad2.size() != p.m)
    throw std::invalid_argument("carre_du_champ: gradient dimension mismatch");
  const double ax1 = x.x1.norm();
  double v = p.w1(ax1) * grad1.squaredNorm();
  if (p.m > 0) v += p.w2(ax1) * grad2.squaredNorm();
  return v;
}

}  // namespace grushin
