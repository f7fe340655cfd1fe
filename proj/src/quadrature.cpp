#include "mimofbl/quadrature.hpp"

#include <cmath>

namespace mimofbl {

namespace {

// Kronrod-15 abscissae/weights with the embedded Gauss-7 rule
// (classic QUADPACK constants).
constexpr double kXgk[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691,
    0.7415311855993944, 0.5860872354676911, 0.4058451513773972,
    0.2077849550078985, 0.0};
constexpr double kWgk[8] = {
    0.02293532201052922, 0.06309209262997855, 0.1047900103222502,
    0.1406532597155259,  0.1690047266392679,  0.1903505780647854,
    0.2044329400752989,  0.2094821410847278};
constexpr double kWg[4] = {0.1294849661688697, 0.2797053914892767,
                           0.3818300505051189, 0.4179591836734694};

struct PanelEstimate {
  double kronrod;
  double diff;  // |kronrod - gauss|
};

PanelEstimate gk15(const std::function<double(double)>& f, double a, double b,
                   long& evals) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = f(c);
  evals += 15;
  double kron = kWgk[7] * fc;
  double gauss = kWg[3] * fc;
  for (int i = 0; i < 7; ++i) {
    const double x = h * kXgk[i];
    const double fs = f(c - x) + f(c + x);
    kron += kWgk[i] * fs;
    if (i % 2 == 1) gauss += kWg[i / 2] * fs;
  }
  return {kron * h, std::abs((kron - gauss) * h)};
}

void adapt(const std::function<double(double)>& f, double a, double b,
           double tol, int depth, QuadResult& out) {
  const PanelEstimate e = gk15(f, a, b, out.evaluations);
  if (depth >= 48 || e.diff <= tol || !(std::isfinite(e.diff))) {
    out.value += e.kronrod;
    out.error += e.diff;
    return;
  }
  const double mid = 0.5 * (a + b);
  adapt(f, a, mid, 0.5 * tol, depth + 1, out);
  adapt(f, mid, b, 0.5 * tol, depth + 1, out);
}

}  // namespace

QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     double rel_tol, double abs_tol) {
  QuadResult out;
  if (a == b) return out;
  const PanelEstimate first = gk15(f, a, b, out.evaluations);
  const double tol =
      std::max(abs_tol, rel_tol * std::max(std::abs(first.kronrod), 1e-300));
  out.evaluations = 0;
  adapt(f, a, b, tol, 0, out);
  return out;
}

}  // namespace mimofbl
