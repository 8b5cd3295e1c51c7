#include "eulerg/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <string>
#include <vector>

namespace eulerg {
namespace {

// Kronrod nodes on [0, 1] (positive half, descending), with the Kronrod and
// embedded Gauss weights; odd Kronrod indices are the Gauss nodes.
constexpr std::array<double, 8> kNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
};
constexpr std::array<double, 8> kKronrod = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};
constexpr std::array<double, 4> kGauss = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
};

struct Segment {
  double lo;
  double hi;
  Cplx value;
  double error;
  bool operator<(const Segment& other) const { return error < other.error; }
};

Segment rule(const std::function<Cplx(double)>& f, double lo, double hi) {
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const Cplx fc = f(mid);
  Cplx kron = kKronrod[7] * fc;
  Cplx gauss = kGauss[3] * fc;
  for (std::size_t i = 0; i < 7; ++i) {
    const double dx = half * kNodes[i];
    const Cplx s = f(mid - dx) + f(mid + dx);
    kron += kKronrod[i] * s;
    if (i % 2 == 1) gauss += kGauss[i / 2] * s;
  }
  kron *= half;
  gauss *= half;
  return {lo, hi, kron, std::abs(kron - gauss)};
}

}  // namespace

QuadResult integrate_gk(const std::function<Cplx(double)>& f, double lo, double hi, double rel_tol,
                        double abs_tol, int max_subdivisions) {
  std::priority_queue<Segment> heap;
  Segment first = rule(f, lo, hi);
  Cplx total = first.value;
  double error = first.error;
  heap.push(first);
  int splits = 0;
  while (error > std::max(abs_tol, rel_tol * std::abs(total))) {
    if (splits >= max_subdivisions)
      throw Error(ErrorKind::QuadratureFailure, "tolerance not met after " + std::to_string(splits) +
                                                    " subdivisions");
    const Segment worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.lo + worst.hi);
    const Segment left = rule(f, worst.lo, mid);
    const Segment right = rule(f, mid, worst.hi);
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++splits;
  }
  // Re-sum in a fixed order so the result does not depend on the running
  // update history.
  QuadResult r;
  std::vector<Segment> segs;
  while (!heap.empty()) {
    segs.push_back(heap.top());
    heap.pop();
  }
  std::sort(segs.begin(), segs.end(), [](const Segment& a, const Segment& b) { return a.lo < b.lo; });
  for (const auto& s : segs) {
    r.value += s.value;
    r.est_error += s.error;
  }
  r.subdivisions = splits;
  return r;
}

}  // namespace eulerg
