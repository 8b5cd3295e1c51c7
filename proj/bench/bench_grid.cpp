// Serial vs OpenMP grid evaluation on the three heaviest point kernels.
// Results of both loops are compared bit for bit before timings are shown.

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <string>
#include <vector>

#include "eulerg/cplx_literal.hpp"
#include "eulerg/grid.hpp"
#include "eulerg/meijer.hpp"
#include "eulerg/nonhomo.hpp"

using eulerg::Cplx;

namespace {

using Kernel = std::function<Cplx(Cplx)>;

double seconds_of(const std::function<void()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  body();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool identical(const std::vector<Cplx>& a, const std::vector<Cplx>& b) {
  return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(Cplx)) == 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Time evaluate_grid against evaluate_grid_serial"};
  int points = 2000;
  int repeats = 3;
  std::string only;
  app.add_option("--points", points, "Grid size per kernel")->check(CLI::PositiveNumber);
  app.add_option("--repeats", repeats, "Timed runs per loop; the fastest is reported")->check(CLI::PositiveNumber);
  app.add_option("--kernel", only, "Run a single kernel: meijer, meijer-log or solve");
  CLI11_PARSE(app, argc, argv);

  const eulerg::GParams generic{2, 1, {0.3}, {0.1, 0.6, 0.2}};
  const eulerg::GParams triple{3, 0, {}, {0.0, 0.0, 0.0}};
  const std::vector<Cplx> lambdas{Cplx(-1.2, 0.4), Cplx(-0.5, -0.7)};
  const eulerg::RhsFunction rhs = [](Cplx t) { return std::exp(t) * t; };

  struct Case {
    std::string name;
    std::string grid;
    Kernel kernel;
  };
  const std::vector<Case> cases{
      {"meijer", "0.1-1i:2+1i", [&](Cplx z) { return eulerg::meijer_g_residue_sum(generic, z, 1e-15).value; }},
      {"meijer-log", "0.1+0.1i:2.5+1i", [&](Cplx z) { return eulerg::meijer_g_residue_sum(triple, z, 1e-15).value; }},
      {"solve", "0.2-0.5i:1.5+0.5i", [&](Cplx z) { return eulerg::particular_solution(lambdas, rhs, z); }},
  };

  std::printf("threads: %d\n", eulerg::grid_threads());
  std::printf("%-11s %8s %12s %12s %8s %s\n", "kernel", "points", "serial [s]", "parallel [s]", "speedup", "results");
  bool all_identical = true;
  for (const auto& c : cases) {
    if (!only.empty() && only != c.name) continue;
    const auto grid = eulerg::linspace(eulerg::parse_grid(c.grid + ":" + std::to_string(points)));
    std::vector<Cplx> serial, parallel;
    double ts = INFINITY, tp = INFINITY;
    for (int r = 0; r < repeats; ++r) {
      ts = std::min(ts, seconds_of([&] { serial = eulerg::evaluate_grid_serial<Cplx>(grid, c.kernel); }));
      tp = std::min(tp, seconds_of([&] { parallel = eulerg::evaluate_grid<Cplx>(grid, c.kernel); }));
    }
    const bool same = identical(serial, parallel);
    all_identical = all_identical && same;
    std::printf("%-11s %8d %12.4f %12.4f %8.2f %s\n", c.name.c_str(), points, ts, tp, ts / tp,
                same ? "identical" : "DIFFER");
  }
  return all_identical ? 0 : 1;
}
