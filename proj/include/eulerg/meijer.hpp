#pragma once

#include <vector>

#include "eulerg/error.hpp"
#include "eulerg/hypergeo.hpp"
#include "eulerg/log_series.hpp"

namespace eulerg {

/// Parameter block of G^{m,n}_{p,q}(a_1..a_p; b_1..b_q | zeta): the first n
/// entries of `a` and the first m entries of `b` are the "numerator" ones.
struct GParams {
  int m = 0;
  int n = 0;
  std::vector<Cplx> a;
  std::vector<Cplx> b;

  int p() const { return static_cast<int>(a.size()); }
  int q() const { return static_cast<int>(b.size()); }
};

/// Throws InvalidParams unless 0 <= n <= p < q, 0 <= m <= q and no a_k - b_j
/// (k <= n, j <= m) is a positive integer.
void validate(const GParams& params);

struct ClassMember {
  int index = 0;
  Cplx value{};
};

/// Partition of exponents into classes with integer pairwise differences;
/// members of each class appear by non-increasing real part.
struct CongruenceClasses {
  std::vector<std::vector<ClassMember>> classes;
};

CongruenceClasses congruence_partition(const std::vector<Cplx>& b);

/// G-function as the (negated) sum of residues over the pole ladders of
/// prod_{j<=m} Gamma(b_j - omega). Exactly 0 when m = 0.
SeriesEvalReport meijer_g_residue_sum(const GParams& params, Cplx zeta, double tol,
                                      int max_terms = kDefaultMaxTerms);

/// Same with zeta^omega = exp(omega * log_zeta) for a caller-chosen branch of
/// the logarithm.
SeriesEvalReport meijer_g_residue_sum_log(const GParams& params, Cplx log_zeta, double tol,
                                          int max_terms = kDefaultMaxTerms);

/// True when no two of b_1..b_m differ by an integer.
bool has_distinct_numerator_classes(const GParams& params);
/// True when no two of b_1..b_q differ by an integer.
bool has_distinct_classes(const GParams& params);

/// G-function as a sum of m hypergeometric series; requires distinct
/// numerator classes (NonGenericParameters otherwise).
SeriesEvalReport meijer_g_generic(const GParams& params, Cplx zeta, double tol,
                                  int max_terms = kDefaultMaxTerms);

/// Relative discrepancy between G^{m,n}_{p,q} and its expansion into
/// G^{1,p}_{p,q} functions.
double g1p_identity_check(const GParams& params, Cplx zeta);

/// q symbolic solutions zeta^{b_j} pF_{q-1}(... | (-1)^{p-m-n} zeta) of the
/// G-function differential equation when all b differ by non-integers.
std::vector<LogPowerSeries> meijer_fundamental_system_generic(const GParams& params,
                                                              int trunc = kDefaultTrunc);

/// Residual of [prod(theta - b_j) - (-1)^{m+n-p} zeta prod(theta - a_k + 1)] u.
double meijer_general_ode_residual(const GParams& params, const LogPowerSeries& u);

/// Log-power series of G^{k,0}_{0,q}(b_1..b_k; b_{k+1}..b_q | (-1)^k zeta)
/// where b_1..b_k is a sorted prefix of one congruence class. The series is
/// stored in the variable x = (-1)^k zeta, offsets 0..trunc above the
/// lowest pole b_k.
LogPowerSeries g_m0_log_series(const std::vector<Cplx>& b, int class_prefix_size, int trunc);

/// q solutions of prod(theta - b_j) u = zeta u for arbitrary b.
std::vector<LogPowerSeries> fundamental_system_0q(const std::vector<Cplx>& b, int trunc = kDefaultTrunc);

/// Residual of [prod(theta - b_j) - zeta] u.
double meijer_ode_residual(const std::vector<Cplx>& b, const LogPowerSeries& u);

}  // namespace eulerg
