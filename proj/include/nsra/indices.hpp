/// @file indices.hpp
/// @brief Exact index algebra for mixed radial-angular weighted norms.
///
/// Everything here operates on tuples of radial weights (rational alpha) and
/// Lebesgue exponents (time s, radial p, angular ptilde), all in exact
/// arithmetic.  Two scalar functionals organize the whole theory:
///
///   lambda(alpha, p, ptilde) = alpha + (n-1)/p - (n-1)/ptilde
///       measures how much angular integrability a weighted radial norm can
///       trade away; lambda >= 0 is the natural comparison threshold between
///       two weighted norms.
///
///   omega(alpha, p, s) = alpha + n/p + 2/s
///       is the parabolic scaling dimension of a space-time norm; tuples on
///       the critical scaling line 2/s + n/p = 1 - alpha have omega = 1.
///
/// From these, two angular thresholds are derived per (alpha, p): ptilde_G
/// (the weakest angular exponent for which the *global* regularity criterion
/// holds) and ptilde_L (same for the *local* criterion).  The check_*
/// functions evaluate full hypothesis sets of the regularity criteria and of
/// the linear/bilinear decay estimates, reporting every violated condition
/// by a stable identifier string (the identifier is the condition that
/// failed, e.g. "ptilde >= ptilde_G").

#pragma once

#include <map>
#include <string>
#include <vector>

#include "nsra/exponent.hpp"
#include "nsra/rational.hpp"

namespace nsra {

/// A space-time norm signature ||  |x|^alpha u ; L^s_t L^p_|x| L^ptilde_theta ||
/// in dimension n.
struct IndexTuple {
  int n = 3;
  Rational alpha;
  Exponent s;
  Exponent p;
  Exponent ptilde;
};

/// Index data for one decay/integral/bilinear estimate: a source norm
/// signature (alpha, s, p, ptilde), a target signature (beta, r, q, qtilde)
/// and a derivative order eta.  `s` is only consulted by the DUHAMEL kind;
/// `r` by the INTEGRAL and DUHAMEL kinds.
struct EstimateIndices {
  int n = 3;
  Rational alpha;
  Rational beta;
  Exponent p;
  Exponent ptilde;
  Exponent q;
  Exponent qtilde;
  Exponent r = Exponent::inf();
  Exponent s = Exponent::inf();
  int eta = 0;
};

enum class EstimateKind { HEAT_DECAY, OSEEN_DECAY, LOCALIZED, INTEGRAL, DUHAMEL };
enum class DataVariant { GLOBAL, LOCAL };

/// Outcome of a hypothesis check.  `violations` lists the conditions that
/// failed, each as a stable human-readable identifier; `derived` carries
/// computed quantities (thresholds, rates, functional values) as exact
/// strings ("a/b" or "inf").
struct Admissibility {
  bool admissible = false;
  std::string case_label = "NONE";  // YZ_MAIN | YZ_LINF | YZ_SMALL | NEG_ALPHA | NONNEG_ALPHA | NONE
  std::vector<std::string> violations;
  std::map<std::string, std::string> derived;

  bool violated(const std::string& id) const {
    for (const auto& v : violations)
      if (v == id) return true;
    return false;
  }
};

/// lambda(alpha, p, ptilde) = alpha + (n-1)/p - (n-1)/ptilde, exact.
Rational lambda(const Rational& alpha, const Exponent& p, const Exponent& ptilde, int n);

/// omega(alpha, p, s) = alpha + n/p + 2/s, exact.
Rational omega(const Rational& alpha, const Exponent& p, const Exponent& s, int n);

/// The angular exponent at which lambda(alpha, p, . ) crosses zero: for
/// alpha + (n-1)/p > 0 it is (n-1) / (alpha + (n-1)/p), and
/// lambda(alpha, p, ptilde) >= 0 iff ptilde >= lambda_zero_ptilde(alpha, p).
/// Returns inf when alpha + (n-1)/p <= 0, i.e. when no finite angular
/// exponent reaches the threshold.
Exponent lambda_zero_ptilde(const Rational& alpha, const Exponent& p, int n);

/// Angular threshold of the global criterion.  Domain: (1-n)/2 < alpha < 1/2.
/// For alpha < 0 this is max(2n, (n-1)p / (alpha p + n - 1)); the ratio
/// degenerates to inf when alpha p + n - 1 <= 0 (endpoint: angular sup norm
/// required).  For alpha >= 0 it is the bare ratio.
Exponent ptilde_G(const Rational& alpha, const Exponent& p, int n);

/// Angular threshold of the local criterion.  Domain: -1/2 <= alpha < 1.
/// For alpha < 0: 2(n-1)p / ((2 alpha + 1)p + 2(n-1)); equals p at
/// alpha = -1/2.  For alpha >= 0: 2(n-1)p / (p + 2(n-1)).
Exponent ptilde_L(const Rational& alpha, const Exponent& p, int n);

/// Exact test of the critical scaling relation 2/s + n/p = 1 - alpha.
bool check_scaling(const IndexTuple& t);

/// Pointwise-in-time weighted regularity criterion (classical angular
/// integrability; ptilde is ignored).  Three branches, tried in order:
///   YZ_MAIN : 2/s + n/p = 1 - alpha, -1 <= alpha < 1,
///             2/(1-alpha) < s < inf, n/(1-alpha) < p < inf
///   YZ_LINF : p = inf, -1 < alpha < 1, s = 2/(1-alpha)
///   YZ_SMALL: s = inf, -1 <= alpha <= 1, p = n/(1-alpha); admissible with
///             derived["smallness_required"] = "true" (the hypothesis is a
///             small-norm condition, not a finiteness condition).
/// If no branch matches, the violations of the nearest branch are reported.
Admissibility check_yz_criterion(const IndexTuple& t);

/// Mixed radial-angular criterion for global-in-space control.
///   NEG_ALPHA   : (1-n)/2 < alpha < 0,
///                 p in (max(2, n/(1-alpha)), (1-n)/alpha] or p = 2,
///                 2/s + n/p = 1 - alpha,
///                 s in (max(2, 2/(1-alpha)), inf) or s = 2/(1-alpha),
///                 ptilde >= ptilde_G
///   NONNEG_ALPHA: 0 <= alpha < 1/2, 2n < p <= inf, scaling relation,
///                 2/(1-alpha) <= s < inf, ptilde >= ptilde_G
Admissibility check_global_criterion(const IndexTuple& t);

/// Mixed radial-angular criterion for control near a point (weights centered
/// at the potential singularity).
///   NEG_ALPHA   : -1/2 <= alpha < 0, n < p <= inf, scaling relation,
///                 s as in the global NEG_ALPHA case, ptilde >= ptilde_L
///   NONNEG_ALPHA: 0 <= alpha < 1, n/(1-alpha) < p <= inf, scaling relation,
///                 2/(1-alpha) <= s < inf, ptilde > ptilde_L (strict)
Admissibility check_local_criterion(const IndexTuple& t);

/// Hypothesis sets of the quantitative estimates (n >= 2):
///   HEAT_DECAY : p <= q, ptilde <= qtilde, beta > -n/q, alpha < n - n/p,
///                lambda(alpha,p,ptilde) >= lambda(beta,q,qtilde);
///                rate = (eta + n/p - n/q + alpha - beta)/2 >= 0
///   OSEEN_DECAY: same, rate = (1 + eta + n/p - n/q + alpha - beta)/2 > 0
///   LOCALIZED  : heat conditions with the lambda ordering reversed
///                (lambda gap < 0); the bound gains a factor R^{-gap} on the
///                parabolic region |x| <= R sqrt(t)
///   INTEGRAL   : p <= q < n p/((eta + alpha - beta)p + n - 2), p < r < inf,
///                ptilde <= qtilde, beta > -n/q, alpha < n - n/p,
///                eta + omega(alpha,p,inf) = omega(beta,q,r); the lambda
///                ordering selects derived["variant"] = "global"/"localized"
///   DUHAMEL    : 2 <= p <= 2q, 2 < s < 2r < inf, 2 <= ptilde <= 2 qtilde,
///                beta > -n/q, alpha < n/2 - n/p,
///                2 omega(alpha,p,s) = omega(beta,q,r) + 1 - eta,
///                2 lambda(alpha,p,ptilde) >= lambda(beta,q,qtilde)
Admissibility admissible_estimate(EstimateKind kind, const EstimateIndices& e);

/// Conditions a weighted norm of the initial datum must satisfy so that the
/// criterion norm of the tuple `t` is automatically finite for the
/// corresponding solution class.  P denotes ptilde_G(t) in the GLOBAL
/// NEG_ALPHA case and t.p otherwise.
///   GLOBAL: alpha0 = 1 - n/p0, (2-n)/2 <= alpha0 < 2/(2+n), ptilde0 <= P/2,
///           2 <= p0 <= P/2, and p0 < 2P/(P - 2n) when P > 2n;
///           t must pass check_global_criterion.
///   LOCAL : alpha0 = 1 - n/p0, lambda(alpha0, p0, ptilde0) >= 0,
///           ptilde0 <= p/2, and per case of t:
///           NEG_ALPHA   : 1-n <= alpha0 < (2-n)/(2+n), 1 <= p0 <= p/2,
///                         p0 < p/(p-n) when p > n
///           NONNEG_ALPHA: 1-(1-alpha)n <= alpha0 < 1-(1-alpha)2n/(2+n),
///                         1/(1-alpha) <= p0 <= p/2, p0 < p/((1-alpha)p - n);
///           t must pass check_local_criterion.
Admissibility check_initial_data_conditions(DataVariant variant, const Rational& alpha0,
                                            const Exponent& p0, const Exponent& ptilde0,
                                            const IndexTuple& t);

const char* to_string(EstimateKind kind);
const char* to_string(DataVariant variant);

}  // namespace nsra
