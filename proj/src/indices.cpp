/// @file indices.cpp
/// @brief Hypothesis checkers for the weighted-norm regularity criteria and
///        the quantitative decay estimates, in exact rational arithmetic.
///
/// Conventions used throughout:
///  * every condition is evaluated in reciprocal form (n/p as n * (1/p)) so
///    infinite exponents contribute exactly zero;
///  * expressions that are undefined outside a branch's weight range (for
///    example 2/(1-alpha) at alpha >= 1) are only evaluated under the guard
///    of that range check -- the range violation is reported instead;
///  * a check passes iff its violation list is empty; on failure the case
///    label collapses to "NONE" but derived quantities stay populated so
///    callers can report thresholds for near-miss tuples.

#include "nsra/indices.hpp"

#include <algorithm>
#include <optional>

namespace nsra {

namespace {

Rational R(std::int64_t n, std::int64_t d = 1) { return Rational(n, d); }

/// Accumulates violated-condition identifiers for one hypothesis set.
struct Check {
  Admissibility a;
  void req(bool ok, const std::string& id) {
    if (!ok) a.violations.push_back(id);
  }
  bool pass() const { return a.violations.empty(); }
};

Admissibility finalize(Check&& c, std::string label_if_admissible) {
  c.a.admissible = c.a.violations.empty();
  c.a.case_label = c.a.admissible ? std::move(label_if_admissible) : "NONE";
  return std::move(c.a);
}

/// s = 2/(1-alpha); infinite at alpha = 1.  Callers guard alpha <= 1.
Exponent two_over_one_minus(const Rational& alpha) {
  return exponent_from_recip((R(1) - alpha) * R(1, 2));
}

/// p = n/(1-alpha); infinite at alpha = 1.  Callers guard alpha <= 1.
Exponent n_over_one_minus(const Rational& alpha, int n) {
  return exponent_from_recip((R(1) - alpha) / R(n));
}

}  // namespace

Rational lambda(const Rational& alpha, const Exponent& p, const Exponent& ptilde, int n) {
  if (n < 2) throw std::domain_error("lambda: dimension must be >= 2");
  return alpha + R(n - 1) * (p.recip() - ptilde.recip());
}

Rational omega(const Rational& alpha, const Exponent& p, const Exponent& s, int n) {
  if (n < 2) throw std::domain_error("omega: dimension must be >= 2");
  return alpha + R(n) * p.recip() + R(2) * s.recip();
}

Exponent lambda_zero_ptilde(const Rational& alpha, const Exponent& p, int n) {
  if (n < 2) throw std::domain_error("lambda_zero_ptilde: dimension must be >= 2");
  const Rational d = alpha + R(n - 1) * p.recip();
  if (d <= R(0)) return Exponent::inf();
  return Exponent(R(n - 1) / d);
}

Exponent ptilde_G(const Rational& alpha, const Exponent& p, int n) {
  if (n < 2) throw std::domain_error("ptilde_G: dimension must be >= 2");
  if (!(alpha > R(1 - n, 2) && alpha < R(1, 2))) {
    throw std::domain_error("ptilde_G: alpha outside ((1-n)/2, 1/2)");
  }
  const Exponent ratio = lambda_zero_ptilde(alpha, p, n);
  if (alpha < R(0)) return std::max(Exponent(2 * n), ratio);
  return ratio;
}

Exponent ptilde_L(const Rational& alpha, const Exponent& p, int n) {
  if (n < 2) throw std::domain_error("ptilde_L: dimension must be >= 2");
  if (!(alpha >= R(-1, 2) && alpha < R(1))) {
    throw std::domain_error("ptilde_L: alpha outside [-1/2, 1)");
  }
  const Rational lin = alpha < R(0) ? R(2) * alpha + R(1) : R(1);
  const Rational d = lin + R(2 * (n - 1)) * p.recip();
  if (d == R(0)) return Exponent::inf();  // only at alpha = -1/2, p = inf
  return Exponent(R(2 * (n - 1)) / d);
}

bool check_scaling(const IndexTuple& t) {
  return R(2) * t.s.recip() + R(t.n) * t.p.recip() == R(1) - t.alpha;
}

Admissibility check_yz_criterion(const IndexTuple& t) {
  Check common;
  common.req(t.n >= 3, "n >= 3");
  common.req(t.s >= Exponent(1) && t.p >= Exponent(1), "exponents >= 1");

  Check main;
  main.req(t.alpha >= R(-1), "-1 <= alpha");
  main.req(t.alpha < R(1), "alpha < 1");
  main.req(check_scaling(t), "2/s + n/p = 1 - alpha");
  if (t.alpha < R(1)) {
    main.req(t.s > two_over_one_minus(t.alpha), "2/(1-alpha) < s");
    main.req(t.p > n_over_one_minus(t.alpha, t.n), "n/(1-alpha) < p");
  }
  main.req(t.s.is_finite(), "s < inf");
  main.req(t.p.is_finite(), "p < inf");

  Check linf;
  linf.req(t.p.is_inf(), "p = inf");
  linf.req(t.alpha > R(-1), "-1 < alpha");
  linf.req(t.alpha < R(1), "alpha < 1");
  if (t.alpha < R(1)) linf.req(t.s == two_over_one_minus(t.alpha), "s = 2/(1-alpha)");

  Check small;
  small.req(t.s.is_inf(), "s = inf");
  small.req(t.alpha >= R(-1), "-1 <= alpha");
  small.req(t.alpha <= R(1), "alpha <= 1");
  if (t.alpha <= R(1)) small.req(t.p == n_over_one_minus(t.alpha, t.n), "p = n/(1-alpha)");

  struct Branch {
    Check* check;
    const char* label;
  };
  const Branch branches[] = {{&main, "YZ_MAIN"}, {&linf, "YZ_LINF"}, {&small, "YZ_SMALL"}};

  const Branch* chosen = nullptr;
  for (const Branch& b : branches) {
    if (b.check->pass()) {
      chosen = &b;
      break;
    }
  }
  if (chosen == nullptr) {
    chosen = &branches[0];
    for (const Branch& b : branches) {
      if (b.check->a.violations.size() < chosen->check->a.violations.size()) chosen = &b;
    }
  }

  Check merged;
  merged.a = std::move(chosen->check->a);
  merged.a.violations.insert(merged.a.violations.begin(), common.a.violations.begin(),
                             common.a.violations.end());
  if (std::string(chosen->label) == "YZ_SMALL") {
    merged.a.derived["smallness_required"] = "true";
  }
  return finalize(std::move(merged), chosen->label);
}

Admissibility check_global_criterion(const IndexTuple& t) {
  Check c;
  c.req(t.n >= 3, "n >= 3");
  c.req(t.s >= Exponent(1) && t.p >= Exponent(1) && t.ptilde >= Exponent(1), "exponents >= 1");
  c.req(check_scaling(t), "2/s + n/p = 1 - alpha");

  const bool neg = t.alpha < R(0);
  if (neg) {
    const bool alpha_ok = t.alpha > R(1 - t.n, 2);
    c.req(alpha_ok, "(1-n)/2 < alpha");
    const Exponent p_low = std::max(Exponent(2), n_over_one_minus(t.alpha, t.n));
    const Exponent p_high(R(1 - t.n) / t.alpha);
    c.req((t.p > p_low && t.p <= p_high) || t.p == Exponent(2),
          "p in (max(2, n/(1-alpha)), (1-n)/alpha] or p = 2");
    const Exponent s_crit = two_over_one_minus(t.alpha);
    const Exponent s_low = std::max(Exponent(2), s_crit);
    c.req((t.s > s_low && t.s.is_finite()) || t.s == s_crit,
          "s in (max(2, 2/(1-alpha)), inf) or s = 2/(1-alpha)");
    if (alpha_ok) {
      const Exponent pg = ptilde_G(t.alpha, t.p, t.n);
      c.a.derived["ptilde_G"] = pg.str();
      if (pg.is_inf()) c.a.derived["endpoint"] = "angular L-infinity required";
      c.req(t.ptilde >= pg, "ptilde >= ptilde_G");
    }
  } else {
    const bool alpha_ok = t.alpha < R(1, 2);
    c.req(alpha_ok, "alpha < 1/2");
    c.req(t.p > Exponent(2 * t.n), "2n < p");
    if (t.alpha < R(1)) c.req(t.s >= two_over_one_minus(t.alpha), "2/(1-alpha) <= s");
    c.req(t.s.is_finite(), "s < inf");
    if (alpha_ok) {
      const Exponent pg = ptilde_G(t.alpha, t.p, t.n);
      c.a.derived["ptilde_G"] = pg.str();
      c.req(t.ptilde >= pg, "ptilde >= ptilde_G");
    }
  }
  return finalize(std::move(c), neg ? "NEG_ALPHA" : "NONNEG_ALPHA");
}

Admissibility check_local_criterion(const IndexTuple& t) {
  Check c;
  c.req(t.n >= 3, "n >= 3");
  c.req(t.s >= Exponent(1) && t.p >= Exponent(1) && t.ptilde >= Exponent(1), "exponents >= 1");
  c.req(check_scaling(t), "2/s + n/p = 1 - alpha");

  const bool neg = t.alpha < R(0);
  if (neg) {
    const bool alpha_ok = t.alpha >= R(-1, 2);
    c.req(alpha_ok, "-1/2 <= alpha");
    c.req(t.p > Exponent(t.n), "n < p");
    const Exponent s_crit = two_over_one_minus(t.alpha);
    const Exponent s_low = std::max(Exponent(2), s_crit);
    c.req((t.s > s_low && t.s.is_finite()) || t.s == s_crit,
          "s in (max(2, 2/(1-alpha)), inf) or s = 2/(1-alpha)");
    if (alpha_ok) {
      const Exponent pl = ptilde_L(t.alpha, t.p, t.n);
      c.a.derived["ptilde_L"] = pl.str();
      c.req(t.ptilde >= pl, "ptilde >= ptilde_L");
    }
  } else {
    const bool alpha_ok = t.alpha < R(1);
    c.req(alpha_ok, "alpha < 1");
    if (alpha_ok) {
      c.req(t.p > n_over_one_minus(t.alpha, t.n), "n/(1-alpha) < p");
      c.req(t.s >= two_over_one_minus(t.alpha), "2/(1-alpha) <= s");
      const Exponent pl = ptilde_L(t.alpha, t.p, t.n);
      c.a.derived["ptilde_L"] = pl.str();
      c.req(t.ptilde > pl, "ptilde > ptilde_L (strict)");
    }
    c.req(t.s.is_finite(), "s < inf");
  }
  return finalize(std::move(c), neg ? "NEG_ALPHA" : "NONNEG_ALPHA");
}

Admissibility admissible_estimate(EstimateKind kind, const EstimateIndices& e) {
  Check c;
  c.req(e.n >= 2, "n >= 2");
  c.req(e.eta >= 0, "eta >= 0");
  {
    bool exps_ok = e.p >= Exponent(1) && e.ptilde >= Exponent(1) && e.q >= Exponent(1) &&
                   e.qtilde >= Exponent(1);
    if (kind == EstimateKind::INTEGRAL || kind == EstimateKind::DUHAMEL)
      exps_ok = exps_ok && e.r >= Exponent(1);
    if (kind == EstimateKind::DUHAMEL) exps_ok = exps_ok && e.s >= Exponent(1);
    c.req(exps_ok, "exponents >= 1");
  }

  const Rational la = lambda(e.alpha, e.p, e.ptilde, e.n);
  const Rational lb = lambda(e.beta, e.q, e.qtilde, e.n);
  c.a.derived["lambda_source"] = la.str();
  c.a.derived["lambda_target"] = lb.str();

  switch (kind) {
    case EstimateKind::HEAT_DECAY:
    case EstimateKind::OSEEN_DECAY:
    case EstimateKind::LOCALIZED: {
      c.req(e.p <= e.q, "p <= q");
      c.req(e.ptilde <= e.qtilde, "ptilde <= qtilde");
      c.req(e.beta > -(R(e.n) * e.q.recip()), "beta > -n/q");
      c.req(e.alpha < R(e.n) - R(e.n) * e.p.recip(), "alpha < n - n/p");
      const Rational gain =
          R(e.eta) + R(e.n) * (e.p.recip() - e.q.recip()) + e.alpha - e.beta;
      if (kind == EstimateKind::OSEEN_DECAY) {
        const Rational rate = (R(1) + gain) * R(1, 2);
        c.a.derived["rate"] = rate.str();
        c.req(rate > R(0), "decay rate > 0");
        c.req(la >= lb, "lambda(alpha,p,ptilde) >= lambda(beta,q,qtilde)");
      } else {
        const Rational rate = gain * R(1, 2);
        c.a.derived["rate"] = rate.str();
        c.req(rate >= R(0), "decay rate >= 0");
        if (kind == EstimateKind::HEAT_DECAY) {
          c.req(la >= lb, "lambda(alpha,p,ptilde) >= lambda(beta,q,qtilde)");
        } else {
          c.req(la < lb, "lambda(alpha,p,ptilde) < lambda(beta,q,qtilde)");
          c.a.derived["lambda_gap"] = (la - lb).str();
        }
      }
      break;
    }
    case EstimateKind::INTEGRAL: {
      c.req(e.p <= e.q, "p <= q");
      c.req(e.ptilde <= e.qtilde, "ptilde <= qtilde");
      // q < n p / ((eta + alpha - beta) p + n - 2), written reciprocally so a
      // non-positive denominator is correctly vacuous.
      c.req(R(e.n) * e.q.recip() > (R(e.eta) + e.alpha - e.beta) + R(e.n - 2) * e.p.recip(),
            "q < n p/((eta + alpha - beta)p + n - 2)");
      c.req(e.p < e.r, "p < r");
      c.req(e.r.is_finite(), "r < inf");
      c.req(e.beta > -(R(e.n) * e.q.recip()), "beta > -n/q");
      c.req(e.alpha < R(e.n) - R(e.n) * e.p.recip(), "alpha < n - n/p");
      const Rational source = R(e.eta) + omega(e.alpha, e.p, Exponent::inf(), e.n);
      const Rational target = omega(e.beta, e.q, e.r, e.n);
      c.a.derived["omega_source"] = source.str();
      c.a.derived["omega_target"] = target.str();
      c.req(source == target, "eta + omega(alpha,p,inf) = omega(beta,q,r)");
      c.a.derived["variant"] = la >= lb ? "global" : "localized";
      if (la < lb) c.a.derived["lambda_gap"] = (la - lb).str();
      break;
    }
    case EstimateKind::DUHAMEL: {
      c.req(e.p >= Exponent(2), "2 <= p");
      c.req(e.p <= twice(e.q), "p <= 2q");
      c.req(e.s > Exponent(2), "2 < s");
      c.req(e.s < twice(e.r), "s < 2r");
      c.req(e.r.is_finite(), "r < inf");
      c.req(e.ptilde >= Exponent(2), "2 <= ptilde");
      c.req(e.ptilde <= twice(e.qtilde), "ptilde <= 2 qtilde");
      c.req(e.beta > -(R(e.n) * e.q.recip()), "beta > -n/q");
      c.req(e.alpha < R(e.n, 2) - R(e.n) * e.p.recip(), "alpha < n/2 - n/p");
      const Rational source = R(2) * omega(e.alpha, e.p, e.s, e.n);
      const Rational target = omega(e.beta, e.q, e.r, e.n) + R(1) - R(e.eta);
      c.a.derived["omega_source"] = source.str();
      c.a.derived["omega_target"] = target.str();
      c.req(source == target, "2 omega(alpha,p,s) = omega(beta,q,r) + 1 - eta");
      c.req(R(2) * la >= lb, "2 lambda(alpha,p,ptilde) >= lambda(beta,q,qtilde)");
      break;
    }
  }
  return finalize(std::move(c), to_string(kind));
}

Admissibility check_initial_data_conditions(DataVariant variant, const Rational& alpha0,
                                            const Exponent& p0, const Exponent& ptilde0,
                                            const IndexTuple& t) {
  Check c;
  c.req(t.n >= 3, "n >= 3");
  c.req(p0 >= Exponent(1) && ptilde0 >= Exponent(1), "exponents >= 1");
  c.req(alpha0 == R(1) - R(t.n) * p0.recip(), "alpha0 = 1 - n/p0");
  c.a.derived["variant"] = to_string(variant);

  const bool neg = t.alpha < R(0);

  if (variant == DataVariant::GLOBAL) {
    c.req(check_global_criterion(t).admissible, "u satisfies the global criterion");
    std::optional<Exponent> P;
    if (neg) {
      if (t.alpha > R(1 - t.n, 2)) P = ptilde_G(t.alpha, t.p, t.n);
      // else: alpha outside the ptilde_G domain; the criterion check above
      // already failed and the threshold conditions cannot be evaluated.
    } else {
      P = t.p;
    }
    c.req(alpha0 >= R(2 - t.n, 2), "(2-n)/2 <= alpha0");
    c.req(alpha0 < R(2, 2 + t.n), "alpha0 < 2/(2+n)");
    c.req(p0 >= Exponent(2), "2 <= p0");
    if (P.has_value()) {
      c.a.derived["P"] = P->str();
      c.req(ptilde0 <= half(*P), "ptilde0 <= P/2");
      c.req(p0 <= half(*P), "p0 <= P/2");
      if (*P > Exponent(2 * t.n)) {
        // p0 < 2P/(P - 2n), reciprocally: 1 - 2n/P < 2/p0.
        c.req(R(1) - R(2 * t.n) * P->recip() < R(2) * p0.recip(), "p0 < 2P/(P - 2n)");
      }
    }
  } else {
    c.req(check_local_criterion(t).admissible, "u satisfies the local criterion");
    c.req(lambda(alpha0, p0, ptilde0, t.n) >= R(0), "lambda(alpha0,p0,ptilde0) >= 0");
    c.req(ptilde0 <= half(t.p), "ptilde0 <= p/2");
    c.req(p0 <= half(t.p), "p0 <= p/2");
    if (neg) {
      c.req(alpha0 >= R(1 - t.n), "1-n <= alpha0");
      c.req(alpha0 < R(2 - t.n, 2 + t.n), "alpha0 < (2-n)/(2+n)");
      c.req(p0 >= Exponent(1), "1 <= p0");
      if (t.p > Exponent(t.n)) {
        // p0 < p/(p - n), reciprocally: 1 - n/p < 1/p0.
        c.req(R(1) - R(t.n) * t.p.recip() < p0.recip(), "p0 < p/(p - n)");
      }
    } else if (t.alpha < R(1)) {
      const Rational om = R(1) - t.alpha;
      c.req(alpha0 >= R(1) - om * R(t.n), "1-(1-alpha)n <= alpha0");
      c.req(alpha0 < R(1) - om * R(2 * t.n, 2 + t.n), "alpha0 < 1-(1-alpha)2n/(2+n)");
      c.req(p0.recip() <= om, "1/(1-alpha) <= p0");
      // p0 < p/((1-alpha)p - n), reciprocally: (1-alpha) - n/p < 1/p0.
      c.req(om - R(t.n) * t.p.recip() < p0.recip(), "p0 < p/((1-alpha)p - n)");
    } else {
      c.req(false, "alpha < 1");
    }
  }
  return finalize(std::move(c), neg ? "NEG_ALPHA" : "NONNEG_ALPHA");
}

const char* to_string(EstimateKind kind) {
  switch (kind) {
    case EstimateKind::HEAT_DECAY: return "HEAT_DECAY";
    case EstimateKind::OSEEN_DECAY: return "OSEEN_DECAY";
    case EstimateKind::LOCALIZED: return "LOCALIZED";
    case EstimateKind::INTEGRAL: return "INTEGRAL";
    case EstimateKind::DUHAMEL: return "DUHAMEL";
  }
  return "UNKNOWN";
}

const char* to_string(DataVariant variant) {
  return variant == DataVariant::GLOBAL ? "GLOBAL" : "LOCAL";
}

}  // namespace nsra
