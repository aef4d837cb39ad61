#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "latsum/bigfloat.hpp"
#include "latsum/rational.hpp"

namespace latsum {

/// Weak-coupling coefficients plus the scaling exponents that fix the
/// strong-coupling ansatz delta^(p/q) (b0 + b1 delta^(-2/q) + ...).
struct VptProblem {
  std::vector<Rational> f;  // f[n] = weak-coupling coefficient
  long p = 0;
  long q = 1;
};

enum class VptStrategy { Extremum, RightmostInflection };

std::string strategy_name(VptStrategy s);

struct VptResult {
  int N = 0;
  BigFloat k0;
  BigFloat b0;
  VptStrategy strategy = VptStrategy::RightmostInflection;
  std::vector<BigFloat> candidates;  // all positive roots of the selected derivative
};

/// Leading strong-coupling coefficient
///   b0^(N)(k0) = sum_{n=0..N} (-1)^(N-n) C((p-nq)/2 - 1, N-n) f_n k0^(p-nq),
/// with exact rational term coefficients; floats enter only in the k0 powers
/// and the final sum.
BigFloat vpt_b0(const VptProblem& problem, int N, const BigFloat& k0);

/// d-th analytic derivative in k0 (d >= 1); term n carries the factor
/// prod_{i=0..d-1} (p - nq - i).
BigFloat vpt_b0_deriv(const VptProblem& problem, int N, const BigFloat& k0, int d);

/// First-order seed k0^(1) = (2 f1/f0 (p-q)/(p(p-2)))^(1/q).
BigFloat first_order_k0(const VptProblem& problem,
                        mpfr_prec_t prec = BigFloat::default_precision());

/// Exact coefficients of the degree-N polynomial in u = k0^q obtained by
/// multiplying the d-th derivative of b0^(N) by k0^(Nq-p+d); entry m is the
/// coefficient of u^m.
std::vector<Rational> vpt_derivative_polynomial(const VptProblem& problem, int N, int d);

/// Optimizes k0 by the principle of least sensitivity.  The selected
/// derivative times k0^(Nq-p+d) is a degree-N polynomial in u = k0^q with
/// exact coefficients; positive roots are isolated by sign-change scan plus
/// bisection.  Extremum takes the largest root of the first derivative,
/// RightmostInflection the largest root of the q-th (for q = 2 this is the
/// classic rightmost inflection point).
VptResult optimal_k0(const VptProblem& problem, int N, VptStrategy strategy,
                     mpfr_prec_t prec = BigFloat::default_precision());

struct VptSequence {
  std::vector<VptResult> results;                 // ordered by N, gaps excluded
  std::vector<std::pair<int, std::string>> gaps;  // (N, reason)
};

/// One result per N = 1..N_max; per-N failures are recorded as gaps.
VptSequence vpt_sequence(const VptProblem& problem, int N_max, VptStrategy strategy,
                         mpfr_prec_t prec = BigFloat::default_precision());

/// CSV with columns N, k0, b0, strategy.
void write_vpt_csv(const VptSequence& seq, std::ostream& out,
                   const std::string& manifest = "");

}  // namespace latsum
