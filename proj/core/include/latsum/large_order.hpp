#pragma once

#include <optional>
#include <vector>

#include "latsum/bigfloat.hpp"
#include "latsum/rational.hpp"
#include "latsum/richardson.hpp"

namespace latsum {

/// A single coefficient row a_j, j = j0, j0+1, ...
struct CoefficientSequence {
  long j0 = 1;
  std::vector<Rational> values;

  const Rational& at(long j) const { return values[static_cast<std::size_t>(j - j0)]; }
  long last() const { return j0 + static_cast<long>(values.size()) - 1; }
};

/// Estimate sequence plus the orders skipped because a referenced
/// coefficient vanishes (the ratio formulas are undefined there).  The
/// sequence itself is the contiguous tail after the last gap, ready for
/// Richardson extrapolation.
struct EstimateResult {
  SequenceData seq;
  std::vector<long> gaps;
};

/// Power-law exponent estimates
///   A_j = log(a_{j+2} a_j / a_{j+1}^2) / log(j (j+2) / (j+1)^2).
EstimateResult estimate_A(const CoefficientSequence& row,
                          mpfr_prec_t prec = BigFloat::default_precision());

/// Inverse radius of convergence estimates
///   K_j = -(a_{j+1}/a_j) (j/(j+1))^A.
EstimateResult estimate_K(const CoefficientSequence& row, const BigFloat& A,
                          mpfr_prec_t prec = BigFloat::default_precision());

/// Overall-factor estimates B_j = |a_j| / (K^j j^A).
EstimateResult estimate_B(const CoefficientSequence& row, const BigFloat& K,
                          const BigFloat& A,
                          mpfr_prec_t prec = BigFloat::default_precision());

/// Sign-pattern fit of cos(a n + b) against a coefficient row.
struct SignFit {
  double a = 0;
  double b = 0;
  int score = 0;                 // N_terms - 2 * mismatches
  std::vector<long> mismatches;  // orders where the cosine sign is wrong
};

/// f(a,b) = sum_n sgn(cos(a n + b)) sgn(a_n).  Throws AmbiguousPhase when
/// |cos(a n + b)| < 1e-9 at some n, and ZeroCoefficient when a_n == 0.
SignFit sign_score(const CoefficientSequence& row, double a, double b);

struct GridSearchConfig {
  int resolution = 2000;   // cells per axis
  int refine_depth = 3;    // re-grid levels, 10x zoom each
  double merge_tol = 1e-4; // peaks closer than this collapse
  int jobs = 0;            // 0 = hardware concurrency
};

/// Scans f(a,b) over [a_lo,a_hi] x [b_lo,b_hi] and returns every refined
/// peak achieving the maximal score.
std::vector<SignFit> sign_grid_search(const CoefficientSequence& row, double a_lo, double a_hi,
                                      double b_lo, double b_hi,
                                      const GridSearchConfig& config = {});

/// Best pure-cosine fit with the phase restricted to b = 0 or pi (an
/// overall sign), scanning a over [a_lo, a_hi].
SignFit best_pure_cosine(const CoefficientSequence& row, double a_lo, double a_hi,
                         const GridSearchConfig& config = {});

/// Cosine- and factorial-normalized row, with the order at which the
/// successive ratios b_{j+1}/b_j first reverse direction.
struct NormalizedRow {
  std::vector<BigFloat> aprime;  // a_j / cos(a j + b)
  std::vector<BigFloat> bnorm;   // a_j / (cos(a j + b) j!)
  std::optional<long> oscillation_onset;
};

NormalizedRow normalize_row(const CoefficientSequence& row, double a, double b,
                            mpfr_prec_t prec = BigFloat::default_precision());

/// zeta(s) for s > 1 by partial sum with Euler-Maclaurin tail correction.
BigFloat zeta(const BigFloat& s);

/// Consistency prediction K = (1 + B2/(2 B1)) / (1 + 3 z B1 + (3/2) z^2 B1^2)
/// with z = zeta(3/2).  Throws NonPositiveB1.
BigFloat zeta_consistency_K(const BigFloat& B1, const BigFloat& B2);

enum class ConvolutionVariant { Single, Double };

/// Finite-j normalized convolution sum: sum_k k^A (j-k)^A (single) or the
/// analogous double sum, normalized by j^A for A < -1 (zeta regime) and by
/// the Riemann-sum factor for A > -1 (integral regime).
BigFloat convolution_sum(const BigFloat& A, ConvolutionVariant variant, long j);

/// The j -> infinity limit: Gamma^2(A+1)/Gamma(2A+2) resp. 2 zeta(-A) for
/// the single sum, Gamma^3(A+1)/Gamma(3A+3) resp. 3 zeta^2(-A) for the
/// double sum.
BigFloat convolution_limit(const BigFloat& A, ConvolutionVariant variant);

}  // namespace latsum
