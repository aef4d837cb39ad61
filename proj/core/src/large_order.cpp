#include "latsum/large_order.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <thread>

#include "latsum/errors.hpp"

namespace latsum {

namespace {

constexpr double kPhaseTol = 1e-9;

/// Collects per-order estimates, then keeps the contiguous tail after the
/// last undefined order.
EstimateResult tail_after_gaps(long j_first, std::vector<std::optional<BigFloat>> values) {
  EstimateResult out;
  long last_gap = j_first - 1;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!values[i]) {
      out.gaps.push_back(j_first + static_cast<long>(i));
      last_gap = j_first + static_cast<long>(i);
    }
  }
  out.seq.n0 = last_gap + 1;
  for (std::size_t i = static_cast<std::size_t>(last_gap + 1 - j_first); i < values.size(); ++i) {
    out.seq.values.push_back(std::move(*values[i]));
  }
  return out;
}

}  // namespace

EstimateResult estimate_A(const CoefficientSequence& row, mpfr_prec_t prec) {
  std::vector<std::optional<BigFloat>> est;
  for (long j = row.j0; j + 2 <= row.last(); ++j) {
    const Rational& a0 = row.at(j);
    const Rational& a1 = row.at(j + 1);
    const Rational& a2 = row.at(j + 2);
    if (a0.is_zero() || a1.is_zero() || a2.is_zero()) {
      est.emplace_back(std::nullopt);
      continue;
    }
    const Rational ratio = a2 * a0 / (a1 * a1);
    if (ratio.sign() <= 0) {
      est.emplace_back(std::nullopt);
      continue;
    }
    const Rational grid = Rational(j * (j + 2)) / Rational((j + 1) * (j + 1));
    est.emplace_back(log(BigFloat::of(ratio, prec)) / log(BigFloat::of(grid, prec)));
  }
  return tail_after_gaps(row.j0, std::move(est));
}

EstimateResult estimate_K(const CoefficientSequence& row, const BigFloat& A, mpfr_prec_t prec) {
  std::vector<std::optional<BigFloat>> est;
  for (long j = row.j0; j + 1 <= row.last(); ++j) {
    const Rational& a0 = row.at(j);
    const Rational& a1 = row.at(j + 1);
    if (a0.is_zero() || a1.is_zero()) {
      est.emplace_back(std::nullopt);
      continue;
    }
    const BigFloat ratio = BigFloat::of(a1 / a0, prec);
    const BigFloat grid = pow(BigFloat::of(Rational(j, j + 1), prec), A);
    est.emplace_back(-(ratio * grid));
  }
  return tail_after_gaps(row.j0, std::move(est));
}

EstimateResult estimate_B(const CoefficientSequence& row, const BigFloat& K, const BigFloat& A,
                          mpfr_prec_t prec) {
  if (K.sign() <= 0) throw Error("estimate_B: K must be positive");
  std::vector<std::optional<BigFloat>> est;
  for (long j = row.j0; j <= row.last(); ++j) {
    const BigFloat num = abs(BigFloat::of(row.at(j), prec));
    const BigFloat den = pow_si(K, j) * pow(BigFloat::of(j, prec), A);
    est.emplace_back(num / den);
  }
  return tail_after_gaps(row.j0, std::move(est));
}

namespace {

/// Score with ambiguous phases counted as mismatches instead of throwing;
/// used by the searches, where a grid point may land on a cosine zero.
int tolerant_score(const CoefficientSequence& row, double a, double b) {
  int score = 0;
  for (long j = row.j0; j <= row.last(); ++j) {
    const double c = std::cos(a * static_cast<double>(j) + b);
    const int sc = (std::fabs(c) < kPhaseTol) ? 0 : (c > 0 ? 1 : -1);
    score += sc * row.at(j).sign();
  }
  return score;
}

SignFit fit_at(const CoefficientSequence& row, double a, double b) {
  SignFit fit;
  fit.a = a;
  fit.b = b;
  for (long j = row.j0; j <= row.last(); ++j) {
    const double c = std::cos(a * static_cast<double>(j) + b);
    const int sc = (std::fabs(c) < kPhaseTol) ? 0 : (c > 0 ? 1 : -1);
    const int sa = row.at(j).sign();
    if (sc == sa) {
      ++fit.score;
    } else {
      --fit.score;
      fit.mismatches.push_back(j);
    }
  }
  return fit;
}

}  // namespace

SignFit sign_score(const CoefficientSequence& row, double a, double b) {
  SignFit fit;
  fit.a = a;
  fit.b = b;
  for (long j = row.j0; j <= row.last(); ++j) {
    const int sa = row.at(j).sign();
    if (sa == 0) {
      throw ZeroCoefficient("sign_score: zero coefficient at order " + std::to_string(j));
    }
    const double c = std::cos(a * static_cast<double>(j) + b);
    if (std::fabs(c) < kPhaseTol) {
      throw AmbiguousPhase("sign_score: cos(a n + b) within tolerance of zero at n = " +
                           std::to_string(j));
    }
    if ((c > 0 ? 1 : -1) == sa) {
      ++fit.score;
    } else {
      --fit.score;
      fit.mismatches.push_back(j);
    }
  }
  return fit;
}

namespace {

struct Cell {
  int ia, ib, score;
};

/// Re-grids a 2-D window around (a, b) `depth` times, shrinking 10x per
/// level, and returns the best point found.
SignFit refine_peak(const CoefficientSequence& row, double a, double b, double wa, double wb,
                    int depth) {
  const int n = 40;
  for (int level = 0; level < depth; ++level) {
    double best_a = a, best_b = b;
    int best = tolerant_score(row, a, b);
    for (int ia = 0; ia <= n; ++ia) {
      for (int ib = 0; ib <= n; ++ib) {
        const double ca = a - wa + 2 * wa * ia / n;
        const double cb = b - wb + 2 * wb * ib / n;
        const int s = tolerant_score(row, ca, cb);
        if (s > best) {
          best = s;
          best_a = ca;
          best_b = cb;
        }
      }
    }
    a = best_a;
    b = best_b;
    wa /= 10;
    wb /= 10;
  }
  return fit_at(row, a, b);
}

}  // namespace

std::vector<SignFit> sign_grid_search(const CoefficientSequence& row, double a_lo, double a_hi,
                                      double b_lo, double b_hi, const GridSearchConfig& config) {
  if (!(a_hi > a_lo) || !(b_hi > b_lo)) throw Error("sign_grid_search: empty range");
  const int res = config.resolution;
  const double da = (a_hi - a_lo) / res;
  const double db = (b_hi - b_lo) / res;

  std::vector<std::vector<Cell>> partial;
  const unsigned jobs = config.jobs > 0 ? static_cast<unsigned>(config.jobs)
                                        : std::max(1u, std::thread::hardware_concurrency());
  partial.resize(jobs);
  std::vector<std::thread> workers;
  for (unsigned w = 0; w < jobs; ++w) {
    workers.emplace_back([&, w]() {
      int best = INT_MIN;
      for (int ia = static_cast<int>(w); ia < res; ia += static_cast<int>(jobs)) {
        const double a = a_lo + (ia + 0.5) * da;
        for (int ib = 0; ib < res; ++ib) {
          const double b = b_lo + (ib + 0.5) * db;
          const int s = tolerant_score(row, a, b);
          if (s > best) {
            best = s;
            partial[w].clear();
          }
          if (s == best) partial[w].push_back(Cell{ia, ib, s});
        }
      }
    });
  }
  for (auto& t : workers) t.join();

  int best = INT_MIN;
  for (const auto& cells : partial) {
    for (const Cell& c : cells) best = std::max(best, c.score);
  }
  std::vector<Cell> top;
  for (const auto& cells : partial) {
    for (const Cell& c : cells) {
      if (c.score == best) top.push_back(c);
    }
  }
  std::sort(top.begin(), top.end(), [](const Cell& x, const Cell& y) {
    return x.ia != y.ia ? x.ia < y.ia : x.ib < y.ib;
  });

  // Collapse adjacent top cells before refining; integer-score plateaus span
  // a few cells.
  std::vector<Cell> seeds;
  for (const Cell& c : top) {
    bool merged = false;
    for (const Cell& s : seeds) {
      if (std::abs(c.ia - s.ia) <= 2 && std::abs(c.ib - s.ib) <= 2) {
        merged = true;
        break;
      }
    }
    if (!merged) seeds.push_back(c);
  }

  std::vector<SignFit> peaks;
  for (const Cell& s : seeds) {
    const double a = a_lo + (s.ia + 0.5) * da;
    const double b = b_lo + (s.ib + 0.5) * db;
    SignFit fit = refine_peak(row, a, b, da, db, config.refine_depth);
    bool duplicate = false;
    for (const SignFit& p : peaks) {
      if (std::fabs(p.a - fit.a) < config.merge_tol && std::fabs(p.b - fit.b) < config.merge_tol) {
        duplicate = true;
        break;
      }
    }
    if (!duplicate) peaks.push_back(std::move(fit));
  }
  return peaks;
}

SignFit best_pure_cosine(const CoefficientSequence& row, double a_lo, double a_hi,
                         const GridSearchConfig& config) {
  const int res = config.resolution * 10;  // 1-D scan can afford a finer grid
  const double da = (a_hi - a_lo) / res;
  SignFit best;
  best.score = INT_MIN;
  for (const double b : {0.0, M_PI}) {
    for (int i = 0; i <= res; ++i) {
      const double a = a_lo + i * da;
      const int s = tolerant_score(row, a, b);
      if (s > best.score) {
        best = SignFit{a, b, s, {}};
      }
    }
  }
  // 1-D refinement around the winner, phase fixed.
  double a = best.a, w = da;
  for (int level = 0; level < config.refine_depth; ++level) {
    for (int i = 0; i <= 400; ++i) {
      const double ca = a - w + 2 * w * i / 400;
      const int s = tolerant_score(row, ca, best.b);
      if (s > best.score) {
        best.score = s;
        best.a = ca;
      }
    }
    a = best.a;
    w /= 10;
  }
  return fit_at(row, best.a, best.b);
}

NormalizedRow normalize_row(const CoefficientSequence& row, double a, double b,
                            mpfr_prec_t prec) {
  NormalizedRow out;
  std::vector<BigFloat> ratios;
  for (long j = row.j0; j <= row.last(); ++j) {
    const double c = std::cos(a * static_cast<double>(j) + b);
    if (std::fabs(c) < kPhaseTol) {
      throw AmbiguousPhase("normalize_row: cos(a j + b) within tolerance of zero at j = " +
                           std::to_string(j));
    }
    const BigFloat ap = BigFloat::of(row.at(j), prec) / BigFloat::of(c, prec);
    out.bnorm.push_back(ap / BigFloat::of(factorial(static_cast<unsigned long>(j)), prec));
    out.aprime.push_back(ap);
  }
  for (std::size_t i = 0; i + 1 < out.bnorm.size(); ++i) {
    if (out.bnorm[i].is_zero()) continue;
    ratios.push_back(out.bnorm[i + 1] / out.bnorm[i]);
  }
  int first_dir = 0;
  for (std::size_t i = 0; i + 1 < ratios.size(); ++i) {
    const int dir = (ratios[i + 1] - ratios[i]).sign();
    if (dir == 0) continue;
    if (first_dir == 0) {
      first_dir = dir;
    } else if (dir != first_dir) {
      out.oscillation_onset = row.j0 + static_cast<long>(i) + 1;
      break;
    }
  }
  return out;
}

BigFloat zeta(const BigFloat& s) {
  if (!(s > BigFloat::of(1L, s.precision()))) throw Error("zeta: requires s > 1");
  const mpfr_prec_t prec = s.precision();
  const long M = 10000;
  BigFloat sum(prec);
  for (long n = 1; n <= M; ++n) {
    sum += pow(BigFloat::of(n, prec), -s);
  }
  const BigFloat Mf = BigFloat::of(M, prec);
  const BigFloat one = BigFloat::of(1L, prec);
  // Euler-Maclaurin tail: M^(1-s)/(s-1) - M^(-s)/2 + correction terms.
  sum += pow(Mf, one - s) / (s - one);
  sum -= pow(Mf, -s) / BigFloat::of(2L, prec);
  static const Rational kBernoulli[] = {Rational(1, 6),    Rational(-1, 30), Rational(1, 42),
                                        Rational(-1, 30),  Rational(5, 66),  Rational(-691, 2730)};
  BigFloat rising = one;  // s (s+1) ... (s + 2i - 2)
  for (int i = 1; i <= 6; ++i) {
    if (i == 1) {
      rising = s;
    } else {
      rising = rising * (s + BigFloat::of(2L * i - 3, prec)) * (s + BigFloat::of(2L * i - 2, prec));
    }
    const Rational w = kBernoulli[i - 1] / factorial(static_cast<unsigned long>(2 * i));
    sum += BigFloat::of(w, prec) * rising * pow(Mf, one - s - BigFloat::of(2L * i, prec));
  }
  return sum;
}

BigFloat zeta_consistency_K(const BigFloat& B1, const BigFloat& B2) {
  if (B1.sign() <= 0) throw NonPositiveB1("zeta_consistency_K: B1 must be positive");
  const mpfr_prec_t prec = B1.precision();
  const BigFloat z = zeta(BigFloat::of(Rational(3, 2), prec));
  const BigFloat one = BigFloat::of(1L, prec);
  const BigFloat num = one + B2 / (BigFloat::of(2L, prec) * B1);
  const BigFloat den = one + BigFloat::of(3L, prec) * z * B1 +
                       BigFloat::of(Rational(3, 2), prec) * z * z * B1 * B1;
  return num / den;
}

BigFloat convolution_sum(const BigFloat& A, ConvolutionVariant variant, long j) {
  if (j < 4) throw Error("convolution_sum: j must be >= 4");
  const mpfr_prec_t prec = A.precision();
  const BigFloat jf = BigFloat::of(j, prec);
  const bool zeta_regime = A < BigFloat::of(-1L, prec);
  if (variant == ConvolutionVariant::Single) {
    BigFloat sum(prec);
    for (long k = 1; k <= j - 1; ++k) {
      sum += pow(BigFloat::of(k, prec), A) * pow(BigFloat::of(j - k, prec), A);
    }
    return zeta_regime ? sum / pow(jf, A)
                       : sum / pow(jf, BigFloat::of(2L, prec) * A + BigFloat::of(1L, prec));
  }
  std::vector<BigFloat> powers;
  powers.reserve(static_cast<std::size_t>(j));
  powers.emplace_back(prec);  // unused k = 0 slot
  for (long k = 1; k <= j - 1; ++k) powers.push_back(pow(BigFloat::of(k, prec), A));
  BigFloat sum(prec);
  for (long k = 1; k <= j - 2; ++k) {
    for (long l = 1; l <= j - 1 - k; ++l) {
      sum += powers[static_cast<std::size_t>(k)] * powers[static_cast<std::size_t>(l)] *
             powers[static_cast<std::size_t>(j - k - l)];
    }
  }
  return zeta_regime ? sum / pow(jf, A)
                     : sum / pow(jf, BigFloat::of(3L, prec) * A + BigFloat::of(2L, prec));
}

BigFloat convolution_limit(const BigFloat& A, ConvolutionVariant variant) {
  const mpfr_prec_t prec = A.precision();
  const BigFloat one = BigFloat::of(1L, prec);
  if (A < -one) {
    const BigFloat z = zeta(-A);
    return variant == ConvolutionVariant::Single ? BigFloat::of(2L, prec) * z
                                                 : BigFloat::of(3L, prec) * z * z;
  }
  const BigFloat g = gamma(A + one);
  if (variant == ConvolutionVariant::Single) {
    return g * g / gamma(BigFloat::of(2L, prec) * A + BigFloat::of(2L, prec));
  }
  return g * g * g / gamma(BigFloat::of(3L, prec) * A + BigFloat::of(3L, prec));
}

}  // namespace latsum
