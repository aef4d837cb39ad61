#include "latsum/vpt.hpp"

#include <algorithm>
#include <ostream>

#include "latsum/errors.hpp"
#include "latsum/power_series.hpp"

namespace latsum {

std::string strategy_name(VptStrategy s) {
  return s == VptStrategy::Extremum ? "extremum" : "rightmost-inflection";
}

namespace {

void check_problem(const VptProblem& problem, int N) {
  if (N < 0 || problem.f.size() <= static_cast<std::size_t>(N)) {
    throw Error("vpt: N exceeds available coefficients");
  }
  if (problem.q < 1) throw Error("vpt: q must be positive");
}

/// Exact coefficient of the n-th term of b0^(N), including the d-fold
/// derivative factor prod_{i<d} (p - nq - i).
Rational term_coefficient(const VptProblem& problem, int N, int n, int d) {
  const long expo = problem.p - n * problem.q;
  Rational r = gen_binomial(Rational(expo - 2, 2), static_cast<unsigned long>(N - n)) *
               problem.f[static_cast<std::size_t>(n)];
  if ((N - n) % 2 != 0) r = -r;
  for (int i = 0; i < d; ++i) r *= Rational(expo - i);
  return r;
}

BigFloat eval_terms(const VptProblem& problem, int N, const BigFloat& k0, int d) {
  if (k0.sign() <= 0) throw NonPositiveK0("vpt: k0 must be positive");
  BigFloat acc(k0.precision());
  for (int n = 0; n <= N; ++n) {
    const Rational r = term_coefficient(problem, N, n, d);
    if (r.is_zero()) continue;
    acc += BigFloat::of(r, k0.precision()) * pow_si(k0, problem.p - n * problem.q - d);
  }
  return acc;
}

BigFloat eval_poly(const std::vector<BigFloat>& c, const BigFloat& u) {
  BigFloat acc(u.precision());
  for (std::size_t m = c.size(); m-- > 0;) {
    acc = acc * u + c[m];
  }
  return acc;
}

/// All positive real roots by geometric sign-change scan over the Cauchy
/// bracket plus bisection at working precision.
std::vector<BigFloat> positive_roots(const std::vector<Rational>& poly, mpfr_prec_t prec) {
  // Strip zero leading/trailing coefficients; a factor u^t has no positive root.
  std::size_t deg = poly.size();
  while (deg > 0 && poly[deg - 1].is_zero()) --deg;
  if (deg == 0) return {};
  std::size_t low = 0;
  while (low < deg && poly[low].is_zero()) ++low;
  if (low == deg - 1) return {};  // monomial

  std::vector<BigFloat> c;
  c.reserve(deg - low);
  for (std::size_t m = low; m < deg; ++m) c.push_back(BigFloat::of(poly[m], prec));

  // Cauchy bounds for the magnitudes of all roots.
  BigFloat hi_ratio(prec), lo_ratio(prec);
  for (std::size_t m = 0; m + 1 < c.size(); ++m) {
    const BigFloat h = abs(c[m]) / abs(c.back());
    if (h > hi_ratio) hi_ratio = h;
    const BigFloat l = abs(c[m + 1]) / abs(c[0]);
    if (l > lo_ratio) lo_ratio = l;
  }
  const BigFloat one = BigFloat::of(1L, prec);
  const BigFloat u_max = one + hi_ratio;
  const BigFloat u_min = one / (one + lo_ratio);

  const int points = std::max<int>(4000, 40 * static_cast<int>(c.size()));
  const BigFloat step = exp((log(u_max) - log(u_min)) / BigFloat::of(static_cast<long>(points), prec));

  std::vector<BigFloat> roots;
  BigFloat u = u_min;
  BigFloat f_prev = eval_poly(c, u);
  for (int i = 1; i <= points; ++i) {
    BigFloat u_next = u * step;
    if (i == points) u_next = u_max;  // land exactly on the bound
    BigFloat f_next = eval_poly(c, u_next);
    if (f_prev.is_zero()) {
      roots.push_back(u);
    } else if (!f_next.is_zero() && f_prev.sign() != f_next.sign()) {
      BigFloat a = u, b = u_next, fa = f_prev;
      const BigFloat half = BigFloat::of(0.5, prec);
      for (int it = 0; it < static_cast<int>(prec) + 16; ++it) {
        const BigFloat mid = (a + b) * half;
        if (mid <= a || mid >= b) break;  // interval exhausted at this precision
        const BigFloat fm = eval_poly(c, mid);
        if (fm.is_zero()) {
          a = b = mid;
          break;
        }
        if (fm.sign() == fa.sign()) {
          a = mid;
          fa = fm;
        } else {
          b = mid;
        }
      }
      roots.push_back((a + b) * half);
    }
    u = std::move(u_next);
    f_prev = std::move(f_next);
  }
  return roots;
}

}  // namespace

BigFloat vpt_b0(const VptProblem& problem, int N, const BigFloat& k0) {
  check_problem(problem, N);
  return eval_terms(problem, N, k0, 0);
}

BigFloat vpt_b0_deriv(const VptProblem& problem, int N, const BigFloat& k0, int d) {
  check_problem(problem, N);
  if (d < 1) throw Error("vpt_b0_deriv: d must be >= 1");
  return eval_terms(problem, N, k0, d);
}

BigFloat first_order_k0(const VptProblem& problem, mpfr_prec_t prec) {
  if (problem.f.size() < 2) throw Error("first_order_k0: need f0 and f1");
  if (problem.p == 0 || problem.p == 2 || problem.f[0].is_zero()) {
    throw SingularFormula("first_order_k0: formula singular for p in {0,2} or f0 = 0");
  }
  const Rational radicand = Rational(2) * problem.f[1] / problem.f[0] *
                            Rational(problem.p - problem.q) /
                            Rational(problem.p * (problem.p - 2));
  if (radicand.sign() <= 0) {
    throw NegativeRadicand("first_order_k0: radicand not positive");
  }
  return rootn(BigFloat::of(radicand, prec), static_cast<unsigned long>(problem.q));
}

std::vector<Rational> vpt_derivative_polynomial(const VptProblem& problem, int N, int d) {
  check_problem(problem, N);
  std::vector<Rational> poly(static_cast<std::size_t>(N) + 1, Rational(0));
  for (int n = 0; n <= N; ++n) {
    poly[static_cast<std::size_t>(N - n)] = term_coefficient(problem, N, n, d);
  }
  return poly;
}

VptResult optimal_k0(const VptProblem& problem, int N, VptStrategy strategy, mpfr_prec_t prec) {
  check_problem(problem, N);
  if (N < 1) throw Error("optimal_k0: N must be >= 1");
  // The flat least-sensitivity point sits on the derivative whose order
  // matches the scaling exponent q; for q = 2 this is the classic inflection.
  const int d = (strategy == VptStrategy::Extremum) ? 1 : static_cast<int>(problem.q);
  const std::vector<Rational> poly = vpt_derivative_polynomial(problem, N, d);
  const std::vector<BigFloat> roots_u = positive_roots(poly, prec);
  if (roots_u.empty()) {
    throw NoRoot("optimal_k0: no positive root of the selected derivative at N = " +
                 std::to_string(N));
  }
  VptResult res;
  res.N = N;
  res.strategy = strategy;
  for (const BigFloat& u : roots_u) {
    res.candidates.push_back(rootn(u, static_cast<unsigned long>(problem.q)));
  }
  res.k0 = res.candidates.back();  // roots arrive in increasing order
  res.b0 = vpt_b0(problem, N, res.k0);
  return res;
}

VptSequence vpt_sequence(const VptProblem& problem, int N_max, VptStrategy strategy,
                         mpfr_prec_t prec) {
  if (problem.f.size() <= static_cast<std::size_t>(N_max)) {
    throw Error("vpt_sequence: N_max exceeds available coefficients");
  }
  VptSequence seq;
  for (int N = 1; N <= N_max; ++N) {
    try {
      seq.results.push_back(optimal_k0(problem, N, strategy, prec));
    } catch (const Error& e) {
      seq.gaps.emplace_back(N, e.what());
    }
  }
  return seq;
}

void write_vpt_csv(const VptSequence& seq, std::ostream& out, const std::string& manifest) {
  if (!manifest.empty()) out << "# manifest: " << manifest << "\n";
  out << "N,k0,b0,strategy\n";
  for (const VptResult& r : seq.results) {
    out << r.N << "," << r.k0.str(25) << "," << r.b0.str(25) << ","
        << strategy_name(r.strategy) << "\n";
  }
}

}  // namespace latsum
