#include "latsum/pade.hpp"

#include <ostream>

#include "latsum/errors.hpp"

namespace latsum {

ApproximantRecord strong_coupling_approximant(const FrobeniusSeries& series, int N,
                                              mpfr_prec_t prec) {
  if (N < 1 || N > series.coefficients.order()) {
    throw Error("strong_coupling_approximant: N out of range");
  }
  // S^(N/M) = delta^N / u^(-N/M); only the order-N denominator coefficient
  // survives the limit.
  const Rational alpha = -(Rational(N) / series.M);
  const PowerSeries denom = series_pow(series.coefficients, alpha, N);
  const Rational c_N = denom[N];
  if (c_N.is_zero()) {
    throw DegenerateCoefficient("approximant undefined: c_N^(N) = 0 at N = " + std::to_string(N));
  }
  ApproximantRecord rec;
  rec.N = N;
  rec.c_N = c_N;
  rec.S = principal_power(c_N, -(series.M / Rational(N)), prec);
  rec.is_real = rec.S.is_real();
  return rec;
}

SweepResult approximant_sweep(const FrobeniusSeries& series, int N_max,
                              std::optional<BigFloat> reference, mpfr_prec_t prec) {
  if (N_max > series.coefficients.order()) {
    throw Error("approximant_sweep: N_max exceeds series order");
  }
  SweepResult out;
  std::optional<int> window_start;
  int prev_sign_vs_ref = 0;  // sign of S_N - reference at the last real order
  for (int N = 1; N <= N_max; ++N) {
    ApproximantRecord rec;
    try {
      rec = strong_coupling_approximant(series, N, prec);
    } catch (const DegenerateCoefficient&) {
      out.annotations.degenerate_orders.push_back(N);
      continue;
    }
    if (rec.is_real) {
      if (window_start) {
        out.annotations.complex_windows.emplace_back(*window_start, N);
        window_start.reset();
      }
      // The quoted minimum lives in the initial all-real stretch; later
      // windows are followed by wild oscillations that dip lower.
      const bool before_first_window = out.annotations.complex_windows.empty();
      if (before_first_window &&
          (!out.annotations.min_value || rec.S.re < *out.annotations.min_value)) {
        out.annotations.min_value = rec.S.re;
        out.annotations.argmin_real = N;
      }
      if (reference) {
        const int s = (rec.S.re - *reference).sign();
        if (s != 0 && prev_sign_vs_ref != 0 && s != prev_sign_vs_ref) {
          out.annotations.crossings.push_back(N);
        }
        if (s != 0) prev_sign_vs_ref = s;
      }
    } else if (!window_start) {
      window_start = N;
    }
    out.records.push_back(std::move(rec));
  }
  if (window_start) {
    out.annotations.complex_windows.emplace_back(*window_start, N_max + 1);
  }
  return out;
}

void write_sweep_csv(const SweepResult& sweep, std::ostream& out, const std::string& manifest) {
  if (!manifest.empty()) out << "# manifest: " << manifest << "\n";
  out << "N,c_N,re_S,im_S,is_real\n";
  for (const ApproximantRecord& rec : sweep.records) {
    out << rec.N << "," << rec.c_N.str() << "," << rec.S.re.str(25) << ","
        << rec.S.im.str(25) << "," << (rec.is_real ? 1 : 0) << "\n";
  }
}

}  // namespace latsum
