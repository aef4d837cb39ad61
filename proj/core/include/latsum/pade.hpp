#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "latsum/bigfloat.hpp"
#include "latsum/power_series.hpp"

namespace latsum {

/// S(delta) = delta^M sum a_n delta^n with a_0 = 1.
struct FrobeniusSeries {
  PowerSeries coefficients;
  Rational M;
};

/// Order-N strong-coupling approximant: the surviving denominator
/// coefficient c_N^(N) (exact) and S_N = (c_N^(N))^(-M/N).
struct ApproximantRecord {
  int N = 0;
  Rational c_N;
  ComplexBigFloat S;
  bool is_real = true;
};

/// c_N^(N) is the order-N coefficient of coefficients^(-N/M); throws
/// DegenerateCoefficient when it vanishes.
ApproximantRecord strong_coupling_approximant(const FrobeniusSeries& series, int N,
                                              mpfr_prec_t prec = BigFloat::default_precision());

struct SweepAnnotations {
  // Order of the smallest S_N among the real records preceding the first
  // complex window (the sequence oscillates wildly afterwards).
  std::optional<int> argmin_real;
  std::optional<BigFloat> min_value;
  std::vector<int> crossings;              // orders where S_N - reference changes sign
  // Maximal complex windows: start = first complex order, end = first real
  // order after it (N_max + 1 when the window never closes).
  std::vector<std::pair<int, int>> complex_windows;
  std::vector<int> degenerate_orders;      // gaps: c_N^(N) == 0
};

struct SweepResult {
  std::vector<ApproximantRecord> records;  // N = 1..N_max, gaps excluded
  SweepAnnotations annotations;
};

/// Records for N = 1..N_max.  Complex windows come from the exact sign of
/// c_N^(N); crossings are evaluated against `reference` over consecutive
/// real records.
SweepResult approximant_sweep(const FrobeniusSeries& series, int N_max,
                              std::optional<BigFloat> reference = std::nullopt,
                              mpfr_prec_t prec = BigFloat::default_precision());

/// CSV with columns N, c_N, re_S, im_S, is_real.
void write_sweep_csv(const SweepResult& sweep, std::ostream& out,
                     const std::string& manifest = "");

}  // namespace latsum
