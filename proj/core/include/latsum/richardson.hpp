#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "latsum/bigfloat.hpp"

namespace latsum {

/// A sequence A_n indexed from n0.
struct SequenceData {
  long n0 = 1;
  std::vector<BigFloat> values;

  std::size_t size() const { return values.size(); }
  const BigFloat& back() const { return values.back(); }
};

/// Order-k Richardson transform annihilating 1/n, ..., 1/n^k tails:
///   R_n^(k) = sum_{j=0..k} (-1)^(j+k) A_{n+j} (n+j)^k / (j! (k-j)!).
/// Weights are exact rationals; accumulation happens at the working
/// precision.  Throws InsufficientData when the sequence is shorter than k+1.
SequenceData richardson(const SequenceData& seq, int k);

struct RichardsonRow {
  int k = 0;
  BigFloat value;        // last transformed entry
  std::string flag;      // "increasing" | "decreasing" | "oscillating"
};

/// One row per k = 1..k_max; the flag is judged over the final 10
/// transformed entries.
std::vector<RichardsonRow> richardson_report(const SequenceData& seq, int k_max);

/// CSV with columns k, value, flag.
void write_report_csv(const std::vector<RichardsonRow>& report, std::ostream& out,
                      const std::string& manifest = "");

}  // namespace latsum
