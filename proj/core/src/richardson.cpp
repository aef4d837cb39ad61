#include "latsum/richardson.hpp"

#include <ostream>

#include "latsum/errors.hpp"
#include "latsum/rational.hpp"

namespace latsum {

SequenceData richardson(const SequenceData& seq, int k) {
  if (k < 1) throw Error("richardson: k must be >= 1");
  if (seq.size() < static_cast<std::size_t>(k) + 1) {
    throw InsufficientData("richardson: need at least k+1 entries");
  }
  SequenceData out;
  out.n0 = seq.n0;
  out.values.reserve(seq.size() - static_cast<std::size_t>(k));
  for (std::size_t i = 0; i + static_cast<std::size_t>(k) < seq.size(); ++i) {
    const long n = seq.n0 + static_cast<long>(i);
    BigFloat acc(seq.values[i].precision());
    for (int j = 0; j <= k; ++j) {
      Rational w = Rational(n + j).pow_int(k) / (factorial(static_cast<unsigned long>(j)) *
                                                 factorial(static_cast<unsigned long>(k - j)));
      if ((j + k) % 2 != 0) w = -w;
      acc += BigFloat::of(w, acc.precision()) * seq.values[i + static_cast<std::size_t>(j)];
    }
    out.values.push_back(std::move(acc));
  }
  return out;
}

namespace {

std::string monotonicity_flag(const std::vector<BigFloat>& v) {
  const std::size_t window = 10;
  const std::size_t begin = v.size() > window ? v.size() - window : 0;
  bool increasing = true, decreasing = true;
  for (std::size_t i = begin + 1; i < v.size(); ++i) {
    const int s = (v[i] - v[i - 1]).sign();
    if (s > 0) decreasing = false;
    if (s < 0) increasing = false;
  }
  if (increasing && !decreasing) return "increasing";
  if (decreasing && !increasing) return "decreasing";
  if (increasing && decreasing) return "increasing";  // constant window
  return "oscillating";
}

}  // namespace

std::vector<RichardsonRow> richardson_report(const SequenceData& seq, int k_max) {
  if (seq.size() < static_cast<std::size_t>(k_max) + 2) {
    throw InsufficientData("richardson_report: sequence too short for k_max");
  }
  std::vector<RichardsonRow> rows;
  rows.reserve(static_cast<std::size_t>(k_max));
  for (int k = 1; k <= k_max; ++k) {
    const SequenceData r = richardson(seq, k);
    rows.push_back(RichardsonRow{k, r.back(), monotonicity_flag(r.values)});
  }
  return rows;
}

void write_report_csv(const std::vector<RichardsonRow>& report, std::ostream& out,
                      const std::string& manifest) {
  if (!manifest.empty()) out << "# manifest: " << manifest << "\n";
  out << "k,value,flag\n";
  for (const RichardsonRow& row : report) {
    out << row.k << "," << row.value.str(25) << "," << row.flag << "\n";
  }
}

}  // namespace latsum
