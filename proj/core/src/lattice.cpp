#include "latsum/lattice.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "latsum/errors.hpp"

namespace latsum {

std::string model_name(ModelId m) {
  return m == ModelId::Instanton ? "instanton" : "blasius";
}

ModelId model_from_name(const std::string& s) {
  if (s == "instanton") return ModelId::Instanton;
  if (s == "blasius") return ModelId::Blasius;
  throw FormatError("unknown model '" + s + "'");
}

Rational CoefficientTable::at(long n, int j) const {
  if (j < 0 || j > max_order) throw Error("CoefficientTable::at: order out of range");
  if (n < 0) {
    if (model == ModelId::Instanton) return Rational(0);  // half-line problem
    n = -n - 1;  // a_{-n-1,j} = a_{n,j}
  }
  if (model == ModelId::Blasius && j == 0) return Rational(n);
  const CoefficientRow& row = rows[static_cast<std::size_t>(j)];
  if (n < row.support_lo) return Rational(0);
  if (n > row.support_hi) return row.tail;
  return row.values[static_cast<std::size_t>(n - row.support_lo)];
}

std::vector<Rational> CoefficientTable::site_row(long n) const {
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(max_order) + 1);
  for (int j = 0; j <= max_order; ++j) out.push_back(at(n, j));
  return out;
}

namespace {

CoefficientRow make_row(int j, long lo, std::vector<Rational> values, Rational tail) {
  // Trim zero-valued edges so the stored support is tight.
  std::size_t begin = 0;
  while (begin < values.size() && values[begin].is_zero()) ++begin;
  std::size_t end = values.size();
  while (end > begin && values[end - 1] == tail) --end;
  CoefficientRow row;
  row.j = j;
  if (begin == end && tail.is_zero()) {
    row.support_lo = 1;
    row.support_hi = 0;  // empty support, identically tail
  } else {
    row.support_lo = lo + static_cast<long>(begin);
    row.support_hi = lo + static_cast<long>(end) - 1;
    row.values.assign(values.begin() + static_cast<long>(begin),
                      values.begin() + static_cast<long>(end));
  }
  row.tail = std::move(tail);
  return row;
}

}  // namespace

CoefficientTable generate_instanton(int N) {
  if (N < 1) throw Error("generate_instanton: N must be >= 1");
  // a[j][n-1] = a_{n,j} for 1 <= n <= j (support triangle); a_{n,j} = 0 for
  // n > j, a_{0,j} = 0, and a_{n,0} = 1 for n >= 1.
  std::vector<std::vector<Rational>> a(static_cast<std::size_t>(N) + 1);
  // sq[n-1][k] = coefficient k of (f_n - 1)^2, filled incrementally.
  std::vector<std::vector<Rational>> sq(static_cast<std::size_t>(N),
                                        std::vector<Rational>(static_cast<std::size_t>(N) + 1, Rational(0)));

  auto coeff = [&](long n, int j) -> const Rational& {
    static const Rational kZero(0), kOne(1);
    if (n <= 0) return kZero;
    if (j == 0) return kOne;
    if (n > j) return kZero;
    return a[static_cast<std::size_t>(j)][static_cast<std::size_t>(n - 1)];
  };

  const Rational half(1, 2), three_half(3, 2);
  for (int j = 1; j <= N; ++j) {
    auto& row = a[static_cast<std::size_t>(j)];
    row.resize(static_cast<std::size_t>(j));
    for (long n = 1; n <= j; ++n) {
      const Rational second_diff =
          coeff(n + 1, j - 1) - Rational(2) * coeff(n, j - 1) + coeff(n - 1, j - 1);
      Rational sq_j(0);  // sum_{k=1}^{j-1} a_{n,k} a_{n,j-k}
      for (int k = 1; k <= j - 1; ++k) {
        const Rational& x = coeff(n, k);
        const Rational& y = coeff(n, j - k);
        if (x.is_zero() || y.is_zero()) continue;
        sq_j += x * y;
      }
      Rational cube_j(0);  // sum_{k=2}^{j-1} (g^2)_k a_{n,j-k}
      auto& sqn = sq[static_cast<std::size_t>(n - 1)];
      for (int k = 2; k <= j - 1; ++k) {
        const Rational& y = coeff(n, j - k);
        if (sqn[static_cast<std::size_t>(k)].is_zero() || y.is_zero()) continue;
        cube_j += sqn[static_cast<std::size_t>(k)] * y;
      }
      row[static_cast<std::size_t>(n - 1)] =
          half * second_diff - three_half * sq_j - half * cube_j;
      sqn[static_cast<std::size_t>(j)] = std::move(sq_j);
    }
  }

  CoefficientTable table;
  table.model = ModelId::Instanton;
  table.max_order = N;
  table.rows.reserve(static_cast<std::size_t>(N) + 1);
  table.rows.push_back(make_row(0, 1, {Rational(1)}, Rational(1)));
  for (int j = 1; j <= N; ++j) {
    table.rows.push_back(make_row(j, 1, std::move(a[static_cast<std::size_t>(j)]), Rational(0)));
  }
  return table;
}

CoefficientTable generate_blasius(int N) {
  if (N < 1) throw Error("generate_blasius: N must be >= 1");
  CoefficientTable table;
  table.model = ModelId::Blasius;
  table.max_order = 0;
  // Row 0 is the linear zeroth-order solution a_{n,0} = n, reproduced by
  // CoefficientTable::at; the stored row is a placeholder.
  CoefficientRow row0;
  row0.j = 0;
  row0.support_lo = 1;
  row0.support_hi = 0;
  row0.tail = Rational(0);
  table.rows.push_back(row0);

  for (int j = 1; j <= N; ++j) {
    // Scan bound: beyond it every source term R_{n,j} vanishes because all
    // referenced rows sit in their constant tails.
    long n_max = (j == 1) ? 1 : table.rows[static_cast<std::size_t>(j - 1)].support_hi + 2;
    for (int k = 1; k <= j - 1; ++k) {
      n_max = std::max(n_max, table.rows[static_cast<std::size_t>(j - k)].support_hi + 1);
    }

    std::vector<Rational> source(static_cast<std::size_t>(n_max) + 1, Rational(0));
    for (long n = 1; n <= n_max; ++n) {
      Rational r = Rational(-2) * (table.at(n + 1, j - 1) - Rational(3) * table.at(n, j - 1) +
                                   Rational(3) * table.at(n - 1, j - 1) - table.at(n - 2, j - 1));
      for (int k = 1; k <= j - 1; ++k) {
        const Rational second_diff =
            table.at(n + 1, j - k) - Rational(2) * table.at(n, j - k) + table.at(n - 1, j - k);
        if (second_diff.is_zero()) continue;
        const Rational x = table.at(n, k);
        if (x.is_zero()) continue;
        r -= x * second_diff;
      }
      source[static_cast<std::size_t>(n)] = r / Rational(n);
    }

    // d_n = a_{n+1,j} - a_{n,j} = -sum_{m>n} R_m, enforcing d_n -> 0.
    std::vector<Rational> diff(static_cast<std::size_t>(n_max) + 1, Rational(0));
    for (long n = n_max - 1; n >= 0; --n) {
      diff[static_cast<std::size_t>(n)] =
          diff[static_cast<std::size_t>(n + 1)] - source[static_cast<std::size_t>(n + 1)];
    }
    std::vector<Rational> values(static_cast<std::size_t>(n_max), Rational(0));
    Rational acc(0);  // a_{0,j} = 0
    for (long n = 1; n <= n_max; ++n) {
      acc += diff[static_cast<std::size_t>(n - 1)];
      values[static_cast<std::size_t>(n - 1)] = acc;
    }
    Rational tail = values.empty() ? Rational(0) : values.back();
    table.rows.push_back(make_row(j, 1, std::move(values), std::move(tail)));
    table.max_order = j;
  }
  return table;
}

}  // namespace latsum
