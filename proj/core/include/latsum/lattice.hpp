#pragma once

#include <string>
#include <vector>

#include "latsum/rational.hpp"

namespace latsum {

enum class ModelId { Instanton, Blasius };

std::string model_name(ModelId m);
ModelId model_from_name(const std::string& s);

/// One order j of the weak-coupling expansion: exact values on the finite
/// support [support_lo, support_hi], `tail` for every site beyond, zero for
/// sites in [0, support_lo).  Negative sites go through the table's
/// reflection rule.
struct CoefficientRow {
  int j = 0;
  long support_lo = 1;
  long support_hi = 0;
  std::vector<Rational> values;  // sites support_lo..support_hi
  Rational tail;
};

struct TableMetadata {
  std::string generator;
  std::string manifest;  // name of the run manifest that produced the file
};

/// Exact weak-coupling coefficient table a_{n,j} for one model.
struct CoefficientTable {
  ModelId model = ModelId::Instanton;
  int max_order = 0;
  std::vector<CoefficientRow> rows;  // indexed by j, size max_order+1
  TableMetadata metadata;

  /// a_{n,j}; handles the zeroth-order row (Blasius: a_{n,0} = n), constant
  /// tails, and negative sites via the reflection a_{-n-1,j} = a_{n,j}.
  Rational at(long n, int j) const;

  /// Row n as a dense coefficient list a_{n,j}, j = 0..max_order.
  std::vector<Rational> site_row(long n) const;
};

/// Exact instanton table through order N, from the order-by-order match of
/// the difference equation
///   delta (f_{n+1} - 2 f_n + f_{n-1}) + f_n - f_n^3 = 0,
/// f_0 = 0, f_inf = 1.  Per-site cached square series keep the cubic term at
/// one convolution per site and order.
CoefficientTable generate_instanton(int N);

/// Exact Blasius table through order N, from
///   2 delta (f_{n+1} - 3 f_n + 3 f_{n-1} - f_{n-2}) + f_n (f_{n+1} - 2 f_n + f_{n-1}) = 0,
/// f_0 = f_{-1} = 0, f_n ~ n.  Each order solves the second-difference
/// equation by backward accumulation of first differences (d_n -> 0) and
/// forward accumulation from a_{0,j} = 0; the row support is discovered by
/// scanning until the source term vanishes.
CoefficientTable generate_blasius(int N);

}  // namespace latsum
