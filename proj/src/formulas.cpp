#include "mapenum/formulas.hpp"

#include <string>

namespace mapenum {

namespace {

Rational ratio(const BigInt& num, const BigInt& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Delta_k for the (i, j) term of the triple sum.
BigInt delta(long k, long q1, long q2, long s, long i, long j) {
  return binomial(k - 1, q1 - i) * binomial(k - 1, q2 - j) - binomial(k - 1, q1 + s - i) * binomial(k - 1, q2 + s - j);
}

}  // namespace

BinomialPoly hz_series(int q) {
  require(q >= 1, "hz_series: q must be a positive integer");
  const BigInt leading = double_factorial(2L * q - 1);
  BinomialPoly out;
  for (long k = 1; k <= q + 1; ++k) out.add_term(k, leading * pow2(static_cast<unsigned long>(k - 1)) * binomial(q, k - 1));
  return out;
}

BinomialPoly gs_series(int q1, int q2, int s) {
  require(q1 >= 0 && q2 >= 0, "gs_series: q1 and q2 must be non-negative");
  require(s >= 1, "gs_series: s must be positive");
  const long p1 = 2L * q1 + s;
  const long p2 = 2L * q2 + s;
  const long d = static_cast<long>(q1) + q2 + s;
  const BigInt prefactor = factorial(p1) * factorial(p2);
  BinomialPoly out;
  for (long k = 1; k <= d + 1; ++k) {
    Rational inner(0);
    for (long i = 0; i <= p1 / 2; ++i) {
      for (long j = 0; j <= p2 / 2; ++j) {
        const Rational weight = reciprocal_factorial(d - i - j);
        if (weight == 0) continue;
        const BigInt dk = delta(k, q1, q2, s, i, j);
        if (dk == 0) continue;
        inner += weight * ratio(binomial(d - i - j, k - 1) * dk,
                                pow2(static_cast<unsigned long>(i + j)) * factorial(i) * factorial(j));
      }
    }
    out.add_term(k, to_integer(prefactor * inner, "gs_series coefficient of C(x," + std::to_string(k) + ")"));
  }
  return out;
}

BinomialPoly gs_series_simplified(int q1, int q2, int s) {
  require(q1 >= 0 && q2 >= 0, "gs_series_simplified: q1 and q2 must be non-negative");
  require(s >= 1, "gs_series_simplified: s must be positive");
  const long p1 = 2L * q1 + s;
  const long p2 = 2L * q2 + s;
  const long d = static_cast<long>(q1) + q2 + s;
  const BigInt prefactor = factorial(p1) * factorial(p2);
  std::map<long, Rational> by_k;
  for (long t1 = 0; t1 <= q1 + s; ++t1) {
    for (long t2 = 0; t2 <= q2 + s; ++t2) {
      const Rational weight = reciprocal_factorial(d - t1 - t2);
      if (weight == 0) continue;
      const Rational bracket =
          reciprocal_factorial(q1) * reciprocal_factorial(q2) * reciprocal_factorial(s + q1 - t1) *
              reciprocal_factorial(s + q2 - t2) -
          reciprocal_factorial(q1 + s) * reciprocal_factorial(q2 + s) * reciprocal_factorial(q1 - t1) *
              reciprocal_factorial(q2 - t2);
      if (bracket == 0) continue;
      const Rational term = weight * bracket *
                            ratio(factorial(d - t1) * factorial(d - t2) * prefactor,
                                  pow2(static_cast<unsigned long>(t1 + t2)) * factorial(t1) * factorial(t2));
      by_k[d - t1 - t2 + 1] += term;
    }
  }
  BinomialPoly out;
  for (const auto& [k, c] : by_k) {
    out.add_term(k, to_integer(c, "gs_series_simplified coefficient of C(x," + std::to_string(k) + ")"));
  }
  return out;
}

BigInt vertical_count_formula(int K, int R1, int R2, int s) {
  require(K >= 1 && s >= 1, "vertical_count_formula: K and s must be positive");
  if (R1 < 1 || R2 < 1) return BigInt(0);
  const long a = static_cast<long>(s) + R1 - 1;
  const long b = static_cast<long>(s) + R2 - 1;
  const long top = static_cast<long>(s) + R1 + R2 - 2;
  const Rational lead = ratio(factorial(a) * factorial(b), factorial(top));
  const BigInt bracket = binomial(K - 1, R1 - 1) * binomial(K - 1, R2 - 1) - binomial(K - 1, a) * binomial(K - 1, b);
  return to_integer(lead * (binomial(top, K - 1) * bracket), "vertical_count_formula");
}

BigInt gamma_count_formula(const SubstructureGamma& g) {
  require(is_irreducible(g), "gamma_count_formula: substructure must be irreducible");
  require(check_full(g), "gamma_count_formula: substructure must satisfy the full condition");
  const long s = g.vertices();
  require(s >= 1, "gamma_count_formula: s must be positive");
  const ColumnTally t = classify_columns(g);
  const long A = t.count(ColumnType::A);
  if (s <= A) return BigInt(0);

  using CT = ColumnType;
  // Subscripts 1 and 2 name rows 0 and 1.
  const long b1 = t.in_row(0, CT::B);
  const long b2 = t.in_row(1, CT::B);
  const long d1 = t.in_row(0, CT::D);
  const long d2 = t.in_row(1, CT::D);
  const long c1 = t.in_row(0, CT::C);
  const long c2 = t.in_row(1, CT::C);
  const long cbar1 = t.in_row(0, CT::CBar);
  const long cbar2 = t.in_row(1, CT::CBar);
  const long ctil1 = t.in_row(0, CT::CTilde);
  const long ctil2 = t.in_row(1, CT::CTilde);
  const long atil1 = t.in_row(0, CT::ATilde);

  const BigInt first = BigInt(b2 + d2) * (atil1 + c1 + ctil1 + d1);
  const BigInt lead = factorial(s - 1);
  if (s == A + 1) return lead * first;
  const BigInt second = BigInt(b1) * (c2 + cbar2 + ctil2) - BigInt(cbar1) * (b2 + d2);
  const Rational value =
      Rational(lead) * (ratio(first, BigInt(s - A)) + ratio(second, BigInt(s - A) * (s - A - 1)));
  return to_integer(value, "gamma_count_formula");
}

BigInt gamma_count_formula_noarrows(const SubstructureGamma& g) {
  require(g.arrows().empty(), "gamma_count_formula_noarrows: substructure must have no arrows");
  const long s = g.vertices();
  require(s >= 1, "gamma_count_formula_noarrows: s must be positive");
  long A = 0;
  std::array<long, 2> b{}, c{}, d{};
  for (int col = 0; col < g.columns(); ++col) {
    const bool top = g.is_marked(0, col);
    const bool bottom = g.is_marked(1, col);
    if (!top && !bottom) {
      if (g.occupancy(0, col) > 0 && g.occupancy(1, col) > 0) ++A;
      continue;
    }
    auto& bucket = top && bottom ? d : (top ? b : c);
    for (int row = 0; row < 2; ++row) bucket[row] += g.occupancy(row, col);
  }
  if (s <= A) return BigInt(0);
  const BigInt first = BigInt(b[1] + d[1]) * (c[0] + d[0]);
  const BigInt lead = factorial(s - 1);
  if (s == A + 1) return lead * first;
  const Rational value = Rational(lead) * (ratio(first, BigInt(s - A)) + ratio(BigInt(b[0]) * c[1], BigInt(s - A) * (s - A - 1)));
  return to_integer(value, "gamma_count_formula_noarrows");
}

BigInt omega_count_formula(const SubstructureOmega& o) {
  const long s = o.vertices();
  require(s >= 1, "omega_count_formula: s must be positive");
  const long K = o.columns();
  const long R1 = o.marks_top();
  const long R2 = o.marks_bottom();
  const long F = o.filled_columns();
  Rational sum(0);
  for (long A = 0; A <= s - 1; ++A) {
    const BigInt choose = binomial(F - 1, A);
    if (choose == 0) continue;
    const BigInt arrangements = multinomial({K - A - R1, K - A - R2, R1 + R2 - K + A - 1});
    if (arrangements == 0) continue;
    sum += ratio(BigInt(s) * choose * arrangements, BigInt(s - A));
  }
  return to_integer(Rational(factorial(s)) * sum, "omega_count_formula");
}

BigInt canonical_from_vertical(int K, int q1, int q2, int s, const VerticalCountSource& vertical) {
  require(K >= 1 && s >= 1, "canonical_from_vertical: K and s must be positive");
  require(q1 >= 0 && q2 >= 0, "canonical_from_vertical: q1 and q2 must be non-negative");
  const long p1 = 2L * q1 + s;
  const long p2 = 2L * q2 + s;
  const BigInt prefactor = factorial(p1) * factorial(p2);
  Rational sum(0);
  for (long t1 = 0; t1 <= q1; ++t1) {
    for (long t2 = 0; t2 <= q2; ++t2) {
      const BigInt v = vertical(K, static_cast<int>(q1 - t1 + 1), static_cast<int>(q2 - t2 + 1), s);
      if (v == 0) continue;
      sum += ratio(prefactor * v, pow2(static_cast<unsigned long>(t1 + t2)) * factorial(t1) * factorial(t2) *
                                      factorial(s + q1 - t1) * factorial(s + q2 - t2));
    }
  }
  return to_integer(sum, "canonical_from_vertical");
}

BinomialPoly series_from_surjections(const std::map<int, BigInt>& f) {
  BinomialPoly out;
  for (const auto& [K, count] : f) {
    require(K >= 1, "series_from_surjections: K must be positive");
    out.add_term(K, count);
  }
  return out;
}

std::map<int, BigInt> genus_counts(const CycleCountVector& v, int n_vertices, int d_edges) {
  require(n_vertices == 1 || n_vertices == 2, "genus_counts: only one- and two-vertex maps are supported");
  require(d_edges >= 1 && v.pairs() == d_edges, "genus_counts: counts do not match the edge count");
  std::map<int, BigInt> out;
  for (int faces = 1; faces <= v.max_cycles(); ++faces) {
    const BigInt count = v.count(faces);
    if (count == 0) continue;
    const int twice_genus = 2 - n_vertices + d_edges - faces;
    require(twice_genus >= 0 && twice_genus % 2 == 0,
            "genus_counts: parity violation at L = " + std::to_string(faces) + " (corrupted counts)");
    out[twice_genus / 2] += count;
  }
  return out;
}

CycleCountVector series_cycle_counts(const BinomialPoly& series, int pairs) {
  return CycleCountVector::from_monomial(pairs, binomial_to_monomial(series));
}

}  // namespace mapenum
