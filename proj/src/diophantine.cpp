#include "hapol/diophantine.hpp"

#include <algorithm>
#include <functional>

#include "hapol/error.hpp"

namespace hapol {

std::string_view to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::QuadraticMean: return "QuadraticMean";
    case FamilyKind::GeometricMean: return "GeometricMean";
    case FamilyKind::HarmonicQuadratic: return "HarmonicQuadratic";
  }
  return "Unknown";
}

std::optional<FamilyKind> family_from_string(std::string_view name) {
  for (FamilyKind k : {FamilyKind::QuadraticMean, FamilyKind::GeometricMean,
                       FamilyKind::HarmonicQuadratic})
    if (name == to_string(k)) return k;
  return std::nullopt;
}

IntTriple pythagorean_family(const mpz_class& m, const mpz_class& n) {
  if (m == 0 && n == 0) throw Error(ErrorKind::InvalidArgument, "pythagorean_family: (m, n) = (0, 0)");
  const mpz_class m2 = m * m, n2 = n * n, mn2 = 2 * m * n;
  return {abs(mpz_class(m2 + mn2 - n2)), mpz_class(m2 + n2), abs(mpz_class(m2 - mn2 - n2))};
}

IntTriple geometric_family(const mpz_class& p, const mpz_class& q, const mpz_class& k) {
  if (p <= 0 || q <= 0 || k <= 0)
    throw Error(ErrorKind::InvalidArgument, "geometric_family: p, q, k must be positive");
  if (p == q) throw Error(ErrorKind::Degenerate, "geometric_family: p == q gives a = b = c");
  return {mpz_class(k * p * p), mpz_class(k * p * q), mpz_class(k * q * q)};
}

IntTriple quadratic_form_family(const mpz_class& m, const mpz_class& n) {
  if (m == 0 && n == 0)
    throw Error(ErrorKind::InvalidArgument, "quadratic_form_family: (m, n) = (0, 0)");
  const mpz_class m2 = m * m, mn = m * n, n2 = n * n;
  const mpz_class x = 46 * m2 + 24 * mn + n2;
  const mpz_class y = 74 * m2 + 10 * mn + n2;
  const mpz_class z = 94 * m2 + 4 * mn - n2;
  return {mpz_class(x * y), mpz_class(x * z), mpz_class(z * y)};
}

bool verify_identity(const IntTriple& t, FamilyKind kind) {
  const mpz_class a = abs(t.a), b = abs(t.b), c = abs(t.c);
  const mpz_class a2 = a * a, b2 = b * b, c2 = c * c;
  switch (kind) {
    case FamilyKind::QuadraticMean: return 2 * b2 == a2 + c2;
    case FamilyKind::GeometricMean: return b2 == a * c;
    case FamilyKind::HarmonicQuadratic: return 2 * a2 * c2 == a2 * b2 + c2 * b2;
  }
  return false;
}

std::array<mpz_class, 3> normalize(const IntTriple& t) {
  std::array<mpz_class, 3> v{abs(t.a), abs(t.b), abs(t.c)};
  std::sort(v.begin(), v.end(), std::greater<>());
  if (v[0] == v[1] || v[1] == v[2] || v[2] == 0)
    throw Error(ErrorKind::Degenerate, "normalize: magnitudes must be distinct and nonzero");
  return v;
}

}  // namespace hapol

namespace hapol {

std::vector<FamilyRow> family_table(FamilyKind kind, long m_lo, long m_hi, long n_lo, long n_hi,
                                    long k) {
  if (m_lo > m_hi || n_lo > n_hi) throw Error(ErrorKind::InvalidArgument, "family_table: empty range");
  std::vector<FamilyRow> rows;
  for (long m = m_lo; m <= m_hi; ++m) {
    for (long n = n_lo; n <= n_hi; ++n) {
      IntTriple t;
      switch (kind) {
        case FamilyKind::QuadraticMean:
          if (m == 0 && n == 0) continue;
          t = pythagorean_family(m, n);
          break;
        case FamilyKind::GeometricMean:
          if (m <= 0 || n <= 0 || m == n) continue;
          t = geometric_family(m, n, k);
          break;
        case FamilyKind::HarmonicQuadratic:
          if (m == 0 && n == 0) continue;
          t = quadratic_form_family(m, n);
          break;
      }
      const bool ok = verify_identity(t, kind);
      rows.push_back({m, n, std::move(t), kind, ok});
    }
  }
  return rows;
}

}  // namespace hapol
