#pragma once

// Integer triples on the three boundary cases of the locus:
//   QuadraticMean      2b^2 = a^2 + c^2
//   GeometricMean      b^2 = ac
//   HarmonicQuadratic  2a^2c^2 = a^2b^2 + c^2b^2
// All arithmetic is exact (GMP).

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace hapol {

struct IntTriple {
  mpz_class a;
  mpz_class b;
  mpz_class c;
};

enum class FamilyKind { QuadraticMean, GeometricMean, HarmonicQuadratic };

std::string_view to_string(FamilyKind kind);
std::optional<FamilyKind> family_from_string(std::string_view name);

/// a = |m^2 + 2mn - n^2|, b = m^2 + n^2, c = |m^2 - 2mn - n^2|.
IntTriple pythagorean_family(const mpz_class& m, const mpz_class& n);

/// a = k p^2, b = k p q, c = k q^2 with p, q, k > 0 and p != q.
IntTriple geometric_family(const mpz_class& p, const mpz_class& q, const mpz_class& k);

/// Products of the binary quadratic forms
///   X = 46m^2 + 24mn + n^2, Y = 74m^2 + 10mn + n^2, Z = 94m^2 + 4mn - n^2
/// as a = XY, b = XZ, c = ZY. Signs are kept as produced.
IntTriple quadratic_form_family(const mpz_class& m, const mpz_class& n);

/// Exact identity check on |a|, |b|, |c|.
bool verify_identity(const IntTriple& t, FamilyKind kind);

/// Absolute values sorted descending. Throws Degenerate on repeated or zero
/// magnitudes.
std::array<mpz_class, 3> normalize(const IntTriple& t);

struct FamilyRow {
  long m = 0;
  long n = 0;
  IntTriple triple;
  FamilyKind kind = FamilyKind::QuadraticMean;
  bool verified = false;
};

/// Generates the family over the inclusive grid [m_lo, m_hi] x [n_lo, n_hi].
/// GeometricMean reads (m, n) as (p, q) with multiplier k and skips p <= 0,
/// q <= 0 and p == q; the other families skip (0, 0).
std::vector<FamilyRow> family_table(FamilyKind kind, long m_lo, long m_hi, long n_lo, long n_hi,
                                    long k = 1);

}  // namespace hapol
