#pragma once

#include <optional>
#include <vector>

#include "invseq/counting.hpp"

// Exact truncated bivariate series for the kernel-method equation
// G(u,z) = u(1-u) + u G(u(1+z-uz), z), whose diagonal A(z) = G(1,z) counts
// the avoiders of (10)0 by length.

namespace invseq {

/// Polynomial in u and z with exact integer coefficients, truncated at a
/// fixed z-degree cap and u-degree cap. All arithmetic is exact below the
/// caps; degrees never decrease under multiplication or the kernel
/// substitution, so dropped terms can never flow back under the caps.
class BivariateSeries {
 public:
  BivariateSeries(int z_cap, int u_cap);

  static BivariateSeries monomial(int u_deg, int z_deg, BigInt coeff,
                                  int z_cap, int u_cap);

  int z_cap() const { return z_cap_; }
  int u_cap() const { return u_cap_; }

  /// Zero outside the caps.
  const BigInt& coeff(int u_deg, int z_deg) const;
  /// Silently drops terms beyond the caps.
  void add_term(int u_deg, int z_deg, const BigInt& c);

  BivariateSeries& operator+=(const BivariateSeries& rhs);
  BivariateSeries& operator-=(const BivariateSeries& rhs);
  friend BivariateSeries operator+(BivariateSeries lhs,
                                   const BivariateSeries& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend BivariateSeries operator-(BivariateSeries lhs,
                                   const BivariateSeries& rhs) {
    lhs -= rhs;
    return lhs;
  }
  BivariateSeries operator*(const BivariateSeries& rhs) const;

  bool is_zero() const;
  /// Smallest z-degree carrying a nonzero term; z_cap()+1 for the zero
  /// series.
  int min_z_degree() const;

  /// Coefficients of z^0..z^z_cap after setting u = 1.
  std::vector<BigInt> eval_at_u1() const;

  /// Copy into fresh caps (terms beyond them are dropped).
  BivariateSeries resized(int z_cap, int u_cap) const;

  struct Term {
    int u_deg = 0;
    int z_deg = 0;
    BigInt coeff;
  };
  /// Nonzero terms, ordered by (u-degree, z-degree).
  std::vector<Term> terms() const;

 private:
  int z_cap_;
  int u_cap_;
  std::vector<std::vector<BigInt>> c_;  // c_[u_deg][z_deg]
};

/// The kernel substitution u -> u(1+z-uz), exact under the caps.
BivariateSeries substitute_u(const BivariateSeries& s);

/// Truncated G(u,z) as the sum over k of V^0 V^1 ... V^k (1 - V^k), where
/// V^0 = u and V^{i+1} = substitute_u(V^i). Requires K >= N+1, which loses
/// nothing below z-degree N because nonzero terms u^k z^n satisfy k <= n+1.
/// The sum stops once the partial product vanishes under the caps; every
/// further term would only contribute beyond them.
BivariateSeries g_expand(int N, int K);

/// A(z) coefficients for z^0..z^N, i.e. |I_n((10)0)| for n = 0..N.
std::vector<BigInt> a_series(int N);

/// First term violating k-1 <= n <= C(k,2), if any.
std::optional<BivariateSeries::Term> support_check(const BivariateSeries& s);

}  // namespace invseq
