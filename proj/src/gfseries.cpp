#include "invseq/gfseries.hpp"

#include <stdexcept>

namespace invseq {

namespace {
const BigInt kZero = 0;
}

BivariateSeries::BivariateSeries(int z_cap, int u_cap)
    : z_cap_(z_cap), u_cap_(u_cap) {
  if (z_cap < 0 || u_cap < 0) {
    throw std::invalid_argument("BivariateSeries: negative degree cap");
  }
  c_.assign(static_cast<std::size_t>(u_cap) + 1,
            std::vector<BigInt>(static_cast<std::size_t>(z_cap) + 1, kZero));
}

BivariateSeries BivariateSeries::monomial(int u_deg, int z_deg, BigInt coeff,
                                          int z_cap, int u_cap) {
  BivariateSeries s(z_cap, u_cap);
  s.add_term(u_deg, z_deg, coeff);
  return s;
}

const BigInt& BivariateSeries::coeff(int u_deg, int z_deg) const {
  if (u_deg < 0 || u_deg > u_cap_ || z_deg < 0 || z_deg > z_cap_) return kZero;
  return c_[static_cast<std::size_t>(u_deg)][static_cast<std::size_t>(z_deg)];
}

void BivariateSeries::add_term(int u_deg, int z_deg, const BigInt& c) {
  if (u_deg < 0 || z_deg < 0) {
    throw std::invalid_argument("BivariateSeries: negative degree");
  }
  if (u_deg > u_cap_ || z_deg > z_cap_) return;
  c_[static_cast<std::size_t>(u_deg)][static_cast<std::size_t>(z_deg)] += c;
}

BivariateSeries& BivariateSeries::operator+=(const BivariateSeries& rhs) {
  for (int k = 0; k <= rhs.u_cap_; ++k) {
    for (int n = 0; n <= rhs.z_cap_; ++n) {
      const BigInt& c = rhs.coeff(k, n);
      if (c != 0) add_term(k, n, c);
    }
  }
  return *this;
}

BivariateSeries& BivariateSeries::operator-=(const BivariateSeries& rhs) {
  for (int k = 0; k <= rhs.u_cap_; ++k) {
    for (int n = 0; n <= rhs.z_cap_; ++n) {
      const BigInt& c = rhs.coeff(k, n);
      if (c != 0) add_term(k, n, -c);
    }
  }
  return *this;
}

BivariateSeries BivariateSeries::operator*(const BivariateSeries& rhs) const {
  BivariateSeries out(std::min(z_cap_, rhs.z_cap_),
                      std::min(u_cap_, rhs.u_cap_));
  for (int k1 = 0; k1 <= u_cap_; ++k1) {
    for (int n1 = 0; n1 <= z_cap_; ++n1) {
      const BigInt& a = coeff(k1, n1);
      if (a == 0) continue;
      for (int k2 = 0; k1 + k2 <= out.u_cap_ && k2 <= rhs.u_cap_; ++k2) {
        for (int n2 = 0; n1 + n2 <= out.z_cap_ && n2 <= rhs.z_cap_; ++n2) {
          const BigInt& b = rhs.coeff(k2, n2);
          if (b == 0) continue;
          out.c_[static_cast<std::size_t>(k1 + k2)]
               [static_cast<std::size_t>(n1 + n2)] += a * b;
        }
      }
    }
  }
  return out;
}

bool BivariateSeries::is_zero() const {
  for (const auto& row : c_) {
    for (const BigInt& v : row) {
      if (v != 0) return false;
    }
  }
  return true;
}

int BivariateSeries::min_z_degree() const {
  for (int n = 0; n <= z_cap_; ++n) {
    for (int k = 0; k <= u_cap_; ++k) {
      if (coeff(k, n) != 0) return n;
    }
  }
  return z_cap_ + 1;
}

std::vector<BigInt> BivariateSeries::eval_at_u1() const {
  std::vector<BigInt> out(static_cast<std::size_t>(z_cap_) + 1, kZero);
  for (int n = 0; n <= z_cap_; ++n) {
    for (int k = 0; k <= u_cap_; ++k) {
      out[static_cast<std::size_t>(n)] += coeff(k, n);
    }
  }
  return out;
}

BivariateSeries BivariateSeries::resized(int z_cap, int u_cap) const {
  BivariateSeries out(z_cap, u_cap);
  for (int k = 0; k <= u_cap_; ++k) {
    for (int n = 0; n <= z_cap_; ++n) {
      const BigInt& c = coeff(k, n);
      if (c != 0) out.add_term(k, n, c);
    }
  }
  return out;
}

std::vector<BivariateSeries::Term> BivariateSeries::terms() const {
  std::vector<Term> out;
  for (int k = 0; k <= u_cap_; ++k) {
    for (int n = 0; n <= z_cap_; ++n) {
      const BigInt& c = coeff(k, n);
      if (c != 0) out.push_back({k, n, c});
    }
  }
  return out;
}

BivariateSeries substitute_u(const BivariateSeries& s) {
  const int z_cap = s.z_cap();
  const int u_cap = s.u_cap();
  // 1 + z - uz, the factor that replaces each power of u.
  BivariateSeries factor(z_cap, u_cap);
  factor.add_term(0, 0, 1);
  factor.add_term(0, 1, 1);
  factor.add_term(1, 1, -1);

  BivariateSeries out(z_cap, u_cap);
  BivariateSeries power = BivariateSeries::monomial(0, 0, 1, z_cap, u_cap);
  for (int k = 0; k <= u_cap; ++k) {
    if (k > 0) power = power * factor;  // (1+z-uz)^k
    // u^k row of s maps to u^k (1+z-uz)^k times its z-polynomial.
    for (int n = 0; n <= z_cap; ++n) {
      const BigInt& c = s.coeff(k, n);
      if (c == 0) continue;
      for (const auto& term : power.terms()) {
        out.add_term(k + term.u_deg, n + term.z_deg, c * term.coeff);
      }
    }
  }
  return out;
}

BivariateSeries g_expand(int N, int K) {
  if (K < N + 1) {
    throw std::invalid_argument(
        "g_expand: u-truncation K must be at least N+1; terms u^k z^n of G "
        "satisfy k <= n+1, so a smaller K would lose support below z^N");
  }
  BivariateSeries g(N, K);
  const BivariateSeries one = BivariateSeries::monomial(0, 0, 1, N, K);
  BivariateSeries v = BivariateSeries::monomial(1, 0, 1, N, K);  // V^0 = u
  BivariateSeries product = v;                                   // V^0...V^k
  int iterations = 0;
  for (;;) {
    g += product * (one - v);
    v = substitute_u(v);
    product = product * v;
    // The partial product V^0...V^k has minimum u-degree k+1, so it
    // eventually vanishes under the u-cap; from then on every term of the
    // sum lies beyond the caps.
    if (product.is_zero() || product.min_z_degree() > N) break;
    if (++iterations > K + 1) {
      throw std::logic_error("g_expand: expansion failed to terminate");
    }
  }
  return g;
}

std::vector<BigInt> a_series(int N) {
  return g_expand(N, N + 2).eval_at_u1();
}

std::optional<BivariateSeries::Term> support_check(const BivariateSeries& s) {
  for (const auto& term : s.terms()) {
    long low = static_cast<long>(term.u_deg) - 1;
    long high = static_cast<long>(term.u_deg) *
                (static_cast<long>(term.u_deg) - 1) / 2;
    if (term.z_deg < low || term.z_deg > high) return term;
  }
  return std::nullopt;
}

}  // namespace invseq
