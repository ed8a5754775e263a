#include "tvgrid/params.hpp"

#include <stdexcept>

namespace tvgrid {

void validate_params(const Params& params) {
  if (params.d < 1) throw std::invalid_argument("d must be >= 1");
  if (params.m < 1) throw std::invalid_argument("m must be >= 1");
  if (params.p < 2) throw std::invalid_argument("p must be >= 2");
  if (params.n < 1) throw std::invalid_argument("n must be >= 1");
}

int required_n(int d, int m, int p) {
  if (d < 1) throw std::invalid_argument("d must be >= 1");
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  if (p < 2) throw std::invalid_argument("p must be >= 2");
  // (d/m + 1)(p-1) + 1/m  ==  ((d+m)(p-1) + 1) / m  over the rationals, so
  // the ceiling is exact integer division, no floating point anywhere.
  const long long numer = static_cast<long long>(d + m) * (p - 1) + 1;
  const long long n = (numer + m - 1) / m;
  return static_cast<int>(n);
}

Params make_params(int d, int m, int p) {
  Params params{d, m, p, required_n(d, m, p)};
  validate_params(params);
  return params;
}

std::optional<PrimePower> prime_power_decomposition(long long p) {
  if (p < 2) throw std::invalid_argument("prime-power test requires p >= 2");
  long long q = 0;
  if (p % 2 == 0) {
    q = 2;
  } else {
    for (long long f = 3; f * f <= p; f += 2) {
      if (p % f == 0) {
        q = f;
        break;
      }
    }
  }
  if (q == 0) return PrimePower{p, 1};  // p itself is prime
  long long rest = p;
  int exponent = 0;
  while (rest % q == 0) {
    rest /= q;
    ++exponent;
  }
  if (rest != 1) return std::nullopt;
  return PrimePower{q, exponent};
}

bool is_prime_power(long long p) {
  return prime_power_decomposition(p).has_value();
}

int target_connectivity(int d, int p) {
  return (d + 1) * (p - 1) - 1;
}

long long join_connectivity_lhs(int m, int p, int n) {
  return static_cast<long long>(n) - 2 +
         static_cast<long long>(m - 1) * (n - p + 1);
}

bool join_connectivity_check(int d, int m, int p, int n) {
  return join_connectivity_lhs(m, p, n) >=
         static_cast<long long>(target_connectivity(d, p));
}

}  // namespace tvgrid
