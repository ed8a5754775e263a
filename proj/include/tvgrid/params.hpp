// Parameter calculus: the bound on the grid side length, prime-power
// testing, the target connectivity, and the join-connectivity inequality.
#pragma once

#include <optional>

namespace tvgrid {

struct Params {
  int d = 0;  // ambient dimension
  int m = 0;  // number of axes
  int p = 0;  // number of parts
  int n = 0;  // side length of the grid [n]^m
};

// Throws std::invalid_argument unless d >= 1, m >= 1, p >= 2, n >= 1.
void validate_params(const Params& params);

// n = ceil((d/m + 1)(p-1) + 1/m), evaluated exactly by integer division.
int required_n(int d, int m, int p);

// Params with n = required_n(d, m, p).
Params make_params(int d, int m, int p);

struct PrimePower {
  long long base = 0;
  int exponent = 0;
};

// Decomposes p = q^r with q prime, r >= 1; nullopt when p is not a prime
// power. Throws std::invalid_argument for p < 2.
std::optional<PrimePower> prime_power_decomposition(long long p);
bool is_prime_power(long long p);

// (d+1)(p-1) - 1, the dimension of the sphere the test map targets.
int target_connectivity(int d, int p);

// n-2 + (m-1)(n-p+1), the connectivity the join construction certifies.
long long join_connectivity_lhs(int m, int p, int n);

// True iff n-2 + (m-1)(n-p+1) >= (d+1)(p-1) - 1.
bool join_connectivity_check(int d, int m, int p, int n);

}  // namespace tvgrid
