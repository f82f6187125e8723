#include "pmsp/integer.hpp"

namespace pmsp {

Integer binomial(long long n, long long k) {
  if (k < 0 || k > n || n < 0) return 0;
  if (k > n - k) k = n - k;
  Integer r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // exact: r is C(n-k+i, i) after this step
  }
  return r;
}

Integer fibonacci_number(int n) {
  Integer a = 0, b = 1;  // F_0, F_1
  for (int i = 0; i < n; ++i) {
    Integer next = a + b;
    a = b;
    b = next;
  }
  return a;
}

Integer lucas_number(int n) {
  Integer a = 2, b = 1;  // L_0, L_1
  if (n == 0) return a;
  for (int i = 1; i < n; ++i) {
    Integer next = a + b;
    a = b;
    b = next;
  }
  return b;
}

}  // namespace pmsp
