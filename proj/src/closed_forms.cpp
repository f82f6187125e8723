#include "pmsp/closed_forms.hpp"

#include <string>
#include <vector>

#include "pmsp/errors.hpp"
#include "pmsp/integer.hpp"

namespace pmsp {

Polynomial hoggatt_long_u(int n) {
  if (n < 0) throw ArgumentError("hoggatt_long_u needs n >= 0");
  Polynomial a = Polynomial::zero();  // u_0
  Polynomial b = Polynomial::one();   // u_1
  if (n == 0) return a;
  for (int i = 1; i < n; ++i) {
    Polynomial next = b + a.shifted(1);
    a = b;
    b = next;
  }
  return b;
}

Polynomial path_poly(int n) {
  if (n < 1) throw ArgumentError("path_poly needs n >= 1");
  return hoggatt_long_u(n + 1);
}

Polynomial cycle_poly(int n) {
  if (n < 3) throw ArgumentError("cycle_poly needs n >= 3");
  Polynomial p = hoggatt_long_u(n + 1) + hoggatt_long_u(n - 1).shifted(1);
  if (n % 2 == 0) p = p - Polynomial::monomial(1, n / 2);
  return p;
}

Polynomial caterpillar_poly(int n, int k) {
  if (n < 0 || k < 0) throw ArgumentError("caterpillar_poly needs n, k >= 0");
  Polynomial a = Polynomial::one();  // cat(0, k)
  if (n == 0) return a;
  Polynomial star({Integer(1), Integer(k)});  // 1 + kz
  Polynomial b = star;                        // cat(1, k)
  for (int i = 2; i <= n; ++i) {
    Polynomial next = star * b + a.shifted(1);
    a = b;
    b = next;
  }
  return b;
}

Polynomial caterpillar_poly_radical(int n, int k) {
  if (n < 0 || k < 0) throw ArgumentError("caterpillar_poly needs n, k >= 0");
  // ((a + s)^{n+1} - (a - s)^{n+1}) / (2^{n+1} s) with a = 1 + kz and
  // s^2 = 1 + 2(2+k)z + k^2 z^2. Expanding the binomials leaves only odd
  // powers of s, so the quotient is the polynomial
  //   sum_{j odd} C(n+1, j) a^{n+1-j} (s^2)^{(j-1)/2} / 2^n.
  Polynomial a({Integer(1), Integer(k)});
  Polynomial s2({Integer(1), Integer(2 * (2 + k)), Integer(k) * Integer(k)});
  Polynomial sum = Polynomial::zero();
  for (int j = 1; j <= n + 1; j += 2) {
    Polynomial term = Polynomial({binomial(n + 1, j)});
    for (int i = 0; i < n + 1 - j; ++i) term = term * a;
    for (int i = 0; i < (j - 1) / 2; ++i) term = term * s2;
    sum = sum + term;
  }
  Integer two_n = Integer(1) << n;
  return sum.divided_exact(two_n);
}

Polynomial kary_tree_poly(int k, int r) {
  if (k < 1 || r < 0) throw ArgumentError("kary_tree_poly needs k >= 1, r >= 0");
  Polynomial result = path_poly(r + 1).substituted_scaled(k);
  for (int i = 1; i <= r - 1; ++i) {
    Polynomial factor = kary_tree_poly(k, i);
    for (int c = 0; c < k - 1; ++c) result = result * factor;
  }
  return result;
}

Polynomial even_cycle_hstar_closed_form(int k) {
  if (k < 1) throw ArgumentError("even_cycle_hstar_closed_form needs k >= 1");
  // E_0 and E_1 are the degenerate 0- and 2-cycle bases of the recurrence;
  // genuine cycles start at k = 2.
  Polynomial a = Polynomial::one();                        // E_0
  Polynomial b({Integer(1), Integer(1)});                  // E_1 = 1 + z
  Polynomial mult({Integer(1), Integer(2)});               // 1 + 2z
  for (int i = 2; i <= k; ++i) {
    Polynomial next = mult * b - a.shifted(2) + Polynomial::monomial(1, i - 1);
    a = b;
    b = next;
  }
  return b;
}

}  // namespace pmsp
