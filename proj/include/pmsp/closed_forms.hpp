#ifndef PMSP_CLOSED_FORMS_HPP_
#define PMSP_CLOSED_FORMS_HPP_

#include "pmsp/polynomial.hpp"

namespace pmsp {

// Hoggatt-Long polynomial u_n(1, z): u_0 = 0, u_1 = 1,
// u_n = u_{n-1} + z u_{n-2}. u_n(1, 1) is the Fibonacci number F_n.
Polynomial hoggatt_long_u(int n);

// p(P_n; z) = u_{n+1}(1, z), n >= 1.
Polynomial path_poly(int n);

// p(C_n; z) = u_{n+1}(1, z) + z u_{n-1}(1, z), minus z^{n/2} when n is even;
// n >= 3.
Polynomial cycle_poly(int n);

// p(cat(n, k); z) via the linear recurrence
//   c_n = (1 + kz) c_{n-1} + z c_{n-2},  c_0 = 1, c_1 = 1 + kz.
Polynomial caterpillar_poly(int n, int k);

// The same polynomial by exact binomial expansion of the closed radical
// formula; independent of the recurrence, used for cross-checking.
Polynomial caterpillar_poly_radical(int n, int k);

// p of the complete k-ary tree of rank r via the product formula
//   p(P_{r+1}; kz) * prod_{i=1}^{r-1} p(Lambda_{k,i}; z)^{k-1},  k >= 1.
Polynomial kary_tree_poly(int k, int r);

// h*(P_{complement(C_{2k})}; z) = p(C_{2k}; z) via the integer recurrence
//   E_k = (1 + 2z) E_{k-1} - z^2 E_{k-2} + z^{k-1},
// with degenerate bases E_0 = 1, E_1 = 1 + z. k = 1 is the degenerate
// "2-cycle" value; genuine cycles start at k = 2, where this equals
// cycle_poly(2k).
Polynomial even_cycle_hstar_closed_form(int k);

}  // namespace pmsp

#endif  // PMSP_CLOSED_FORMS_HPP_
