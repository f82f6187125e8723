#ifndef PMSP_INTEGER_HPP_
#define PMSP_INTEGER_HPP_

#include <boost/multiprecision/cpp_int.hpp>

namespace pmsp {

// Exact arithmetic everywhere; no floating point anywhere in the library.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// C(n, k) with C(n, k) = 0 for k < 0 or k > n.
Integer binomial(long long n, long long k);

// Fibonacci numbers with F_1 = F_2 = 1 (F_0 = 0).
Integer fibonacci_number(int n);

// Lucas numbers with L_0 = 2, L_1 = 1.
Integer lucas_number(int n);

}  // namespace pmsp

#endif  // PMSP_INTEGER_HPP_
