#pragma once

#include <gmpxx.h>

#include <string>

namespace skewtab {

// Arbitrary-precision scalars. Everything in this library is exact;
// nothing is rounded or truncated anywhere.
using Int = mpz_class;
using Rat = mpq_class;

std::string to_string(const Int& v);
std::string to_string(const Rat& v);

Int factorial(unsigned long n);

// Binomial coefficient with the zero-outside-range convention:
// C(a,b) = 0 for b < 0 and for 0 <= a < b; for a < 0 the generalized
// product a(a-1)...(a-b+1)/b!, so C(-6,3) = -56.
Int binomial(const Int& a, long b);
Int binomial(long a, long b);

// C(z,b) for rational z, via the falling factorial.
Rat binomial(const Rat& z, unsigned long b);

// Falling factorial [z]_n = z(z-1)...(z-n+1); [z]_0 = 1.
Rat falling_factorial(const Rat& z, unsigned long n);
Int falling_factorial(unsigned long z, unsigned long n);

// z^l for possibly negative z, with 0^0 = 1.
Int int_pow(long z, unsigned long l);

// Stirling numbers of the second kind; S(n,k) = 0 for k > n.
// Rows are cached per process behind a lock.
Int stirling2(unsigned long n, unsigned long k);

// c_number(r,t) = t! * S(r+1,t+1); vanishes for t > r. Cached.
Int c_number(unsigned long r, unsigned long t);

// phi(l,h,r,t) = C(l,h) * c_number(h,r) * c_number(l-h,t); requires h <= l.
Int phi(unsigned long l, unsigned long h, unsigned long r, unsigned long t);

// power_sum_range(l,t) = 1^l + 2^l + ... + t^l; 0 for t = 0.
Int power_sum_range(unsigned long l, unsigned long t);

// num/den with the division checked exact; InternalError otherwise.
Int exact_div(const Int& num, const Int& den, const char* context);

// Canonicalizes and converts to an integer; InternalError if not integral.
Int to_integer(const Rat& value, const char* context);

}  // namespace skewtab
