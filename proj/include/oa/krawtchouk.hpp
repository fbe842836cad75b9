#pragma once
// Krawtchouk polynomials K_{n,q,j} for the Hamming scheme H(n,q):
//   K_{n,q,j}(x) = sum_{l=0}^{j} (-1)^l (q-1)^{j-l} C(x,l) C(n-x, j-l),
// with C(x,l) the generalized binomial (zero at integer 0 <= x < l).

#include "oa/poly.hpp"
#include "oa/rat.hpp"

namespace oa {

struct KrawSpec {
    int n;  // length, n >= 1
    int q;  // alphabet size, q >= 2
    int j;  // degree, 0 <= j <= n
};

void validate(const KrawSpec& spec);

// Exact value at an integer point x in [0, n]; always an integer.
Int kraw_eval(int n, int q, int j, int x);
inline Int kraw_eval(const KrawSpec& s, int x) { return kraw_eval(s.n, s.q, s.j, x); }

// K_{n,q,j} as a polynomial in x of exact degree j.
UniPoly kraw_poly(int n, int q, int j);
inline UniPoly kraw_poly(const KrawSpec& s) { return kraw_poly(s.n, s.q, s.j); }

// sum_{l=0}^{s-1} K_{n,q,l}(x) for s >= 1.
Int kraw_partial_sum(int n, int q, int s, int x);

}  // namespace oa
