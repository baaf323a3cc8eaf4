#pragma once

#include <utility>

#include "hypercore/basis.hpp"
#include "hypercore/poly.hpp"
#include "hypercore/rational.hpp"
#include "hypercore/seqspec.hpp"

namespace hypercore {

/// Closed forms for Laguerre diagonal operators T[L_n] = gamma_n L_n,
/// stated for the plain Laguerre basis; affine bases are rejected.
namespace laguerre {

/// Q_n from the reversed-Jensen values:
/// [x^k] Q_n = 1/k! sum_p (-1)^{n-k} C(n-k,p-k) C(p,n-k) g_p*(-1),
/// binomials zero outside Pascal's triangle. The inner sum is the k-th
/// derivative of Q_n at zero, whence the 1/k!.
Poly qk_jensen_form(const Basis& b, const SeqSpec& s, int n);

/// Q_n(x) = sum_{k<=n} (-x)^k/k! sum_{j<=n-k} C(n-k,j) (-1)^j gamma_j L_j(x).
Poly qk_basis_form(const Basis& b, const SeqSpec& s, int n);

/// b_{n,m} = sum_{k<=m} C(m,k) (-1)^n/n!
///             sum_{j<=n} C(n,j) (k+j)(k+j-1)...(k+j-n+1) g_{k+j}*(-1),
/// the falling factorial vanishing for k+j < n.
Rational bnm(const SeqSpec& s, int n, int m);

/// h_n = (-1)^n/n! (1+x)^n D^n f with f = sum g_k*(-1) x^k, which must be
/// a polynomial; non-polynomial f is rejected with a diagnostic. The
/// forward binomial transform of h_n's coefficients reproduces row n.
Poly hn(const SeqSpec& s, int n);

/// Both sides of the four-binomial double-sum identity
///   sum_{k<=n} sum_{j<=m} C(m,j) C(k-j,p-j) C(p,k-j) C(n+1,k+m-j)
///     = C(n+1,p) C(n+1,m) - C(n+1-m,p-m) C(p,n+1-m),
/// evaluated by brute force. Callers assert equality.
std::pair<Rational, Rational> identity_horrible(long n, long m, long p);

}  // namespace laguerre

}  // namespace hypercore
