#pragma once

#include "hypercore/basis.hpp"
#include "hypercore/diffop.hpp"
#include "hypercore/poly.hpp"
#include "hypercore/seqspec.hpp"
#include "hypercore/series.hpp"

namespace hypercore {

/// Closed forms for Hermite diagonal operators T[H_n] = gamma_n H_n.
/// All of them are stated for the plain Hermite basis; affine bases are
/// rejected (their expansions go through the recursion only).
namespace hermite {

/// Q_k(x) = sum_{j<=k/2} (-1)^j / (j! (k-2j)! 2^{k-j}) g_{k-j}*(-1) H_{k-2j}(x).
Poly qk_hermite_combination(const Basis& b, const SeqSpec& s, int k);

/// The same polynomial as an explicit monomial double sum:
/// Q_m(x) = sum_{k<=m/2} (-1)^k/(k! 2^k)
///            (sum_{j<=k} C(k,j) g_{m-k+j}*(-1)/2^j) x^{m-2k}/(m-2k)!.
Poly qk_monomial_sum(const Basis& b, const SeqSpec& s, int m);

/// Gaussian-argument form:
/// Q_n(x) = 1/(n! 2^n) sum_k C(n,k) gamma_k [i^{n-k} H_{n-k}(ix)] H_k(x).
Poly qk_imaginary_pairing(const Basis& b, const SeqSpec& s, int n);

/// Row 2n of the diagonalized decomposition (odd rows vanish):
/// b_{2n,m} = sum_{k<=m} C(m,k) (-1)^n/(n! 2^n)
///              sum_{j<=n} C(n,j) g_{k+n+j}*(-1)/2^j.
Rational bnk(const SeqSpec& s, int n, int m);

/// Rodrigues-type series h_n = (-1)^n/(n! 4^n) D^n e^{-2x} D^n e^{2x} f,
/// computed by the step recursion h_n = -1/(4n) D e^{-2x} D e^{2x} h_{n-1}
/// with h_0 = f, f = e^{-x} sum gamma_k x^k / k!. Consumes two orders per
/// step, so the result has order budget_order - 2n; requires
/// budget_order >= 2n. The inverse binomial transform of row 2n of the
/// decomposition matches the Taylor coefficients of h_n scaled by k!.
TruncSeries hn(const SeqSpec& s, int n, int budget_order = 24);

/// The expansion of the sign-flipped sequence (-1)^n gamma_n from the
/// expansion of gamma: Qt_n(x) = (-2)^n/n! (sum_k Q_k(x)/2^k D^k) x^n.
/// Involutive up to the shared truncation order.
DiffOp alternate(const DiffOp& t);

/// Leading/second-leading coefficient series: e^{-x}(f' - f) and
/// e^{-x}(f' + f) for f = sum gamma_k x^k/k!. Computation only; no claim
/// is attached to the sign patterns.
TruncSeries edge_series(const SeqSpec& s, bool plus, int order);

}  // namespace hermite

}  // namespace hypercore
