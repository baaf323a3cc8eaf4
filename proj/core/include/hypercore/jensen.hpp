#pragma once

#include <optional>
#include <vector>

#include "hypercore/diffop.hpp"
#include "hypercore/poly.hpp"
#include "hypercore/seqspec.hpp"

namespace hypercore {

/// Jensen polynomial g_n(x) = sum_k C(n,k) gamma_k x^k.
Poly jensen_poly(const SeqSpec& s, int n);

/// Reversed Jensen polynomial at -1:
/// g_n*(-1) = sum_k C(n,k) gamma_k (-1)^{n-k}, the alternating binomial
/// (finite-difference) transform of the sequence.
Rational reversed_jensen_at_minus1(const SeqSpec& s, int n);

/// g_0*(-1) .. g_upto*(-1).
std::vector<Rational> gstar_values(const SeqSpec& s, int upto);

/// beta_n = sum_k C(n,k) alpha_k.
std::vector<Rational> binomial_transform(const std::vector<Rational>& alpha);

/// alpha_n = sum_k C(n,k) beta_k (-1)^{n-k}.
std::vector<Rational> inverse_binomial_transform(
    const std::vector<Rational>& beta);

/// The classical diagonal operator of the sequence in differential form:
/// Q_k(x) = g_k*(-1)/k! x^k for k <= order, so that T[x^n] = gamma_n x^n.
DiffOp classical_diag_op(const SeqSpec& s, int order);

/// f(x) = sum_k g_k*(-1) x^k when it is provably a polynomial, i.e. when
/// the finite differences of the sequence vanish identically from some
/// index on. Returns nullopt for sequences where that provably fails and
/// throws for sequences where it cannot be decided (explicit lists,
/// approximate entries).
std::optional<Poly> gstar_polynomial(const SeqSpec& s);

}  // namespace hypercore
