#pragma once

#include "latvoa/report.hpp"
#include "latvoa/state.hpp"

namespace latvoa {

// A single mode-evaluation request u_n v (CLI surface).
struct ModeRequest {
  State u;
  long n = 0;
  State v;
};

// p_r(a(-1), a(-2), ...) applied to v, where the p_r are the coefficient
// polynomials of exp(sum_n x_n y^n / n); expanded term by term over the
// partitions of r.
State schur_apply(const IntVec& alpha, long r, const State& v);

// Same value computed through the generating-function recursion
// r P_r = sum_{j=1..r} a(-j) P_{r-j}; this is the fast-path building block.
State creation_exp_coeff(const IntVec& alpha, long r, const State& v);

// Coefficient of z^{-d} of exp(-sum_{n>=1} a(n) z^{-n} / n) applied to v.
State annihilation_exp_coeff(const IntVec& alpha, long d, const State& v);

// Coefficient of z^{-n-1} in Y(iota(e_a), z) v: annihilation exponential on
// the word, cocycle-signed charge shift, z^{<a,.>} charge pairing, creation
// exponential. Exact and finite; every truncation is structural.
State lattice_mode(const IntVec& a, long n, const State& v);

// u_n v for arbitrary states. Heisenberg factors of u are peeled through the
// normal-ordered iterate recursion
//   (h(-p)u')_n = sum_{i>=0} C(p+i-1, p-1) [ h(-p-i) (u'_{n+i} .)
//                                          + (-1)^{p-1} u'_{n-p-i} (h(i) .) ]
// terminating on the structural vanish bound; the base case is lattice_mode.
State mode(const State& u, long n, const State& v);

// Independent slow oracle: direct truncated expansion of the normal-ordered
// product of derivative fields, with Schur polynomials expanded explicitly
// over partitions. Shares only the elementary Heisenberg/translation actions
// with the fast path.
State mode_naive(const State& u, long n, const State& v);

// L(n) v for Y(omega, z) = sum L(n) z^{-n-2}, i.e. mode(omega, n+1, v).
State virasoro_mode(const State& omega, long n, const State& v);

// Scalar c with L(2)L(-2)1 = (c/2)1; throws std::domain_error when the result
// is not a multiple of the vacuum.
Rational central_charge(const State& omega);

// Smallest bound B with u_q v = 0 for every q >= B.
long mode_vanish_bound(const State& u, const State& v);

// u_p(v_q w) - (-1)^{|u||v|} v_q(u_p w) = sum_{i>=0} C(p,i) (u_i v)_{p+q-i} w,
// verified exactly; the report carries both sides on failure.
CheckReport check_commutator(const State& u, long p, const State& v, long q, const State& w);

// u_n v = (-1)^{|u||v|} sum_{i>=0} (-1)^{n+1+i} L(-1)^i (v_{n+i} u) / i!
// for each n in [n_min, n_max], with L(-1) taken from omega.
CheckReport check_skew_symmetry(const State& u, const State& v, const State& omega,
                                long n_min, long n_max);

}  // namespace latvoa
