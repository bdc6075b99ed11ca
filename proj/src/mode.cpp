#include "latvoa/mode.hpp"

#include <map>
#include <sstream>
#include <vector>

#include "latvoa/partitions.hpp"

namespace latvoa {

namespace {

Rational partition_coeff(const std::map<long, long>& mult, bool negate_arguments) {
  // 1 / prod_j j^{m_j} m_j!  with an extra (-1)^{sum m_j} when the arguments
  // are negated.
  BigInt den(1);
  long total_mult = 0;
  for (const auto& [part, m] : mult) {
    total_mult += m;
    BigInt p(part);
    for (long t = 0; t < m; ++t) den *= p;
    den *= factorial(m);
  }
  Rational c(1);
  c /= Rational(den);
  if (negate_arguments && (total_mult % 2)) c = -c;
  return c;
}

State schur_expand(const IntVec& alpha, long r, const State& v, bool annihilate) {
  if (v.is_zero() || r < 0) return State(v.context());
  if (r == 0) return v;
  const RatVec h = to_rational(alpha);
  State out(v.context());
  for_each_partition(r, [&](const std::map<long, long>& mult) {
    State w = v;
    for (const auto& [part, m] : mult) {
      for (long t = 0; t < m && !w.is_zero(); ++t)
        w = heisenberg_act(h, annihilate ? part : -part, w);
    }
    if (!w.is_zero()) out.axpy(partition_coeff(mult, annihilate), w);
  });
  return out;
}

}  // namespace

State schur_apply(const IntVec& alpha, long r, const State& v) {
  return schur_expand(alpha, r, v, /*annihilate=*/false);
}

State creation_exp_coeff(const IntVec& alpha, long r, const State& v) {
  if (v.is_zero() || r < 0) return State(v.context());
  if (r == 0) return v;
  const RatVec h = to_rational(alpha);
  std::vector<State> p;
  p.reserve(r + 1);
  p.push_back(v);
  for (long s = 1; s <= r; ++s) {
    State acc(v.context());
    for (long j = 1; j <= s; ++j) acc += heisenberg_act(h, -j, p[s - j]);
    acc /= s;
    p.push_back(std::move(acc));
  }
  return p.back();
}

State annihilation_exp_coeff(const IntVec& alpha, long d, const State& v) {
  if (v.is_zero() || d < 0) return State(v.context());
  if (d == 0) return v;
  const RatVec h = to_rational(alpha);
  std::vector<State> p;
  p.reserve(d + 1);
  p.push_back(v);
  for (long s = 1; s <= d; ++s) {
    State acc(v.context());
    for (long j = 1; j <= s; ++j) acc -= heisenberg_act(h, j, p[s - j]);
    acc /= s;
    p.push_back(std::move(acc));
  }
  return p.back();
}

State lattice_mode(const IntVec& a, long n, const State& v) {
  if (v.is_zero()) return v;
  const ContextPtr& ctx = v.context();
  const Lattice& L = ctx->lattice;
  if (a.size() != ctx->rank()) throw std::invalid_argument("lattice element length mismatch");
  const RatVec h = to_rational(a);
  State out(ctx);
  for (const auto& [mono, coeff] : v.terms()) {
    const long pairing = L.inner(a, mono.point);
    const long depth = mono.word_depth();
    // one annihilation-exponential sweep per monomial, reused across d
    std::vector<State> phi;
    phi.push_back(State::monomial(ctx, mono, coeff));
    for (long s = 1; s <= depth; ++s) {
      State acc(ctx);
      for (long j = 1; j <= s; ++j) acc -= heisenberg_act(h, j, phi[s - j]);
      acc /= s;
      phi.push_back(std::move(acc));
    }
    for (long d = 0; d <= depth; ++d) {
      const long r = -n - 1 - pairing + d;
      if (r < 0 || phi[d].is_zero()) continue;
      out += creation_exp_coeff(a, r, lattice_translate(a, phi[d]));
    }
  }
  return out;
}

long mode_vanish_bound(const State& u, const State& v) {
  if (u.is_zero() || v.is_zero()) return std::numeric_limits<long>::min();
  const Lattice& L = u.context()->lattice;
  long bound = std::numeric_limits<long>::min();
  for (const auto& [um, uc] : u.terms())
    for (const auto& [vm, vc] : v.terms())
      bound = std::max(bound, um.word_depth() + vm.word_depth() - L.inner(um.point, vm.point));
  return bound;
}

namespace {

long vanish_bound_suffix(const Lattice& L, const Monomial& u_mono, std::size_t k, const State& v) {
  long suffix_depth = 0;
  for (std::size_t t = k; t < u_mono.word.size(); ++t) suffix_depth += u_mono.word[t].second;
  long bound = std::numeric_limits<long>::min();
  for (const auto& [vm, vc] : v.terms())
    bound = std::max(bound, suffix_depth + vm.word_depth() - L.inner(u_mono.point, vm.point));
  return bound;
}

using WordMemo = std::map<std::pair<std::size_t, long>, State>;

// u_n v for the monomial whose word suffix starts at position k; memo is valid
// for this (u_mono, v) pair only.
State mode_word(const Monomial& u_mono, std::size_t k, long n, const State& v, WordMemo& memo) {
  const ContextPtr& ctx = v.context();
  if (v.is_zero()) return State(ctx);
  if (k == u_mono.word.size()) return lattice_mode(u_mono.point, n, v);

  const auto key = std::make_pair(k, n);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  const auto [dir, p] = u_mono.word[k];
  State out(ctx);

  // creation side: h(-p-i) (u'_{n+i} v)
  const long bound = vanish_bound_suffix(ctx->lattice, u_mono, k + 1, v);
  for (long i = 0; n + i < bound; ++i) {
    State inner = mode_word(u_mono, k + 1, n + i, v, memo);
    if (inner.is_zero()) continue;
    out.axpy(Rational(binomial(p + i - 1, p - 1)),
             heisenberg_basis_act(dir, -(p + i), inner));
  }

  // annihilation side: (-1)^{p-1} u'_{n-p-i} (h(i) v)
  const Rational sgn = (p % 2 == 1) ? Rational(1) : Rational(-1);
  const long max_depth = v.max_word_depth();
  for (long i = 0; i <= max_depth; ++i) {
    State hv = heisenberg_basis_act(dir, i, v);
    if (hv.is_zero()) continue;
    WordMemo fresh;  // new right-hand state, memo does not transfer
    State inner = mode_word(u_mono, k + 1, n - p - i, hv, fresh);
    if (inner.is_zero()) continue;
    out.axpy(sgn * Rational(binomial(p + i - 1, p - 1)), inner);
  }

  memo.emplace(key, out);
  return out;
}

}  // namespace

State mode(const State& u, long n, const State& v) {
  if (u.is_zero() || v.is_zero()) return State(v.context() ? v.context() : u.context());
  if (!u.compatible_with(v)) throw std::invalid_argument("mode: state context mismatch");
  State out(v.context());
  for (const auto& [um, uc] : u.terms()) {
    WordMemo memo;
    out.axpy(uc, mode_word(um, 0, n, v, memo));
  }
  return out;
}

namespace {

// Direct truncated expansion of
//   :(d^(p1-1)h_{c1}(z)/(p1-1)!) ... (d^(pK-1)h_{cK}(z)/(pK-1)!) Y(iota(e_a),z): v,
// one field-mode assignment at a time. Annihilation picks act on the intact
// right-hand monomial, the charge pairing is read before translation, creation
// picks and Schur terms are appended afterwards.
struct NaiveTermContext {
  const ContextPtr& ctx;
  const Monomial& u_mono;
  const Monomial& v_mono;
  Rational base_coeff;
  long n;
  long pairing;      // <alpha, mu>
  long depth_sum;    // total word depth of v_mono
  long p_total;      // sum of derivative orders p_t
  State* out;
};

void enumerate_assignments(const NaiveTermContext& tc, std::size_t t, long mode_sum,
                           long ann_degree, std::vector<long>& picks) {
  const std::size_t K = tc.u_mono.word.size();
  if (t == K) {
    for (long d = 0; d + ann_degree <= tc.depth_sum; ++d) {
      const long r = -tc.n - 1 - tc.pairing + d + mode_sum + tc.p_total;
      if (r < 0) continue;
      // annihilation: exponential part then positive field picks
      State w = State::monomial(tc.ctx, tc.v_mono, tc.base_coeff);
      w = schur_expand(tc.u_mono.point, d, w, /*annihilate=*/true);
      for (std::size_t s = 0; s < K && !w.is_zero(); ++s)
        if (picks[s] > 0) w = heisenberg_basis_act(tc.u_mono.word[s].first, picks[s], w);
      if (w.is_zero()) continue;
      // zero modes pair against the untranslated charge
      Rational zero_mode_factor(1);
      for (std::size_t s = 0; s < K; ++s) {
        if (picks[s] != 0) continue;
        long pair = 0;
        for (int j = 0; j < tc.ctx->rank(); ++j)
          pair += static_cast<long>(tc.ctx->lattice.gram()(tc.u_mono.word[s].first, j)) *
                  tc.v_mono.point[j];
        zero_mode_factor *= Rational(pair);
      }
      if (zero_mode_factor == 0) continue;
      w *= zero_mode_factor;
      // derivative-field coefficients binom(-m_t - 1, p_t - 1)
      Rational field_coeff(1);
      for (std::size_t s = 0; s < K; ++s)
        field_coeff *= Rational(binomial(-picks[s] - 1, tc.u_mono.word[s].second - 1));
      if (field_coeff == 0) continue;
      w *= field_coeff;
      // translate, then creation picks and the Schur exponential
      w = lattice_translate(tc.u_mono.point, w);
      for (std::size_t s = 0; s < K && !w.is_zero(); ++s)
        if (picks[s] < 0) w = heisenberg_basis_act(tc.u_mono.word[s].first, picks[s], w);
      w = schur_expand(tc.u_mono.point, r, w, /*annihilate=*/false);
      *tc.out += w;
    }
    return;
  }
  // r >= 0 needs mode_sum large enough; the best future assignment adds
  // depth_sum per remaining field.
  const long remaining = static_cast<long>(tc.u_mono.word.size() - t);
  const long needed = tc.n + 1 + tc.pairing - tc.p_total - tc.depth_sum;  // with d <= depth_sum
  const long lo = needed - mode_sum - (remaining - 1) * tc.depth_sum - tc.p_total;
  // crude but safe lower bound; never misses a contributing assignment
  const long lo_clamped = std::min<long>(-1, lo);
  for (long m = lo_clamped; m <= tc.depth_sum; ++m) {
    if (m > 0 && ann_degree + m > tc.depth_sum) break;  // annihilates to zero
    picks[t] = m;
    enumerate_assignments(tc, t + 1, mode_sum + m, ann_degree + (m > 0 ? m : 0), picks);
  }
  picks[t] = 0;
}

}  // namespace

State mode_naive(const State& u, long n, const State& v) {
  if (u.is_zero() || v.is_zero()) return State(v.context() ? v.context() : u.context());
  if (!u.compatible_with(v)) throw std::invalid_argument("mode: state context mismatch");
  const ContextPtr& ctx = v.context();
  State out(ctx);
  for (const auto& [um, uc] : u.terms()) {
    for (const auto& [vm, vc] : v.terms()) {
      long p_total = 0;
      for (const auto& [dir, p] : um.word) p_total += p;
      NaiveTermContext tc{ctx,
                          um,
                          vm,
                          uc * vc,
                          n,
                          ctx->lattice.inner(um.point, vm.point),
                          vm.word_depth(),
                          p_total,
                          &out};
      std::vector<long> picks(um.word.size(), 0);
      enumerate_assignments(tc, 0, 0, 0, picks);
    }
  }
  return out;
}

State virasoro_mode(const State& omega, long n, const State& v) { return mode(omega, n + 1, v); }

Rational central_charge(const State& omega) {
  const ContextPtr& ctx = omega.context();
  if (!ctx) throw std::domain_error("central_charge of the zero state");
  const State vac = State::vacuum(ctx);
  const State lm2 = virasoro_mode(omega, -2, vac);
  const State top = virasoro_mode(omega, 2, lm2);
  if (top.is_zero()) return Rational(0);
  const Monomial vac_mono{IntVec::Zero(ctx->rank()), {}};
  if (top.term_count() != 1 || top.terms().begin()->first != vac_mono)
    throw std::domain_error("L(2)L(-2)1 is not a multiple of the vacuum; not conformal");
  return Rational(2) * top.terms().begin()->second;
}

namespace {

int parity_sign(const State& u, const State& v) {
  const Parity pu = parity(u), pv = parity(v);
  if (pu == Parity::Mixed || pv == Parity::Mixed)
    throw std::invalid_argument("parity-mixed state in a super-sign bracket check");
  return (pu == Parity::Odd && pv == Parity::Odd) ? -1 : 1;
}

}  // namespace

CheckReport check_commutator(const State& u, long p, const State& v, long q, const State& w) {
  CheckReport report;
  report.suite = "commutator";
  report.claim =
      "u_p(v_q w) - (-1)^{|u||v|} v_q(u_p w) = sum_i C(p,i) (u_i v)_{p+q-i} w, exactly";
  report.parameters["p"] = std::to_string(p);
  report.parameters["q"] = std::to_string(q);

  const int sigma = parity_sign(u, v);
  State lhs = mode(u, p, mode(v, q, w));
  lhs.axpy(Rational(-sigma), mode(v, q, mode(u, p, w)));

  State rhs(w.context());
  const long bound = mode_vanish_bound(u, v);
  for (long i = 0; i < bound; ++i) {
    State uv = mode(u, i, v);
    if (uv.is_zero()) continue;
    rhs.axpy(Rational(binomial(p, i)), mode(uv, p + q - i, w));
  }

  if (lhs == rhs)
    report.add_pass("commutator");
  else
    report.add_fail("commutator", "sides differ", {{"lhs", to_text(lhs)}, {"rhs", to_text(rhs)}});
  return report;
}

CheckReport check_skew_symmetry(const State& u, const State& v, const State& omega,
                                long n_min, long n_max) {
  CheckReport report;
  report.suite = "skew-symmetry";
  report.claim = "u_n v = (-1)^{|u||v|} sum_i (-1)^{n+1+i} L(-1)^i (v_{n+i} u) / i!";
  report.parameters["n_min"] = std::to_string(n_min);
  report.parameters["n_max"] = std::to_string(n_max);

  const int sigma = parity_sign(u, v);
  const long bound = mode_vanish_bound(v, u);
  for (long n = n_min; n <= n_max; ++n) {
    State lhs = mode(u, n, v);
    State rhs(u.context());
    Rational inv_fact(1);
    State vl(u.context());
    for (long i = 0; n + i < bound; ++i) {
      if (i > 0) inv_fact /= Rational(i);
      State inner = mode(v, n + i, u);
      for (long t = 0; t < i && !inner.is_zero(); ++t) inner = virasoro_mode(omega, -1, inner);
      const bool negative = ((n + 1 + i) % 2 + 2) % 2 == 1;
      rhs.axpy((negative ? -inv_fact : inv_fact) * Rational(sigma), inner);
    }
    const std::string name = "n=" + std::to_string(n);
    if (lhs == rhs)
      report.add_pass(name);
    else
      report.add_fail(name, "sides differ", {{"lhs", to_text(lhs)}, {"rhs", to_text(rhs)}});
  }
  return report;
}

}  // namespace latvoa
