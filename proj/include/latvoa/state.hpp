#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "latvoa/cocycle.hpp"
#include "latvoa/lattice.hpp"
#include "latvoa/rational.hpp"

namespace latvoa {

// Canonical basis monomial iota(e_point) (x) b_{d1}(-n1)...b_{dk}(-nk) of the
// untwisted space V_L = C[L] (x) S(h^-). Heisenberg generators are indexed by
// the lattice basis itself (never an orthonormal one), so every structure
// constant stays rational. The word is kept sorted (direction-major,
// depth-minor); creation operators commute, so the sorted form is unique and
// state equality is plain map equality.
struct Monomial {
  IntVec point;                            // charge: iota(e_point)
  std::vector<std::pair<int, int>> word;   // (direction 0-based, depth >= 1)

  long word_depth() const {
    long d = 0;
    for (const auto& [dir, depth] : word) d += depth;
    return d;
  }
  int max_depth() const {
    int d = 0;
    for (const auto& [dir, depth] : word) d = std::max(d, depth);
    return d;
  }

  Monomial with_creation(int dir, int depth) const;  // sorted insert of one factor
  void normalize();                                  // sorts the word

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.word == b.word && a.point == b.point;
  }
};

// Charge-major total order; this fixes serialization, echelon pivots and the
// bigraded character readout at once.
bool operator<(const Monomial& a, const Monomial& b);

// Shared algebra context: one lattice, one fixed cocycle section. All states
// in a computation point at the same context.
struct Context {
  Lattice lattice;
  TwoCocycle cocycle;

  static std::shared_ptr<const Context> make(Lattice lattice);
  static std::shared_ptr<const Context> make(Lattice lattice, TwoCocycle cocycle);

  int rank() const { return lattice.rank(); }
};
using ContextPtr = std::shared_ptr<const Context>;

Rational monomial_weight(const Lattice& lattice, const Monomial& m);

// Finite rational-linear combination of basis monomials; the universal value
// type of the engine. Immutable in spirit: every operation returns a fresh
// state. No zero coefficients are ever stored.
class State {
 public:
  State() = default;
  explicit State(ContextPtr ctx) : ctx_(std::move(ctx)) {}

  static State vacuum(const ContextPtr& ctx);
  static State lattice_point(const ContextPtr& ctx, const IntVec& point);
  static State monomial(const ContextPtr& ctx, Monomial m, const Rational& coeff = Rational(1));

  const ContextPtr& context() const { return ctx_; }
  bool compatible_with(const State& other) const;

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  const Monomial& leading_monomial() const;          // smallest in canonical order
  Rational coefficient(const Monomial& m) const;

  void add_term(const Monomial& m, const Rational& coeff);  // accumulate, drop zeros
  State& operator+=(const State& other);
  State& operator-=(const State& other);
  State& operator*=(const Rational& scalar);
  State& operator/=(const Rational& scalar);
  void axpy(const Rational& scalar, const State& other);    // *this += scalar*other

  friend State operator+(State a, const State& b) { return a += b; }
  friend State operator-(State a, const State& b) { return a -= b; }
  friend State operator*(const Rational& s, State a) { return a *= s; }
  friend bool operator==(const State& a, const State& b) { return a.terms_ == b.terms_; }

  long max_word_depth() const;  // max over monomials of the largest single depth
  long max_total_depth() const;

 private:
  ContextPtr ctx_;
  std::map<Monomial, Rational> terms_;
};

// Heisenberg action of h(n) for a rational coordinate vector h:
//   n < 0  append creation factors, distributing h over basis directions;
//   n = 0  scale each monomial by <h, point>;
//   n > 0  annihilate via [h(n), h'(-p)] = n delta_{n,p} <h,h'>.
State heisenberg_act(const RatVec& h, long n, const State& v);
State heisenberg_basis_act(int dir, long n, const State& v);  // h = basis vector

// Action of the group element e_a: shifts every charge by a and multiplies by
// the cocycle sign eps(a, point). Rejects coset elements.
State lattice_translate(const IntVec& a, const State& v);
State lattice_translate(const LatticeElement& a, const State& v);

// L(0) eigenvalue (1/2)<point,point> + sum of depths when the state is
// homogeneous; nullopt for inhomogeneous or zero states.
std::optional<Rational> weight(const State& v);
bool is_weight_homogeneous(const State& v);

// Common lattice point of all monomials; nullopt when charges are mixed.
std::optional<IntVec> charge(const State& v);

enum class Parity { Even, Odd, Mixed };
Parity parity(const State& v);
Parity parity_of_norm(long norm);

// Bit-exact text serialization: one term per line in canonical order,
//   <coeff> e[c1,...,cr] h(i,-n) h(i,-n) ...
// with 1-based direction indices and canonical rational coefficients. The
// zero state serializes as "0".
std::string to_text(const State& v);
State state_from_text(const ContextPtr& ctx, const std::string& text);

}  // namespace latvoa
