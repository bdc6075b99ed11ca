#include "latvoa/state.hpp"

#include <algorithm>
#include <sstream>

namespace latvoa {

Monomial Monomial::with_creation(int dir, int depth) const {
  Monomial out = *this;
  auto it = std::upper_bound(out.word.begin(), out.word.end(), std::make_pair(dir, depth));
  out.word.insert(it, {dir, depth});
  return out;
}

void Monomial::normalize() { std::sort(word.begin(), word.end()); }

bool operator<(const Monomial& a, const Monomial& b) {
  const int c = lex_compare(a.point, b.point);
  if (c != 0) return c < 0;
  return a.word < b.word;
}

std::shared_ptr<const Context> Context::make(Lattice lattice) {
  TwoCocycle eps = TwoCocycle::standard(lattice);
  return std::make_shared<const Context>(Context{std::move(lattice), std::move(eps)});
}

std::shared_ptr<const Context> Context::make(Lattice lattice, TwoCocycle cocycle) {
  if (!(cocycle.lattice() == lattice))
    throw std::invalid_argument("cocycle was built for a different lattice");
  return std::make_shared<const Context>(Context{std::move(lattice), std::move(cocycle)});
}

Rational monomial_weight(const Lattice& lattice, const Monomial& m) {
  Rational w(lattice.inner(m.point, m.point));
  w /= 2;
  w += Rational(m.word_depth());
  return w;
}

State State::vacuum(const ContextPtr& ctx) {
  return lattice_point(ctx, IntVec::Zero(ctx->rank()));
}

State State::lattice_point(const ContextPtr& ctx, const IntVec& point) {
  return monomial(ctx, Monomial{point, {}});
}

State State::monomial(const ContextPtr& ctx, Monomial m, const Rational& coeff) {
  if (m.point.size() != ctx->rank())
    throw std::invalid_argument("monomial point length does not match lattice rank");
  for (const auto& [dir, depth] : m.word)
    if (dir < 0 || dir >= ctx->rank() || depth < 1)
      throw std::invalid_argument("monomial word factor out of range");
  m.normalize();
  State s(ctx);
  s.add_term(m, coeff);
  return s;
}

bool State::compatible_with(const State& other) const {
  if (!ctx_ || !other.ctx_) return is_zero() || other.is_zero();
  if (ctx_ == other.ctx_) return true;
  return ctx_->lattice == other.ctx_->lattice && ctx_->cocycle == other.ctx_->cocycle;
}

const Monomial& State::leading_monomial() const {
  if (terms_.empty()) throw std::logic_error("zero state has no leading monomial");
  return terms_.begin()->first;
}

Rational State::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void State::add_term(const Monomial& m, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

State& State::operator+=(const State& other) {
  if (!compatible_with(other)) throw std::invalid_argument("state context mismatch");
  if (!ctx_) ctx_ = other.ctx_;
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

State& State::operator-=(const State& other) {
  if (!compatible_with(other)) throw std::invalid_argument("state context mismatch");
  if (!ctx_) ctx_ = other.ctx_;
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

State& State::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= scalar;
  return *this;
}

State& State::operator/=(const Rational& scalar) {
  if (scalar == 0) throw std::invalid_argument("division of a state by zero");
  for (auto& [m, c] : terms_) c /= scalar;
  return *this;
}

void State::axpy(const Rational& scalar, const State& other) {
  if (scalar == 0) return;
  if (!compatible_with(other)) throw std::invalid_argument("state context mismatch");
  if (!ctx_) ctx_ = other.ctx_;
  for (const auto& [m, c] : other.terms_) add_term(m, scalar * c);
}

long State::max_word_depth() const {
  long d = 0;
  for (const auto& [m, c] : terms_) d = std::max<long>(d, m.max_depth());
  return d;
}

long State::max_total_depth() const {
  long d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.word_depth());
  return d;
}

State heisenberg_act(const RatVec& h, long n, const State& v) {
  if (v.is_zero()) return v;
  const ContextPtr& ctx = v.context();
  if (h.size() != ctx->rank()) throw std::invalid_argument("direction vector length mismatch");
  State out(ctx);
  for (int d = 0; d < ctx->rank(); ++d) {
    if (h[d] == 0) continue;
    out.axpy(h[d], heisenberg_basis_act(d, n, v));
  }
  // the zero mode scales by <h, point> = h^T G point, handled per direction above
  return out;
}

State heisenberg_basis_act(int dir, long n, const State& v) {
  if (v.is_zero()) return v;
  const ContextPtr& ctx = v.context();
  const Lattice& L = ctx->lattice;
  if (dir < 0 || dir >= ctx->rank()) throw std::invalid_argument("direction index out of range");
  State out(ctx);
  if (n < 0) {
    for (const auto& [m, c] : v.terms()) out.add_term(m.with_creation(dir, static_cast<int>(-n)), c);
    return out;
  }
  if (n == 0) {
    for (const auto& [m, c] : v.terms()) {
      long pairing = 0;
      for (int j = 0; j < ctx->rank(); ++j) pairing += static_cast<long>(L.gram()(dir, j)) * m.point[j];
      if (pairing != 0) out.add_term(m, c * Rational(pairing));
    }
    return out;
  }
  // n > 0: remove one matching factor per distinct direction, with multiplicity
  for (const auto& [m, c] : v.terms()) {
    for (std::size_t i = 0; i < m.word.size(); ++i) {
      if (m.word[i].second != n) continue;
      if (i > 0 && m.word[i] == m.word[i - 1]) continue;  // count each distinct factor once
      long mult = 0;
      for (std::size_t j = i; j < m.word.size() && m.word[j] == m.word[i]; ++j) ++mult;
      const int other = m.word[i].first;
      const long pairing = L.gram()(dir, other);
      if (pairing == 0) continue;
      Monomial reduced = m;
      reduced.word.erase(reduced.word.begin() + static_cast<long>(i));
      out.add_term(reduced, c * Rational(mult * n * pairing));
    }
  }
  return out;
}

State lattice_translate(const IntVec& a, const State& v) {
  if (v.is_zero()) return v;
  const ContextPtr& ctx = v.context();
  if (a.size() != ctx->rank()) throw std::invalid_argument("shift length mismatch");
  State out(ctx);
  for (const auto& [m, c] : v.terms()) {
    const int sign = ctx->cocycle.eval(a, m.point);
    Monomial shifted = m;
    shifted.point = (m.point + a).eval();
    out.add_term(shifted, sign == 1 ? c : -c);
  }
  return out;
}

State lattice_translate(const LatticeElement& a, const State& v) {
  return lattice_translate(a.integer_coords(), v);
}

std::optional<Rational> weight(const State& v) {
  if (v.is_zero()) return std::nullopt;
  const Lattice& L = v.context()->lattice;
  std::optional<Rational> w;
  for (const auto& [m, c] : v.terms()) {
    Rational mw = monomial_weight(L, m);
    if (!w)
      w = mw;
    else if (*w != mw)
      return std::nullopt;
  }
  return w;
}

bool is_weight_homogeneous(const State& v) { return v.is_zero() || weight(v).has_value(); }

std::optional<IntVec> charge(const State& v) {
  if (v.is_zero()) return std::nullopt;
  const IntVec& first = v.terms().begin()->first.point;
  for (const auto& [m, c] : v.terms())
    if (m.point != first) return std::nullopt;
  return first;
}

Parity parity_of_norm(long norm) { return (norm % 2 + 2) % 2 ? Parity::Odd : Parity::Even; }

Parity parity(const State& v) {
  if (v.is_zero()) return Parity::Even;
  const Lattice& L = v.context()->lattice;
  std::optional<Parity> p;
  for (const auto& [m, c] : v.terms()) {
    Parity mp = parity_of_norm(L.norm(m.point));
    if (!p)
      p = mp;
    else if (*p != mp)
      return Parity::Mixed;
  }
  return *p;
}

std::string to_text(const State& v) {
  if (v.is_zero()) return "0";
  std::ostringstream os;
  bool first_line = true;
  for (const auto& [m, c] : v.terms()) {
    if (!first_line) os << "\n";
    first_line = false;
    os << to_string(c) << " e[";
    for (Eigen::Index i = 0; i < m.point.size(); ++i) os << (i ? "," : "") << m.point[i];
    os << "]";
    for (const auto& [dir, depth] : m.word) os << " h(" << dir + 1 << ",-" << depth << ")";
  }
  return os.str();
}

namespace {

void fail_parse(const std::string& line) {
  throw std::invalid_argument("cannot parse state term '" + line + "'");
}

}  // namespace

State state_from_text(const ContextPtr& ctx, const std::string& text) {
  State out(ctx);
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    // trim
    const auto begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos) continue;
    const auto end = line.find_last_not_of(" \t\r");
    line = line.substr(begin, end - begin + 1);
    if (line.empty()) continue;
    if (line == "0") continue;

    std::istringstream ls(line);
    std::string coeff_str, point_str;
    if (!(ls >> coeff_str >> point_str)) fail_parse(line);
    Rational coeff = rational_from_string(coeff_str);
    if (point_str.size() < 3 || point_str.substr(0, 2) != "e[" || point_str.back() != ']')
      fail_parse(line);
    Monomial m;
    m.point = IntVec(ctx->rank());
    {
      std::istringstream ps(point_str.substr(2, point_str.size() - 3));
      std::string item;
      int idx = 0;
      while (std::getline(ps, item, ',')) {
        if (idx >= ctx->rank()) fail_parse(line);
        m.point[idx++] = std::stoi(item);
      }
      if (idx != ctx->rank()) fail_parse(line);
    }
    std::string factor;
    while (ls >> factor) {
      int dir = 0, neg_depth = 0;
      if (std::sscanf(factor.c_str(), "h(%d,%d)", &dir, &neg_depth) != 2 || neg_depth >= 0)
        fail_parse(line);
      m.word.emplace_back(dir - 1, -neg_depth);
    }
    m.normalize();
    out += State::monomial(ctx, m, coeff);
  }
  return out;
}

}  // namespace latvoa
