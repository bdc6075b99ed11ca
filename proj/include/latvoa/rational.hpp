#pragma once

#include <gmpxx.h>
#include <Eigen/Core>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace Eigen {

// Exact rational scalar for Eigen: no epsilon, no precision loss.
template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  using Real = mpq_class;
  using NonInteger = mpq_class;
  using Literal = mpq_class;
  using Nested = mpq_class;
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 24,
    MulCost = 32
  };
};

}  // namespace Eigen

namespace latvoa {

using Rational = mpq_class;
using BigInt = mpz_class;

using RatVec = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using RatMat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using IntVec = Eigen::VectorXi;
using IntMat = Eigen::MatrixXi;

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline long to_long(const Rational& q) {
  if (!is_integer(q) || !q.get_num().fits_slong_p())
    throw std::invalid_argument("rational is not a small integer: " + q.get_str());
  return q.get_num().get_si();
}

// binom(top, k) for arbitrary integer top (falling factorial / k!), always integral.
inline BigInt binomial(long top, long k) {
  if (k < 0) return BigInt(0);
  BigInt res(1);
  for (long t = 0; t < k; ++t) {
    res *= BigInt(top - t);
    res /= BigInt(t + 1);  // exact at each step
  }
  return res;
}

inline BigInt factorial(long n) {
  BigInt res(1);
  for (long t = 2; t <= n; ++t) res *= t;
  return res;
}

// Canonical text form: "p" when the denominator is 1, else "p/q".
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Rational rational_from_string(std::string_view s) {
  Rational q;
  if (q.set_str(std::string(s), 10) != 0)
    throw std::invalid_argument("cannot parse rational: " + std::string(s));
  q.canonicalize();
  return q;
}

inline int lex_compare(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

inline RatVec to_rational(const IntVec& v) {
  RatVec r(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) r[i] = Rational(v[i]);
  return r;
}

inline RatMat to_rational(const IntMat& m) {
  RatMat r(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

// Deterministic RNG for property checks; std::mt19937_64 output is
// bit-stable across platforms, distribution helpers are hand-rolled so
// sequences do not depend on the standard library vendor.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

  std::uint64_t next() {
    // splitmix64
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [lo, hi] inclusive
  long range(long lo, long hi) {
    if (hi < lo) throw std::invalid_argument("Rng::range: empty interval");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(next() % span);
  }

 private:
  std::uint64_t state_;
};

}  // namespace latvoa
