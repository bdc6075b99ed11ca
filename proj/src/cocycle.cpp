#include "latvoa/cocycle.hpp"

#include <sstream>

namespace latvoa {

TwoCocycle TwoCocycle::standard(const Lattice& lattice) {
  const int r = lattice.rank();
  Eigen::Matrix<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic> t =
      Eigen::Matrix<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic>::Zero(r, r);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < i; ++j) {
      const long g = lattice.gram()(i, j);
      const long pp = static_cast<long>(lattice.gram()(i, i)) * lattice.gram()(j, j);
      t(i, j) = static_cast<std::uint8_t>(((g + pp) % 2 + 2) % 2);
    }
  }
  return TwoCocycle(lattice, std::move(t));
}

TwoCocycle TwoCocycle::from_sign_table(
    const Lattice& lattice, const Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic>& signs) {
  const int r = lattice.rank();
  if (signs.rows() != r || signs.cols() != r)
    throw std::invalid_argument("sign table must be rank x rank");
  Eigen::Matrix<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic> t(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      if (signs(i, j) != 1 && signs(i, j) != -1)
        throw std::invalid_argument("sign table entries must be +-1");
      t(i, j) = signs(i, j) == -1 ? 1 : 0;
    }
  return TwoCocycle(lattice, std::move(t));
}

int TwoCocycle::eval(const IntVec& a, const IntVec& b) const {
  const int r = lattice_.rank();
  if (a.size() != r || b.size() != r)
    throw std::invalid_argument("coordinate length does not match lattice rank");
  long e = 0;
  for (int i = 0; i < r; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < r; ++j) {
      if (b[j] == 0 || !table_(i, j)) continue;
      e += static_cast<long>(a[i]) * b[j];
    }
  }
  return (e % 2) ? -1 : 1;
}

int TwoCocycle::eval(const LatticeElement& a, const LatticeElement& b) const {
  return eval(a.integer_coords(), b.integer_coords());
}

namespace {

std::string coords_str(const IntVec& v) {
  std::ostringstream os;
  os << "[";
  for (Eigen::Index i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << "]";
  return os.str();
}

IntVec random_vec(Rng& rng, int rank, long bound) {
  IntVec v(rank);
  for (int i = 0; i < rank; ++i) v[i] = static_cast<int>(rng.range(-bound, bound));
  return v;
}

}  // namespace

CheckReport verify_cocycle(const TwoCocycle& eps, int sample_count, std::uint64_t seed) {
  CheckReport report;
  report.suite = "cocycle";
  report.claim =
      "the standard section is bimultiplicative, satisfies the twisted commutator law "
      "eps(a,b)eps(b,a) = (-1)^{<a,b> + <a,a><b,b>}, and obeys the 2-cocycle identity "
      "eps(a,b)eps(a+b,c) = eps(b,c)eps(a,b+c)";
  report.parameters["samples"] = std::to_string(sample_count);
  report.parameters["seed"] = std::to_string(seed);

  const Lattice& L = eps.lattice();
  const int r = L.rank();
  Rng rng(seed);

  // bimultiplicativity on sampled triples
  {
    bool ok = true;
    CheckItem fail;
    for (int s = 0; s < sample_count && ok; ++s) {
      IntVec a = random_vec(rng, r, 3), a2 = random_vec(rng, r, 3), b = random_vec(rng, r, 3);
      if (eps.eval((a + a2).eval(), b) != eps.eval(a, b) * eps.eval(a2, b) ||
          eps.eval(b, (a + a2).eval()) != eps.eval(b, a) * eps.eval(b, a2)) {
        ok = false;
        report.add_fail("bimultiplicative", "additivity in one slot failed",
                        {{"a", coords_str(a)}, {"a2", coords_str(a2)}, {"b", coords_str(b)}});
      }
    }
    if (ok) report.add_pass("bimultiplicative");
  }

  // commutator law, basis pairs exhaustively then random pairs
  {
    bool ok = true;
    for (int i = 0; i < r && ok; ++i) {
      for (int j = 0; j < r && ok; ++j) {
        if (i == j) continue;
        IntVec a = L.basis_vector(i), b = L.basis_vector(j);
        long expo = L.inner(a, b) + L.norm(a) * L.norm(b);
        int expected = (((expo % 2) + 2) % 2) ? -1 : 1;
        if (eps.eval(a, b) * eps.eval(b, a) != expected) {
          ok = false;
          report.add_fail("commutator-basis-pairs", "law failed on a basis pair",
                          {{"a", coords_str(a)}, {"b", coords_str(b)}});
        }
      }
    }
    if (ok) report.add_pass("commutator-basis-pairs");

    ok = true;
    for (int s = 0; s < sample_count && ok; ++s) {
      IntVec a = random_vec(rng, r, 3), b = random_vec(rng, r, 3);
      if (a == b || a == (-b).eval()) continue;
      long expo = L.inner(a, b) + L.norm(a) * L.norm(b);
      int expected = (((expo % 2) + 2) % 2) ? -1 : 1;
      if (eps.eval(a, b) * eps.eval(b, a) != expected) {
        ok = false;
        report.add_fail("commutator-random-pairs", "law failed on a sampled pair",
                        {{"a", coords_str(a)}, {"b", coords_str(b)}});
      }
    }
    if (ok) report.add_pass("commutator-random-pairs");
  }

  // 2-cocycle identity on sampled triples
  {
    bool ok = true;
    for (int s = 0; s < sample_count && ok; ++s) {
      IntVec a = random_vec(rng, r, 3), b = random_vec(rng, r, 3), c = random_vec(rng, r, 3);
      int lhs = eps.eval(a, b) * eps.eval((a + b).eval(), c);
      int rhs = eps.eval(b, c) * eps.eval(a, (b + c).eval());
      if (lhs != rhs) {
        ok = false;
        report.add_fail("cocycle-identity",
                        "eps(a,b)eps(a+b,c) != eps(b,c)eps(a,b+c)",
                        {{"a", coords_str(a)},
                         {"b", coords_str(b)},
                         {"c", coords_str(c)},
                         {"lhs", lhs == 1 ? "+1" : "-1"},
                         {"rhs", rhs == 1 ? "+1" : "-1"}});
      }
    }
    if (ok) report.add_pass("cocycle-identity");
  }

  return report;
}

}  // namespace latvoa
