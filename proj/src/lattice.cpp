#include "latvoa/lattice.hpp"

#include <Eigen/LU>

#include <regex>
#include <sstream>

namespace latvoa {

IntVec LatticeElement::integer_coords() const {
  if (!coset.empty())
    throw std::invalid_argument("element of coset '" + coset + "' is not a lattice element");
  IntVec out(coords.size());
  for (Eigen::Index i = 0; i < coords.size(); ++i) {
    if (!is_integer(coords[i]))
      throw std::invalid_argument("non-integral coordinate " + to_string(coords[i]));
    out[i] = static_cast<int>(to_long(coords[i]));
  }
  return out;
}

LatticeElement element(const IntVec& coords) { return LatticeElement{to_rational(coords), ""}; }

LatticeElement coset_element(const RatVec& coords, std::string coset_name) {
  if (coset_name.empty()) throw std::invalid_argument("coset elements need a coset name");
  return LatticeElement{coords, std::move(coset_name)};
}

Lattice::Lattice(IntMat gram, std::vector<std::string> basis_names)
    : gram_(std::move(gram)), basis_names_(std::move(basis_names)) {
  if (gram_.rows() == 0 || gram_.rows() != gram_.cols())
    throw std::invalid_argument("Gram matrix must be square and nonempty");
  if (gram_ != gram_.transpose().eval())
    throw std::invalid_argument("Gram matrix must be symmetric");
  if (basis_names_.empty()) {
    for (int i = 0; i < rank(); ++i) basis_names_.push_back("b" + std::to_string(i + 1));
  }
  if (static_cast<int>(basis_names_.size()) != rank())
    throw std::invalid_argument("basis name count must match the rank");
}

long Lattice::inner(const IntVec& a, const IntVec& b) const {
  if (a.size() != rank() || b.size() != rank())
    throw std::invalid_argument("coordinate length does not match lattice rank");
  long acc = 0;
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j) acc += static_cast<long>(a[i]) * gram_(i, j) * b[j];
  return acc;
}

Rational Lattice::inner(const LatticeElement& a, const LatticeElement& b) const {
  if (a.coords.size() != rank() || b.coords.size() != rank())
    throw std::invalid_argument("coordinate length does not match lattice rank");
  Rational acc(0);
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j) acc += a.coords[i] * Rational(gram_(i, j)) * b.coords[j];
  return acc;
}

int Lattice::parity(const LatticeElement& a) const {
  return parity(a.integer_coords());
}

bool Lattice::is_even() const {
  for (int i = 0; i < rank(); ++i)
    if (gram_(i, i) % 2 != 0) return false;
  return true;
}

bool Lattice::positive_definite() const {
  RatMat g = to_rational(gram_);
  for (int k = 1; k <= rank(); ++k) {
    Rational det = RatMat(g.topLeftCorner(k, k)).determinant();
    if (det <= 0) return false;
  }
  return true;
}

IntVec Lattice::basis_vector(int i) const {
  if (i < 0 || i >= rank()) throw std::out_of_range("basis index");
  IntVec v = IntVec::Zero(rank());
  v[i] = 1;
  return v;
}

Lattice lattice_a1m(int m) {
  if (m < 1) throw std::invalid_argument("A1m needs m >= 1");
  IntMat g = 2 * IntMat::Identity(m, m);
  std::vector<std::string> names;
  for (int i = 1; i <= m; ++i) names.push_back("alpha" + std::to_string(i));
  return Lattice(g, names);
}

Lattice lattice_gamma(int m, int k) {
  if (m < 1 || k < 0) throw std::invalid_argument("Gamma needs m >= 1, k >= 0");
  IntMat g = IntMat::Constant(m, m, k) + 2 * IntMat::Identity(m, m);
  std::vector<std::string> names;
  for (int i = 1; i <= m; ++i) names.push_back("gamma" + std::to_string(i));
  return Lattice(g, names);
}

Lattice lattice_ln(int n) {
  if (n == 0) throw std::invalid_argument("Ln needs n != 0");
  IntMat g(1, 1);
  g(0, 0) = n;
  return Lattice(g, {"beta"});
}

namespace {
Lattice orthogonal_a_block_plus_beta(int m, long beta_norm) {
  IntMat g = IntMat::Zero(m + 1, m + 1);
  g.topLeftCorner(m, m) = 2 * IntMat::Identity(m, m);
  g(m, m) = static_cast<int>(beta_norm);
  std::vector<std::string> names;
  for (int i = 1; i <= m; ++i) names.push_back("alpha" + std::to_string(i));
  names.push_back("beta");
  return Lattice(g, names);
}
}  // namespace

Lattice lattice_gamma1(int m, int k) {
  if (m < 1 || k < 0) throw std::invalid_argument("Gamma1 needs m >= 1, k >= 0");
  return orthogonal_a_block_plus_beta(m, k);
}

Lattice lattice_section5(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("SectionFiveL needs m, n >= 1");
  return orthogonal_a_block_plus_beta(m, -2L * n * (static_cast<long>(m) * n + 1));
}

Lattice named_lattice(const std::string& spec) {
  static const std::regex re(R"(^\s*([A-Za-z0-9]+)\s*\(\s*(-?\d+)\s*(?:,\s*(-?\d+)\s*)?\)\s*$)");
  std::smatch m;
  if (!std::regex_match(spec, m, re))
    throw std::invalid_argument("cannot parse lattice spec '" + spec +
                                "'; expected Kind(a) or Kind(a,b)");
  const std::string kind = m[1];
  const int a = std::stoi(m[2]);
  const bool has_b = m[3].matched;
  const int b = has_b ? std::stoi(m[3]) : 0;
  if (kind == "A1m" && !has_b) return lattice_a1m(a);
  if (kind == "Ln" && !has_b) return lattice_ln(a);
  if (kind == "Gamma" && has_b) return lattice_gamma(a, b);
  if (kind == "Gamma1" && has_b) return lattice_gamma1(a, b);
  if (kind == "SectionFiveL" && has_b) return lattice_section5(a, b);
  throw std::invalid_argument("unknown lattice kind or wrong arity in '" + spec + "'");
}

IntVec BasisChange::forward(const IntVec& new_coords) const {
  if (new_coords.size() != matrix.rows()) throw std::invalid_argument("coordinate length mismatch");
  return (matrix.transpose() * new_coords).eval();
}

std::optional<IntVec> BasisChange::inverse(const IntVec& old_coords) const {
  if (old_coords.size() != matrix.cols()) throw std::invalid_argument("coordinate length mismatch");
  RatVec x = mt_inverse_ * to_rational(old_coords);
  IntVec out(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    if (!is_integer(x[i])) return std::nullopt;  // outside the image sublattice
    out[i] = static_cast<int>(to_long(x[i]));
  }
  return out;
}

BasisChange change_of_basis(const Lattice& lattice, const IntMat& m) {
  if (m.rows() != m.cols() || m.rows() != lattice.rank())
    throw std::invalid_argument("basis-change matrix must be rank x rank");
  RatMat mt = to_rational(m).transpose();
  Rational det = mt.determinant();
  if (det == 0) throw std::invalid_argument("basis-change matrix is singular");
  IntMat new_gram = m * lattice.gram() * m.transpose();
  return BasisChange(Lattice(new_gram), m, mt.inverse().eval());
}

}  // namespace latvoa
