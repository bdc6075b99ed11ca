#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "latvoa/rational.hpp"

namespace latvoa {

// Element of a lattice (or of a coset of it) in coordinates over the implicit
// ordered basis. Plain lattice elements have integer coordinates and an empty
// coset tag; half-integer coordinates are only legal inside a named coset.
struct LatticeElement {
  RatVec coords;
  std::string coset;  // empty for plain lattice elements

  bool integral() const {
    if (!coset.empty()) return false;
    for (Eigen::Index i = 0; i < coords.size(); ++i)
      if (!is_integer(coords[i])) return false;
    return true;
  }

  IntVec integer_coords() const;  // throws for coset / non-integral elements
};

LatticeElement element(const IntVec& coords);
LatticeElement coset_element(const RatVec& coords, std::string coset_name);

// Free abelian group of finite rank with an integer symmetric bilinear form,
// presented by its Gram matrix. The form may be indefinite or degenerate.
class Lattice {
 public:
  explicit Lattice(IntMat gram, std::vector<std::string> basis_names = {});

  int rank() const { return static_cast<int>(gram_.rows()); }
  const IntMat& gram() const { return gram_; }
  const std::vector<std::string>& basis_names() const { return basis_names_; }

  long inner(const IntVec& a, const IntVec& b) const;
  Rational inner(const LatticeElement& a, const LatticeElement& b) const;
  long norm(const IntVec& a) const { return inner(a, a); }

  // <a,a> mod 2; the element must be integral.
  int parity(const IntVec& a) const { return static_cast<int>(((norm(a) % 2) + 2) % 2); }
  int parity(const LatticeElement& a) const;

  bool is_even() const;             // all diagonal Gram entries even
  bool positive_definite() const;   // exact, via leading principal minors

  IntVec basis_vector(int i) const;

  bool operator==(const Lattice& other) const { return gram_ == other.gram_; }

 private:
  IntMat gram_;
  std::vector<std::string> basis_names_;
};

// The named lattices of the construction:
//   A1m(m)            rank m, <a_i,a_j> = 2 d_ij
//   Gamma(m,k)        rank m, <g_i,g_j> = 2 d_ij + k
//   Ln(n)             rank 1, <b,b> = n
//   Gamma1(m,k)       rank m+1, 2I block for the a_i, <b,b> = k, a_i _|_ b
//   SectionFiveL(m,n) rank m+1, 2I block for the a_i, <b,b> = -2n(mn+1), a_i _|_ b
Lattice lattice_a1m(int m);
Lattice lattice_gamma(int m, int k);
Lattice lattice_ln(int n);
Lattice lattice_gamma1(int m, int k);
Lattice lattice_section5(int m, int n);

// Parses "A1m(2)", "Gamma(2,1)", "Ln(-4)", "Gamma1(1,2)", "SectionFiveL(1,1)".
Lattice named_lattice(const std::string& spec);

// Rebasing by an integer matrix M whose rows are the new basis vectors in old
// coordinates. New Gram = M G M^T. forward maps new coordinates to old ones;
// inverse maps old coordinates back and is defined on the image sublattice
// (total when det M = +-1).
struct BasisChange {
  Lattice image;
  IntMat matrix;
  IntVec forward(const IntVec& new_coords) const;
  std::optional<IntVec> inverse(const IntVec& old_coords) const;

  BasisChange(Lattice image_, IntMat matrix_, RatMat mt_inverse_)
      : image(std::move(image_)), matrix(std::move(matrix_)), mt_inverse_(std::move(mt_inverse_)) {}

 private:
  RatMat mt_inverse_;  // (M^T)^{-1} over the rationals
};

BasisChange change_of_basis(const Lattice& lattice, const IntMat& m);

}  // namespace latvoa
