#pragma once

#include <cstdint>

#include "latvoa/lattice.hpp"
#include "latvoa/report.hpp"

namespace latvoa {

// Bimultiplicative 2-cocycle eps: L x L -> {+-1} fixing the twisted group
// algebra multiplication e_a e_b = eps(a,b) e_{a+b}. Stored as the exponent
// table on basis pairs, eps(b_i,b_j) = (-1)^{table(i,j)}, and extended
// bimultiplicatively.
//
// The standard section is upper-triangular: table(i,j) = 0 for i <= j and
// (<b_i,b_j> + <b_i,b_i><b_j,b_j>) mod 2 for i > j. The parity product term
// is what makes the superalgebra sign bookkeeping close on odd lattices; on
// even lattices it vanishes and the table is the familiar (-1)^{<b_i,b_j>}.
// With this section
//     eps(a,b) eps(b,a) = (-1)^{<a,b> + <a,a><b,b>}
// holds identically, and the 2-cocycle identity
//     eps(a,b) eps(a+b,c) = eps(b,c) eps(a,b+c)
// holds because bimultiplicative maps are cocycles.
class TwoCocycle {
 public:
  static TwoCocycle standard(const Lattice& lattice);

  // Arbitrary +-1 sign table, for tests and alternative section choices.
  static TwoCocycle from_sign_table(const Lattice& lattice,
                                    const Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic>& signs);

  const Lattice& lattice() const { return lattice_; }

  int sign_on_basis(int i, int j) const { return table_(i, j) ? -1 : 1; }

  // eps(a, b) for integral coordinate vectors.
  int eval(const IntVec& a, const IntVec& b) const;
  int eval(const LatticeElement& a, const LatticeElement& b) const;

  bool operator==(const TwoCocycle& other) const {
    return lattice_ == other.lattice_ && table_ == other.table_;
  }

 private:
  TwoCocycle(Lattice lattice, Eigen::Matrix<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic> table)
      : lattice_(std::move(lattice)), table_(std::move(table)) {}

  Lattice lattice_;
  Eigen::Matrix<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic> table_;  // F_2 exponents
};

// Checks, with witnesses on failure:
//  - bimultiplicativity against explicit products on random triples,
//  - the commutator law eps(a,b)eps(b,a) = (-1)^{<a,b> + <a,a><b,b>} on all
//    basis pairs and random pairs (the parity term only matters when both
//    arguments have odd norm),
//  - the 2-cocycle identity on sample_count random integral triples.
CheckReport verify_cocycle(const TwoCocycle& eps, int sample_count, std::uint64_t seed);

}  // namespace latvoa
