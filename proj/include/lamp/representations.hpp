#pragma once

// The representation list for C2 wr C_n: characters chi_u of the cyclic
// quotient, Walsh functions W_A, and the permutation-twisted actions
// pi_A on C^{C_n} (with pi_empty the regular quotient representation and
// pi_{C_n} the one-dimensional sign).

#include <bit>
#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "lamp/group.hpp"
#include "lamp/word_metric.hpp"

namespace lamp {

using Complex = std::complex<double>;
using RepVector = Eigen::VectorXcd;
using RepMatrix = Eigen::MatrixXcd;

struct RepLabel {
  enum class Kind { Character, Walsh };
  Kind kind = Kind::Character;
  std::uint32_t u = 0;     // character index, for Kind::Character
  LampConfig subset = 0;   // A, for Kind::Walsh
  std::uint32_t n = 0;

  static RepLabel character(std::uint32_t u, std::uint32_t n) {
    return {Kind::Character, u, 0, n};
  }
  static RepLabel walsh(LampConfig A, std::uint32_t n) {
    return {Kind::Walsh, 0, A, n};
  }

  bool trivial() const { return kind == Kind::Character && u == 0; }

  // 1 for characters and for A = C_n; n otherwise.
  std::uint32_t dim() const;
};

// W_A(x) = (-1)^{|A cap x|}
inline int walsh_eval(LampConfig A, LampConfig x) {
  return std::popcount(A & x) & 1 ? -1 : 1;
}

// chi_u(x, j) = e^{2 pi i u j / n}
Complex chi_apply(std::uint32_t u, const GroupElement& g, std::uint32_t n);

// pi_A(g) v, computed via the factorization g = (x,0) * (empty,1)^j:
// entry k of the result is W_A(alpha^k(x)) * v_{k+j}.  A = 0 selects the
// permutation convention (the quotient composed with the regular
// representation of C_n).
RepVector pi_apply(LampConfig A, const GroupElement& g, const RepVector& v,
                   std::uint32_t n);

// The label's representation evaluated on one group element, as a dense
// unitary matrix (dimension per RepLabel::dim()).
RepMatrix rep_matrix(const RepLabel& label, const GroupElement& g);

// One matrix per element of the symmetrized generating set.
std::vector<RepMatrix> irrep_generator_matrices(const RepLabel& label,
                                                const GeneratorSet& gens);

}  // namespace lamp
