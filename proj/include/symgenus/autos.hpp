#pragma once

// Lattice automorphisms realized by orientation-preserving diffeomorphisms.
//
// A Move is one generator: a permutation or sign change of the E_i (Wall's
// trivial automorphisms), -Id, or a reflection along a class from a fixed list
// of classes known to be represented by embedded spheres of square -1 or -2.
// Reflections along anything else are available through reflect() as raw
// arithmetic, but cannot be wrapped in a Move.
//
// Words act left to right: moves()[0] is applied first, and the word matrix is
// M_k * ... * M_1 acting on column coefficient vectors.

#include <string>
#include <vector>

#include "symgenus/lattice.hpp"

namespace symgenus {

/// Square integer matrix acting on coefficient vectors.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n) {}
  static IntMatrix identity(int n);

  int dim() const { return n_; }
  Int& at(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  const Int& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

  CohClass apply(const CohClass& v) const;
  IntMatrix transpose() const;
  friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  int n_ = 0;
  std::vector<Int> a_;
};

/// R(gamma) beta = beta + 2 (gamma.beta)/|gamma.gamma| gamma, for square(gamma) in {-1,-2}.
CohClass reflect(const Manifold& m, const CohClass& gamma, const CohClass& beta);

class Move {
 public:
  enum class Kind { SwapE, FlipE, NegId, Reflect };

  static Move swap(const Manifold& m, int i, int j);
  static Move flip(const Manifold& m, int i);
  static Move neg_id(const Manifold& m);

  // Certified reflections.
  /// H-E1-E2-E3 on rational:n, n >= 3.
  static Move cremona(const Manifold& m);
  /// H-Ei-Ej on rational:n, i != j.
  static Move reflect_h_minus(const Manifold& m, int i, int j);
  /// r T + eps E_i on ruled:g:n, r >= 0, eps = +-1.
  static Move reflect_mu(const Manifold& m, const Int& r, int eps, int i);
  /// T+E1-E2 on ruled:g:n, n >= 2.
  static Move reflect_t_e1_minus_e2(const Manifold& m);
  /// Reflection along gamma if gamma (up to sign) is one of the certified classes.
  static Move reflect_certified(const Manifold& m, const CohClass& gamma);
  static bool is_certified_reflection(const Manifold& m, const CohClass& gamma);

  Kind kind() const { return kind_; }
  const Manifold& manifold() const { return manifold_; }
  int i() const { return i_; }
  int j() const { return j_; }
  const CohClass& gamma() const { return gamma_; }

  CohClass apply(const CohClass& x) const;
  IntMatrix matrix() const;
  std::string describe() const;

  friend bool operator==(const Move& a, const Move& b) {
    return a.manifold_ == b.manifold_ && a.kind_ == b.kind_ && a.i_ == b.i_ && a.j_ == b.j_ &&
           a.gamma_ == b.gamma_;
  }

 private:
  Move(Manifold m, Kind kind) : manifold_(m), kind_(kind) {}
  Manifold manifold_;
  Kind kind_;
  int i_ = 0;
  int j_ = 0;
  CohClass gamma_;
};

class AutoWord {
 public:
  explicit AutoWord(const Manifold& m);
  AutoWord(const Manifold& m, std::vector<Move> moves);
  /// Builds a word with an explicit (possibly inconsistent) matrix; for tests
  /// of verify_isometry.
  static AutoWord with_matrix(const Manifold& m, std::vector<Move> moves, IntMatrix matrix);

  const Manifold& manifold() const { return manifold_; }
  const std::vector<Move>& moves() const { return moves_; }
  const IntMatrix& matrix() const { return matrix_; }
  std::size_t size() const { return moves_.size(); }
  bool empty() const { return moves_.empty(); }

  void push_back(const Move& m);
  void append(const AutoWord& other);

 private:
  Manifold manifold_;
  std::vector<Move> moves_;
  IntMatrix matrix_;
};

CohClass apply_move(const Manifold& m, const Move& move, const CohClass& x);
CohClass apply_word(const Manifold& m, const AutoWord& w, const CohClass& x);
/// First w1, then w2.
AutoWord compose(const AutoWord& w1, const AutoWord& w2);
AutoWord invert(const AutoWord& w);
/// True iff matrix^T G matrix = G.
bool verify_isometry(const Manifold& m, const AutoWord& w);
/// True iff the stored matrix equals the ordered product of the move matrices.
bool matrix_consistent(const AutoWord& w);

}  // namespace symgenus
