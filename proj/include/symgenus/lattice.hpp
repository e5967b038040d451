#pragma once

// Second-cohomology lattices of rational and ruled 4-manifolds.
//
// Coefficient convention: a class is stored as its coefficient vector over the
// standard basis, with the exceptional slots holding the coefficients of -E_i.
//
//   rational:n    (a; b1..bn)      means  aH - sum b_i E_i
//   ruled:g:n     (a, b; c1..cn)   means  aU + bT - sum c_i E_i
//   s2xs2         (p, q)           means  px + qy
//
// So "H+E1" is stored as (1; -1). Text formatting always prints the signed
// expansion, never the raw vector.

#include <cstddef>
#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace symgenus {

using Int = mpz_class;

/// Raised for inputs outside an operation's domain (CLI exit code 1).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ParseError : public DomainError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : DomainError(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class Manifold {
 public:
  enum class Kind { Rational, Ruled, SphereProduct };

  static Manifold rational(int n);
  static Manifold ruled(int g, int n);
  static Manifold sphere_product();
  /// "rational:<n>", "ruled:<g>:<n>" or "s2xs2".
  static Manifold parse(std::string_view spec);

  Kind kind() const { return kind_; }
  bool is_rational() const { return kind_ == Kind::Rational; }
  bool is_ruled() const { return kind_ == Kind::Ruled; }
  bool is_sphere_product() const { return kind_ == Kind::SphereProduct; }

  /// Number of blow-ups n (0 for S^2 x S^2).
  int blowups() const { return n_; }
  int base_genus() const { return g_; }
  int rank() const;
  /// b^-: n for rational, n+1 for ruled, 1 for S^2 x S^2.
  int b_minus() const;
  /// Index of E_1 in the coefficient vector (1 rational, 2 ruled, rank() otherwise).
  int first_exceptional() const;
  /// Coefficient-vector slot of E_i, 1-based i.
  int exceptional_slot(int i) const;
  /// Gram matrix entry in coefficient space (equal to the basis Gram matrix).
  int gram(int i, int j) const;
  std::vector<std::vector<int>> gram_matrix() const;
  /// Basis symbol of a coefficient slot: "H", "U", "T", "E3", "x", "y".
  std::string symbol(int slot) const;

  std::string spec() const;

  bool operator==(const Manifold&) const = default;

 private:
  Manifold(Kind kind, int g, int n) : kind_(kind), g_(g), n_(n) {}
  Kind kind_;
  int g_ = 0;
  int n_ = 0;
};

class CohClass {
 public:
  CohClass() = default;
  explicit CohClass(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {}
  CohClass(std::initializer_list<long> coeffs);

  static CohClass zero(const Manifold& m);
  /// Unit coefficient vector at a slot (note: at an exceptional slot this is -E_i).
  static CohClass unit(const Manifold& m, int slot);

  std::size_t size() const { return coeffs_.size(); }
  const std::vector<Int>& coeffs() const { return coeffs_; }
  const Int& operator[](std::size_t i) const { return coeffs_[i]; }
  Int& operator[](std::size_t i) { return coeffs_[i]; }

  bool is_zero() const;
  /// Largest absolute coefficient.
  Int max_abs() const;

  CohClass operator-() const;
  CohClass& operator+=(const CohClass& other);
  CohClass& operator-=(const CohClass& other);
  CohClass& operator*=(const Int& k);
  friend CohClass operator+(CohClass x, const CohClass& y) { return x += y; }
  friend CohClass operator-(CohClass x, const CohClass& y) { return x -= y; }
  friend CohClass operator*(const Int& k, CohClass x) { return x *= k; }

  friend bool operator==(const CohClass& x, const CohClass& y) { return x.coeffs_ == y.coeffs_; }
  /// Lexicographic order on coefficient vectors; used for deterministic output.
  friend std::strong_ordering operator<=>(const CohClass& x, const CohClass& y);

 private:
  std::vector<Int> coeffs_;
};

enum class ClassType { Ordinary, Characteristic };

struct TypeVerdict {
  ClassType type = ClassType::Ordinary;
  /// Set for the zero class, which is reported as Ordinary.
  bool zero_class = false;
};

void check_class(const Manifold& m, const CohClass& x);

Int pair(const Manifold& m, const CohClass& x, const CohClass& y);
Int square(const Manifold& m, const CohClass& x);
Int divisibility(const Manifold& m, const CohClass& x);
/// x / divisibility(x).
CohClass primitive_part(const Manifold& m, const CohClass& x);
bool is_characteristic(const Manifold& m, const CohClass& x);
TypeVerdict class_type(const Manifold& m, const CohClass& x);
std::string to_string(ClassType t);

/// K_0 = -3H + sum E_i (rational), -2U + (2g-2)T + sum E_i (ruled).
CohClass canonical_k0(const Manifold& m);

/// For a primitive isotropic y on rational:n, returns x with y.x = 1 and x.x = 1.
CohClass hyperbolic_complement(const Manifold& m, const CohClass& y);

CohClass parse_class(std::string_view text, const Manifold& m);
std::string format_class(const Manifold& m, const CohClass& x);

}  // namespace symgenus
