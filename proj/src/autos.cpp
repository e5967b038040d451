#include "symgenus/autos.hpp"

namespace symgenus {

// ---------------------------------------------------------------- IntMatrix

IntMatrix IntMatrix::identity(int n) {
  IntMatrix id(n);
  for (int i = 0; i < n; ++i) id.at(i, i) = 1;
  return id;
}

CohClass IntMatrix::apply(const CohClass& v) const {
  if (static_cast<int>(v.size()) != n_) throw DomainError("matrix/class rank mismatch");
  std::vector<Int> out(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) {
    Int acc = 0;
    for (int j = 0; j < n_; ++j) acc += at(i, j) * v[j];
    out[i] = std::move(acc);
  }
  return CohClass(std::move(out));
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) t.at(j, i) = at(i, j);
  return t;
}

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
  if (x.n_ != y.n_) throw DomainError("matrix dimension mismatch");
  IntMatrix r(x.n_);
  for (int i = 0; i < x.n_; ++i)
    for (int k = 0; k < x.n_; ++k) {
      if (x.at(i, k) == 0) continue;
      for (int j = 0; j < x.n_; ++j) r.at(i, j) += x.at(i, k) * y.at(k, j);
    }
  return r;
}

// ---------------------------------------------------------------- reflection

CohClass reflect(const Manifold& m, const CohClass& gamma, const CohClass& beta) {
  const Int sq = square(m, gamma);
  if (sq != -1 && sq != -2) {
    throw DomainError("reflection needs square(gamma) in {-1,-2}, got " + sq.get_str());
  }
  // 2/|gamma^2| is 2 or 1.
  const Int factor = (sq == -1 ? 2 : 1) * pair(m, gamma, beta);
  return beta + factor * gamma;
}

// ---------------------------------------------------------------- Move

namespace {

void require_rational(const Manifold& m, int min_n, const char* what) {
  if (!m.is_rational() || m.blowups() < min_n) {
    throw DomainError(std::string(what) + " needs rational:n with n >= " + std::to_string(min_n));
  }
}

void require_ruled(const Manifold& m, int min_n, const char* what) {
  if (!m.is_ruled() || m.blowups() < min_n) {
    throw DomainError(std::string(what) + " needs ruled:g:n with n >= " + std::to_string(min_n));
  }
}

// The exceptional index i (1-based) if x is +-E_i, else 0.
int exceptional_unit_index(const Manifold& m, const CohClass& x) {
  int found = 0;
  for (int s = 0; s < m.rank(); ++s) {
    if (x[s] == 0) continue;
    if (found || s < m.first_exceptional() || abs(x[s]) != 1) return 0;
    found = s - m.first_exceptional() + 1;
  }
  return found;
}

bool is_h_minus_family(const Manifold& m, const CohClass& x) {
  // H - E_i - E_j or H - E_i - E_j - E_k, leading coefficient already +1.
  if (!m.is_rational() || x[0] != 1) return false;
  int ones = 0;
  for (int s = 1; s < m.rank(); ++s) {
    if (x[s] == 0) continue;
    if (x[s] != 1) return false;
    ++ones;
  }
  // Only H-E1-E2-E3 is admitted among the square -2 Cremona classes.
  if (ones == 3) return x[1] == 1 && x[2] == 1 && x[3] == 1;
  return ones == 2;
}

bool is_mu_family(const Manifold& m, const CohClass& x) {
  // r T + eps E_i with r >= 0.
  if (!m.is_ruled() || x[0] != 0 || x[1] < 0) return false;
  int nonzero = 0;
  for (int s = 2; s < m.rank(); ++s) {
    if (x[s] == 0) continue;
    if (abs(x[s]) != 1) return false;
    ++nonzero;
  }
  return nonzero == 1;
}

bool is_t_e1_minus_e2(const Manifold& m, const CohClass& x) {
  if (!m.is_ruled() || m.blowups() < 2) return false;
  CohClass target = CohClass::zero(m);
  target[1] = 1;
  target[2] = -1;
  target[3] = 1;
  return x == target;
}

}  // namespace

Move Move::swap(const Manifold& m, int i, int j) {
  m.exceptional_slot(i);
  m.exceptional_slot(j);
  if (i == j) throw DomainError("swap needs distinct indices");
  Move mv(m, Kind::SwapE);
  mv.i_ = std::min(i, j);
  mv.j_ = std::max(i, j);
  return mv;
}

Move Move::flip(const Manifold& m, int i) {
  m.exceptional_slot(i);
  Move mv(m, Kind::FlipE);
  mv.i_ = i;
  return mv;
}

Move Move::neg_id(const Manifold& m) { return Move(m, Kind::NegId); }

Move Move::cremona(const Manifold& m) {
  require_rational(m, 3, "Cremona reflection");
  return reflect_certified(m, parse_class("H-E1-E2-E3", m));
}

Move Move::reflect_h_minus(const Manifold& m, int i, int j) {
  require_rational(m, 2, "reflection along H-Ei-Ej");
  if (i == j) throw DomainError("H-Ei-Ej needs distinct indices");
  CohClass g = CohClass::zero(m);
  g[0] = 1;
  g[m.exceptional_slot(i)] = 1;
  g[m.exceptional_slot(j)] = 1;
  return reflect_certified(m, g);
}

Move Move::reflect_mu(const Manifold& m, const Int& r, int eps, int i) {
  require_ruled(m, 1, "reflection along rT+eps Ei");
  if (r < 0) throw DomainError("rT+eps Ei needs r >= 0");
  if (eps != 1 && eps != -1) throw DomainError("rT+eps Ei needs eps = +-1");
  CohClass g = CohClass::zero(m);
  g[1] = r;
  g[m.exceptional_slot(i)] = -eps;
  return reflect_certified(m, g);
}

Move Move::reflect_t_e1_minus_e2(const Manifold& m) {
  require_ruled(m, 2, "reflection along T+E1-E2");
  return reflect_certified(m, parse_class("T+E1-E2", m));
}

bool Move::is_certified_reflection(const Manifold& m, const CohClass& gamma) {
  if (static_cast<int>(gamma.size()) != m.rank() || gamma.is_zero()) return false;
  if (m.is_sphere_product()) return false;
  if (exceptional_unit_index(m, gamma) != 0) return true;
  for (const CohClass& g : {gamma, -gamma}) {
    if (is_h_minus_family(m, g) || is_mu_family(m, g) || is_t_e1_minus_e2(m, g)) return true;
  }
  return false;
}

Move Move::reflect_certified(const Manifold& m, const CohClass& gamma) {
  check_class(m, gamma);
  if (!is_certified_reflection(m, gamma)) {
    throw DomainError("reflection along " + format_class(m, gamma) +
                      " is not in the certified sphere list for " + m.spec());
  }
  Move mv(m, Kind::Reflect);
  mv.gamma_ = gamma;
  return mv;
}

CohClass Move::apply(const CohClass& x) const {
  check_class(manifold_, x);
  CohClass y = x;
  switch (kind_) {
    case Kind::SwapE:
      std::swap(y[manifold_.exceptional_slot(i_)], y[manifold_.exceptional_slot(j_)]);
      return y;
    case Kind::FlipE: {
      Int& c = y[manifold_.exceptional_slot(i_)];
      c = -c;
      return y;
    }
    case Kind::NegId:
      return -x;
    case Kind::Reflect:
      return reflect(manifold_, gamma_, x);
  }
  return y;
}

IntMatrix Move::matrix() const {
  const int r = manifold_.rank();
  IntMatrix a(r);
  for (int j = 0; j < r; ++j) {
    const CohClass col = apply(CohClass::unit(manifold_, j));
    for (int i = 0; i < r; ++i) a.at(i, j) = col[i];
  }
  return a;
}

std::string Move::describe() const {
  switch (kind_) {
    case Kind::SwapE: return "swap(" + std::to_string(i_) + "," + std::to_string(j_) + ")";
    case Kind::FlipE: return "flip(" + std::to_string(i_) + ")";
    case Kind::NegId: return "negid";
    case Kind::Reflect: return "reflect(" + format_class(manifold_, gamma_) + ")";
  }
  return "?";
}

// ---------------------------------------------------------------- AutoWord

AutoWord::AutoWord(const Manifold& m) : manifold_(m), matrix_(IntMatrix::identity(m.rank())) {}

AutoWord::AutoWord(const Manifold& m, std::vector<Move> moves) : AutoWord(m) {
  for (const Move& mv : moves) push_back(mv);
}

AutoWord AutoWord::with_matrix(const Manifold& m, std::vector<Move> moves, IntMatrix matrix) {
  AutoWord w(m);
  w.moves_ = std::move(moves);
  w.matrix_ = std::move(matrix);
  return w;
}

void AutoWord::push_back(const Move& mv) {
  if (!(mv.manifold() == manifold_)) throw DomainError("move belongs to a different manifold");
  // Left-multiply by the move matrix: apply the move to every column.
  const int r = manifold_.rank();
  for (int j = 0; j < r; ++j) {
    std::vector<Int> col(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) col[i] = matrix_.at(i, j);
    const CohClass image = mv.apply(CohClass(std::move(col)));
    for (int i = 0; i < r; ++i) matrix_.at(i, j) = image[i];
  }
  moves_.push_back(mv);
}

void AutoWord::append(const AutoWord& other) {
  if (!(other.manifold_ == manifold_)) throw DomainError("model mismatch in word composition");
  for (const Move& mv : other.moves_) push_back(mv);
}

CohClass apply_move(const Manifold& m, const Move& move, const CohClass& x) {
  if (!(move.manifold() == m)) throw DomainError("move belongs to a different manifold");
  return move.apply(x);
}

CohClass apply_word(const Manifold& m, const AutoWord& w, const CohClass& x) {
  if (!(w.manifold() == m)) throw DomainError("word belongs to a different manifold");
  check_class(m, x);
  return w.matrix().apply(x);
}

AutoWord compose(const AutoWord& w1, const AutoWord& w2) {
  AutoWord w = w1;
  w.append(w2);
  return w;
}

AutoWord invert(const AutoWord& w) {
  // Every generator is an involution.
  std::vector<Move> rev(w.moves().rbegin(), w.moves().rend());
  return AutoWord(w.manifold(), std::move(rev));
}

bool verify_isometry(const Manifold& m, const AutoWord& w) {
  const int r = m.rank();
  if (w.matrix().dim() != r) return false;
  IntMatrix g(r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) g.at(i, j) = m.gram(i, j);
  return w.matrix().transpose() * g * w.matrix() == g;
}

bool matrix_consistent(const AutoWord& w) {
  IntMatrix prod = IntMatrix::identity(w.manifold().rank());
  for (const Move& mv : w.moves()) prod = mv.matrix() * prod;
  return prod == w.matrix();
}

}  // namespace symgenus
