#include "symgenus/lattice.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace symgenus {

namespace {

int parse_small_int(std::string_view text, std::string_view what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw DomainError("invalid " + std::string(what) + " '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

// ---------------------------------------------------------------- Manifold

Manifold Manifold::rational(int n) {
  if (n < 0) throw DomainError("rational manifold needs n >= 0");
  return Manifold(Kind::Rational, 0, n);
}

Manifold Manifold::ruled(int g, int n) {
  if (g < 1) throw DomainError("ruled manifold needs base genus g >= 1");
  if (n < 0) throw DomainError("ruled manifold needs n >= 0");
  return Manifold(Kind::Ruled, g, n);
}

Manifold Manifold::sphere_product() { return Manifold(Kind::SphereProduct, 0, 0); }

Manifold Manifold::parse(std::string_view spec) {
  if (spec == "s2xs2") return sphere_product();
  constexpr std::string_view kRational = "rational:";
  constexpr std::string_view kRuled = "ruled:";
  if (spec.starts_with(kRational)) {
    return rational(parse_small_int(spec.substr(kRational.size()), "blow-up count"));
  }
  if (spec.starts_with(kRuled)) {
    auto rest = spec.substr(kRuled.size());
    auto colon = rest.find(':');
    if (colon == std::string_view::npos) {
      throw DomainError("ruled manifold spec must be ruled:<g>:<n>");
    }
    return ruled(parse_small_int(rest.substr(0, colon), "genus"),
                 parse_small_int(rest.substr(colon + 1), "blow-up count"));
  }
  throw DomainError("unknown manifold spec '" + std::string(spec) +
                    "' (expected rational:<n>, ruled:<g>:<n> or s2xs2)");
}

int Manifold::rank() const {
  switch (kind_) {
    case Kind::Rational: return n_ + 1;
    case Kind::Ruled: return n_ + 2;
    case Kind::SphereProduct: return 2;
  }
  return 0;
}

int Manifold::b_minus() const {
  switch (kind_) {
    case Kind::Rational: return n_;
    case Kind::Ruled: return n_ + 1;
    case Kind::SphereProduct: return 1;
  }
  return 0;
}

int Manifold::first_exceptional() const {
  switch (kind_) {
    case Kind::Rational: return 1;
    case Kind::Ruled: return 2;
    case Kind::SphereProduct: return 2;
  }
  return 0;
}

int Manifold::exceptional_slot(int i) const {
  if (i < 1 || i > n_) {
    throw DomainError("exceptional index E" + std::to_string(i) + " out of range for " + spec());
  }
  return first_exceptional() + i - 1;
}

int Manifold::gram(int i, int j) const {
  const int first = first_exceptional();
  if (i >= first && j >= first) return i == j ? -1 : 0;
  if (i >= first || j >= first) return 0;
  if (kind_ == Kind::Rational) return 1;  // only slot 0 remains
  return i == j ? 0 : 1;                  // hyperbolic block
}

std::vector<std::vector<int>> Manifold::gram_matrix() const {
  const int r = rank();
  std::vector<std::vector<int>> g(r, std::vector<int>(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) g[i][j] = gram(i, j);
  return g;
}

std::string Manifold::symbol(int slot) const {
  switch (kind_) {
    case Kind::Rational:
      return slot == 0 ? "H" : "E" + std::to_string(slot);
    case Kind::Ruled:
      if (slot == 0) return "U";
      if (slot == 1) return "T";
      return "E" + std::to_string(slot - 1);
    case Kind::SphereProduct:
      return slot == 0 ? "x" : "y";
  }
  return "?";
}

std::string Manifold::spec() const {
  switch (kind_) {
    case Kind::Rational: return "rational:" + std::to_string(n_);
    case Kind::Ruled: return "ruled:" + std::to_string(g_) + ":" + std::to_string(n_);
    case Kind::SphereProduct: return "s2xs2";
  }
  return "?";
}

// ---------------------------------------------------------------- CohClass

CohClass::CohClass(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
}

CohClass CohClass::zero(const Manifold& m) {
  return CohClass(std::vector<Int>(static_cast<std::size_t>(m.rank())));
}

CohClass CohClass::unit(const Manifold& m, int slot) {
  CohClass x = zero(m);
  x.coeffs_.at(static_cast<std::size_t>(slot)) = 1;
  return x;
}

bool CohClass::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Int& c) { return c == 0; });
}

Int CohClass::max_abs() const {
  Int best = 0;
  for (const Int& c : coeffs_) {
    if (abs(c) > best) best = abs(c);
  }
  return best;
}

CohClass CohClass::operator-() const {
  CohClass r = *this;
  for (Int& c : r.coeffs_) c = -c;
  return r;
}

CohClass& CohClass::operator+=(const CohClass& other) {
  if (other.size() != size()) throw DomainError("rank mismatch in class addition");
  for (std::size_t i = 0; i < size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

CohClass& CohClass::operator-=(const CohClass& other) {
  if (other.size() != size()) throw DomainError("rank mismatch in class subtraction");
  for (std::size_t i = 0; i < size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

CohClass& CohClass::operator*=(const Int& k) {
  for (Int& c : coeffs_) c *= k;
  return *this;
}

std::strong_ordering operator<=>(const CohClass& x, const CohClass& y) {
  const std::size_t n = std::min(x.size(), y.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = cmp(x.coeffs_[i], y.coeffs_[i]);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return x.size() <=> y.size();
}

// ---------------------------------------------------------------- pairing

void check_class(const Manifold& m, const CohClass& x) {
  if (static_cast<int>(x.size()) != m.rank()) {
    throw DomainError("rank mismatch: class has " + std::to_string(x.size()) +
                      " coefficients but " + m.spec() + " has rank " +
                      std::to_string(m.rank()));
  }
}

Int pair(const Manifold& m, const CohClass& x, const CohClass& y) {
  check_class(m, x);
  check_class(m, y);
  Int acc = 0;
  const int first = m.first_exceptional();
  switch (m.kind()) {
    case Manifold::Kind::Rational:
      acc = x[0] * y[0];
      break;
    case Manifold::Kind::Ruled:
    case Manifold::Kind::SphereProduct:
      acc = x[0] * y[1] + x[1] * y[0];
      break;
  }
  for (int i = first; i < m.rank(); ++i) acc -= x[i] * y[i];
  return acc;
}

Int square(const Manifold& m, const CohClass& x) { return pair(m, x, x); }

Int divisibility(const Manifold& m, const CohClass& x) {
  check_class(m, x);
  if (x.is_zero()) throw DomainError("divisibility undefined for zero class");
  Int g = 0;
  for (const Int& c : x.coeffs()) g = gcd(g, c);
  return g;
}

CohClass primitive_part(const Manifold& m, const CohClass& x) {
  const Int p = divisibility(m, x);
  std::vector<Int> c = x.coeffs();
  for (Int& v : c) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
  return CohClass(std::move(c));
}

bool is_characteristic(const Manifold& m, const CohClass& x) {
  check_class(m, x);
  // Bilinearity reduces the condition to the basis vectors.
  for (int i = 0; i < m.rank(); ++i) {
    const CohClass u = CohClass::unit(m, i);
    const Int lhs = pair(m, x, u);
    const Int rhs = m.gram(i, i);
    if (mpz_odd_p(Int(lhs - rhs).get_mpz_t())) return false;
  }
  return true;
}

TypeVerdict class_type(const Manifold& m, const CohClass& x) {
  check_class(m, x);
  if (x.is_zero()) return {ClassType::Ordinary, true};
  return {is_characteristic(m, x) ? ClassType::Characteristic : ClassType::Ordinary, false};
}

std::string to_string(ClassType t) {
  return t == ClassType::Characteristic ? "characteristic" : "ordinary";
}

CohClass canonical_k0(const Manifold& m) {
  CohClass k = CohClass::zero(m);
  switch (m.kind()) {
    case Manifold::Kind::Rational:
      k[0] = -3;
      break;
    case Manifold::Kind::Ruled:
      k[0] = -2;
      k[1] = 2 * m.base_genus() - 2;
      break;
    case Manifold::Kind::SphereProduct:
      throw DomainError("canonical class K0 is only defined for rational:n and ruled:g:n");
  }
  // +E_i is stored as coefficient -1 of -E_i.
  for (int i = m.first_exceptional(); i < m.rank(); ++i) k[i] = -1;
  return k;
}

// ---------------------------------------------------------------- hyperbolic complement

namespace {

// Column-reduces the row vector f to (+-1, 0, ..., 0) by unimodular operations.
// Column 0 of the returned matrix solves f.x = 1; the other columns span ker f.
std::vector<CohClass> unimodular_completion(std::vector<Int> f) {
  const std::size_t r = f.size();
  std::vector<CohClass> cols;
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<Int> e(r);
    e[i] = 1;
    cols.emplace_back(std::move(e));
  }
  for (std::size_t i = 1; i < r; ++i) {
    if (f[i] == 0) continue;
    Int d, s, t;
    mpz_gcdext(d.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), f[0].get_mpz_t(), f[i].get_mpz_t());
    const Int u = f[i] / d;
    const Int v = f[0] / d;
    CohClass c0 = s * cols[0] + t * cols[i];
    CohClass ci = v * cols[i] - u * cols[0];
    cols[0] = std::move(c0);
    cols[i] = std::move(ci);
    f[0] = d;
    f[i] = 0;
  }
  if (f[0] == -1) cols[0] = -cols[0];
  return cols;
}

}  // namespace

CohClass hyperbolic_complement(const Manifold& m, const CohClass& y) {
  check_class(m, y);
  if (!m.is_rational()) throw DomainError("hyperbolic_complement requires rational:n");
  if (y.is_zero() || divisibility(m, y) != 1) {
    throw DomainError("hyperbolic_complement requires a primitive class");
  }
  if (square(m, y) != 0) throw DomainError("hyperbolic_complement requires square(y) = 0");

  // The functional x -> y.x in coefficient space.
  std::vector<Int> f(static_cast<std::size_t>(m.rank()));
  for (int i = 0; i < m.rank(); ++i) f[i] = pair(m, y, CohClass::unit(m, i));
  std::vector<CohClass> cols = unimodular_completion(f);
  CohClass x = cols[0];

  Int t = square(m, x);
  if (mpz_even_p(t.get_mpz_t())) {
    // Shift by an odd vector z of y^perp: (x+z)^2 = t + 2x.z + z^2 is then odd.
    bool shifted = false;
    for (std::size_t i = 1; i < cols.size() && !shifted; ++i) {
      if (mpz_odd_p(square(m, cols[i]).get_mpz_t())) {
        x += cols[i];
        shifted = true;
      }
    }
    if (!shifted) throw std::logic_error("y^perp has no odd vector");
    t = square(m, x);
  }
  const Int k = (t - 1) / 2;
  return x - k * y;
}

// ---------------------------------------------------------------- text

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() { return done() ? '\0' : text[pos]; }
};

int slot_for_symbol(const Manifold& m, std::string_view sym, std::size_t at) {
  auto bad = [&]() -> int {
    throw ParseError("basis symbol '" + std::string(sym) + "' not valid for " + m.spec(), at);
  };
  if (sym == "H") return m.is_rational() ? 0 : bad();
  if (sym == "U") return m.is_ruled() ? 0 : bad();
  if (sym == "T") return m.is_ruled() ? 1 : bad();
  if (sym == "x") return m.is_sphere_product() ? 0 : bad();
  if (sym == "y") return m.is_sphere_product() ? 1 : bad();
  if (sym.size() > 1 && sym[0] == 'E') {
    int k = 0;
    auto digits = sym.substr(1);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || k < 1) bad();
    if (m.is_sphere_product() || k > m.blowups()) bad();
    return m.exceptional_slot(k);
  }
  return bad();
}

}  // namespace

CohClass parse_class(std::string_view text, const Manifold& m) {
  CohClass x = CohClass::zero(m);
  Cursor cur{text};
  if (cur.done()) throw ParseError("empty class expression", 0);

  bool first = true;
  bool only_zero = false;
  while (!cur.done()) {
    const std::size_t term_start = cur.pos;
    int sign = 1;
    char c = cur.peek();
    if (c == '+' || c == '-') {
      sign = c == '-' ? -1 : 1;
      ++cur.pos;
      cur.skip_ws();
    } else if (!first) {
      throw ParseError("expected '+' or '-'", cur.pos);
    }

    std::size_t digits_start = cur.pos;
    while (cur.pos < text.size() && std::isdigit(static_cast<unsigned char>(text[cur.pos]))) {
      ++cur.pos;
    }
    Int coeff = 1;
    bool has_number = cur.pos > digits_start;
    if (has_number) coeff = Int(std::string(text.substr(digits_start, cur.pos - digits_start)));
    cur.skip_ws();

    std::size_t sym_start = cur.pos;
    if (cur.pos < text.size() && std::isalpha(static_cast<unsigned char>(text[cur.pos]))) {
      ++cur.pos;
      while (cur.pos < text.size() && std::isdigit(static_cast<unsigned char>(text[cur.pos]))) {
        ++cur.pos;
      }
    }
    if (sym_start == cur.pos) {
      // A bare "0" denotes the zero class.
      if (has_number && coeff == 0 && first) {
        only_zero = true;
        first = false;
        continue;
      }
      throw ParseError("expected basis symbol", sym_start);
    }
    if (only_zero) throw ParseError("unexpected term after 0", term_start);
    const std::string_view sym = text.substr(sym_start, cur.pos - sym_start);
    const int slot = slot_for_symbol(m, sym, sym_start);
    // Exceptional slots store the coefficient of -E_i.
    const int slot_sign = slot >= m.first_exceptional() && !m.is_sphere_product() ? -1 : 1;
    x[slot] += sign * slot_sign * coeff;
    first = false;
  }
  return x;
}

std::string format_class(const Manifold& m, const CohClass& x) {
  check_class(m, x);
  std::string out;
  for (int i = 0; i < m.rank(); ++i) {
    Int v = x[i];
    if (i >= m.first_exceptional() && !m.is_sphere_product()) v = -v;
    if (v == 0) continue;
    if (v < 0) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    const Int mag = abs(v);
    if (mag != 1) out += mag.get_str();
    out += m.symbol(i);
  }
  return out.empty() ? "0" : out;
}

}  // namespace symgenus
