#include "invcensus/finite_field.hpp"

#include <sstream>

#include "invcensus/error.hpp"
#include "invcensus/number_theory.hpp"

namespace invcensus {

namespace {

using Poly = std::vector<std::uint32_t>;  // constant term first, no implicit leading term

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return (a * b) % p; }

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
  std::uint64_t r = 1, e = p - 2;
  a %= p;
  while (e > 0) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of f modulo the monic polynomial g (full coefficient list).
Poly poly_rem(Poly f, const Poly& g, std::uint32_t p) {
  trim(f);
  const std::size_t dg = g.size() - 1;
  while (f.size() > dg) {
    const std::uint64_t lead = f.back();
    const std::size_t shift = f.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i)
      f[shift + i] = static_cast<std::uint32_t>((f[shift + i] + p - mulmod(lead, g[i], p)) % p);
    trim(f);
  }
  return f;
}

bool has_root(std::uint32_t p, const Poly& full) {
  for (std::uint64_t x = 0; x < p; ++x) {
    std::uint64_t acc = 0;
    for (std::size_t i = full.size(); i-- > 0;) acc = (acc * x + full[i]) % p;
    if (acc == 0) return true;
  }
  return false;
}

}  // namespace

bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& low) {
  const unsigned n = static_cast<unsigned>(low.size());
  if (n == 0) return false;
  if (n == 1) return true;
  Poly full(low);
  full.push_back(1);
  if (has_root(p, full)) return false;
  // Roots cover every linear factor; any remaining factor has degree 2..n/2.
  for (unsigned d = 2; d <= n / 2; ++d) {
    const std::uint64_t count = ipow(p, d);
    for (std::uint64_t t = 0; t < count; ++t) {
      Poly g(d + 1);
      std::uint64_t v = t;
      for (unsigned i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(v % p);
        v /= p;
      }
      g[d] = 1;
      if (poly_rem(full, g, p).empty()) return false;
    }
  }
  return true;
}

Field field_make(std::uint32_t p, unsigned n) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (n < 1 || n > kMaxFieldDegree)
    throw Error(ErrorKind::DegreeTooLarge,
                "degree " + std::to_string(n) + " outside 1.." + std::to_string(kMaxFieldDegree));
  // Compare q in floating-free form: p^n <= 2^20.
  std::uint64_t q = 1;
  for (unsigned i = 0; i < n; ++i) {
    q *= p;
    if (q > kMaxFieldOrder)
      throw Error(ErrorKind::DegreeTooLarge,
                  std::to_string(p) + "^" + std::to_string(n) + " exceeds 2^20");
  }

  auto spec = std::make_shared<FieldSpec>();
  spec->p = p;
  spec->n = n;
  spec->q = q;
  // t enumerates (c_{n-1}, ..., c_0) as a base-p integer, smallest first.
  for (std::uint64_t t = 0; t < q; ++t) {
    Poly low(n);
    std::uint64_t v = t;
    for (unsigned i = 0; i < n; ++i) {
      low[i] = static_cast<std::uint32_t>(v % p);
      v /= p;
    }
    if (is_irreducible(p, low)) {
      spec->poly = std::move(low);
      return spec;
    }
  }
  throw Error(ErrorKind::DegreeTooLarge, "no irreducible polynomial found");  // unreachable
}

std::string format_poly(const FieldSpec& spec) {
  std::ostringstream os;
  auto term = [&](unsigned deg) {
    if (deg == 0) return std::string();
    if (deg == 1) return std::string("x");
    return "x^" + std::to_string(deg);
  };
  os << term(spec.n);
  for (unsigned i = spec.n; i-- > 0;) {
    const auto c = spec.poly[i];
    if (c == 0) continue;
    os << '+';
    if (c != 1 || i == 0) os << c;
    os << term(i);
  }
  return os.str();
}

FieldElement::FieldElement(Field field, const std::vector<std::uint32_t>& coeffs)
    : field_(std::move(field)) {
  if (coeffs.size() != field_->n)
    throw Error(ErrorKind::FieldMismatch, "coefficient vector length differs from field degree");
  for (unsigned i = 0; i < field_->n; ++i) coeffs_[i] = coeffs[i] % field_->p;
}

FieldElement FieldElement::zero(Field field) { return FieldElement(std::move(field), Coeffs{}); }

FieldElement FieldElement::one(Field field) {
  Coeffs c{};
  c[0] = 1;
  return FieldElement(std::move(field), c);
}

FieldElement FieldElement::generator(Field field) {
  Coeffs c{};
  if (field->n == 1)
    // x reduces to -poly[0] in a prime field.
    c[0] = (field->p - field->poly[0]) % field->p;
  else
    c[1] = 1;
  return FieldElement(std::move(field), c);
}

FieldElement FieldElement::from_int(Field field, std::uint64_t value) {
  Coeffs c{};
  c[0] = static_cast<std::uint32_t>(value % field->p);
  return FieldElement(std::move(field), c);
}

FieldElement FieldElement::from_rank(Field field, std::uint64_t rank) {
  Coeffs c{};
  for (unsigned i = field->n; i-- > 0;) {
    c[i] = static_cast<std::uint32_t>(rank % field->p);
    rank /= field->p;
  }
  return FieldElement(std::move(field), c);
}

std::vector<std::uint32_t> FieldElement::coeffs() const {
  return {coeffs_.begin(), coeffs_.begin() + field_->n};
}

bool FieldElement::is_zero() const {
  for (unsigned i = 0; i < field_->n; ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

std::uint64_t FieldElement::rank() const {
  std::uint64_t r = 0;
  for (unsigned i = 0; i < field_->n; ++i) r = r * field_->p + coeffs_[i];
  return r;
}

std::string FieldElement::to_string() const {
  if (field_->n == 1) return std::to_string(coeffs_[0]);
  std::string out;
  for (unsigned i = field_->n; i-- > 0;) {
    const auto c = coeffs_[i];
    if (c == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c);
    out += i == 1 ? "a" : "a^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

bool FieldElement::operator==(const FieldElement& other) const {
  return *field_ == *other.field_ && coeffs_ == other.coeffs_;
}

namespace {

void require_same_field(const FieldElement& a, const FieldElement& b) {
  if (a.field() != b.field() && !(*a.field() == *b.field()))
    throw Error(ErrorKind::FieldMismatch, "operands belong to different fields");
}

}  // namespace

FieldElement ff_add(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  const auto& f = *a.field_;
  FieldElement::Coeffs c{};
  for (unsigned i = 0; i < f.n; ++i) c[i] = (a.coeffs_[i] + b.coeffs_[i]) % f.p;
  return FieldElement(a.field_, c);
}

FieldElement ff_neg(const FieldElement& a) {
  const auto& f = *a.field_;
  FieldElement::Coeffs c{};
  for (unsigned i = 0; i < f.n; ++i) c[i] = (f.p - a.coeffs_[i]) % f.p;
  return FieldElement(a.field_, c);
}

FieldElement ff_sub(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  return ff_add(a, ff_neg(b));
}

FieldElement ff_mul(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  const auto& f = *a.field_;
  const unsigned n = f.n;
  const std::uint64_t p = f.p;
  std::array<std::uint64_t, 2 * kMaxFieldDegree> prod{};
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) prod[i + j] = (prod[i + j] + mulmod(a.coeffs_[i], b.coeffs_[j], p)) % p;
  // x^n = -(poly[0] + ... + poly[n-1] x^{n-1})
  for (unsigned d = 2 * n - 2; d >= n; --d) {
    const std::uint64_t lead = prod[d];
    prod[d] = 0;
    if (lead != 0)
      for (unsigned i = 0; i < n; ++i)
        prod[d - n + i] = (prod[d - n + i] + p - mulmod(lead, f.poly[i], p)) % p;
  }
  FieldElement::Coeffs c{};
  for (unsigned i = 0; i < n; ++i) c[i] = static_cast<std::uint32_t>(prod[i]);
  return FieldElement(a.field_, c);
}

FieldElement ff_pow(const FieldElement& a, std::uint64_t e) {
  FieldElement result = FieldElement::one(a.field());
  FieldElement base = a;
  while (e > 0) {
    if (e & 1) result = ff_mul(result, base);
    base = ff_mul(base, base);
    e >>= 1;
  }
  return result;
}

FieldElement ff_inv(const FieldElement& a) {
  if (a.is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  if (a.field()->n == 1) return FieldElement::from_int(a.field(), invmod(a.coeff(0), a.field()->p));
  return ff_pow(a, a.field()->q - 2);
}

FieldElement ff_frobenius_sqrtq(const FieldElement& x) {
  const auto& f = *x.field();
  if (f.n % 2 != 0)
    throw Error(ErrorKind::NotSquareField,
                "field of order " + std::to_string(f.q) + " is not p^(2m)");
  return ff_pow(x, ipow(f.p, f.n / 2));
}

std::shared_ptr<const FieldTables> FieldTables::make(Field field) {
  return std::shared_ptr<const FieldTables>(new FieldTables(std::move(field)));
}

FieldTables::FieldTables(Field field) : field_(std::move(field)) {
  if (field_->q > kMaxOrder)
    throw Error(ErrorKind::DegreeTooLarge,
                "lookup tables support fields of order <= " + std::to_string(kMaxOrder));
  q_ = static_cast<unsigned>(field_->q);
  std::vector<FieldElement> elems;
  elems.reserve(q_);
  for (unsigned r = 0; r < q_; ++r) elems.push_back(FieldElement::from_rank(field_, r));
  one_ = static_cast<Elem>(FieldElement::one(field_).rank());

  add_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  neg_.resize(q_);
  inv_.resize(q_, 0);
  for (unsigned a = 0; a < q_; ++a) {
    neg_[a] = static_cast<Elem>(ff_neg(elems[a]).rank());
    if (a != 0) inv_[a] = static_cast<Elem>(ff_inv(elems[a]).rank());
    for (unsigned b = 0; b < q_; ++b) {
      add_[a * q_ + b] = static_cast<Elem>(ff_add(elems[a], elems[b]).rank());
      mul_[a * q_ + b] = static_cast<Elem>(ff_mul(elems[a], elems[b]).rank());
    }
  }
  if (field_->n % 2 == 0) {
    frob_.resize(q_);
    for (unsigned a = 0; a < q_; ++a) frob_[a] = static_cast<Elem>(ff_frobenius_sqrtq(elems[a]).rank());
  }
  for (unsigned i = 0; i < field_->n; ++i) {
    std::vector<std::uint32_t> c(field_->n, 0);
    c[i] = 1;
    prime_basis_.push_back(static_cast<Elem>(FieldElement(field_, c).rank()));
  }
}

FieldElement FieldTables::element(Elem rank) const { return FieldElement::from_rank(field_, rank); }

FieldTables::Elem FieldTables::rank_of(const FieldElement& e) const {
  if (!(*e.field() == *field_)) throw Error(ErrorKind::FieldMismatch, "element from another field");
  return static_cast<Elem>(e.rank());
}

}  // namespace invcensus
