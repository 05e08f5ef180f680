#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace invcensus {

inline constexpr unsigned kMaxFieldDegree = 6;
inline constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 20;

/// GF(p^n) presented as GF(p)[x] / (poly). `poly` holds the n low
/// coefficients of the monic defining polynomial, constant term first.
struct FieldSpec {
  std::uint32_t p = 0;
  unsigned n = 0;
  std::vector<std::uint32_t> poly;
  std::uint64_t q = 0;

  bool operator==(const FieldSpec&) const = default;
};

using Field = std::shared_ptr<const FieldSpec>;

/// Builds GF(p^n) over the lexicographically smallest monic irreducible of
/// degree n, comparing (c_{n-1}, ..., c_0) as base-p integers.
Field field_make(std::uint32_t p, unsigned n);

bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& monic_low_coeffs);

/// Human-readable defining polynomial, e.g. "x^2+x+1".
std::string format_poly(const FieldSpec& spec);

class FieldElement {
 public:
  using Coeffs = std::array<std::uint32_t, kMaxFieldDegree>;

  FieldElement(Field field, const std::vector<std::uint32_t>& coeffs);

  static FieldElement zero(Field field);
  static FieldElement one(Field field);
  /// The class of x, i.e. the root of the defining polynomial.
  static FieldElement generator(Field field);
  static FieldElement from_int(Field field, std::uint64_t value);
  static FieldElement from_rank(Field field, std::uint64_t rank);

  const Field& field() const { return field_; }
  std::vector<std::uint32_t> coeffs() const;
  std::uint32_t coeff(unsigned i) const { return coeffs_[i]; }
  bool is_zero() const;

  /// Base-p digits with the constant term most significant; the order on
  /// ranks is the lexicographic order of the digit strings.
  std::uint64_t rank() const;

  std::string to_string() const;

  bool operator==(const FieldElement& other) const;

 private:
  FieldElement(Field field, const Coeffs& coeffs) : field_(std::move(field)), coeffs_(coeffs) {}

  friend FieldElement ff_add(const FieldElement&, const FieldElement&);
  friend FieldElement ff_sub(const FieldElement&, const FieldElement&);
  friend FieldElement ff_neg(const FieldElement&);
  friend FieldElement ff_mul(const FieldElement&, const FieldElement&);

  Field field_;
  Coeffs coeffs_{};
};

FieldElement ff_add(const FieldElement& a, const FieldElement& b);
FieldElement ff_sub(const FieldElement& a, const FieldElement& b);
FieldElement ff_neg(const FieldElement& a);
FieldElement ff_mul(const FieldElement& a, const FieldElement& b);
FieldElement ff_pow(const FieldElement& a, std::uint64_t e);
FieldElement ff_inv(const FieldElement& a);

/// x -> x^sqrt(|F|) on a field of square order; an involutory automorphism
/// fixing exactly the subfield of order sqrt(|F|).
FieldElement ff_frobenius_sqrtq(const FieldElement& x);

/// Dense lookup tables over element ranks, for fields small enough that
/// q x q tables fit comfortably. This is what the matrix kernels run on.
class FieldTables {
 public:
  using Elem = std::uint8_t;
  static constexpr std::uint64_t kMaxOrder = 256;

  static std::shared_ptr<const FieldTables> make(Field field);

  const Field& field() const { return field_; }
  unsigned q() const { return q_; }
  Elem zero() const { return 0; }
  Elem one() const { return one_; }

  Elem add(Elem a, Elem b) const { return add_[a * q_ + b]; }
  Elem sub(Elem a, Elem b) const { return add_[a * q_ + neg_[b]]; }
  Elem mul(Elem a, Elem b) const { return mul_[a * q_ + b]; }
  Elem neg(Elem a) const { return neg_[a]; }
  /// Undefined for zero; callers check.
  Elem inv(Elem a) const { return inv_[a]; }
  /// Only meaningful when has_frobenius().
  Elem frob(Elem a) const { return frob_[a]; }
  bool has_frobenius() const { return !frob_.empty(); }

  /// Ranks of 1, x, ..., x^{n-1}: a basis of the field over GF(p).
  const std::vector<Elem>& prime_basis() const { return prime_basis_; }

  FieldElement element(Elem rank) const;
  Elem rank_of(const FieldElement& e) const;

 private:
  explicit FieldTables(Field field);

  Field field_;
  unsigned q_ = 0;
  Elem one_ = 0;
  std::vector<Elem> add_, mul_, neg_, inv_, frob_;
  std::vector<Elem> prime_basis_;
};

}  // namespace invcensus
