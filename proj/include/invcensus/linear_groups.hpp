#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "invcensus/element_ops.hpp"
#include "invcensus/finite_field.hpp"

namespace invcensus {

inline constexpr unsigned kMaxMatrixDim = 4;

/// Square matrix over a small finite field; entries are field ranks.
class Matrix {
 public:
  using Elem = FieldTables::Elem;
  using Entries = std::array<Elem, kMaxMatrixDim * kMaxMatrixDim>;

  Matrix(std::shared_ptr<const FieldTables> field, unsigned dim);

  static Matrix identity(std::shared_ptr<const FieldTables> field, unsigned dim);
  static Matrix scalar(std::shared_ptr<const FieldTables> field, unsigned dim, Elem lambda);
  /// Rows of prime-field integers (reduced mod p).
  static Matrix from_ints(std::shared_ptr<const FieldTables> field,
                          std::initializer_list<std::initializer_list<int>> rows);
  static Matrix from_elements(std::shared_ptr<const FieldTables> field,
                              const std::vector<std::vector<FieldElement>>& rows);

  unsigned dim() const { return dim_; }
  const std::shared_ptr<const FieldTables>& field() const { return field_; }

  Elem operator()(unsigned i, unsigned j) const { return entries_[i * dim_ + j]; }
  Elem& operator()(unsigned i, unsigned j) { return entries_[i * dim_ + j]; }
  FieldElement at(unsigned i, unsigned j) const { return field_->element((*this)(i, j)); }
  const Entries& entries() const { return entries_; }

  std::string to_string() const;

  bool operator==(const Matrix& other) const;

 private:
  std::shared_ptr<const FieldTables> field_;
  unsigned dim_;
  Entries entries_{};
};

Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix mat_inv(const Matrix& a);
FieldElement det(const Matrix& a);
Matrix transpose(const Matrix& a);
/// Entrywise x -> x^sqrt(|F|).
Matrix conjugate(const Matrix& a);
Matrix scale(const Matrix& a, Matrix::Elem lambda);

enum class FormKind { None, Symplectic, Hermitian };

struct FormSpec {
  FormKind kind;
  Matrix gram;
};

/// [[0, I], [-I, 0]] in even dimension.
FormSpec symplectic_form(std::shared_ptr<const FieldTables> field, unsigned dim);
/// Antidiagonal identity; the field must have square order.
FormSpec hermitian_form(std::shared_ptr<const FieldTables> field, unsigned dim);
FormSpec no_form(std::shared_ptr<const FieldTables> field, unsigned dim);

bool preserves_form(const Matrix& m, const FormSpec& form);

enum class LinearFamily { SL2, SL3, SP4, SU3 };

const char* to_string(LinearFamily family);

/// Everything needed to enumerate the projective group of a family.
struct LinearGroupData {
  LinearFamily family;
  std::uint64_t q;
  std::shared_ptr<const FieldTables> field;  // GF(q), or GF(q^2) for SU3
  unsigned dim;
  FormSpec form;
  std::vector<Matrix> generators;
  std::vector<Matrix::Elem> center;  // ascending ranks, always contains 1
};

LinearGroupData linear_group_data(LinearFamily family, std::uint64_t q);

/// Transvection generating set whose closure is SL(2,q), SL(3,q), Sp(4,q) or
/// SU(3,q) (the latter as matrices over GF(q^2)).
std::vector<Matrix> generators(LinearFamily family, std::uint64_t q);

/// Scalars lambda with lambda^dim = 1 whose scalar matrix preserves the form.
std::vector<Matrix::Elem> center_scalars(const std::shared_ptr<const FieldTables>& field,
                                         unsigned dim, const FormSpec& form);

struct ProjectiveElement {
  Matrix rep;
  std::vector<FieldElement> center_scalars;
};

/// Lexicographic minimum of { lambda * m : lambda in center } under the
/// row-major canonical byte encoding.
ProjectiveElement canonical_projective(const Matrix& m, std::span<const Matrix::Elem> center);

/// Packed arithmetic on PGL-style quotients by a given scalar subgroup.
class MatrixProjectiveOps final : public ElementOps {
 public:
  MatrixProjectiveOps(std::shared_ptr<const FieldTables> field, unsigned dim,
                      std::vector<Matrix::Elem> center);

  ElementKind kind() const override { return ElementKind::MatrixProjective; }
  ElementKey identity() const override { return identity_; }
  ElementKey multiply(ElementKey a, ElementKey b) const override;
  ElementKey inverse(ElementKey a) const override;
  std::vector<std::uint8_t> encoding(ElementKey a) const override;
  std::string describe(ElementKey a) const override;

  /// Canonicalizes modulo the center and packs.
  ElementKey encode(const Matrix& m) const;
  Matrix decode(ElementKey key) const;

  unsigned dim() const { return dim_; }
  const std::vector<Matrix::Elem>& center() const { return center_; }

 private:
  ElementKey canonical_key(const Matrix::Entries& e) const;
  ElementKey pack(const Matrix::Entries& e) const;
  void unpack(ElementKey key, Matrix::Entries& e) const;

  std::shared_ptr<const FieldTables> field_;
  unsigned dim_;
  unsigned bits_;
  ElementKey mask_;
  std::vector<Matrix::Elem> center_;  // without 1
  ElementKey identity_;
};

}  // namespace invcensus
