#include "invcensus/linear_groups.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "invcensus/error.hpp"
#include "invcensus/number_theory.hpp"

namespace invcensus {

namespace {

using Elem = Matrix::Elem;
using Entries = Matrix::Entries;
using Tables = std::shared_ptr<const FieldTables>;

void require_compatible(const Matrix& a, const Matrix& b) {
  if (a.dim() != b.dim()) throw Error(ErrorKind::DimMismatch, "matrix dimensions differ");
  if (a.field() != b.field() && !(*a.field()->field() == *b.field()->field()))
    throw Error(ErrorKind::FieldMismatch, "matrices over different fields");
}

template <unsigned D>
void product(const FieldTables& f, const Entries& a, const Entries& b, Entries& c) {
  for (unsigned i = 0; i < D; ++i)
    for (unsigned j = 0; j < D; ++j) {
      Elem acc = 0;
      for (unsigned k = 0; k < D; ++k) acc = f.add(acc, f.mul(a[i * D + k], b[k * D + j]));
      c[i * D + j] = acc;
    }
}

void product(const FieldTables& f, unsigned dim, const Entries& a, const Entries& b, Entries& c) {
  switch (dim) {
    case 1: product<1>(f, a, b, c); return;
    case 2: product<2>(f, a, b, c); return;
    case 3: product<3>(f, a, b, c); return;
    case 4: product<4>(f, a, b, c); return;
    default: throw Error(ErrorKind::DimMismatch, "unsupported matrix dimension");
  }
}

}  // namespace

Matrix::Matrix(std::shared_ptr<const FieldTables> field, unsigned dim)
    : field_(std::move(field)), dim_(dim) {
  if (dim_ < 1 || dim_ > kMaxMatrixDim)
    throw Error(ErrorKind::DimMismatch, "matrix dimension must be 1.." + std::to_string(kMaxMatrixDim));
}

Matrix Matrix::identity(std::shared_ptr<const FieldTables> field, unsigned dim) {
  const Elem one = field->one();
  return scalar(std::move(field), dim, one);
}

Matrix Matrix::scalar(std::shared_ptr<const FieldTables> field, unsigned dim, Elem lambda) {
  Matrix m(std::move(field), dim);
  for (unsigned i = 0; i < dim; ++i) m(i, i) = lambda;
  return m;
}

Matrix Matrix::from_ints(std::shared_ptr<const FieldTables> field,
                         std::initializer_list<std::initializer_list<int>> rows) {
  const auto dim = static_cast<unsigned>(rows.size());
  Matrix m(field, dim);
  const auto p = static_cast<int>(field->field()->p);
  unsigned i = 0;
  for (const auto& row : rows) {
    if (row.size() != dim) throw Error(ErrorKind::DimMismatch, "matrix rows must be square");
    unsigned j = 0;
    for (int v : row) {
      const int r = ((v % p) + p) % p;
      m(i, j++) = field->rank_of(FieldElement::from_int(field->field(), static_cast<std::uint64_t>(r)));
    }
    ++i;
  }
  return m;
}

Matrix Matrix::from_elements(std::shared_ptr<const FieldTables> field,
                             const std::vector<std::vector<FieldElement>>& rows) {
  const auto dim = static_cast<unsigned>(rows.size());
  Matrix m(field, dim);
  for (unsigned i = 0; i < dim; ++i) {
    if (rows[i].size() != dim) throw Error(ErrorKind::DimMismatch, "matrix rows must be square");
    for (unsigned j = 0; j < dim; ++j) m(i, j) = field->rank_of(rows[i][j]);
  }
  return m;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (unsigned i = 0; i < dim_; ++i) {
    os << (i ? ",[" : "[");
    for (unsigned j = 0; j < dim_; ++j) os << (j ? "," : "") << at(i, j).to_string();
    os << ']';
  }
  os << ']';
  return os.str();
}

bool Matrix::operator==(const Matrix& other) const {
  return dim_ == other.dim_ && *field_->field() == *other.field_->field() && entries_ == other.entries_;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  require_compatible(a, b);
  Matrix c(a.field(), a.dim());
  Entries out{};
  product(*a.field(), a.dim(), a.entries(), b.entries(), out);
  for (unsigned i = 0; i < a.dim(); ++i)
    for (unsigned j = 0; j < a.dim(); ++j) c(i, j) = out[i * a.dim() + j];
  return c;
}

Matrix mat_inv(const Matrix& a) {
  const auto& f = *a.field();
  const unsigned n = a.dim();
  Matrix work = a;
  Matrix inv = Matrix::identity(a.field(), n);
  for (unsigned col = 0; col < n; ++col) {
    unsigned pivot = col;
    while (pivot < n && work(pivot, col) == 0) ++pivot;
    if (pivot == n) throw Error(ErrorKind::Singular, "matrix is not invertible");
    if (pivot != col)
      for (unsigned j = 0; j < n; ++j) {
        std::swap(work(pivot, j), work(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    const Elem s = f.inv(work(col, col));
    for (unsigned j = 0; j < n; ++j) {
      work(col, j) = f.mul(s, work(col, j));
      inv(col, j) = f.mul(s, inv(col, j));
    }
    for (unsigned r = 0; r < n; ++r) {
      if (r == col || work(r, col) == 0) continue;
      const Elem factor = work(r, col);
      for (unsigned j = 0; j < n; ++j) {
        work(r, j) = f.sub(work(r, j), f.mul(factor, work(col, j)));
        inv(r, j) = f.sub(inv(r, j), f.mul(factor, inv(col, j)));
      }
    }
  }
  return inv;
}

FieldElement det(const Matrix& a) {
  const auto& f = *a.field();
  const unsigned n = a.dim();
  Matrix work = a;
  Elem result = f.one();
  for (unsigned col = 0; col < n; ++col) {
    unsigned pivot = col;
    while (pivot < n && work(pivot, col) == 0) ++pivot;
    if (pivot == n) return f.element(0);
    if (pivot != col) {
      for (unsigned j = 0; j < n; ++j) std::swap(work(pivot, j), work(col, j));
      result = f.neg(result);
    }
    result = f.mul(result, work(col, col));
    const Elem s = f.inv(work(col, col));
    for (unsigned r = col + 1; r < n; ++r) {
      if (work(r, col) == 0) continue;
      const Elem factor = f.mul(work(r, col), s);
      for (unsigned j = col; j < n; ++j) work(r, j) = f.sub(work(r, j), f.mul(factor, work(col, j)));
    }
  }
  return f.element(result);
}

Matrix transpose(const Matrix& a) {
  Matrix t(a.field(), a.dim());
  for (unsigned i = 0; i < a.dim(); ++i)
    for (unsigned j = 0; j < a.dim(); ++j) t(j, i) = a(i, j);
  return t;
}

Matrix conjugate(const Matrix& a) {
  if (!a.field()->has_frobenius())
    throw Error(ErrorKind::NotSquareField, "conjugation needs a field of square order");
  Matrix c(a.field(), a.dim());
  for (unsigned i = 0; i < a.dim(); ++i)
    for (unsigned j = 0; j < a.dim(); ++j) c(i, j) = a.field()->frob(a(i, j));
  return c;
}

Matrix scale(const Matrix& a, Elem lambda) {
  Matrix s(a.field(), a.dim());
  for (unsigned i = 0; i < a.dim(); ++i)
    for (unsigned j = 0; j < a.dim(); ++j) s(i, j) = a.field()->mul(lambda, a(i, j));
  return s;
}

FormSpec symplectic_form(Tables field, unsigned dim) {
  if (dim % 2 != 0) throw Error(ErrorKind::DimMismatch, "symplectic forms need even dimension");
  Matrix j(field, dim);
  const unsigned h = dim / 2;
  for (unsigned i = 0; i < h; ++i) {
    j(i, h + i) = field->one();
    j(h + i, i) = field->neg(field->one());
  }
  return {FormKind::Symplectic, j};
}

FormSpec hermitian_form(Tables field, unsigned dim) {
  if (!field->has_frobenius())
    throw Error(ErrorKind::NotSquareField, "hermitian forms need a field of square order");
  Matrix j(field, dim);
  for (unsigned i = 0; i < dim; ++i) j(i, dim - 1 - i) = field->one();
  return {FormKind::Hermitian, j};
}

FormSpec no_form(Tables field, unsigned dim) { return {FormKind::None, Matrix(std::move(field), dim)}; }

bool preserves_form(const Matrix& m, const FormSpec& form) {
  if (form.kind == FormKind::None) return true;
  if (m.dim() != form.gram.dim()) throw Error(ErrorKind::DimMismatch, "form and matrix dimensions differ");
  const Matrix left = form.kind == FormKind::Symplectic ? transpose(m) : transpose(conjugate(m));
  return mat_mul(mat_mul(left, form.gram), m) == form.gram;
}

const char* to_string(LinearFamily family) {
  switch (family) {
    case LinearFamily::SL2: return "SL2";
    case LinearFamily::SL3: return "SL3";
    case LinearFamily::SP4: return "SP4";
    case LinearFamily::SU3: return "SU3";
  }
  return "?";
}

namespace {

unsigned family_dim(LinearFamily family) {
  switch (family) {
    case LinearFamily::SL2: return 2;
    case LinearFamily::SL3: return 3;
    case LinearFamily::SP4: return 4;
    case LinearFamily::SU3: return 3;
  }
  throw Error(ErrorKind::UnsupportedFamily, "unknown linear family");
}

std::vector<Matrix> sl_generators(const Tables& field, unsigned dim) {
  std::vector<Matrix> gens;
  for (unsigned i = 0; i < dim; ++i)
    for (unsigned j = 0; j < dim; ++j) {
      if (i == j) continue;
      for (Elem lambda : field->prime_basis()) {
        Matrix t = Matrix::identity(field, dim);
        t(i, j) = lambda;
        gens.push_back(t);
      }
    }
  return gens;
}

// x -> x + lambda <x, v> v, i.e. I + lambda v (J v)^T.
std::vector<Matrix> sp4_generators(const Tables& field, const FormSpec& form) {
  const auto& f = *field;
  std::vector<std::array<Elem, 4>> vectors;
  for (unsigned i = 0; i < 4; ++i) {
    std::array<Elem, 4> v{};
    v[i] = f.one();
    vectors.push_back(v);
  }
  for (unsigned i = 0; i < 4; ++i)
    for (unsigned j = i + 1; j < 4; ++j) {
      std::array<Elem, 4> v{};
      v[i] = f.one();
      v[j] = f.one();
      vectors.push_back(v);
    }

  std::vector<Matrix> gens;
  for (const auto& v : vectors) {
    std::array<Elem, 4> jv{};
    for (unsigned r = 0; r < 4; ++r) {
      Elem acc = 0;
      for (unsigned c = 0; c < 4; ++c) acc = f.add(acc, f.mul(form.gram(r, c), v[c]));
      jv[r] = acc;
    }
    for (Elem lambda : f.prime_basis()) {
      Matrix t = Matrix::identity(field, 4);
      for (unsigned r = 0; r < 4; ++r)
        for (unsigned c = 0; c < 4; ++c) t(r, c) = f.add(t(r, c), f.mul(lambda, f.mul(v[r], jv[c])));
      gens.push_back(t);
    }
  }
  return gens;
}

// Upper unitriangular root elements [[1,a,b],[0,1,c],[0,0,1]] preserving the
// antidiagonal hermitian form, plus their conjugates under the antidiagonal
// flip.
std::vector<Matrix> su3_generators(const Tables& field, const FormSpec& form) {
  const auto& f = *field;
  const unsigned big_q = f.q();
  auto upper = [&](Elem a, Elem b, Elem c) {
    Matrix m = Matrix::identity(field, 3);
    m(0, 1) = a;
    m(0, 2) = b;
    m(1, 2) = c;
    return m;
  };

  std::vector<Matrix> ups;
  for (Elem a : f.prime_basis()) {
    bool found = false;
    for (unsigned c = 0; c < big_q && !found; ++c)
      for (unsigned b = 0; b < big_q && !found; ++b) {
        Matrix m = upper(a, static_cast<Elem>(b), static_cast<Elem>(c));
        if (preserves_form(m, form)) {
          ups.push_back(m);
          found = true;
        }
      }
    if (!found) throw Error(ErrorKind::UnsupportedFamily, "no unitary root element for a basis vector");
  }

  // a = 0: b runs over a GF(p)-basis of { b : b + conj(b) = 0 }.
  const unsigned p = f.field()->p;
  std::vector<bool> span(big_q, false);
  span[0] = true;
  for (unsigned b = 1; b < big_q; ++b) {
    if (span[b]) continue;
    Matrix m = upper(0, static_cast<Elem>(b), 0);
    if (!preserves_form(m, form)) continue;
    ups.push_back(m);
    std::vector<bool> next(span);
    for (unsigned s = 0; s < big_q; ++s) {
      if (!span[s]) continue;
      Elem acc = static_cast<Elem>(s);
      for (unsigned k = 1; k < p; ++k) {
        acc = f.add(acc, static_cast<Elem>(b));
        next[acc] = true;
      }
    }
    span = std::move(next);
  }

  const Matrix& w = form.gram;  // antidiagonal identity, an involution
  std::vector<Matrix> gens = ups;
  for (const auto& u : ups) gens.push_back(mat_mul(mat_mul(w, u), w));
  return gens;
}

}  // namespace

std::vector<Elem> center_scalars(const Tables& field, unsigned dim, const FormSpec& form) {
  std::vector<Elem> out;
  for (unsigned r = 1; r < field->q(); ++r) {
    const auto lambda = static_cast<Elem>(r);
    Elem power = field->one();
    for (unsigned k = 0; k < dim; ++k) power = field->mul(power, lambda);
    if (power != field->one()) continue;
    if (preserves_form(Matrix::scalar(field, dim, lambda), form)) out.push_back(lambda);
  }
  return out;
}

LinearGroupData linear_group_data(LinearFamily family, std::uint64_t q) {
  const auto pp = as_prime_power(q);
  if (!pp) throw Error(ErrorKind::UnsupportedFamily, std::to_string(q) + " is not a prime power");
  const unsigned dim = family_dim(family);
  const unsigned degree = family == LinearFamily::SU3 ? 2 * pp->n : pp->n;
  const std::uint64_t field_order = ipow(pp->p, degree);
  if (degree > kMaxFieldDegree || field_order > FieldTables::kMaxOrder)
    throw Error(ErrorKind::UnsupportedFamily,
                std::string(to_string(family)) + " over q=" + std::to_string(q) + " needs too large a field");
  const unsigned bits = static_cast<unsigned>(std::bit_width(field_order - 1));
  if (bits * dim * dim > 64)
    throw Error(ErrorKind::UnsupportedFamily,
                std::string(to_string(family)) + " over q=" + std::to_string(q) + " does not fit a 64-bit key");

  auto field = FieldTables::make(field_make(static_cast<std::uint32_t>(pp->p), degree));
  FormSpec form = family == LinearFamily::SP4   ? symplectic_form(field, dim)
                  : family == LinearFamily::SU3 ? hermitian_form(field, dim)
                                                : no_form(field, dim);
  std::vector<Matrix> gens;
  switch (family) {
    case LinearFamily::SL2:
    case LinearFamily::SL3: gens = sl_generators(field, dim); break;
    case LinearFamily::SP4: gens = sp4_generators(field, form); break;
    case LinearFamily::SU3: gens = su3_generators(field, form); break;
  }
  auto center = center_scalars(field, dim, form);
  return LinearGroupData{family, q, field, dim, std::move(form), std::move(gens), std::move(center)};
}

std::vector<Matrix> generators(LinearFamily family, std::uint64_t q) {
  return linear_group_data(family, q).generators;
}

ProjectiveElement canonical_projective(const Matrix& m, std::span<const Elem> center) {
  Matrix best = m;
  for (Elem lambda : center) {
    Matrix candidate = scale(m, lambda);
    if (std::lexicographical_compare(candidate.entries().begin(), candidate.entries().end(),
                                     best.entries().begin(), best.entries().end()))
      best = candidate;
  }
  std::vector<FieldElement> scalars;
  for (Elem lambda : center) scalars.push_back(m.field()->element(lambda));
  return {best, std::move(scalars)};
}

MatrixProjectiveOps::MatrixProjectiveOps(Tables field, unsigned dim, std::vector<Elem> center)
    : field_(std::move(field)), dim_(dim) {
  bits_ = static_cast<unsigned>(std::bit_width(field_->q() - 1u));
  if (bits_ * dim_ * dim_ > 64) throw Error(ErrorKind::UnsupportedFamily, "matrix key exceeds 64 bits");
  mask_ = (ElementKey{1} << bits_) - 1;
  for (Elem lambda : center)
    if (lambda != field_->one()) center_.push_back(lambda);
  identity_ = encode(Matrix::identity(field_, dim_));
}

ElementKey MatrixProjectiveOps::pack(const Entries& e) const {
  ElementKey key = 0;
  for (unsigned k = 0; k < dim_ * dim_; ++k) key = (key << bits_) | e[k];
  return key;
}

void MatrixProjectiveOps::unpack(ElementKey key, Entries& e) const {
  for (unsigned k = dim_ * dim_; k-- > 0;) {
    e[k] = static_cast<Elem>(key & mask_);
    key >>= bits_;
  }
}

ElementKey MatrixProjectiveOps::canonical_key(const Entries& e) const {
  ElementKey best = pack(e);
  Entries scaled{};
  for (Elem lambda : center_) {
    for (unsigned k = 0; k < dim_ * dim_; ++k) scaled[k] = field_->mul(lambda, e[k]);
    best = std::min(best, pack(scaled));
  }
  return best;
}

ElementKey MatrixProjectiveOps::multiply(ElementKey a, ElementKey b) const {
  Entries ea{}, eb{}, ec{};
  unpack(a, ea);
  unpack(b, eb);
  product(*field_, dim_, ea, eb, ec);
  return canonical_key(ec);
}

ElementKey MatrixProjectiveOps::inverse(ElementKey a) const { return encode(mat_inv(decode(a))); }

ElementKey MatrixProjectiveOps::encode(const Matrix& m) const {
  if (m.dim() != dim_) throw Error(ErrorKind::DimMismatch, "matrix dimension differs from group");
  return canonical_key(m.entries());
}

Matrix MatrixProjectiveOps::decode(ElementKey key) const {
  Matrix m(field_, dim_);
  Entries e{};
  unpack(key, e);
  for (unsigned i = 0; i < dim_; ++i)
    for (unsigned j = 0; j < dim_; ++j) m(i, j) = e[i * dim_ + j];
  return m;
}

std::vector<std::uint8_t> MatrixProjectiveOps::encoding(ElementKey a) const {
  const Matrix m = decode(a);
  std::vector<std::uint8_t> bytes;
  for (unsigned i = 0; i < dim_; ++i)
    for (unsigned j = 0; j < dim_; ++j)
      for (auto digit : m.at(i, j).coeffs()) bytes.push_back(static_cast<std::uint8_t>(digit));
  return bytes;
}

std::string MatrixProjectiveOps::describe(ElementKey a) const { return decode(a).to_string(); }

}  // namespace invcensus
