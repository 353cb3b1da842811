#include <asymcoh/abelian/abelian.hpp>
#include <asymcoh/error.hpp>

namespace asymcoh::abelian {

namespace {

void check_square(const ComplexMatrix& h, unsigned g, std::size_t k) {
  const std::string which = "basis form " + std::to_string(k);
  if (h.re.rows() != g || h.re.cols() != g || h.im.rows() != g || h.im.cols() != g) {
    throw ModelValidationError(which + " is not " + std::to_string(g) + "x" + std::to_string(g));
  }
  for (unsigned a = 0; a < g; ++a) {
    for (unsigned b = 0; b < g; ++b) {
      if (h.re(a, b) != h.re(b, a) || h.im(a, b) != -h.im(b, a)) {
        throw ModelValidationError(which + " is not Hermitian");
      }
    }
  }
}

// Interleaved realification: coordinate a maps to rows 2a (real) and 2a+1 (imaginary).
Matrix realify_real_part(const ComplexMatrix& h) {
  const std::size_t g = h.re.rows();
  Matrix s(2 * g, 2 * g);
  for (std::size_t a = 0; a < g; ++a) {
    for (std::size_t b = 0; b < g; ++b) {
      s(2 * a, 2 * b) = h.re(a, b);
      s(2 * a, 2 * b + 1) = -h.im(a, b);
      s(2 * a + 1, 2 * b) = h.im(a, b);
      s(2 * a + 1, 2 * b + 1) = h.re(a, b);
    }
  }
  return s;
}

Matrix realify_imaginary_part(const ComplexMatrix& h) {
  const std::size_t g = h.re.rows();
  Matrix e(2 * g, 2 * g);
  for (std::size_t a = 0; a < g; ++a) {
    for (std::size_t b = 0; b < g; ++b) {
      e(2 * a, 2 * b) = h.im(a, b);
      e(2 * a, 2 * b + 1) = h.re(a, b);
      e(2 * a + 1, 2 * b) = -h.re(a, b);
      e(2 * a + 1, 2 * b + 1) = h.im(a, b);
    }
  }
  return e;
}

}  // namespace

AbelianModel AbelianModel::create(unsigned g, std::vector<ComplexMatrix> basis_forms,
                                  std::vector<Vector> lattice) {
  if (g == 0) throw ModelValidationError("dimension g must be positive");
  if (basis_forms.empty()) throw ModelValidationError("at least one basis form is required");
  for (std::size_t k = 0; k < basis_forms.size(); ++k) check_square(basis_forms[k], g, k);
  if (lattice.size() != 2 * g) {
    throw ModelValidationError("lattice needs " + std::to_string(2 * g) + " generators");
  }
  for (const auto& v : lattice) {
    if (v.size() != 2 * g) {
      throw ModelValidationError("lattice generators must have " + std::to_string(2 * g) + " coordinates");
    }
  }
  AbelianModel model;
  model.g_ = g;
  model.forms_ = std::move(basis_forms);
  model.lattice_ = Matrix::from_columns(lattice);
  const Rational det = determinant(model.lattice_);
  if (det.is_zero()) throw ModelValidationError("lattice generators are linearly dependent");
  model.orientation_ = sign(det);
  const Matrix lt = model.lattice_.transpose();
  for (std::size_t k = 0; k < model.forms_.size(); ++k) {
    Matrix e = lt * realify_imaginary_part(model.forms_[k]) * model.lattice_;
    for (std::size_t i = 0; i < e.rows(); ++i) {
      for (std::size_t j = 0; j < e.cols(); ++j) {
        if (!is_integer(e(i, j))) {
          throw ModelValidationError("imaginary part of basis form " + std::to_string(k) +
                                     " is not integral on the lattice");
        }
      }
    }
    model.lattice_forms_.emplace_back(std::move(e));
  }
  return model;
}

void AbelianModel::require_rank(const DivisorClass& xi) const {
  if (xi.rank() != rank()) {
    throw DimensionMismatch("class has " + std::to_string(xi.rank()) + " coordinates, model rank is " +
                            std::to_string(rank()));
  }
}

ComplexMatrix AbelianModel::hermitian_form(const DivisorClass& xi) const {
  require_rank(xi);
  ComplexMatrix h{Matrix(g_, g_), Matrix(g_, g_)};
  for (std::size_t k = 0; k < rank(); ++k) {
    if (xi[k].is_zero()) continue;
    h.re = h.re + xi[k] * forms_[k].re;
    h.im = h.im + xi[k] * forms_[k].im;
  }
  return h;
}

SymMatrix AbelianModel::realified_form(const DivisorClass& xi) const {
  return SymMatrix(realify_real_part(hermitian_form(xi)));
}

AntisymMatrix AbelianModel::lattice_form(const DivisorClass& xi) const {
  require_rank(xi);
  Matrix e(2 * g_, 2 * g_);
  for (std::size_t k = 0; k < rank(); ++k) {
    if (!xi[k].is_zero()) e = e + xi[k] * lattice_forms_[k].matrix();
  }
  return AntisymMatrix(std::move(e));
}

std::optional<unsigned> hermitian_index(const AbelianModel& model, const DivisorClass& xi) {
  const Signature s = signature(model.realified_form(xi));
  if (s.zeros != 0) return std::nullopt;
  return static_cast<unsigned>(s.negatives / 2);
}

CohomologyVector abelian_asym_h(const AbelianModel& model, const DivisorClass& xi) {
  CohomologyVector out = CohomologyVector::zeros(model.g());
  const auto index = hermitian_index(model, xi);
  if (!index) return out;
  out.values[*index] = Rational(factorial(model.g())) * abs(pfaffian(model.lattice_form(xi)));
  return out;
}

Rational abelian_top_intersection(const AbelianModel& model, const DivisorClass& xi) {
  return Rational(factorial(model.g())) * model.orientation() * pfaffian(model.lattice_form(xi));
}

std::optional<unsigned> exe_index(const Rational& x, const Rational& y, const Rational& z) {
  const Rational q = 2 * (x * y + x * z + y * z);
  if (q.is_zero()) return std::nullopt;
  if (q < 0) return 1u;
  return x + y + z > 0 ? 0u : 2u;
}

CohomologyVector exe_asym_h(const Rational& x, const Rational& y, const Rational& z) {
  CohomologyVector out = CohomologyVector::zeros(2);
  const auto index = exe_index(x, y, z);
  if (index) out.values[*index] = abs(Rational(2 * (x * y + x * z + y * z)));
  return out;
}

AbelianModel elliptic_curve(const Rational& degree) {
  return AbelianModel::create(1, {ComplexMatrix{Matrix{{degree}}, Matrix{{0}}}}, {{1, 0}, {0, 1}});
}

AbelianModel elliptic_square_model() {
  const Matrix zero(2, 2);
  std::vector<ComplexMatrix> forms{
      {Matrix{{1, 0}, {0, 0}}, zero},
      {Matrix{{0, 0}, {0, 1}}, zero},
      {Matrix{{1, -1}, {-1, 1}}, zero},
  };
  std::vector<Vector> lattice;
  for (std::size_t i = 0; i < 4; ++i) {
    Vector v(4, Rational(0));
    v[i] = 1;
    lattice.push_back(std::move(v));
  }
  return AbelianModel::create(2, std::move(forms), std::move(lattice));
}

}  // namespace asymcoh::abelian
