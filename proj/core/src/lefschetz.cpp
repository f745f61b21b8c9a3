#include "hullkit/lefschetz.hpp"

#include <random>

#include "hullkit/errors.hpp"

namespace hullkit {

SymplecticCheck verify_symplectic(const InvariantComplex& ic, const ExteriorForm& omega) {
  const std::size_t n = ic.model.ambient_dim;
  if (n % 2 != 0) throw PreconditionError("symplectic forms need even dimension, got " + std::to_string(n));
  if (omega.degree() != 2 || omega.dim() != n) throw PreconditionError("omega must be a 2-form on u");
  if (!ic.model.coords(omega)) throw PreconditionError("omega is not an invariant form");
  SymplecticCheck check;
  check.omega = omega;
  check.half_dim = n / 2;
  check.closed = ic.ambient.differential(omega).is_zero();
  check.top_power = wedge_power(omega, check.half_dim);
  check.top_power_nonzero = !check.top_power.is_zero();
  return check;
}

namespace {

Mat model_multiplication(const FormModel& model, const ExteriorForm& by, std::size_t from) {
  const std::size_t to = from + by.degree();
  Mat m(model.dim(to), model.dim(from));
  for (std::size_t j = 0; j < model.dim(from); ++j) {
    auto c = model.coords(wedge(by, model.form(from, unit_vec(model.dim(from), j))));
    if (!c) throw InternalError("invariant model is not closed under wedge");
    m.set_column(j, *c);
  }
  return m;
}

bool is_invertible(const Mat& m) { return m.is_square() && rank(m) == m.rows(); }

}  // namespace

LefschetzReport hard_lefschetz(const InvariantComplex& ic, const ExteriorForm& omega) {
  const SymplecticCheck check = verify_symplectic(ic, omega);
  if (!check.symplectic()) throw PreconditionError("omega is not symplectic");
  const std::size_t n = check.half_dim;
  const CohomologyRing ring(ic.model);

  LefschetzReport report;
  report.half_dim = n;
  report.holds = true;
  for (std::size_t i = 0; i <= n; ++i) {
    const ExteriorForm power = wedge_power(omega, n - i);
    const std::size_t src = ring.basis(i).size();
    Mat m(ring.basis(2 * n - i).size(), src);
    for (std::size_t j = 0; j < src; ++j)
      m.set_column(j, ring.class_of(wedge(power, ring.representative(ring.basis_class(i, j)))).coords);
    const bool iso = is_invertible(m);
    report.maps.push_back(std::move(m));
    report.iso.push_back(iso);
    report.holds = report.holds && iso;
  }

  if (ic.model.has_zero_differential()) {
    const bool perfect = poincare_pairing(ring).all_perfect();
    std::vector<bool> route;
    for (std::size_t i = 0; i <= n; ++i) {
      const Mat m = model_multiplication(ic.model, wedge_power(omega, n - i), i);
      route.push_back(perfect && rank(m) == m.cols() && m.rows() == m.cols());
    }
    report.routes_agree = route == report.iso;
    report.duality_route = std::move(route);
  }
  return report;
}

bool PoincarePairing::all_perfect() const {
  if (!top_one_dimensional) return false;
  for (bool p : perfect)
    if (!p) return false;
  return true;
}

PoincarePairing poincare_pairing(const CohomologyRing& ring) {
  PoincarePairing out;
  const std::size_t n = ring.top_degree();
  out.top_one_dimensional = ring.basis(n).size() == 1;
  if (!out.top_one_dimensional) return out;
  for (std::size_t k = 0; k <= n; ++k) {
    const std::size_t rows = ring.basis(k).size();
    const std::size_t cols = ring.basis(n - k).size();
    Mat p(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        p(i, j) = ring.cup(ring.basis_class(k, i), ring.basis_class(n - k, j)).coords[0];
    out.perfect.push_back(is_invertible(p));
    out.pairing.push_back(std::move(p));
  }
  return out;
}

PoincarePairing poincare_pairing(const InvariantComplex& ic) { return poincare_pairing(CohomologyRing(ic.model)); }

std::optional<ExteriorForm> search_symplectic(const InvariantComplex& ic, std::uint32_t seed, std::size_t tries,
                                              int height) {
  const std::size_t n = ic.model.ambient_dim;
  if (n % 2 != 0 || n < 2) return std::nullopt;
  const auto closed = kernel_basis(ic.model.diff[2]);
  if (closed.empty()) return std::nullopt;
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> coeff(-height, height);
  for (std::size_t t = 0; t < tries; ++t) {
    Vec c = zero_vec(ic.model.dim(2));
    for (const auto& v : closed) c = c + Rational(coeff(rng)) * v;
    const ExteriorForm omega = ic.model.form(2, c);
    if (!wedge_power(omega, n / 2).is_zero()) return omega;
  }
  return std::nullopt;
}

}  // namespace hullkit
