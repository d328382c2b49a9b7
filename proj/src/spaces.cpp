#include "specgeo/spaces.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>

namespace specgeo {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kCutLocusGuard = 1e-9;

using Cplx = std::complex<double>;
using CVec = Eigen::VectorXcd;

Eigen::Map<const CVec> as_complex(const Eigen::VectorXd& v) {
  return Eigen::Map<const CVec>(
      reinterpret_cast<const Cplx*>(v.data()), v.size() / 2);
}

Eigen::VectorXd from_complex(const CVec& v) {
  Eigen::VectorXd out(2 * v.size());
  Eigen::Map<CVec>(reinterpret_cast<Cplx*>(out.data()), v.size()) = v;
  return out;
}

/// Hermitian form <z,w>, conjugate-linear in the first argument; for the
/// noncompact dual this is the signature (1,n) form with the positive
/// coordinate first.
Cplx hermitian_form(const SpaceSpec& spec, const Eigen::VectorXd& z,
                    const Eigen::VectorXd& w) {
  auto zc = as_complex(z);
  auto wc = as_complex(w);
  Cplx full = zc.dot(wc);
  if (spec.kind == Kind::Noncompact) {
    return 2.0 * std::conj(zc(0)) * wc(0) - full;
  }
  return full;
}

/// Minkowski form with the time coordinate last.
double minkowski_form(const Eigen::VectorXd& p, const Eigen::VectorXd& q) {
  const int m = static_cast<int>(p.size()) - 1;
  return p.head(m).dot(q.head(m)) - p(m) * q(m);
}

double clamp(double x, double lo, double hi) {
  return std::min(hi, std::max(lo, x));
}

}  // namespace

const char* field_name(Field f) {
  switch (f) {
    case Field::R: return "R";
    case Field::C: return "C";
    case Field::H: return "H";
    case Field::Ca: return "Ca";
  }
  return "?";
}

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::Compact: return "compact";
    case Kind::Noncompact: return "noncompact";
    case Kind::Euclidean: return "euclidean";
  }
  return "?";
}

Field parse_field(const std::string& s) {
  if (s == "R") return Field::R;
  if (s == "C") return Field::C;
  if (s == "H") return Field::H;
  if (s == "Ca") return Field::Ca;
  fail(ErrorCode::InvalidSpec, "unknown field '" + s + "'");
}

Kind parse_kind(const std::string& s) {
  if (s == "compact") return Kind::Compact;
  if (s == "noncompact") return Kind::Noncompact;
  if (s == "euclidean") return Kind::Euclidean;
  fail(ErrorCode::InvalidSpec, "unknown kind '" + s + "'");
}

SpaceSpec::SpaceSpec(Field field_, int n_, Kind kind_)
    : field(field_), n(n_), kind(kind_) {
  if (n < 1) fail(ErrorCode::InvalidSpec, "n must be a positive integer");
  if (dim() < 2) fail(ErrorCode::InvalidSpec, "total dimension k*n must be >= 2");
  if (field == Field::Ca && n != 2)
    fail(ErrorCode::InvalidSpec, "field Ca requires n = 2");
  if (kind == Kind::Euclidean && field != Field::R)
    fail(ErrorCode::InvalidSpec, "euclidean kind requires field R");
}

int SpaceSpec::k() const {
  switch (field) {
    case Field::R: return 1;
    case Field::C: return 2;
    case Field::H: return 4;
    case Field::Ca: return 8;
  }
  return 0;
}

int SpaceSpec::ambient_dim() const {
  if (!realized())
    fail(ErrorCode::UnrealizedSpace,
         "no ambient realization for field " + std::string(field_name(field)));
  if (field == Field::R) return kind == Kind::Euclidean ? n : n + 1;
  return 2 * (n + 1);
}

std::string SpaceSpec::to_string() const {
  return std::string(field_name(field)) + " n=" + std::to_string(n) + " " +
         kind_name(kind);
}

double ricci_constant(const SpaceSpec& spec) {
  // Pinned by the r-independence of lambda1(S(r)) - |A(r)|^2; see the
  // sphere_spectrum tests for the oracle sweep.
  if (spec.kind == Kind::Euclidean) return 0.0;
  const double value = (spec.dim() + 3.0 * spec.k() - 4.0) / 4.0;
  return spec.kind == Kind::Compact ? value : -value;
}

double injectivity_radius(const SpaceSpec& spec) {
  if (spec.kind != Kind::Compact) return kInf;
  return spec.k() == 1 ? 2.0 * kPi : kPi;
}

namespace detail {

double ambient_constraint_residual(const SpaceSpec& spec,
                                   const Eigen::VectorXd& coords) {
  const double scale = 1.0 + coords.squaredNorm();
  switch (spec.field) {
    case Field::R:
      if (spec.kind == Kind::Euclidean) return 0.0;
      if (spec.kind == Kind::Compact)
        return std::abs(coords.squaredNorm() - 4.0) / scale;
      if (coords(coords.size() - 1) <= 0.0) return 1.0;  // wrong sheet
      return std::abs(minkowski_form(coords, coords) + 4.0) / scale;
    case Field::C: {
      const Cplx zz = hermitian_form(spec, coords, coords);
      return std::abs(zz - Cplx(1.0, 0.0)) / scale;
    }
    default:
      fail(ErrorCode::UnrealizedSpace, spec.to_string());
  }
}

void snap_to_constraint(const SpaceSpec& spec, Eigen::VectorXd& coords) {
  switch (spec.field) {
    case Field::R:
      if (spec.kind == Kind::Euclidean) return;
      if (spec.kind == Kind::Compact) {
        coords *= 2.0 / coords.norm();
      } else {
        coords /= std::sqrt(-minkowski_form(coords, coords)) / 2.0;
      }
      return;
    case Field::C: {
      const Cplx zz = hermitian_form(spec, coords, coords);
      coords /= std::sqrt(zz.real());
      return;
    }
    default:
      fail(ErrorCode::UnrealizedSpace, spec.to_string());
  }
}

}  // namespace detail

Point::Point(SpaceSpec space_, Eigen::VectorXd coords_)
    : space(space_), coords(std::move(coords_)) {
  if (coords.size() != space.ambient_dim())
    fail(ErrorCode::InvalidPoint,
         "expected " + std::to_string(space.ambient_dim()) +
             " ambient coordinates, got " + std::to_string(coords.size()));
  if (detail::ambient_constraint_residual(space, coords) > 1e-12)
    fail(ErrorCode::InvalidPoint, "ambient constraint violated");
}

TangentVector::TangentVector(Point base_, Eigen::VectorXd components_)
    : base(std::move(base_)), components(std::move(components_)) {
  if (components.size() != base.coords.size())
    fail(ErrorCode::InvalidTangent, "component/ambient size mismatch");
  const SpaceSpec& spec = base.space;
  const double scale = 1.0 + components.norm() * (1.0 + base.coords.norm());
  switch (spec.field) {
    case Field::R:
      if (spec.kind == Kind::Compact &&
          std::abs(base.coords.dot(components)) > 1e-12 * scale)
        fail(ErrorCode::InvalidTangent, "not orthogonal to the sphere");
      if (spec.kind == Kind::Noncompact &&
          std::abs(minkowski_form(base.coords, components)) > 1e-12 * scale)
        fail(ErrorCode::InvalidTangent, "not Minkowski-orthogonal");
      break;
    case Field::C:
      if (std::abs(hermitian_form(spec, base.coords, components)) >
          1e-12 * scale)
        fail(ErrorCode::InvalidTangent, "not horizontal");
      break;
    default:
      fail(ErrorCode::UnrealizedSpace, spec.to_string());
  }
}

double TangentVector::metric_norm() const {
  return std::sqrt(std::max(
      0.0, metric_dot(base.space, base.coords, components, components)));
}

double metric_dot(const SpaceSpec& spec, const Eigen::VectorXd& base,
                  const Eigen::VectorXd& u, const Eigen::VectorXd& v) {
  switch (spec.field) {
    case Field::R:
      if (spec.kind == Kind::Noncompact) return minkowski_form(u, v);
      return u.dot(v);
    case Field::C: {
      const double re = hermitian_form(spec, u, v).real();
      return spec.kind == Kind::Noncompact ? -4.0 * re : 4.0 * re;
    }
    default:
      fail(ErrorCode::UnrealizedSpace, spec.to_string());
  }
  (void)base;
}

Eigen::VectorXd project_to_tangent(const SpaceSpec& spec,
                                   const Eigen::VectorXd& base,
                                   const Eigen::VectorXd& ambient) {
  switch (spec.field) {
    case Field::R: {
      if (spec.kind == Kind::Euclidean) return ambient;
      if (spec.kind == Kind::Compact)
        return ambient - (base.dot(ambient) / 4.0) * base;
      return ambient + (minkowski_form(base, ambient) / 4.0) * base;
    }
    case Field::C: {
      const Cplx c = hermitian_form(spec, base, ambient);
      CVec out = as_complex(ambient) - c * as_complex(base);
      return from_complex(out);
    }
    default:
      fail(ErrorCode::UnrealizedSpace, spec.to_string());
  }
}

Frame::Frame(Point base_, Eigen::MatrixXd vectors_)
    : base(std::move(base_)), vectors(std::move(vectors_)) {
  const SpaceSpec& spec = base.space;
  if (vectors.rows() != base.coords.size() || vectors.cols() != spec.dim())
    fail(ErrorCode::InvalidFrame, "frame must hold dim tangent vectors");
  Eigen::MatrixXd gram(spec.dim(), spec.dim());
  for (int i = 0; i < spec.dim(); ++i)
    for (int j = 0; j < spec.dim(); ++j)
      gram(i, j) = metric_dot(spec, base.coords, vectors.col(i), vectors.col(j));
  if ((gram - Eigen::MatrixXd::Identity(spec.dim(), spec.dim()))
          .cwiseAbs()
          .maxCoeff() > 1e-10)
    fail(ErrorCode::InvalidFrame, "frame is not metric-orthonormal");
}

TangentVector Frame::vector(int i) const {
  return TangentVector(base, vectors.col(i));
}

Point base_point(const SpaceSpec& spec) {
  Eigen::VectorXd coords = Eigen::VectorXd::Zero(spec.ambient_dim());
  switch (spec.field) {
    case Field::R:
      if (spec.kind != Kind::Euclidean) coords(coords.size() - 1) = 2.0;
      break;
    case Field::C:
      coords(0) = 1.0;
      break;
    default:
      fail(ErrorCode::UnrealizedSpace, spec.to_string());
  }
  return Point(spec, std::move(coords));
}

Point exp_map(const Point& p, const TangentVector& v) {
  const SpaceSpec& spec = p.space;
  if (!spec.realized()) fail(ErrorCode::UnrealizedSpace, spec.to_string());
  const double t = v.metric_norm();
  const double inj = injectivity_radius(spec);
  if (t > inj * (1.0 + 1e-9))
    fail(ErrorCode::BeyondInjectivityRadius,
         "|v| = " + std::to_string(t) + " exceeds the injectivity radius");
  if (t == 0.0) return p;

  Eigen::VectorXd out;
  switch (spec.field) {
    case Field::R:
      if (spec.kind == Kind::Euclidean) {
        out = p.coords + v.components;
      } else if (spec.kind == Kind::Compact) {
        out = std::cos(t / 2.0) * p.coords +
              (2.0 * std::sin(t / 2.0) / t) * v.components;
      } else {
        out = std::cosh(t / 2.0) * p.coords +
              (2.0 * std::sinh(t / 2.0) / t) * v.components;
      }
      break;
    case Field::C: {
      // Horizontal lift: the representative follows a great circle (or
      // hyperbola) through the unit representative sphere; the projected
      // geodesic has unit speed in the doubled metric.
      // s is also the ambient Euclidean (resp. pseudo) norm of the
      // components, so v/s is the unit ambient direction.
      const double s = t / 2.0;
      if (spec.kind == Kind::Compact) {
        out = std::cos(s) * p.coords + (std::sin(s) / s) * v.components;
      } else {
        out = std::cosh(s) * p.coords + (std::sinh(s) / s) * v.components;
      }
      break;
    }
    default:
      fail(ErrorCode::UnrealizedSpace, spec.to_string());
  }
  detail::snap_to_constraint(spec, out);
  return Point(spec, std::move(out));
}

double distance(const Point& p, const Point& q) {
  const SpaceSpec& spec = p.space;
  if (spec != q.space) fail(ErrorCode::DomainError, "points in different spaces");
  switch (spec.field) {
    case Field::R:
      if (spec.kind == Kind::Euclidean) return (p.coords - q.coords).norm();
      if (spec.kind == Kind::Compact) {
        // chord form of 2*acos(<p,q>/4); exact down to coincident points
        const double chord = (p.coords - q.coords).norm();
        return 4.0 * std::asin(clamp(chord / 4.0, 0.0, 1.0));
      } else {
        // chord form of 2*acosh(-<p,q>_M/4)
        const Eigen::VectorXd diff = p.coords - q.coords;
        const double delta = std::max(0.0, minkowski_form(diff, diff)) / 8.0;
        return 2.0 * std::asinh(std::sqrt(delta * (2.0 + delta)));
      }
    case Field::C: {
      const Cplx c = hermitian_form(spec, p.coords, q.coords);
      const double cm = std::abs(c);
      if (spec.kind == Kind::Compact) {
        if (cm <= 0.5) return 2.0 * std::acos(clamp(cm, 0.0, 1.0));
        // phase-aligned chord form of 2*acos|<z,w>|
        const CVec diff =
            as_complex(p.coords) - (std::conj(c) / cm) * as_complex(q.coords);
        return 4.0 * std::asin(clamp(0.5 * diff.norm(), 0.0, 1.0));
      }
      if (cm <= 0.0) return 0.0;
      const CVec diff =
          as_complex(p.coords) - (std::conj(c) / cm) * as_complex(q.coords);
      const Cplx dd = hermitian_form(spec, from_complex(diff), from_complex(diff));
      const double delta = std::max(0.0, -0.5 * dd.real());
      return 2.0 * std::asinh(std::sqrt(delta * (2.0 + delta)));
    }
    default:
      fail(ErrorCode::UnrealizedSpace, spec.to_string());
  }
}

TangentVector log_map(const Point& p, const Point& q) {
  const SpaceSpec& spec = p.space;
  if (spec != q.space) fail(ErrorCode::DomainError, "points in different spaces");
  if (!spec.realized()) fail(ErrorCode::UnrealizedSpace, spec.to_string());

  const double d = distance(p, q);
  const double cut = injectivity_radius(spec);
  if (d > cut - kCutLocusGuard)
    fail(ErrorCode::CutLocus, "q is at the cut distance of p");

  Eigen::VectorXd u;
  double u_norm = 0.0;  // norm of u in the tangent metric
  switch (spec.field) {
    case Field::R: {
      if (spec.kind == Kind::Euclidean)
        return TangentVector(p, q.coords - p.coords);
      if (spec.kind == Kind::Compact) {
        const double c = p.coords.dot(q.coords) / 4.0;
        u = q.coords - c * p.coords;
        u_norm = u.norm();
      } else {
        const double c = -minkowski_form(p.coords, q.coords) / 4.0;
        u = q.coords - c * p.coords;
        u_norm = std::sqrt(std::max(0.0, minkowski_form(u, u)));
      }
      break;
    }
    case Field::C: {
      Cplx c = hermitian_form(spec, p.coords, q.coords);
      const double cm = std::abs(c);
      if (cm == 0.0) fail(ErrorCode::CutLocus, "q is at the cut distance of p");
      // Phase-align the representative of q so that <p,q'> is real positive;
      // this is the horizontal lift of the connecting geodesic.
      CVec aligned = (std::conj(c) / cm) * as_complex(q.coords);
      u = from_complex(aligned) - cm * p.coords;
      const double uu = metric_dot(spec, p.coords, u, u);
      u_norm = std::sqrt(std::max(0.0, uu));
      break;
    }
    default:
      fail(ErrorCode::UnrealizedSpace, spec.to_string());
  }

  if (u_norm == 0.0) return TangentVector(p, Eigen::VectorXd::Zero(u.size()));
  if (d < 1e-9) {
    // u already has metric norm 2*sin(d/2) (resp. sinh); the relative error
    // of using it directly is O(d^2).
    Eigen::VectorXd t = project_to_tangent(spec, p.coords, u);
    return TangentVector(p, std::move(t));
  }
  u *= d / u_norm;
  return TangentVector(p, std::move(u));
}

Frame make_frame(const Point& p) {
  const SpaceSpec& spec = p.space;
  if (!spec.realized()) fail(ErrorCode::UnrealizedSpace, spec.to_string());
  const int amb = spec.ambient_dim();
  const int dim = spec.dim();
  Eigen::MatrixXd frame(amb, dim);
  int found = 0;
  for (int cand = 0; cand < amb && found < dim; ++cand) {
    Eigen::VectorXd u = project_to_tangent(
        spec, p.coords, Eigen::VectorXd::Unit(amb, cand));
    for (int j = 0; j < found; ++j)
      u -= metric_dot(spec, p.coords, frame.col(j), u) * frame.col(j);
    // Repeat once; plain Gram-Schmidt loses orthogonality for near-dependent
    // candidates.
    for (int j = 0; j < found; ++j)
      u -= metric_dot(spec, p.coords, frame.col(j), u) * frame.col(j);
    const double norm =
        std::sqrt(std::max(0.0, metric_dot(spec, p.coords, u, u)));
    if (norm < 1e-8) continue;
    frame.col(found++) = u / norm;
  }
  if (found != dim)
    fail(ErrorCode::InvalidFrame, "could not complete a tangent frame");
  return Frame(p, std::move(frame));
}

Eigen::VectorXd normal_coordinates(const Point& p0, const Frame& frame,
                                   const Point& q) {
  TangentVector v = log_map(p0, q);
  Eigen::VectorXd x(p0.space.dim());
  for (int i = 0; i < x.size(); ++i)
    x(i) = metric_dot(p0.space, p0.coords, frame.vectors.col(i), v.components);
  return x;
}

}  // namespace specgeo
