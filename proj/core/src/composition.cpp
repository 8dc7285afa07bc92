#include "loewner/composition.hpp"

#include "loewner/error.hpp"

namespace loewner {

void ConformalComposition::append(const ConformalComposition& other) {
  steps_.insert(steps_.end(), other.steps_.begin(), other.steps_.end());
}

ComplexPoint ConformalComposition::apply(const Step& step, const ComplexPoint& z) {
  switch (step.kind) {
    case Kind::Mobius:
      return step.mobius(z);
    case Kind::SqrtBranch:
      return z.is_infinite() ? z : ComplexPoint(sqrt_branch(z.value()));
    case Kind::Square:
      return z.is_infinite() ? z : ComplexPoint(z.value() * z.value());
    case Kind::SlitForward:
      return z.is_infinite() ? z : ComplexPoint(step.slit.grow(z.value() + step.slit.driving_end()));
    case Kind::SlitInverse:
      return z.is_infinite() ? z : ComplexPoint(step.slit.map_out(z.value()) - step.slit.driving_end());
  }
  throw DomainError("unknown composition step");
}

ComplexPoint ConformalComposition::apply_inverse(const Step& step, const ComplexPoint& z) {
  switch (step.kind) {
    case Kind::Mobius:
      return step.mobius.inverse()(z);
    case Kind::SqrtBranch:
      return z.is_infinite() ? z : ComplexPoint(z.value() * z.value());
    case Kind::Square:
      return z.is_infinite() ? z : ComplexPoint(sqrt_upper(z.value()));
    case Kind::SlitForward:
      return apply({Kind::SlitInverse, {}, step.slit}, z);
    case Kind::SlitInverse:
      return apply({Kind::SlitForward, {}, step.slit}, z);
  }
  throw DomainError("unknown composition step");
}

ComplexPoint ConformalComposition::forward(const ComplexPoint& z) const {
  ComplexPoint w = z;
  for (const Step& s : steps_) w = apply(s, w);
  return w;
}

ComplexPoint ConformalComposition::inverse(const ComplexPoint& w) const {
  ComplexPoint z = w;
  for (auto it = steps_.rbegin(); it != steps_.rend(); ++it) z = apply_inverse(*it, z);
  return z;
}

ConformalComposition ConformalComposition::inverted() const {
  ConformalComposition out;
  for (auto it = steps_.rbegin(); it != steps_.rend(); ++it) {
    switch (it->kind) {
      case Kind::Mobius:
        out.push_mobius(it->mobius.inverse());
        break;
      case Kind::SqrtBranch:
        out.push_square();
        break;
      case Kind::Square:
        out.push_sqrt();
        break;
      case Kind::SlitForward:
        out.push_slit_inverse(it->slit);
        break;
      case Kind::SlitInverse:
        out.push_slit_forward(it->slit);
        break;
    }
  }
  return out;
}

}  // namespace loewner
