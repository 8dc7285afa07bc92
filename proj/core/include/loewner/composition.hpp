#pragma once

#include <vector>

#include "loewner/maps.hpp"

namespace loewner {

/// An ordered chain of elementary conformal maps, applied first to last.
///
/// Slit steps are centered: `SlitInverse` maps the slit out and subtracts the
/// driving value at its tip, so the tip goes to 0; `SlitForward` undoes that.
class ConformalComposition {
 public:
  enum class Kind { Mobius, SqrtBranch, Square, SlitForward, SlitInverse };

  struct Step {
    Kind kind;
    MobiusMap mobius;
    TiltedSlit slit;
  };

  void push_mobius(const MobiusMap& m) { steps_.push_back({Kind::Mobius, m, {}}); }
  void push_sqrt() { steps_.push_back({Kind::SqrtBranch, {}, {}}); }
  void push_square() { steps_.push_back({Kind::Square, {}, {}}); }
  void push_slit_inverse(const TiltedSlit& s) { steps_.push_back({Kind::SlitInverse, {}, s}); }
  void push_slit_forward(const TiltedSlit& s) { steps_.push_back({Kind::SlitForward, {}, s}); }
  void append(const ConformalComposition& other);

  const std::vector<Step>& steps() const noexcept { return steps_; }
  std::size_t size() const noexcept { return steps_.size(); }

  ComplexPoint forward(const ComplexPoint& z) const;
  ComplexPoint inverse(const ComplexPoint& w) const;
  /// The chain run backwards with every step inverted (normalization record is not carried over).
  ConformalComposition inverted() const;

  /// Points sent to 0 and to infinity by the forward map.
  ComplexPoint zero_preimage() const noexcept { return zero_preimage_; }
  ComplexPoint infinity_preimage() const noexcept { return infinity_preimage_; }
  void set_normalization(const ComplexPoint& to_zero, const ComplexPoint& to_infinity) {
    zero_preimage_ = to_zero;
    infinity_preimage_ = to_infinity;
  }

 private:
  static ComplexPoint apply(const Step& step, const ComplexPoint& z);
  static ComplexPoint apply_inverse(const Step& step, const ComplexPoint& z);

  std::vector<Step> steps_;
  ComplexPoint zero_preimage_{};
  ComplexPoint infinity_preimage_ = ComplexPoint::infinity();
};

}  // namespace loewner
