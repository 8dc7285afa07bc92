#include "loewner/zipper.hpp"

#include <cmath>

#include "loewner/error.hpp"

namespace loewner {

std::vector<TiltedSlit> unzip(const std::vector<Complex>& samples, std::vector<Complex>& passengers,
                              std::vector<std::size_t>* sample_end) {
  std::vector<TiltedSlit> slits;
  if (sample_end) sample_end->clear();
  if (samples.empty()) return slits;
  const double base = samples.front().real();

  // segments near the start are split; the slit fit is least accurate right after the root
  std::vector<Complex> path{samples.front() - base};
  std::vector<std::size_t> owner{0};
  for (std::size_t j = 1; j < samples.size(); ++j) {
    const auto m = static_cast<std::size_t>(std::ceil(kStartRefinement / static_cast<double>(j)));
    const Complex a = samples[j - 1] - base;
    const Complex b = samples[j] - base;
    for (std::size_t l = 1; l < m; ++l) {
      path.push_back(a + (b - a) * (static_cast<double>(l) / static_cast<double>(m)));
      owner.push_back(j);
    }
    path.push_back(b);
    owner.push_back(j);
  }

  for (Complex& p : passengers) p -= base;
  slits.reserve(path.size());
  for (std::size_t i = 1; i < path.size(); ++i) {
    const Complex d = path[i];
    if (!(d.imag() > 0.0) || !std::isfinite(d.real()) || !std::isfinite(d.imag())) {
      throw GeometryError("curve leaves the upper half-plane while unzipping", owner[i]);
    }
    const TiltedSlit slit = TiltedSlit::through(0.0, d);
    const double shift = slit.driving_end();
    for (std::size_t j = i + 1; j < path.size(); ++j) path[j] = slit.map_out(path[j]) - shift;
    for (Complex& p : passengers) p = slit.map_out(p) - shift;
    slits.push_back(slit);
    if (sample_end && (i + 1 == path.size() || owner[i + 1] != owner[i])) sample_end->push_back(slits.size());
  }
  for (Complex& p : passengers) p += base;
  return slits;
}

DrivingExtraction compute_driving(const CurveSamples& curve, bool check_simple) {
  if (curve.size() < kMinSamples) throw InputError("curve needs at least 8 samples");
  if (curve.closed()) throw InputError("compute_driving expects an open arc");
  const auto& pts = curve.points();
  const double scale = std::abs(pts.back() - pts.front());
  if (std::abs(pts.front().imag()) > 1e-12 * scale) throw InputError("curve must start on the real axis");
  if (check_simple) curve.check_simple();

  std::vector<Complex> path = pts;
  path.front().imag(0.0);
  std::vector<Complex> none;
  std::vector<std::size_t> sample_end;
  const std::vector<TiltedSlit> slits = unzip(path, none, &sample_end);

  std::vector<double> t(pts.size()), w(pts.size());
  t[0] = 0.0;
  w[0] = pts.front().real();
  DrivingExtraction out;
  std::size_t next = 0;
  double tc = 0.0, wc = w[0];
  for (std::size_t i = 0; i < slits.size(); ++i) {
    tc += slits[i].dt();
    wc += slits[i].driving_end();
    out.capacity.steps.push_slit_inverse(slits[i]);
    if (i + 1 == sample_end[next]) {
      t[next + 1] = tc;
      w[next + 1] = wc;
      ++next;
    }
  }
  out.capacity.s = curve.arclength();
  out.capacity.t = t;
  out.driving = DrivingFunction(std::move(t), std::move(w));
  return out;
}

CurveSamples attach_and_lift(const CurveSamples& gamma) {
  if (gamma.size() < 2) throw InputError("curve too short to lift");
  if (std::abs(gamma[0]) > 1e-12 * gamma.length()) throw InputError("tangential curve must start at 0");
  std::vector<Complex> lifted;
  lifted.reserve(gamma.size());
  lifted.emplace_back(0.0, 0.0);
  for (std::size_t i = 1; i < gamma.size(); ++i) {
    const Complex z = gamma[i];
    if (z.imag() == 0.0 && z.real() > 0.0) throw DomainError("curve touches the positive real axis");
    lifted.push_back(sqrt_branch(z));
  }
  return CurveSamples::arc(std::move(lifted));
}

Uniformization uniformize_arc(const std::vector<Complex>& arc, const std::vector<Complex>& passengers) {
  if (arc.size() < 2) throw RefinementError("arc too short for a stable normalization");
  const Complex a = arc[0];
  const Complex b = arc[1];
  // first segment [a, b] -> [inf, 0] on the positive axis, then sqrt opens it up
  const MobiusMap m(1.0, -b, -1.0, a);
  auto lift = [&](Complex z, std::size_t index) {
    const Complex u = m.apply(z);
    if (u.imag() == 0.0 && u.real() > 0.0) throw GeometryError("curve meets its first segment", index);
    return sqrt_branch(u);
  };

  std::vector<Complex> path;
  path.reserve(arc.size() - 1);
  path.emplace_back(0.0, 0.0);
  for (std::size_t i = 2; i < arc.size(); ++i) path.push_back(lift(arc[i], i));
  std::vector<Complex> carried;
  carried.reserve(passengers.size());
  for (std::size_t i = 0; i < passengers.size(); ++i) carried.push_back(lift(passengers[i], arc.size() + i));

  Uniformization out;
  out.map.push_mobius(m);
  out.map.push_sqrt();
  const std::vector<TiltedSlit> slits = unzip(path, carried);
  for (const TiltedSlit& s : slits) out.map.push_slit_inverse(s);

  // scale so the first carried point lands on the unit circle
  double lambda = 1.0;
  if (!carried.empty() && std::abs(carried.front()) > 0.0) lambda = 1.0 / std::abs(carried.front());
  out.map.push_mobius(MobiusMap::scaling(lambda));
  out.map.set_normalization(arc.back(), ComplexPoint(a));

  std::vector<Complex> chord{Complex{0.0, 0.0}};
  chord.reserve(carried.size() + 1);
  for (const Complex& p : carried) chord.push_back(lambda * p);
  out.chord = CurveSamples::arc(std::move(chord));
  return out;
}

Uniformization uniformize_slit_complement(const CurveSamples& loop, long long root_index, long long eps_index) {
  if (!loop.closed()) throw InputError("uniformize_slit_complement expects a closed loop");
  const long long n = static_cast<long long>(loop.size());
  if (n < static_cast<long long>(kMinSamples)) throw InputError("loop needs at least 8 samples");
  if (!(eps_index > root_index && eps_index < root_index + n)) {
    throw InputError("eps index must lie strictly between the root and its next visit");
  }
  std::vector<Complex> arc;
  for (long long i = root_index; i <= eps_index; ++i) arc.push_back(loop.at(i));
  std::vector<Complex> rest;
  for (long long i = eps_index + 1; i < root_index + n; ++i) rest.push_back(loop.at(i));
  return uniformize_arc(arc, rest);
}

}  // namespace loewner
