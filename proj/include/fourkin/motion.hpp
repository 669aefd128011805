#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fourkin/linalg.hpp"
#include "fourkin/spacetime.hpp"

namespace fourkin {

// A motion h(t), Q(t) together with its first and second time derivatives,
// evaluated at one instant.
struct MotionSample {
  Vec3 h{}, hd{}, hdd{};
  Mat3 Q = Mat3::identity();
  Mat3 Qd{}, Qdd{};
};

enum class MotionKind {
  identity,
  uniform_translation,
  uniform_acceleration,
  rotation,
  composite,
};

// A time-dependent Euclidean observer transformation x -> h(t) + Q(t) x.
// Every kind carries closed-form h, Q and their first two time derivatives;
// composites combine constituents by the product rule, so derivatives stay
// exact throughout.
class Motion {
public:
  static Motion identity() { return Motion(MotionKind::identity); }

  static Motion uniform_translation(const Vec3& velocity) {
    Motion m(MotionKind::uniform_translation);
    m.vec_param_ = velocity;
    return m;
  }

  static Motion uniform_acceleration(const Vec3& acceleration) {
    Motion m(MotionKind::uniform_acceleration);
    m.vec_param_ = acceleration;
    return m;
  }

  // `axis` must be a unit vector; `rate` is the signed angular rate.
  static Motion rotation(const Vec3& axis, double rate) {
    if (std::fabs(norm(axis) - 1.0) > 1e-12) {
      throw std::invalid_argument("Motion::rotation: axis must be a unit vector");
    }
    Motion m(MotionKind::rotation);
    m.vec_param_ = axis;
    m.rate_ = rate;
    return m;
  }

  // Stages apply first to last: the full map is stages.back() o ... o stages.front().
  static Motion composite(std::vector<Motion> stages) {
    if (stages.empty()) {
      throw std::invalid_argument("Motion::composite: needs at least one stage");
    }
    Motion m(MotionKind::composite);
    m.stages_ = std::move(stages);
    return m;
  }

  MotionKind kind() const { return kind_; }
  const Vec3& vector_param() const { return vec_param_; }
  double rate() const { return rate_; }
  const std::vector<Motion>& stages() const { return stages_; }

  MotionSample sample(double t) const {
    switch (kind_) {
      case MotionKind::identity:
        return MotionSample{};
      case MotionKind::uniform_translation: {
        MotionSample s;
        s.h = t * vec_param_;
        s.hd = vec_param_;
        return s;
      }
      case MotionKind::uniform_acceleration: {
        MotionSample s;
        s.h = (0.5 * t * t) * vec_param_;
        s.hd = t * vec_param_;
        s.hdd = vec_param_;
        return s;
      }
      case MotionKind::rotation: {
        MotionSample s;
        const Mat3 spin = rate_ * skew(vec_param_);
        s.Q = rotation_about(vec_param_, rate_ * t);
        s.Qd = spin * s.Q;
        s.Qdd = spin * spin * s.Q;
        return s;
      }
      case MotionKind::composite: {
        MotionSample acc = stages_.front().sample(t);
        for (std::size_t i = 1; i < stages_.size(); ++i) {
          acc = compose(stages_[i].sample(t), acc);
        }
        return acc;
      }
    }
    throw std::logic_error("Motion::sample: unreachable");
  }

private:
  explicit Motion(MotionKind kind) : kind_(kind) {}

  // Sample of outer o inner, by the product rule.
  static MotionSample compose(const MotionSample& o, const MotionSample& i) {
    MotionSample s;
    s.h = o.h + o.Q * i.h;
    s.hd = o.hd + o.Qd * i.h + o.Q * i.hd;
    s.hdd = o.hdd + o.Qdd * i.h + 2.0 * (o.Qd * i.hd) + o.Q * i.hdd;
    s.Q = o.Q * i.Q;
    s.Qd = o.Qd * i.Q + o.Q * i.Qd;
    s.Qdd = o.Qdd * i.Q + 2.0 * (o.Qd * i.Qd) + o.Q * i.Qdd;
    return s;
  }

  MotionKind kind_;
  Vec3 vec_param_{};
  double rate_ = 0.0;
  std::vector<Motion> stages_{};
};

inline MotionSample eval_motion(const Motion& m, double t) { return m.sample(t); }

inline SpacetimePoint transform_point(const Motion& m, const SpacetimePoint& p) {
  const MotionSample s = m.sample(p.t);
  return {p.t, s.h + s.Q * p.x};
}

inline SpacetimePoint inverse_transform_point(const Motion& m, const SpacetimePoint& p_hat) {
  const MotionSample s = m.sample(p_hat.t);
  return {p_hat.t, inverse(s.Q) * (p_hat.x - s.h)};
}

// Jacobian of the forward map at p: time column hd + Qd x, spatial block Q.
inline Jacobian4 jacobian_hat(const Motion& m, const SpacetimePoint& p) {
  const MotionSample s = m.sample(p.t);
  return {s.hd + s.Qd * p.x, s.Q};
}

// Jacobian of the inverse map at p_hat:
// time column -Q^-1 Qd Q^-1 (x_hat - h) - Q^-1 hd, spatial block Q^-1.
inline Jacobian4 jacobian_inverse(const Motion& m, const SpacetimePoint& p_hat) {
  const MotionSample s = m.sample(p_hat.t);
  const Mat3 qi = inverse(s.Q);
  return {-(qi * (s.Qd * (qi * (p_hat.x - s.h)))) - qi * s.hd, qi};
}

// Omega = Q^-1 Qd; antisymmetric whenever Q is orthogonal.
inline Mat3 angular_velocity(const Motion& m, double t) {
  const MotionSample s = m.sample(t);
  return inverse(s.Q) * s.Qd;
}

// Connection coefficients at p, from the closed-form motion derivatives.
// Omega-dot comes from d/dt(Q^-1 Qd) = Q^-1 Qdd - Omega Omega, so
// g00 = Q^-1 hdd + (Omega_dot + Omega Omega) x and g0b = Omega.
inline Christoffel christoffel(const Motion& m, const SpacetimePoint& p) {
  const MotionSample s = m.sample(p.t);
  const Mat3 qi = inverse(s.Q);
  const Mat3 omega = qi * s.Qd;
  const Mat3 omega_dot = qi * s.Qdd - omega * omega;
  Christoffel g;
  g.g00 = qi * s.hdd + (omega_dot + omega * omega) * p.x;
  g.g0b = omega;
  return g;
}

}  // namespace fourkin
