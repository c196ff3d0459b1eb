// Copyright 2026 The gatequiv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "gatequiv_tools/scenario.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

namespace gatequiv::tools {

namespace {

using nlohmann::json;
using std::numbers::pi;

// Wraps a JSON object, remembers which keys were read and rejects the rest.
class Fields {
 public:
  Fields(const json& node, std::string path) : node_(node), path_(std::move(path)) {
    if (!node_.is_object()) fail("expected an object");
  }

  bool has(const std::string& key) const { return node_.contains(key); }

  const json& raw(const std::string& key) {
    seen_.insert(key);
    if (!node_.contains(key)) fail("missing required key '" + key + "'");
    return node_.at(key);
  }

  double number(const std::string& key) {
    const json& v = raw(key);
    if (!v.is_number()) fail("'" + key + "' must be a number");
    const double d = v.get<double>();
    if (!std::isfinite(d)) fail("'" + key + "' must be finite");
    return d;
  }
  double number(const std::string& key, double fallback) {
    return has(key) ? number(key) : (seen_.insert(key), fallback);
  }

  int integer(const std::string& key) {
    const json& v = raw(key);
    if (!v.is_number_integer()) fail("'" + key + "' must be an integer");
    return v.get<int>();
  }
  int integer(const std::string& key, int fallback) {
    return has(key) ? integer(key) : (seen_.insert(key), fallback);
  }

  std::string text(const std::string& key) {
    const json& v = raw(key);
    if (!v.is_string()) fail("'" + key + "' must be a string");
    return v.get<std::string>();
  }
  std::string text(const std::string& key, const std::string& fallback) {
    return has(key) ? text(key) : (seen_.insert(key), fallback);
  }

  std::vector<double> numbers(const std::string& key) {
    const json& v = raw(key);
    if (!v.is_array()) fail("'" + key + "' must be an array of numbers");
    std::vector<double> out;
    for (const auto& e : v) {
      if (!e.is_number()) fail("'" + key + "' must be an array of numbers");
      out.push_back(e.get<double>());
    }
    return out;
  }

  Fields child(const std::string& key) { return Fields(raw(key), path_ + "." + key); }

  std::string path() const { return path_; }

  void finish() const {
    for (auto it = node_.begin(); it != node_.end(); ++it) {
      if (!seen_.count(it.key())) fail("unknown key '" + it.key() + "'");
    }
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ValidationError(path_ + ": " + message);
  }

 private:
  const json& node_;
  std::string path_;
  std::set<std::string> seen_;
};

PulseEnvelope::Shape parse_shape(Fields& f, const std::string& key) {
  const std::string s = f.text(key, "constant");
  if (s == "constant") return PulseEnvelope::Shape::constant;
  if (s == "sine_squared") return PulseEnvelope::Shape::sine_squared;
  f.fail("'" + key + "' must be 'constant' or 'sine_squared'");
}

PulseSpec parse_pulse(Fields f, SystemKind system) {
  PulseSpec p;
  p.type = f.text("type");
  if (system == SystemKind::su2) {
    if (p.type == "orange_slice") {
      p.slice.gamma = f.number("gamma");
      p.slice.theta = f.number("theta");
      p.slice.eta = f.number("eta", 0.0);
      const std::string h = f.text("hemisphere", "north");
      if (h == "north") {
        p.slice.hemisphere = SliceHemisphere::north;
      } else if (h == "south") {
        p.slice.hemisphere = SliceHemisphere::south;
      } else {
        f.fail("'hemisphere' must be 'north' or 'south'");
      }
      p.envelope = parse_shape(f, "envelope");
      p.peak = f.number("peak", 1.0);
      p.repetitions = f.integer("repetitions", 1);
      if (!(p.slice.theta > 0.0 && p.slice.theta < pi)) f.fail("'theta' must lie in (0, pi)");
      if (!(p.peak > 0.0)) f.fail("'peak' must be positive");
      if (p.repetitions < 1) f.fail("'repetitions' must be >= 1");
    } else if (p.type == "constant") {
      p.amplitude = f.number("amplitude");
      p.phase = f.number("phase", 0.0);
      p.detuning = f.number("detuning", 0.0);
      p.duration = f.number("duration");
    } else if (p.type == "free") {
      p.detuning = f.number("detuning", 0.0);
      p.duration = f.number("duration");
    } else {
      f.fail("unknown su2 pulse type '" + p.type + "'");
    }
  } else {
    if (p.type != "resonant_pi") f.fail("unknown lambda pulse type '" + p.type + "'");
    p.theta = f.number("theta");
    p.phi = f.number("phi", 0.0);
    p.envelope = parse_shape(f, "envelope");
    p.peak = f.number("peak", 1.0);
    p.detuning0 = f.number("detuning0", 0.0);
    p.detuning1 = f.number("detuning1", 0.0);
    if (f.has("duration")) p.duration = f.number("duration");
    if (!(p.peak > 0.0)) f.fail("'peak' must be positive");
  }
  if (p.duration && !(*p.duration > 0.0)) f.fail("'duration' must be positive");
  f.finish();
  return p;
}

Psd parse_psd(Fields f) {
  const std::string type = f.text("type");
  try {
    Psd psd;
    if (type == "white") {
      psd = Psd::white(f.number("level"));
    } else if (type == "power_law") {
      psd = Psd::power_law(f.number("amplitude"), f.number("exponent"), f.number("ir"),
                           f.number("uv"));
    } else if (type == "quasi_static") {
      psd = Psd::quasi_static(f.number("sigma"));
    } else if (type == "tabulated") {
      psd = Psd(TabulatedPsd{f.numbers("omega"), f.numbers("density")});
    } else {
      f.fail("unknown psd type '" + type + "'");
    }
    f.finish();
    return psd;
  } catch (const std::invalid_argument& e) {
    f.fail(e.what());
  }
}

std::vector<ChannelSpec> parse_channels(const json& node, const std::vector<NoiseChannel>& standard,
                                        int size) {
  if (!node.is_array()) throw ValidationError("scenario.channels: expected an array");
  if (node.empty()) throw ValidationError("scenario.channels: no channels");
  std::vector<ChannelSpec> out;
  for (std::size_t i = 0; i < node.size(); ++i) {
    Fields f(node[i], "scenario.channels[" + std::to_string(i) + "]");
    ChannelSpec c;
    c.name = f.text("name");
    if (f.has("additive") || f.has("multiplicative")) {
      const auto a = f.numbers("additive");
      const json& m = f.raw("multiplicative");
      if (static_cast<int>(a.size()) != size || !m.is_array() || static_cast<int>(m.size()) != size) {
        f.fail("custom channel needs a length-" + std::to_string(size) + " 'additive' and a " +
               std::to_string(size) + "x" + std::to_string(size) + " 'multiplicative'");
      }
      AlgebraVector av = Eigen::Map<const AlgebraVector>(a.data(), size);
      RMatrix mm(size, size);
      for (int r = 0; r < size; ++r) {
        if (!m[r].is_array() || static_cast<int>(m[r].size()) != size) {
          f.fail("'multiplicative' rows must have length " + std::to_string(size));
        }
        for (int col = 0; col < size; ++col) mm(r, col) = m[r][col].get<double>();
      }
      c.channel = make_channel(c.name, av, mm);
    } else {
      bool found = false;
      for (const auto& s : standard) {
        if (s.label == c.name) {
          c.channel = s;
          found = true;
        }
      }
      if (!found) f.fail("unknown channel '" + c.name + "'");
    }
    if (f.has("psd")) c.channel.psd = parse_psd(f.child("psd"));
    f.finish();
    out.push_back(std::move(c));
  }
  return out;
}

CVector parse_state(const json& node, int dimension) {
  if (!node.is_array() || static_cast<int>(node.size()) != dimension) {
    throw ValidationError("scenario.phases.state: expected " + std::to_string(dimension) +
                          " [re, im] pairs");
  }
  CVector v(dimension);
  for (int i = 0; i < dimension; ++i) {
    const json& e = node[i];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
      throw ValidationError("scenario.phases.state: entries must be [re, im] pairs");
    }
    v[i] = Complex(e[0].get<double>(), e[1].get<double>());
  }
  if (!(v.norm() > 0.0)) throw ValidationError("scenario.phases.state: zero vector");
  return v.normalized();
}

}  // namespace

double Scenario::gate_period() const {
  if (system == SystemKind::su2 && pulse.type == "orange_slice") {
    const auto segs = orange_slice_segments(pulse.slice.theta, pulse.envelope, pulse.peak);
    return segs[0].duration() + segs[1].duration() + segs[2].duration();
  }
  return duration();
}

double Scenario::duration() const {
  if (pulse.duration) return *pulse.duration;
  if (system == SystemKind::su2) return gate_period() * pulse.repetitions;
  return PulseEnvelope::with_area(pulse.envelope, pi, pulse.peak).duration();
}

BasisPtr Scenario::basis() const {
  return system == SystemKind::su2 ? pauli_basis() : gell_mann_basis();
}

ControlSchedule Scenario::base_schedule(int n) const {
  if (system == SystemKind::lambda) {
    LambdaParams p = resonant_pi_pulse(pulse.theta, pulse.phi, pulse.envelope, pulse.peak);
    p.detuning0 = pulse.detuning0;
    p.detuning1 = pulse.detuning1;
    return lambda_schedule(p, duration(), n);
  }
  if (pulse.type == "orange_slice") {
    const auto segs = orange_slice_segments(pulse.slice.theta, pulse.envelope, pulse.peak);
    return orange_slice_schedule(pulse.slice, segs, pulse.repetitions, n / pulse.repetitions);
  }
  const double amp = pulse.type == "free" ? 0.0 : pulse.amplitude;
  return su2_schedule(Su2Params::constant(amp, pulse.phase, pulse.detuning), duration(), n);
}

FrameTransform Scenario::frame_transform(double amplitude) const {
  if (!transform) throw ValidationError("scenario has no 'transform' section");
  const double period = transform->period > 0.0 ? transform->period : gate_period();
  const NuProfile nu = NuProfile::sine_squared(amplitude, period);
  const int size = basis()->size();
  AlgebraVector axis = AlgebraVector::Zero(size);
  if (transform->axis == "z") {
    axis[2] = 1.0;
  } else if (transform->axis == "x") {
    axis[0] = 1.0;
  } else {
    axis[1] = 1.0;
  }
  return axis_transform(basis(), axis, nu, duration());
}

FrameTransform Scenario::frame_transform() const {
  if (!transform) throw ValidationError("scenario has no 'transform' section");
  return frame_transform(transform->amplitude);
}

ScheduleFamily Scenario::family(int n) const {
  if (!transform) throw ValidationError("scenario has no 'transform' section");
  const ControlSchedule base = base_schedule(n);
  return [this, base](double c) { return transform_schedule(base, frame_transform(c)); };
}

std::vector<NoiseChannel> Scenario::noise_channels() const {
  std::vector<NoiseChannel> out;
  for (const auto& c : channels) out.push_back(c.channel);
  return out;
}

std::vector<double> Scenario::frequency_grid() const {
  return symmetric_grid(grid_span / duration(), grid_points);
}

CVector Scenario::cyclic_state() const {
  if (state) return *state;
  if (system != SystemKind::su2) {
    throw ValidationError("scenario.phases.state is required for the lambda system");
  }
  CVector v(2);
  v << 1.0, 1.0;
  return v / std::sqrt(2.0);
}

Scenario parse_scenario(const json& document) {
  Fields f(document, "scenario");
  Scenario s;
  s.name = f.text("name");
  s.description = f.text("description", "");
  const std::string system = f.text("system", "su2");
  if (system == "su2") {
    s.system = SystemKind::su2;
  } else if (system == "lambda") {
    s.system = SystemKind::lambda;
  } else {
    f.fail("'system' must be 'su2' or 'lambda'");
  }
  s.pulse = parse_pulse(f.child("pulse"), s.system);
  s.steps = f.integer("steps", 4000);
  if (s.steps < 1) f.fail("'steps' must be >= 1");
  if (s.system == SystemKind::su2 && s.pulse.type == "orange_slice" &&
      s.steps % s.pulse.repetitions != 0) {
    f.fail("'steps' must be a multiple of the pulse repetitions");
  }
  const std::string stepper = f.text("stepper", "magnus4");
  if (stepper == "magnus4") {
    s.stepper = Stepper::magnus4;
  } else if (stepper == "midpoint") {
    s.stepper = Stepper::midpoint;
  } else {
    f.fail("'stepper' must be 'magnus4' or 'midpoint'");
  }
  const std::string convention = f.text("convention", "derivative");
  if (convention == "derivative") {
    s.convention = ChannelConvention::derivative;
  } else if (convention == "printed") {
    s.convention = ChannelConvention::printed;
  } else {
    f.fail("'convention' must be 'derivative' or 'printed'");
  }

  if (f.has("transform")) {
    Fields t = f.child("transform");
    TransformSpec spec;
    const std::string profile = t.text("profile", "sine_squared");
    if (profile != "sine_squared") t.fail("'profile' must be 'sine_squared'");
    spec.axis = t.text("axis", "z");
    if (spec.axis != "x" && spec.axis != "y" && spec.axis != "z") {
      t.fail("'axis' must be 'x', 'y' or 'z'");
    }
    if (s.system == SystemKind::lambda && spec.axis != "z") {
      t.fail("only the 'z' (lambda_3) axis is available for the lambda system");
    }
    spec.amplitude = t.number("amplitude");
    if (t.has("period") && t.has("period_scale")) t.fail("give 'period' or 'period_scale', not both");
    spec.period = t.number("period", 0.0);
    const double scale = t.number("period_scale", 1.0);
    if (spec.period < 0.0 || !(scale > 0.0)) t.fail("periods must be positive");
    t.finish();
    s.transform = spec;
    if (spec.period == 0.0) s.transform->period = scale * s.gate_period();
  }

  const auto standard = s.system == SystemKind::su2 ? su2_standard_channels(s.convention)
                                                    : su3_standard_channels(s.convention);
  if (f.has("channels")) {
    s.channels = parse_channels(f.raw("channels"), standard, s.basis()->size());
  } else {
    for (const auto& c : standard) s.channels.push_back({c.label, c});
  }

  if (f.has("grid")) {
    Fields g = f.child("grid");
    s.grid_span = g.number("span", 50.0);
    s.grid_points = g.integer("points", 4001);
    if (!(s.grid_span > 0.0) || s.grid_points < 2) g.fail("need span > 0 and points >= 2");
    g.finish();
  }
  if (f.has("phases")) {
    Fields p = f.child("phases");
    if (p.has("state")) s.state = parse_state(p.raw("state"), s.basis()->dimension());
    p.finish();
  }
  if (f.has("calibration")) {
    Fields c = f.child("calibration");
    const std::string target = c.text("target", "geometric");
    if (target == "geometric") {
      s.calibration.target = PhaseTarget::geometric;
    } else if (target == "dynamical") {
      s.calibration.target = PhaseTarget::dynamical;
    } else {
      c.fail("'target' must be 'geometric' or 'dynamical'");
    }
    if (c.has("bracket")) {
      const auto b = c.numbers("bracket");
      if (b.size() != 2 || !(b[0] < b[1])) c.fail("'bracket' must be [lo, hi] with lo < hi");
      s.calibration.bracket = {b[0], b[1]};
    }
    s.calibration.tolerance = c.number("tolerance", 1e-8);
    if (!(s.calibration.tolerance > 0.0)) c.fail("'tolerance' must be positive");
    c.finish();
  }
  if (f.has("montecarlo")) {
    Fields m = f.child("montecarlo");
    s.montecarlo.shots = m.integer("shots", 1000);
    const double seed = m.number("seed", 1.0);
    if (seed < 0.0 || seed != std::floor(seed)) m.fail("'seed' must be a non-negative integer");
    s.montecarlo.seed = static_cast<std::uint64_t>(seed);
    s.montecarlo.threads = m.integer("threads", 1);
    if (m.has("strengths")) s.montecarlo.strengths = m.numbers("strengths");
    if (m.has("steps")) s.montecarlo.steps = m.integer("steps");
    if (s.montecarlo.shots < 1 || s.montecarlo.threads < 1) {
      m.fail("'shots' and 'threads' must be >= 1");
    }
    for (double x : s.montecarlo.strengths) {
      if (!(x >= 0.0)) m.fail("'strengths' must be non-negative");
    }
    if (s.montecarlo.steps && *s.montecarlo.steps < 1) m.fail("'steps' must be >= 1");
    m.finish();
  }
  if (f.has("tolerances")) {
    Fields t = f.child("tolerances");
    s.tolerances.gate = t.number("gate", s.tolerances.gate);
    s.tolerances.filter = t.number("filter", s.tolerances.filter);
    s.tolerances.conditions = t.number("conditions", s.tolerances.conditions);
    s.tolerances.phase = t.number("phase", s.tolerances.phase);
    t.finish();
  }
  f.finish();
  return s;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open config '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ValidationError("config '" + path + "' is not valid JSON: " + e.what());
  }
  return parse_scenario(doc);
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace gatequiv::tools
