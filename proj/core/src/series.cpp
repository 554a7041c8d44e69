#include "bgf/series.hpp"

#include <algorithm>
#include <sstream>

namespace bgf {

VarCount VarCount::finite(int n) {
  if (n < 1) throw std::invalid_argument("variable count must be positive");
  VarCount v;
  v.n_ = n;
  return v;
}

int VarCount::n() const {
  if (!n_) throw std::logic_error("limit regime has no finite variable count");
  return *n_;
}

std::string VarCount::to_string() const { return n_ ? std::to_string(*n_) : "limit"; }

// ---------------------------------------------------------------------------

SymmetricSeries::SymmetricSeries(VarCount vars, int cap) : vars_(vars), cap_(cap) {
  if (cap < 0) throw std::invalid_argument("degree cap must be nonnegative");
}

Rational SymmetricSeries::coefficient(const Partition& nu) const {
  auto it = coeffs_.find(nu);
  return it == coeffs_.end() ? Rational{0} : it->second;
}

void SymmetricSeries::set(const Partition& nu, const Rational& value) {
  if (nu.size() > cap_) throw std::invalid_argument("key " + nu.to_string() + " exceeds cap");
  if (!vars_.is_limit() && nu.length() > vars_.n()) {
    throw std::invalid_argument("key " + nu.to_string() + " longer than variable count");
  }
  if (value == 0) {
    coeffs_.erase(nu);
  } else {
    coeffs_[nu] = value;
  }
}

// ---------------------------------------------------------------------------

AxialSeries::AxialSeries(int axis, VarCount vars, int cap) : axis_(axis), vars_(vars), cap_(cap) {
  if (axis < 1) throw std::invalid_argument("axis must be positive");
  if (!vars.is_limit() && axis > vars.n()) throw std::invalid_argument("axis exceeds N");
  if (cap < 0) throw std::invalid_argument("degree cap must be nonnegative");
}

AxialSeries AxialSeries::unit(int axis, VarCount vars, int cap) {
  AxialSeries s(axis, vars, cap);
  s.set(0, Partition{}, Rational{1});
  return s;
}

bool AxialSeries::admissible(int d, const Partition& nu) const {
  if (d < 0 || d + nu.size() > cap_) return false;
  return vars_.is_limit() || nu.length() <= vars_.n() - 1;
}

Rational AxialSeries::coefficient(int d, const Partition& nu) const {
  auto it = coeffs_.find(AxialKey{d, nu});
  return it == coeffs_.end() ? Rational{0} : it->second;
}

void AxialSeries::set(int d, const Partition& nu, const Rational& value) {
  if (!admissible(d, nu)) {
    throw std::invalid_argument("key (" + std::to_string(d) + "," + nu.to_string() +
                                ") not admissible");
  }
  if (value == 0) {
    coeffs_.erase(AxialKey{d, nu});
  } else {
    coeffs_[AxialKey{d, nu}] = value;
  }
}

void AxialSeries::add(int d, const Partition& nu, const Rational& value) {
  if (value == 0) return;
  set(d, nu, coefficient(d, nu) + value);
}

AxialSeries AxialSeries::truncated(int cap) const {
  AxialSeries out(axis_, vars_, std::min(cap, cap_));
  for (const auto& [key, value] : coeffs_) {
    if (key.d + key.nu.size() <= out.cap_) out.coeffs_.emplace(key, value);
  }
  return out;
}

AxialSeries AxialSeries::on_axis(int axis) const {
  AxialSeries out(axis, vars_, cap_);
  out.coeffs_ = coeffs_;
  return out;
}

void CumulantSpec::validate() const {
  if (theta <= 0) throw std::invalid_argument("theta must be positive");
  for (const auto& [nu, value] : c) {
    if (nu.empty()) throw std::invalid_argument("cumulant spec keys must have size >= 1");
  }
}

// ---------------------------------------------------------------------------

namespace {

void require_compatible(const AxialSeries& f, const AxialSeries& g) {
  if (f.axis() != g.axis()) throw std::invalid_argument("axial series on different axes");
  if (!(f.vars() == g.vars())) throw std::invalid_argument("axial series with different N");
}

// (π(p1), π(p2)) over S(ν), with multiplicity.
std::map<std::pair<Partition, Partition>, int> split_classes(const Partition& nu) {
  std::map<std::pair<Partition, Partition>, int> out;
  for (const auto& sp : split_pairs(nu)) {
    ++out[{equivalent_partition(sp.first), equivalent_partition(sp.second)}];
  }
  return out;
}

}  // namespace

AxialSeries axial_mul(const AxialSeries& f, const AxialSeries& g, int cap) {
  require_compatible(f, g);
  const int out_cap = std::min({cap, f.cap(), g.cap()});
  AxialSeries out(f.axis(), f.vars(), std::max(out_cap, 0));
  if (out_cap < 0) return out;

  // Index f and g by d for the convolution in x_i.
  std::map<int, std::map<Partition, Rational>> fd;
  std::map<int, std::map<Partition, Rational>> gd;
  for (const auto& [k, v] : f.coeffs()) fd[k.d][k.nu] = v;
  for (const auto& [k, v] : g.coeffs()) gd[k.d][k.nu] = v;
  if (fd.empty() || gd.empty()) return out;

  const int max_len = f.vars().is_limit() ? out_cap : f.vars().n() - 1;
  for (const auto& nu : partitions_up_to(out_cap)) {
    if (nu.length() > max_len) continue;
    const auto classes = split_classes(nu);
    for (int d = 0; d + nu.size() <= out_cap; ++d) {
      Rational total = 0;
      for (const auto& [a, frow] : fd) {
        if (a > d) break;
        auto git = gd.find(d - a);
        if (git == gd.end()) continue;
        for (const auto& [pair, count] : classes) {
          auto fit = frow.find(pair.first);
          if (fit == frow.end()) continue;
          auto g2 = git->second.find(pair.second);
          if (g2 == git->second.end()) continue;
          total += fit->second * g2->second * count;
        }
      }
      out.set(d, nu, total);
    }
  }
  return out;
}

AxialSeries apply_q(const AxialSeries& f, const AxialSeries& g, const Rational& theta, int cap) {
  require_compatible(f, g);
  if (cap < 0) throw std::invalid_argument("negative cap");
  if (cap > f.cap() || cap > g.cap() - 1) {
    std::ostringstream os;
    os << "apply_q to degree " << cap << " needs f to degree " << cap << " (has " << f.cap()
       << ") and g to degree " << cap + 1 << " (has " << g.cap() << ")";
    throw TruncationError(os.str());
  }
  AxialSeries out = axial_mul(f, g, cap);
  const bool limit = g.vars().is_limit();
  const Rational n = limit ? Rational{0} : Rational{g.vars().n()};

  for (const auto& [key, value] : g.coeffs()) {
    // d_i: x_i^{d} M_ν → x_i^{d−1} M_ν, weight θ(N−1)/N.
    if (key.d >= 1 && key.d - 1 + key.nu.size() <= cap) {
      const Rational w = limit ? theta : theta * (n - 1) / n;
      out.add(key.d - 1, key.nu, w * value);
    }
    // Σ_j C_{i,j}: x_j^{p} M_μ\p → x_i^{p−1}; each image monomial has
    // N − 1 − ℓ(ν) preimages.
    if (key.d == 0 && !key.nu.empty() && key.nu.size() - 1 <= cap) {
      int previous = 0;
      for (int p : key.nu.parts()) {
        if (p == previous) continue;
        previous = p;
        const Partition nu = key.nu.without_part(p);
        const Rational w = limit ? -theta : -theta * (n - 1 - nu.length()) / n;
        out.add(p - 1, nu, w * value);
      }
    }
  }
  return out;
}

AxialSeries apply_q(const AxialSeries& f, const AxialSeries& g, const Rational& theta) {
  const int cap = std::min(f.cap(), g.cap() - 1);
  if (cap < 0) throw TruncationError("apply_q has no degree left to produce");
  return apply_q(f, g, theta, cap);
}

SymmetricSeries apply_r(const AxialSeries& f, const AxialSeries& g, const Rational& theta,
                        int k) {
  if (k < 1) throw std::invalid_argument("apply_r needs k >= 1");
  AxialSeries current = g;
  for (int step = 0; step < k; ++step) current = apply_q(f, current, theta);
  // With N = 1 nothing but the constant survives; the count is kept at 1.
  const VarCount rest =
      g.vars().is_limit() ? VarCount::limit()
                          : VarCount::finite(std::max(g.vars().n() - 1, 1));
  SymmetricSeries out(rest, current.cap());
  for (const auto& [key, value] : current.coeffs()) {
    if (key.d == 0) out.set(key.nu, value);
  }
  return out;
}

Rational constant_term(const AxialSeries& s) { return s.coefficient(0, Partition{}); }
Rational constant_term(const SymmetricSeries& s) { return s.coefficient(Partition{}); }

AxialSeries axial_from_symmetric_derivative(const SymmetricSeries& F, int axis,
                                            const Rational& scale) {
  AxialSeries out(axis, F.vars(), std::max(F.cap() - 1, 0));
  if (F.cap() == 0) return out;
  for (const auto& [lambda, value] : F.coeffs()) {
    int previous = 0;
    for (int p : lambda.parts()) {
      if (p == previous) continue;
      previous = p;
      out.add(p - 1, lambda.without_part(p), scale * p * value);
    }
  }
  return out;
}

AxialSeries axial_from_symmetric(const SymmetricSeries& h, int axis) {
  AxialSeries out(axis, h.vars(), h.cap());
  const bool limit = h.vars().is_limit();
  for (const auto& [lambda, value] : h.coeffs()) {
    // With N finite, a key of length N must put a part on the axis.
    if (limit || lambda.length() <= h.vars().n() - 1) out.add(0, lambda, value);
    int previous = 0;
    for (int p : lambda.parts()) {
      if (p == previous) continue;
      previous = p;
      out.add(p, lambda.without_part(p), value);
    }
  }
  return out;
}

AxialSeries limit_axial_from_spec(const CumulantSpec& spec, int cap) {
  spec.validate();
  AxialSeries out(1, VarCount::limit(), cap);
  for (const auto& [lambda, value] : spec.c) {
    if (lambda.size() - 1 > cap) continue;
    int previous = 0;
    for (int p : lambda.parts()) {
      if (p == previous) continue;
      previous = p;
      const Partition nu = lambda.without_part(p);
      const int d = p - 1;
      out.set(d, nu, Rational(d + 1) * (nu.length() + 1) * value / (nu.size() + d + 1));
    }
  }
  return out;
}

Rational q_power_constant(const AxialSeries& f, const AxialSeries& g, const Rational& theta,
                          int k) {
  if (k < 0) throw std::invalid_argument("negative power");
  if (g.cap() < k) throw TruncationError("g must be known to degree k");
  AxialSeries current = g.truncated(k);
  for (int step = 0; step < k; ++step) current = apply_q(f, current, theta);
  return constant_term(current);
}

Rational iterated_r_constant(std::span<const AxialSeries> fs, const AxialSeries& g,
                             const Partition& lambda, const Rational& theta) {
  if (lambda.empty()) throw std::invalid_argument("lambda must be nonempty");
  if (static_cast<int>(fs.size()) != lambda.length()) {
    throw std::invalid_argument("one f per part of lambda is required");
  }
  if (g.cap() < lambda.size()) throw TruncationError("g must be known to degree |lambda|");
  AxialSeries current = g.truncated(lambda.size());
  Rational constant = 0;
  for (std::size_t row = 0; row < fs.size(); ++row) {
    const AxialSeries f = fs[row].on_axis(current.axis());
    SymmetricSeries h = apply_r(f, current, theta, lambda[row]);
    constant = constant_term(h);
    if (row + 1 < fs.size()) current = axial_from_symmetric(h, fs[row + 1].axis());
  }
  return constant;
}

}  // namespace bgf
