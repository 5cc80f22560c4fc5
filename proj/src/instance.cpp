#include "runpoly/instance.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace runpoly {

std::vector<int> CyclicInterval::members() const {
  return cyclic_interval_members(a, b, n);
}

std::vector<int> cyclic_interval_members(int a, int b, int n) {
  if (n < 1) throw std::invalid_argument("cyclic interval: modulus < 1");
  if (a < 0 || a >= n || b < 0 || b >= n)
    throw std::invalid_argument("cyclic interval: endpoint out of range");
  std::vector<int> out;
  int t = a;
  out.push_back(t);
  while (t != b) {
    t = mod_index(t + 1, n);
    out.push_back(t);
  }
  return out;
}

Instance::Instance(int n_, std::vector<int> a, std::vector<int> b,
                   std::vector<int> g, std::vector<int> d)
    : n(n_),
      alpha(std::move(a)),
      beta(std::move(b)),
      gamma(std::move(g)),
      delta(std::move(d)) {
  validate();
}

Instance Instance::constant(int n, int a, int b, int g, int d) {
  return Instance(n, std::vector<int>(n, a), std::vector<int>(n, b),
                  std::vector<int>(n, g), std::vector<int>(n, d));
}

bool Instance::constant_bounds() const {
  for (const auto* v : {&alpha, &beta, &gamma, &delta})
    if (std::adjacent_find(v->begin(), v->end(), std::not_equal_to<>()) !=
        v->end())
      return false;
  return true;
}

void Instance::validate() const {
  if (n < 2) throw std::invalid_argument("instance: n must be >= 2");
  for (const auto* v : {&alpha, &beta, &gamma, &delta})
    if (static_cast<int>(v->size()) != n)
      throw std::invalid_argument("instance: bound vector length != n");
  for (int t = 0; t < n; ++t) {
    if (alpha[t] < 1 || alpha[t] > beta[t] || beta[t] > n - 1)
      throw std::invalid_argument("instance: need 1 <= alpha <= beta <= n-1 at t=" +
                                  std::to_string(t));
    if (gamma[t] < 1 || gamma[t] > delta[t] || delta[t] > n - 1)
      throw std::invalid_argument("instance: need 1 <= gamma <= delta <= n-1 at t=" +
                                  std::to_string(t));
  }
}

Instance Instance::from_json(const nlohmann::json& j) {
  int n = j.at("n").get<int>();
  if (j.contains("const")) {
    auto c = j.at("const").get<std::vector<int>>();
    if (c.size() != 4)
      throw std::invalid_argument("instance json: \"const\" needs 4 entries");
    return Instance::constant(n, c[0], c[1], c[2], c[3]);
  }
  return Instance(n, j.at("alpha").get<std::vector<int>>(),
                  j.at("beta").get<std::vector<int>>(),
                  j.at("gamma").get<std::vector<int>>(),
                  j.at("delta").get<std::vector<int>>());
}

Instance Instance::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open instance file: " + path);
  nlohmann::json j = nlohmann::json::parse(in);  // throws parse_error with line info
  return from_json(j);
}

nlohmann::json Instance::to_json() const {
  if (constant_bounds())
    return {{"n", n}, {"const", {alpha[0], beta[0], gamma[0], delta[0]}}};
  return {{"n", n}, {"alpha", alpha}, {"beta", beta}, {"gamma", gamma},
          {"delta", delta}};
}

std::string Instance::describe() const {
  std::ostringstream os;
  os << "n=" << n;
  if (constant_bounds()) {
    os << " const(" << alpha[0] << "," << beta[0] << "," << gamma[0] << ","
       << delta[0] << ")";
  } else {
    auto dump = [&os](const char* name, const std::vector<int>& v) {
      os << " " << name << "=(";
      for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
      os << ")";
    };
    dump("alpha", alpha);
    dump("beta", beta);
    dump("gamma", gamma);
    dump("delta", delta);
  }
  return os.str();
}

bool YZPoint::integral() const {
  for (const auto* v : {&y, &z})
    for (const Rat& r : *v)
      if (!is_integer(r)) return false;
  return true;
}

std::vector<Rat> YZPoint::as_vector() const {
  std::vector<Rat> out = y;
  out.insert(out.end(), z.begin(), z.end());
  return out;
}

std::string YZPoint::bitstring() const {
  std::string s;
  for (const Rat& r : y) s += (r == 1 ? '1' : '0');
  s += '|';
  for (const Rat& r : z) s += (r == 1 ? '1' : '0');
  return s;
}

std::uint32_t derive_startups_bits(std::uint32_t y, int n) {
  // prev = y rotated right by one (bit t holds y_{t-1})
  std::uint32_t mask = (n == 32) ? 0xffffffffu : ((1u << n) - 1u);
  std::uint32_t prev = ((y << 1) | (y >> (n - 1))) & mask;
  return y & ~prev;
}

bool is_feasible_bits(const Instance& inst, std::uint32_t y) {
  const int n = inst.n;
  std::uint32_t mask = (1u << n) - 1u;
  y &= mask;
  if (y == 0 || y == mask) return false;  // need an on- and an off-period
  auto bit = [&](int t) { return (y >> mod_index(t, n)) & 1u; };
  for (int t = 0; t < n; ++t) {
    if (bit(t) == 1 && bit(t - 1) == 0) {  // on-run starts at t
      for (int i = 0; i < inst.alpha[t]; ++i)
        if (bit(t + i) == 0) return false;
      bool off_in_window = false;
      for (int i = inst.alpha[t]; i <= inst.beta[t]; ++i)
        if (bit(t + i) == 0) {
          off_in_window = true;
          break;
        }
      if (!off_in_window) return false;
    }
    if (bit(t) == 0 && bit(t - 1) == 1) {  // off-run starts at t
      for (int i = 0; i < inst.gamma[t]; ++i)
        if (bit(t + i) == 1) return false;
      bool on_in_window = false;
      for (int i = inst.gamma[t]; i <= inst.delta[t]; ++i)
        if (bit(t + i) == 1) {
          on_in_window = true;
          break;
        }
      if (!on_in_window) return false;
    }
  }
  return true;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> enumerate_Z_bits(
    const Instance& inst, int limit_n) {
  if (inst.n > limit_n)
    throw resource_limit_error("enumerate_Z: n=" + std::to_string(inst.n) +
                               " exceeds limit " + std::to_string(limit_n));
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  const std::uint32_t end = 1u << inst.n;
  for (std::uint32_t y = 1; y + 1 < end; ++y)
    if (is_feasible_bits(inst, y))
      out.emplace_back(y, derive_startups_bits(y, inst.n));
  return out;
}

YZPoint yz_from_bits(std::uint32_t y, std::uint32_t z, int n) {
  YZPoint p;
  p.y.reserve(n);
  p.z.reserve(n);
  for (int t = 0; t < n; ++t) {
    p.y.emplace_back((y >> t) & 1u);
    p.z.emplace_back((z >> t) & 1u);
  }
  return p;
}

std::vector<int> derive_startups(const std::vector<int>& y) {
  const int n = static_cast<int>(y.size());
  std::vector<int> z(n);
  for (int t = 0; t < n; ++t)
    z[t] = (y[t] == 1 && y[mod_index(t - 1, n)] == 0) ? 1 : 0;
  return z;
}

bool is_feasible(const Instance& inst, const std::vector<int>& y) {
  std::uint32_t bits = 0;
  for (int t = 0; t < inst.n; ++t)
    if (y[t]) bits |= (1u << t);
  return is_feasible_bits(inst, bits);
}

std::vector<YZPoint> enumerate_Z(const Instance& inst, int limit_n) {
  std::vector<YZPoint> out;
  for (auto [y, z] : enumerate_Z_bits(inst, limit_n))
    out.push_back(yz_from_bits(y, z, inst.n));
  std::sort(out.begin(), out.end());
  return out;
}

std::set<int> startup_count_range(const Instance& inst) {
  if (!inst.constant_bounds())
    throw std::invalid_argument("startup_count_range: bounds must be constant");
  const int lo_den = inst.beta[0] + inst.delta[0];
  const int hi_den = inst.alpha[0] + inst.gamma[0];
  // ceil(n/lo_den) .. floor(n/hi_den)
  int lo = (inst.n + lo_den - 1) / lo_den;
  int hi = inst.n / hi_den;
  std::set<int> out;
  for (int k = lo; k <= hi; ++k) out.insert(k);
  return out;
}

YZPoint construct_witness(const Instance& inst, int k) {
  auto range = startup_count_range(inst);
  if (!range.count(k))
    throw std::invalid_argument("construct_witness: k=" + std::to_string(k) +
                                " is not an achievable start-up count");
  const int a = inst.alpha[0], b = inst.beta[0];
  const int g = inst.gamma[0], d = inst.delta[0];
  // Choose block lengths so the remaining horizon always stays within
  // [(i-1)(a+g), (i-1)(b+d)].
  int remaining = inst.n;
  std::vector<std::pair<int, int>> blocks;  // (on-run, off-run)
  for (int i = k; i >= 1; --i) {
    int lo = std::max(a + g, remaining - (i - 1) * (b + d));
    int total = lo;  // any value in [lo, min(b+d, remaining-(i-1)(a+g))] works
    int p = std::max(a, total - d);
    int q = total - p;
    blocks.emplace_back(p, q);
    remaining -= total;
  }
  std::vector<int> y;
  for (auto [p, q] : blocks) {
    y.insert(y.end(), p, 1);
    y.insert(y.end(), q, 0);
  }
  YZPoint out;
  for (int v : y) out.y.emplace_back(v);
  for (int v : derive_startups(y)) out.z.emplace_back(v);
  return out;
}

bool check_weak_monotonicity(const std::vector<int>& eps) {
  const int n = static_cast<int>(eps.size());
  for (int t = 0; t < n; ++t)
    if (eps[mod_index(t + 1, n)] < eps[t] - 1) return false;
  return true;
}

int s_index(const std::vector<int>& eps, int t) {
  if (!check_weak_monotonicity(eps))
    throw std::invalid_argument("s_index: vector is not weakly monotone");
  const int n = static_cast<int>(eps.size());
  // k covers t iff the cyclic distance from k to t is < eps_k; the covering
  // set is the cyclic interval [s, t], so scan predecessors until the first
  // non-covering one.
  int s = t;
  for (int step = 1; step <= n - 1; ++step) {
    int k = mod_index(t - step, n);
    if (mod_index(t - k, n) < eps[k])
      s = k;
    else
      break;
  }
  return s;
}

}  // namespace runpoly
