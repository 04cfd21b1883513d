#ifndef REFLAP_CHEEGER_HPP
#define REFLAP_CHEEGER_HPP

#include <algorithm>
#include <bit>
#include <cmath>
#include <compare>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "reflap/error.hpp"
#include "reflap/graph.hpp"
#include "reflap/spectra.hpp"

namespace reflap {

/// An exact multiple of 1/2, stored as a count of halves.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  static constexpr HalfInt from_halves(std::int64_t h) { return HalfInt(h); }
  static constexpr HalfInt from_int(std::int64_t v) { return HalfInt(2 * v); }

  constexpr std::int64_t halves() const noexcept { return halves_; }
  constexpr double value() const noexcept { return static_cast<double>(halves_) / 2.0; }
  constexpr bool is_integer() const noexcept { return halves_ % 2 == 0; }

  constexpr HalfInt& operator+=(HalfInt o) { halves_ += o.halves_; return *this; }
  constexpr HalfInt& operator-=(HalfInt o) { halves_ -= o.halves_; return *this; }
  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return a += b; }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return a -= b; }
  friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

 private:
  constexpr explicit HalfInt(std::int64_t h) : halves_(h) {}
  std::int64_t halves_ = 0;
};

/// Nonnegative rational in lowest terms with positive denominator.
class Fraction {
 public:
  constexpr Fraction() = default;
  Fraction(std::int64_t num, std::int64_t den) {
    if (den == 0) throw Error(ErrorCode::InvariantViolation, "zero denominator");
    if (den < 0) { num = -num; den = -den; }
    const std::int64_t g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
  }
  /// Ratio of two half-integers; the halves cancel.
  static Fraction of(HalfInt num, HalfInt den) { return Fraction(num.halves(), den.halves()); }

  constexpr std::int64_t num() const noexcept { return num_; }
  constexpr std::int64_t den() const noexcept { return den_; }
  constexpr double value() const noexcept {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  friend constexpr bool operator==(const Fraction&, const Fraction&) = default;
  friend constexpr std::strong_ordering operator<=>(const Fraction& a, const Fraction& b) {
    return static_cast<__int128>(a.num_) * b.den_ <=> static_cast<__int128>(b.num_) * a.den_;
  }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

struct CutResult {
  std::vector<Vertex> subset;  // sorted
  HalfInt cut_measure;
  HalfInt vol_s;
  HalfInt vol_complement;
  Fraction ratio;
};

// ---------------------------------------------------------------------------
// Measure and volume

namespace detail {

inline std::vector<bool> membership(const BoundaryGraph& g, std::span<const Vertex> set) {
  std::vector<bool> in(g.size(), false);
  for (Vertex v : set) {
    if (v >= g.size()) {
      throw Error(ErrorCode::InvalidVertex,
                  "vertex " + std::to_string(v) + " >= n=" + std::to_string(g.size()));
    }
    in[v] = true;
  }
  return in;
}

/// Weight of an edge in halves: 1 when both ends are boundary, 2 otherwise.
inline std::int64_t edge_halves(const BoundaryGraph& g, const Edge& e) {
  return (g.is_boundary(e.u) && g.is_boundary(e.v)) ? 1 : 2;
}

/// m({v}, V) in halves.
inline std::int64_t vertex_volume_halves(const BoundaryGraph& g, Vertex v) {
  const auto deg = static_cast<std::int64_t>(g.degree(v));
  return g.is_boundary(v) ? 2 * deg - static_cast<std::int64_t>(g.boundary_degree(v)) : 2 * deg;
}

}  // namespace detail

/// m(U, W) = |E(U, W)| - |E(U and boundary, W and boundary)| / 2.
inline HalfInt edge_measure(const BoundaryGraph& g, std::span<const Vertex> u,
                            std::span<const Vertex> w) {
  const auto in_u = detail::membership(g, u);
  const auto in_w = detail::membership(g, w);
  std::int64_t halves = 0;
  for (const Edge& e : g.edges()) {
    if ((in_u[e.u] && in_w[e.v]) || (in_u[e.v] && in_w[e.u])) halves += detail::edge_halves(g, e);
  }
  return HalfInt::from_halves(halves);
}

inline HalfInt volume(const BoundaryGraph& g, std::span<const Vertex> u) {
  const auto in_u = detail::membership(g, u);
  std::int64_t halves = 0;
  for (Vertex v = 0; v < g.size(); ++v)
    if (in_u[v]) halves += detail::vertex_volume_halves(g, v);
  return HalfInt::from_halves(halves);
}

inline CutResult make_cut(const BoundaryGraph& g, std::vector<Vertex> subset) {
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  const auto in_s = detail::membership(g, subset);
  std::vector<Vertex> rest;
  for (Vertex v = 0; v < g.size(); ++v)
    if (!in_s[v]) rest.push_back(v);
  if (subset.empty() || rest.empty()) {
    throw Error(ErrorCode::InvalidSpec, "cut subset must be nonempty and proper");
  }
  CutResult c;
  c.cut_measure = edge_measure(g, subset, rest);
  c.vol_s = volume(g, subset);
  c.vol_complement = volume(g, rest);
  const HalfInt denom = std::min(c.vol_s, c.vol_complement);
  if (denom.halves() <= 0) throw Error(ErrorCode::IsolatedVertex, "cut side has zero volume");
  c.ratio = Fraction::of(c.cut_measure, denom);
  c.subset = std::move(subset);
  return c;
}

// ---------------------------------------------------------------------------
// Exact Cheeger constant

inline constexpr std::size_t kDefaultBruteForceCap = 22;

/// Raised by cheeger_exact on a disconnected graph; carries the zero-measure
/// cut formed by the component of vertex 0.
class DisconnectedError : public Error {
 public:
  explicit DisconnectedError(CutResult cut)
      : Error(ErrorCode::Disconnected, "graph is disconnected; h_R = 0"), cut_(std::move(cut)) {}
  const CutResult& cut() const noexcept { return cut_; }

 private:
  CutResult cut_;
};

struct ExactCheeger {
  Fraction h_r;
  CutResult cut;
};

namespace detail {

struct MaskBest {
  bool found = false;
  std::uint64_t mask = 0;
  std::int64_t cut = 0;  // halves
  std::int64_t den = 1;  // halves

  void offer(std::uint64_t m, std::int64_t c, std::int64_t d) {
    if (!found) {
      *this = {true, m, c, d};
      return;
    }
    const auto lhs = static_cast<__int128>(c) * den;
    const auto rhs = static_cast<__int128>(cut) * d;
    if (lhs < rhs || (lhs == rhs && m < mask)) *this = {true, m, c, d};
  }
};

/// Scans Gray-code indices [begin, end) over vertices 1..n-1 (vertex 0 always in S).
inline MaskBest scan_masks(const BoundaryGraph& g, const std::vector<std::int64_t>& vol,
                           std::int64_t total, std::uint64_t begin, std::uint64_t end) {
  const std::size_t n = g.size();
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  MaskBest best;
  if (begin >= end) return best;

  std::vector<char> bd(n);
  for (Vertex v = 0; v < n; ++v) bd[v] = g.is_boundary(v);
  auto weight = [&](Vertex a, Vertex b) -> std::int64_t { return (bd[a] && bd[b]) ? 1 : 2; };

  std::uint64_t mask = ((begin ^ (begin >> 1)) << 1) | 1;
  std::int64_t cut = 0, vs = 0;
  for (Vertex v = 0; v < n; ++v)
    if (mask >> v & 1) vs += vol[v];
  for (const Edge& e : g.edges())
    if (((mask >> e.u) ^ (mask >> e.v)) & 1) cut += weight(e.u, e.v);

  for (std::uint64_t i = begin;;) {
    if (mask != full) best.offer(mask, cut, std::min(vs, total - vs));
    if (++i == end) break;
    // Gray code step: flip the bit at the position of the lowest set bit of i.
    const Vertex v = static_cast<Vertex>(std::countr_zero(i)) + 1;
    const bool entering = !(mask >> v & 1);
    for (Vertex w : g.neighbors(v)) {
      const bool w_in = mask >> w & 1;
      cut += (w_in == entering) ? -weight(v, w) : weight(v, w);
    }
    vs += entering ? vol[v] : -vol[v];
    mask ^= std::uint64_t{1} << v;
  }
  return best;
}

}  // namespace detail

/// Minimum of m(S, V\S) / min(vol S, vol V\S) over nonempty proper S, by
/// enumerating every S that contains vertex 0. Ties go to the smallest bitmask.
/// `workers` splits the enumeration; the result does not depend on it.
inline ExactCheeger cheeger_exact(const BoundaryGraph& g, std::size_t max_n = kDefaultBruteForceCap,
                                  unsigned workers = 1) {
  const std::size_t n = g.size();
  if (n > max_n || n > 62) {
    throw Error(ErrorCode::TooLarge, "n=" + std::to_string(n) + " exceeds brute-force cap " +
                                         std::to_string(std::min<std::size_t>(max_n, 62)));
  }
  if (n < 2) throw Error(ErrorCode::TooSmall, "need at least two vertices for a proper cut");

  const auto labels = component_labels(g);
  if (std::any_of(labels.begin(), labels.end(), [](std::size_t l) { return l != 0; })) {
    std::vector<Vertex> comp;
    for (Vertex v = 0; v < n; ++v)
      if (labels[v] == 0) comp.push_back(v);
    throw DisconnectedError(make_cut(g, std::move(comp)));
  }

  std::vector<std::int64_t> vol(n);
  std::int64_t total = 0;
  for (Vertex v = 0; v < n; ++v) total += vol[v] = detail::vertex_volume_halves(g, v);

  const std::uint64_t count = std::uint64_t{1} << (n - 1);
  workers = std::max(1u, workers);
  std::vector<detail::MaskBest> partial(workers);
  if (workers == 1) {
    partial[0] = detail::scan_masks(g, vol, total, 0, count);
  } else {
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (count + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t b = std::min(count, w * chunk), e = std::min(count, b + chunk);
      pool.emplace_back([&, w, b, e] { partial[w] = detail::scan_masks(g, vol, total, b, e); });
    }
    for (auto& t : pool) t.join();
  }
  detail::MaskBest best;
  for (const auto& p : partial)
    if (p.found) best.offer(p.mask, p.cut, p.den);

  std::vector<Vertex> subset;
  for (Vertex v = 0; v < n; ++v)
    if (best.mask >> v & 1) subset.push_back(v);
  CutResult cut = make_cut(g, std::move(subset));
  const Fraction h = cut.ratio;
  return {h, std::move(cut)};
}

// ---------------------------------------------------------------------------
// Sweep cuts

/// Best prefix cut after sorting vertices ascending by `values` (ties by index).
inline CutResult sweep_cut(const BoundaryGraph& g, std::span<const double> values) {
  const std::size_t n = g.size();
  if (values.size() != n) {
    throw Error(ErrorCode::LengthMismatch, "sweep vector has " + std::to_string(values.size()) +
                                               " entries for " + std::to_string(n) + " vertices");
  }
  if (n < 2) throw Error(ErrorCode::TooSmall, "need at least two vertices for a proper cut");

  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return values[a] < values[b]; });

  std::vector<std::int64_t> vol(n);
  std::int64_t total = 0;
  for (Vertex v = 0; v < n; ++v) {
    vol[v] = detail::vertex_volume_halves(g, v);
    if (vol[v] == 0) throw Error(ErrorCode::IsolatedVertex, detail::isolated_message(v));
    total += vol[v];
  }

  std::vector<bool> in_s(n, false);
  std::int64_t cut = 0, vs = 0;
  detail::MaskBest best;
  for (std::size_t j = 0; j + 1 < n; ++j) {
    const Vertex v = order[j];
    for (Vertex w : g.neighbors(v)) {
      const std::int64_t wt = (g.is_boundary(v) && g.is_boundary(w)) ? 1 : 2;
      cut += in_s[w] ? -wt : wt;
    }
    in_s[v] = true;
    vs += vol[v];
    best.offer(j, cut, std::min(vs, total - vs));  // "mask" = prefix length - 1
  }
  return make_cut(g, std::vector<Vertex>(order.begin(),
                                         order.begin() + static_cast<std::ptrdiff_t>(best.mask) + 1));
}

// ---------------------------------------------------------------------------
// Inequality certificate

struct CheegerReport {
  Fraction h_r_exact;
  double h_r = 0.0;
  CutResult optimal;
  double lambda_r = 0.0;
  CutResult sweep;
  double upper = 0.0;  // sqrt(2 lambda_R)
  double lower = 0.0;  // lambda_R / 2
  bool holds = false;
  bool sweep_within_upper = false;
};

inline constexpr double kTheoremSlack = 1e-9;

/// Checks sqrt(2 lambda_R) >= h_R >= lambda_R / 2 with h_R from enumeration
/// and lambda_R from the symmetric eigensolver; also sweeps the lambda_R
/// eigenvector.
inline CheegerReport verify_theorem(const BoundaryGraph& g,
                                    std::size_t max_n = kDefaultBruteForceCap,
                                    double eig_tol = kDefaultEigenTol, unsigned workers = 1) {
  if (g.size() < 2) throw Error(ErrorCode::TooSmall, "need at least two vertices");
  if (g.size() > max_n) {
    throw Error(ErrorCode::TooLarge, "n=" + std::to_string(g.size()) +
                                         " exceeds brute-force cap " + std::to_string(max_n));
  }
  if (!is_connected(g)) throw Error(ErrorCode::Disconnected, "theorem check needs a connected graph");

  const ReflectedSpectrum rs = reflected_spectrum(g, eig_tol);
  ExactCheeger exact = cheeger_exact(g, max_n, workers);

  CheegerReport r;
  r.h_r_exact = exact.h_r;
  r.h_r = exact.h_r.value();
  r.optimal = std::move(exact.cut);
  r.lambda_r = rs.lambda_r();
  const Vector g1 = rs.sweep_vector(1);
  r.sweep = sweep_cut(g, g1);
  r.upper = std::sqrt(2.0 * std::max(0.0, r.lambda_r));
  r.lower = r.lambda_r / 2.0;
  r.holds = r.upper >= r.h_r - kTheoremSlack && r.h_r >= r.lower - kTheoremSlack;
  r.sweep_within_upper = r.sweep.ratio.value() <= r.upper + kTheoremSlack;
  return r;
}

}  // namespace reflap

#endif  // REFLAP_CHEEGER_HPP
