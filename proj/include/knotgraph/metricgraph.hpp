#pragma once

#include "knotgraph/numeric.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <deque>
#include <istream>
#include <limits>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

namespace knotgraph {

using Vertex = std::uint32_t;
using VertexPath = std::vector<Vertex>;

class DisconnectedGraphError : public std::invalid_argument {
 public:
  DisconnectedGraphError(Vertex from, Vertex to, const std::string& from_label, const std::string& to_label)
      : std::invalid_argument("graph is disconnected: no path from '" + from_label + "' to '" + to_label + "'"),
        from_(from),
        to_(to) {}
  Vertex from() const { return from_; }
  Vertex to() const { return to_; }

 private:
  Vertex from_, to_;
};

/// Row-major symmetric matrix of shortest-path lengths.
class DistanceMatrix {
 public:
  static constexpr std::uint32_t unreachable = std::numeric_limits<std::uint32_t>::max();

  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t n) : n_(n), d_(n * n, unreachable) {}

  std::size_t size() const { return n_; }
  std::uint32_t operator()(Vertex a, Vertex b) const { return d_[std::size_t(a) * n_ + b]; }
  std::uint32_t& at(Vertex a, Vertex b) { return d_[std::size_t(a) * n_ + b]; }
  const std::uint32_t* row(Vertex a) const { return d_.data() + std::size_t(a) * n_; }
  std::uint32_t* row(Vertex a) { return d_.data() + std::size_t(a) * n_; }

  std::uint32_t diameter() const {
    std::uint32_t best = 0;
    for (auto v : d_) best = std::max(best, v);
    return best;
  }

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint32_t> d_;
};

/// Runs fn(begin, end) over [0, count) split into contiguous chunks, one per worker.
template <class Fn>
void parallel_for(std::size_t count, unsigned workers, Fn fn) {
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(count, 1)));
  if (workers <= 1) {
    fn(std::size_t{0}, count);
    return;
  }
  std::vector<std::thread> threads;
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::size_t chunk = (count + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    std::size_t begin = w * chunk, end = std::min(count, begin + chunk);
    if (begin >= end) break;
    threads.emplace_back([&, begin, end] {
      try {
        fn(begin, end);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  if (failure) std::rethrow_exception(failure);
}

/// Finite simple graph with unit edges and string labels.
class MetricGraph {
 public:
  MetricGraph() = default;

  Vertex add_vertex(std::string label) {
    if (index_.contains(label)) throw std::invalid_argument("duplicate vertex label '" + label + "'");
    auto v = static_cast<Vertex>(labels_.size());
    index_.emplace(label, v);
    labels_.push_back(std::move(label));
    adjacency_.emplace_back();
    invalidate();
    return v;
  }

  /// The vertex with this label, created if missing.
  Vertex vertex(const std::string& label) {
    auto it = index_.find(label);
    return it != index_.end() ? it->second : add_vertex(label);
  }

  std::optional<Vertex> find(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  /// Adds the edge {a, b}. Self-loops do not affect vertex distances and are dropped.
  void add_edge(Vertex a, Vertex b) {
    check(a);
    check(b);
    if (a == b || has_edge(a, b)) return;
    adjacency_[a].push_back(b);
    adjacency_[b].push_back(a);
    ++edge_count_;
    invalidate();
  }
  void add_edge(const std::string& a, const std::string& b) {
    Vertex va = vertex(a);
    add_edge(va, vertex(b));
  }

  bool has_edge(Vertex a, Vertex b) const {
    const auto& n = adjacency_.at(a);
    return std::find(n.begin(), n.end(), b) != n.end();
  }

  std::size_t size() const { return labels_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  const std::string& label(Vertex v) const { return labels_.at(v); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_.at(v); }

  /// Edges {a, b} with a < b, sorted.
  std::vector<std::pair<Vertex, Vertex>> edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex a = 0; a < size(); ++a)
      for (Vertex b : adjacency_[a])
        if (a < b) out.emplace_back(a, b);
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Shortest-path distances, computed once and cached. Throws
  /// DisconnectedGraphError on disconnected graphs.
  const DistanceMatrix& distances(unsigned workers = 0) const;

 private:
  struct Cache {
    std::once_flag once;
    DistanceMatrix matrix;
  };

  void check(Vertex v) const {
    if (v >= size()) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
  }
  void invalidate() { cache_ = std::make_shared<Cache>(); }

  std::vector<std::string> labels_;
  std::unordered_map<std::string, Vertex> index_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// Breadth-first distances from source; unreachable vertices get DistanceMatrix::unreachable.
inline std::vector<std::uint32_t> bfs_distances(const MetricGraph& g, Vertex source) {
  std::vector<std::uint32_t> dist(g.size(), DistanceMatrix::unreachable);
  std::vector<Vertex> queue{source};
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex v = queue[head];
    for (Vertex w : g.neighbors(v))
      if (dist[w] == DistanceMatrix::unreachable) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
  }
  return dist;
}

/// All-pairs shortest paths by one breadth-first search per source.
inline DistanceMatrix apsp(const MetricGraph& g, unsigned workers = 0) {
  DistanceMatrix d(g.size());
  parallel_for(g.size(), workers, [&](std::size_t begin, std::size_t end) {
    for (std::size_t s = begin; s < end; ++s) {
      auto dist = bfs_distances(g, static_cast<Vertex>(s));
      std::copy(dist.begin(), dist.end(), d.row(static_cast<Vertex>(s)));
    }
  });
  for (Vertex v = 1; v < g.size(); ++v)
    if (d(0, v) == DistanceMatrix::unreachable) throw DisconnectedGraphError(0, v, g.label(0), g.label(v));
  return d;
}

inline const DistanceMatrix& MetricGraph::distances(unsigned workers) const {
  auto cache = cache_;
  std::call_once(cache->once, [&] { cache->matrix = apsp(*this, workers); });
  return cache->matrix;
}

/// Four-point hyperbolicity: max over quadruples of (largest - second largest
/// of the three pair sums) / 2.
///
/// Pairs are scanned by decreasing distance. A quadruple is scored at its
/// largest-sum pairing {P_b, P_a} with b before a; its value is at most
/// 2 d(P_a), which stops the scan once no later pair can beat the best.
inline Rational delta_four_point(const MetricGraph& g, unsigned workers = 0) {
  const DistanceMatrix& d = g.distances(workers);
  const auto n = static_cast<Vertex>(g.size());
  if (n < 4) return 0;
  struct Pair {
    Vertex x, y;
    std::uint32_t d;
  };
  std::vector<Pair> pairs;
  pairs.reserve(std::size_t(n) * (n - 1) / 2);
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = x + 1; y < n; ++y) pairs.push_back({x, y, d(x, y)});
  std::stable_sort(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) { return a.d > b.d; });

  std::atomic<std::uint64_t> best{0};  // 2 * delta
  const std::size_t stride = 64;
  const std::size_t blocks = (pairs.size() + stride - 1) / stride;
  // Interleave blocks across workers so the long-distance pairs are shared.
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  parallel_for(workers, workers, [&](std::size_t wbegin, std::size_t wend) {
    for (std::size_t w = wbegin; w < wend; ++w) {
      for (std::size_t blk = w; blk < blocks; blk += workers) {
        for (std::size_t a = blk * stride; a < std::min(pairs.size(), (blk + 1) * stride); ++a) {
          const Pair& pa = pairs[a];
          if (2ull * pa.d <= best.load(std::memory_order_relaxed)) return;
          std::uint64_t local = 0;
          for (std::size_t b = 0; b < a; ++b) {
            const Pair& pb = pairs[b];
            std::uint64_t s1 = std::uint64_t(pa.d) + pb.d;
            std::uint64_t s2 = std::uint64_t(d(pa.x, pb.x)) + d(pa.y, pb.y);
            std::uint64_t s3 = std::uint64_t(d(pa.x, pb.y)) + d(pa.y, pb.x);
            std::uint64_t second = std::max(s2, s3);
            if (s1 > second) local = std::max(local, s1 - second);
          }
          std::uint64_t cur = best.load(std::memory_order_relaxed);
          while (local > cur && !best.compare_exchange_weak(cur, local, std::memory_order_relaxed)) {
          }
        }
      }
    }
  });
  return Rational(Integer(best.load()), 2);
}

class TriangleError : public std::invalid_argument {
 public:
  TriangleError(int side, const std::string& message)
      : std::invalid_argument("side " + std::to_string(side + 1) + ": " + message), side_(side) {}
  int side() const { return side_; }

 private:
  int side_;
};

struct ThinnessResult {
  Rational delta;
  int side = -1;   // side holding the farthest vertex
  Vertex vertex = 0;
};

/// Least vertex-scale delta for which the geodesic triangle is delta-thin:
/// max over vertices x of each side of d(x, union of the other two sides).
/// Sides run corner to corner: side i ends where side i+1 starts (cyclically).
inline ThinnessResult triangle_thinness(const MetricGraph& g, const std::array<VertexPath, 3>& sides) {
  const DistanceMatrix& d = g.distances();
  for (int i = 0; i < 3; ++i) {
    const auto& s = sides[i];
    if (s.empty()) throw TriangleError(i, "empty path");
    for (Vertex v : s)
      if (v >= g.size()) throw TriangleError(i, "vertex out of range");
    for (std::size_t j = 0; j + 1 < s.size(); ++j)
      if (!g.has_edge(s[j], s[j + 1]))
        throw TriangleError(i, "'" + g.label(s[j]) + "' and '" + g.label(s[j + 1]) + "' are not adjacent");
    if (s.back() != sides[(i + 1) % 3].front()) throw TriangleError(i, "does not close up with the next side");
    if (d(s.front(), s.back()) != s.size() - 1)
      throw TriangleError(i, "not geodesic: length " + std::to_string(s.size() - 1) + " but distance " +
                                 std::to_string(d(s.front(), s.back())));
  }
  ThinnessResult out{0, -1, 0};
  std::uint32_t best = 0;
  for (int i = 0; i < 3; ++i)
    for (Vertex x : sides[i]) {
      std::uint32_t nearest = DistanceMatrix::unreachable;
      for (int j = 1; j <= 2; ++j)
        for (Vertex y : sides[(i + j) % 3]) nearest = std::min(nearest, d(x, y));
      if (out.side < 0 || nearest > best) {
        best = nearest;
        out.side = i;
        out.vertex = x;
      }
    }
  out.delta = best;
  return out;
}

/// Induced subgraph on the vertices at distance exactly 1 from v, with the
/// original labels.
inline MetricGraph link_of_vertex(const MetricGraph& g, Vertex v) {
  MetricGraph link;
  const auto& sphere = g.neighbors(v);
  for (Vertex w : sphere) link.add_vertex(g.label(w));
  for (std::size_t i = 0; i < sphere.size(); ++i)
    for (std::size_t j = i + 1; j < sphere.size(); ++j)
      if (g.has_edge(sphere[i], sphere[j])) link.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return link;
}

/// Diameter in the graph's own metric, or nullopt if it is disconnected.
/// The empty graph counts as connected with diameter 0.
inline std::optional<std::uint32_t> graph_diameter(const MetricGraph& g) {
  std::uint32_t best = 0;
  for (Vertex s = 0; s < g.size(); ++s) {
    auto dist = bfs_distances(g, s);
    for (auto x : dist) {
      if (x == DistanceMatrix::unreachable) return std::nullopt;
      best = std::max(best, x);
    }
  }
  return best;
}

inline std::optional<std::uint32_t> link_diameter(const MetricGraph& g, Vertex v) {
  return graph_diameter(link_of_vertex(g, v));
}

struct QuasiIsometryViolation {
  enum class Kind { lower, upper, density };
  Kind kind;
  Vertex first;   // x-vertex (or y-vertex for density)
  Vertex second;  // second x-vertex; unused for density
  std::string detail;
};

struct QuasiIsometryResult {
  bool holds = true;
  std::optional<QuasiIsometryViolation> violation;
};

/// Checks d_X(x,x')/a - b <= d_Y(f x, f x') <= a d_X(x,x') + b for all pairs,
/// and that every y lies within C of the image. f[x] is the image of x.
inline QuasiIsometryResult verify_quasi_isometry(const MetricGraph& x, const MetricGraph& y,
                                                 const std::vector<Vertex>& f, const Rational& a, const Rational& b,
                                                 const Rational& c) {
  if (a < 1) throw std::invalid_argument("quasi-isometry constant a must be >= 1");
  if (b < 0 || c < 0) throw std::invalid_argument("quasi-isometry constants b, C must be >= 0");
  if (f.size() != x.size()) throw std::invalid_argument("vertex map must be total on the source graph");
  for (Vertex v : f)
    if (v >= y.size()) throw std::invalid_argument("vertex map hits a vertex outside the target graph");
  const DistanceMatrix& dx = x.distances();
  const DistanceMatrix& dy = y.distances();
  for (Vertex p = 0; p < x.size(); ++p)
    for (Vertex q = p + 1; q < x.size(); ++q) {
      Rational src = dx(p, q), dst = dy(f[p], f[q]);
      if (src / a - b > dst)
        return {false, QuasiIsometryViolation{QuasiIsometryViolation::Kind::lower, p, q,
                                              "d_Y = " + to_string(dst) + " < d_X/a - b = " + to_string(src / a - b)}};
      if (dst > a * src + b)
        return {false, QuasiIsometryViolation{QuasiIsometryViolation::Kind::upper, p, q,
                                              "d_Y = " + to_string(dst) + " > a d_X + b = " + to_string(a * src + b)}};
    }
  for (Vertex t = 0; t < y.size(); ++t) {
    std::uint32_t nearest = DistanceMatrix::unreachable;
    for (Vertex v : f) nearest = std::min(nearest, dy(t, v));
    if (Rational(nearest) > c)
      return {false, QuasiIsometryViolation{QuasiIsometryViolation::Kind::density, t, t,
                                            "distance to image " + std::to_string(nearest) + " > C = " + to_string(c)}};
  }
  return {};
}

/// Whether the metric restricted to points embeds isometrically in the real
/// line. Tries every ordering, placing each point at the running sum of gaps.
inline bool embeds_in_real_line(const DistanceMatrix& d, std::vector<Vertex> points) {
  std::sort(points.begin(), points.end());
  do {
    std::vector<std::int64_t> pos(points.size(), 0);
    for (std::size_t i = 1; i < points.size(); ++i) pos[i] = pos[i - 1] + d(points[i - 1], points[i]);
    bool ok = true;
    for (std::size_t i = 0; i < points.size() && ok; ++i)
      for (std::size_t j = i + 1; j < points.size() && ok; ++j)
        ok = pos[j] - pos[i] == std::int64_t(d(points[i], points[j]));
    if (ok) return true;
  } while (std::next_permutation(points.begin(), points.end()));
  return false;
}

class GraphFormatError : public std::invalid_argument {
 public:
  GraphFormatError(std::size_t line, const std::string& message)
      : std::invalid_argument("line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

namespace detail {

inline std::vector<std::string> line_tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

inline bool skip_line(const std::vector<std::string>& tokens) { return tokens.empty() || tokens[0].starts_with('#'); }

}  // namespace detail

/// Reads `u v` edge lines; `#` starts a comment line; a lone label declares an
/// isolated vertex.
inline MetricGraph read_graph(std::istream& in) {
  MetricGraph g;
  std::string line;
  for (std::size_t n = 1; std::getline(in, line); ++n) {
    auto t = detail::line_tokens(line);
    if (detail::skip_line(t)) continue;
    if (t.size() == 1)
      g.vertex(t[0]);
    else if (t.size() == 2)
      g.add_edge(t[0], t[1]);
    else
      throw GraphFormatError(n, "expected 'u v', got " + std::to_string(t.size()) + " tokens");
  }
  return g;
}

inline void write_graph(std::ostream& out, const MetricGraph& g) {
  for (Vertex v = 0; v < g.size(); ++v)
    if (g.neighbors(v).empty()) out << g.label(v) << '\n';
  for (auto [a, b] : g.edges()) out << g.label(a) << ' ' << g.label(b) << '\n';
}

/// Reads `xlabel ylabel` lines into a vertex map from x to y; every x vertex
/// must be mapped exactly once.
inline std::vector<Vertex> read_vertex_map(std::istream& in, const MetricGraph& x, const MetricGraph& y) {
  std::vector<std::optional<Vertex>> f(x.size());
  std::string line;
  for (std::size_t n = 1; std::getline(in, line); ++n) {
    auto t = detail::line_tokens(line);
    if (detail::skip_line(t)) continue;
    if (t.size() != 2) throw GraphFormatError(n, "expected 'xlabel ylabel'");
    auto from = x.find(t[0]);
    auto to = y.find(t[1]);
    if (!from) throw GraphFormatError(n, "unknown source vertex '" + t[0] + "'");
    if (!to) throw GraphFormatError(n, "unknown target vertex '" + t[1] + "'");
    if (f[*from]) throw GraphFormatError(n, "source vertex '" + t[0] + "' mapped twice");
    f[*from] = *to;
  }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < x.size(); ++v) {
    if (!f[v]) throw GraphFormatError(0, "source vertex '" + x.label(v) + "' is not mapped");
    out.push_back(*f[v]);
  }
  return out;
}

}  // namespace knotgraph
