#include "gainrank/classify.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "gainrank/error.hpp"

namespace gainrank {
namespace {

double sign_power(int e) { return e % 2 == 0 ? 1.0 : -1.0; }

// Walk from `from` through `first` along degree-2 core vertices until a
// branch vertex is reached. Returns the visited sequence, endpoints included.
std::vector<Vertex> trace(const GainGraph& g, const std::vector<int>& core_degree, Vertex from,
                          Vertex first) {
  std::vector<Vertex> walk{from, first};
  Vertex prev = from;
  Vertex cur = first;
  while (core_degree[cur] == 2) {
    Vertex next = 0;
    for (Vertex w : g.neighbors(cur)) {
      if (core_degree[w] > 0 && w != prev) {
        next = w;
        break;
      }
    }
    prev = cur;
    cur = next;
    walk.push_back(cur);
  }
  return walk;
}

Relabeled compose(const Relabeled& outer, const Relabeled& inner) {
  Relabeled r{inner.graph, {}};
  for (Vertex v : inner.original) r.original.push_back(outer.original[static_cast<std::size_t>(v - 1)]);
  return r;
}

}  // namespace

std::string to_string(CycleType t) {
  switch (t) {
    case CycleType::A: return "A";
    case CycleType::B: return "B";
    case CycleType::C: return "C";
    case CycleType::D: return "D";
    case CycleType::E: return "E";
  }
  return "?";
}

CycleType parse_cycle_type(std::string_view text) {
  if (text == "A") return CycleType::A;
  if (text == "B") return CycleType::B;
  if (text == "C") return CycleType::C;
  if (text == "D") return CycleType::D;
  if (text == "E") return CycleType::E;
  throw Error(ErrorCode::ParseError, "unknown cycle type '" + std::string(text) + "'");
}

bool is_even_type(CycleType t) noexcept { return t == CycleType::A || t == CycleType::B; }

std::complex<double> CycleWalk::gain_product() const {
  UnitGain p;
  for (const UnitGain& w : gains) p = p * w;
  return p.value();
}

CycleWalk cycle_walk(const GainGraph& g, std::span<const Vertex> vertices) {
  const int n = static_cast<int>(vertices.size());
  if (n < 3) throw Error(ErrorCode::NotACycle, "a cycle needs at least 3 vertices");
  std::set<Vertex> seen;
  CycleWalk c;
  for (int i = 0; i < n; ++i) {
    const Vertex a = vertices[static_cast<std::size_t>(i)];
    const Vertex b = vertices[static_cast<std::size_t>((i + 1) % n)];
    if (!g.contains(a)) throw Error(ErrorCode::NotACycle, "vertex " + std::to_string(a) + " not in graph");
    if (!seen.insert(a).second) {
      throw Error(ErrorCode::NotACycle, "vertex " + std::to_string(a) + " repeated");
    }
    const auto w = g.contains(b) ? g.find_gain(a, b) : std::nullopt;
    if (!w) {
      throw Error(ErrorCode::NotACycle,
                  std::to_string(a) + " and " + std::to_string(b) + " are not adjacent");
    }
    c.vertices.push_back(a);
    c.gains.push_back(*w);
  }
  return c;
}

std::vector<Vertex> canonical_cycle_order(std::span<const Vertex> vertices) {
  std::vector<Vertex> v(vertices.begin(), vertices.end());
  if (v.empty()) return v;
  const auto n = v.size();
  const auto lo = static_cast<std::size_t>(std::min_element(v.begin(), v.end()) - v.begin());
  std::rotate(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(lo), v.end());
  if (n > 2 && v[n - 1] < v[1]) std::reverse(v.begin() + 1, v.end());
  return v;
}

bool is_fragile(double x, double tol) noexcept {
  const double a = std::abs(x);
  return a > tol / 10.0 && a <= 10.0 * tol;
}

CycleClassification classify_cycle(const CycleWalk& c, double tol) {
  const int n = c.length();
  if (n < 3) throw Error(ErrorCode::NotACycle, "a cycle needs at least 3 vertices");
  const std::complex<double> w = c.gain_product();
  CycleClassification out;
  if (n % 2 == 0) {
    out.residual = std::abs(w - sign_power(n / 2));
    out.type = out.residual <= tol ? CycleType::A : CycleType::B;
  } else {
    out.residual = sign_power((n - 1) / 2) * w.real() + 0.0;
    out.type = out.residual > tol ? CycleType::C : out.residual < -tol ? CycleType::D : CycleType::E;
  }
  out.fragile = is_fragile(out.residual, tol);
  return out;
}

CycleType cycle_type(const CycleWalk& c, double tol) { return classify_cycle(c, tol).type; }

CycleType cycle_type_conjugated_closing(const CycleWalk& c, double tol) {
  const int n = c.length();
  if (n < 3) throw Error(ErrorCode::NotACycle, "a cycle needs at least 3 vertices");
  UnitGain head;
  for (int i = 0; i + 1 < n; ++i) head = head * c.gains[static_cast<std::size_t>(i)];
  const std::complex<double> wn = c.gains.back().value();
  if (n % 2 == 0) {
    return std::abs(head.value() - sign_power(n / 2) * wn) <= tol ? CycleType::A : CycleType::B;
  }
  const double s = sign_power((n - 1) / 2) * (head.value() * std::conj(wn)).real();
  return s > tol ? CycleType::C : s < -tol ? CycleType::D : CycleType::E;
}

std::optional<std::pair<Vertex, Vertex>> find_pendant(const GainGraph& g) {
  for (Vertex v = 1; v <= g.order(); ++v) {
    if (g.degree(v) == 1) return std::pair{v, g.neighbors(v)[0]};
  }
  return std::nullopt;
}

Relabeled delete_pendant_pair(const GainGraph& g, Vertex v, Vertex u) {
  if (!g.contains(v) || !g.contains(u) || g.degree(v) != 1 || g.neighbors(v)[0] != u) {
    throw Error(ErrorCode::NotAPendant,
                std::to_string(v) + " is not a pendant vertex with neighbor " + std::to_string(u));
  }
  const Vertex drop[] = {v, u};
  return remove_vertices(g, drop);
}

std::vector<std::pair<Vertex, Vertex>> pendant_twins(const GainGraph& g) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex v = 1; v <= g.order(); ++v) {
    if (g.degree(v) != 1) continue;
    for (Vertex w = v + 1; w <= g.order(); ++w) {
      if (g.degree(w) == 1 && g.neighbors(w)[0] == g.neighbors(v)[0]) out.emplace_back(v, w);
    }
  }
  return out;
}

namespace {

struct Move {
  ReductionStep::Kind kind;
  Vertex v;
  Vertex u;
};

std::vector<Move> available_moves(const GainGraph& g) {
  std::vector<Move> moves;
  for (auto [v, w] : pendant_twins(g)) {
    moves.push_back({ReductionStep::Kind::Twin, v, 0});
    moves.push_back({ReductionStep::Kind::Twin, w, 0});
  }
  for (Vertex v = 1; v <= g.order(); ++v) {
    if (g.degree(v) == 1) moves.push_back({ReductionStep::Kind::PendantPair, v, g.neighbors(v)[0]});
  }
  return moves;
}

template <typename Choose>
ReductionTrace run_reduction(const GainGraph& g, Choose choose) {
  ReductionTrace trace;
  trace.residual.graph = g;
  for (Vertex v = 1; v <= g.order(); ++v) trace.residual.original.push_back(v);
  for (;;) {
    const GainGraph& cur = trace.residual.graph;
    const std::optional<Move> move = choose(cur);
    if (!move) break;
    const auto label = [&](Vertex x) { return trace.residual.original[static_cast<std::size_t>(x - 1)]; };
    Relabeled next;
    if (move->kind == ReductionStep::Kind::Twin) {
      trace.steps.push_back({move->kind, label(move->v), 0});
      const Vertex drop[] = {move->v};
      next = remove_vertices(cur, drop);
    } else {
      trace.steps.push_back({move->kind, label(move->v), label(move->u)});
      next = delete_pendant_pair(cur, move->v, move->u);
      trace.rank_offset += 2;
    }
    trace.residual = compose(trace.residual, next);
  }
  return trace;
}

}  // namespace

ReductionTrace reduce(const GainGraph& g) {
  return run_reduction(g, [](const GainGraph& cur) -> std::optional<Move> {
    const auto twins = pendant_twins(cur);
    if (!twins.empty()) return Move{ReductionStep::Kind::Twin, twins.front().second, 0};
    if (auto p = find_pendant(cur)) return Move{ReductionStep::Kind::PendantPair, p->first, p->second};
    return std::nullopt;
  });
}

ReductionTrace reduce_random(const GainGraph& g, std::mt19937_64& rng) {
  return run_reduction(g, [&rng](const GainGraph& cur) -> std::optional<Move> {
    const auto moves = available_moves(cur);
    if (moves.empty()) return std::nullopt;
    std::uniform_int_distribution<std::size_t> pick(0, moves.size() - 1);
    return moves[pick(rng)];
  });
}

BicyclicBase bicyclic_base(const GainGraph& g) {
  if (g.order() == 0 || !g.is_connected()) throw Error(ErrorCode::NotConnected, "graph is not connected");
  if (g.size() != g.order() + 1) {
    throw Error(ErrorCode::NotBicyclic, "edge count " + std::to_string(g.size()) +
                                            " is not order + 1 = " + std::to_string(g.order() + 1));
  }

  const int n = g.order();
  std::vector<int> deg(static_cast<std::size_t>(n) + 1, 0);
  std::vector<Vertex> stack;
  for (Vertex v = 1; v <= n; ++v) {
    deg[v] = g.degree(v);
    if (deg[v] == 1) stack.push_back(v);
  }
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    deg[v] = 0;
    for (Vertex w : g.neighbors(v)) {
      if (deg[w] > 0 && --deg[w] == 1) stack.push_back(w);
    }
  }

  std::vector<Vertex> core;
  std::vector<Vertex> branch;
  for (Vertex v = 1; v <= n; ++v) {
    if (deg[v] == 0) continue;
    core.push_back(v);
    if (deg[v] >= 3) branch.push_back(v);
  }

  const auto core_neighbors = [&](Vertex v) {
    std::vector<Vertex> out;
    for (Vertex w : g.neighbors(v)) {
      if (deg[w] > 0) out.push_back(w);
    }
    return out;
  };
  // Each closed walk from b is found once per direction; keep the first.
  const auto loops_at = [&](Vertex b) {
    std::vector<std::vector<Vertex>> loops;
    std::set<std::vector<Vertex>> seen;
    for (Vertex w : core_neighbors(b)) {
      auto walk = trace(g, deg, b, w);
      if (walk.back() != b) continue;
      auto key = canonical_cycle_order(std::span<const Vertex>(walk).first(walk.size() - 1));
      if (seen.insert(key).second) loops.push_back(std::move(walk));
    }
    return loops;
  };

  BicyclicBase out;
  out.core = induced_subgraph(g, core);
  if (branch.size() == 1 && deg[branch[0]] == 4) {
    auto loops = loops_at(branch[0]);
    if (loops.size() != 2) throw Error(ErrorCode::NotBicyclic, "unexpected core shape");
    if (loops[0].size() > loops[1].size()) std::swap(loops[0], loops[1]);
    const int p = static_cast<int>(loops[0].size()) - 1;
    const int q = static_cast<int>(loops[1].size()) - 1;
    out.descriptor = BaseDescriptor{BaseKind::Infinity, p, 1, q};
    out.segments = {loops[0], {branch[0]}, loops[1]};
    return out;
  }
  if (branch.size() != 2 || deg[branch[0]] != 3 || deg[branch[1]] != 3) {
    throw Error(ErrorCode::NotBicyclic, "unexpected core shape");
  }

  const Vertex b1 = branch[0];
  const Vertex b2 = branch[1];
  std::vector<std::vector<Vertex>> through;
  for (Vertex w : core_neighbors(b1)) {
    auto walk = trace(g, deg, b1, w);
    if (walk.back() == b2) through.push_back(std::move(walk));
  }
  if (through.size() == 1) {
    auto cp = loops_at(b1);
    auto cq = loops_at(b2);
    if (cp.size() != 1 || cq.size() != 1) throw Error(ErrorCode::NotBicyclic, "unexpected core shape");
    auto path = through[0];
    if (cp[0].size() > cq[0].size()) {
      std::swap(cp, cq);
      std::reverse(path.begin(), path.end());
    }
    out.descriptor = BaseDescriptor{BaseKind::Infinity, static_cast<int>(cp[0].size()) - 1,
                                    static_cast<int>(path.size()), static_cast<int>(cq[0].size()) - 1};
    out.segments = {cp[0], path, cq[0]};
    return out;
  }
  if (through.size() != 3) throw Error(ErrorCode::NotBicyclic, "unexpected core shape");
  std::sort(through.begin(), through.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  const auto interior = [](const std::vector<Vertex>& path) { return static_cast<int>(path.size()) - 2; };
  out.descriptor =
      BaseDescriptor{BaseKind::Theta, interior(through[0]), interior(through[1]), interior(through[2])};
  out.segments = std::move(through);
  return out;
}

std::vector<CycleWalk> fundamental_cycles(const GainGraph& g, const BicyclicBase& base) {
  std::vector<std::vector<Vertex>> cycles;
  const auto& s = base.segments;
  if (base.descriptor.kind == BaseKind::Infinity) {
    for (const auto* loop : {&s[0], &s[2]}) cycles.emplace_back(loop->begin(), loop->end() - 1);
  } else {
    for (auto [i, j] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
      std::vector<Vertex> c = s[static_cast<std::size_t>(i)];
      const auto& back = s[static_cast<std::size_t>(j)];
      c.insert(c.end(), back.rbegin() + 1, back.rend() - 1);
      cycles.push_back(std::move(c));
    }
  }
  for (auto& c : cycles) c = canonical_cycle_order(c);
  std::sort(cycles.begin(), cycles.end());
  std::vector<CycleWalk> out;
  for (const auto& c : cycles) out.push_back(cycle_walk(g, c));
  return out;
}

std::vector<CycleWalk> fundamental_cycles(const GainGraph& g) {
  return fundamental_cycles(g, bicyclic_base(g));
}

}  // namespace gainrank
