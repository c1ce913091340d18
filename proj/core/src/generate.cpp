#include "ribbon/generate.hpp"

#include <algorithm>
#include <random>

namespace ribbon {

RibbonGraph random_graph(const GenerateOptions& opt, std::uint64_t seed) {
  if (opt.vertices < 1 || opt.edges < 0 || opt.flags < 0) throw GraphError("need at least one vertex");
  if (opt.twist_prob < 0.0 || opt.twist_prob > 1.0) throw GraphError("twist probability must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  auto pick = [&](int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); };
  std::bernoulli_distribution twist(opt.twist_prob);

  std::vector<Vertex> vertices(opt.vertices);
  for (int v = 0; v < opt.vertices; ++v) vertices[v].id = "v" + std::to_string(v + 1);
  std::map<std::string, Twist> edges;
  std::set<std::string> flags;

  const bool tree = opt.connected && opt.edges >= opt.vertices - 1;
  for (int i = 0; i < opt.edges; ++i) {
    const std::string id = "e" + std::to_string(i + 1);
    int a = pick(opt.vertices);
    int b = pick(opt.vertices);
    if (tree && i < opt.vertices - 1) {
      a = i + 1;
      b = pick(i + 1);
    }
    edges.emplace(id, twist(rng) ? Twist::twisted : Twist::untwisted);
    vertices[a].rotation.push_back(Stub::edge(id, End::a));
    vertices[b].rotation.push_back(Stub::edge(id, End::b));
  }
  for (int i = 0; i < opt.flags; ++i) {
    const std::string id = "f" + std::to_string(i + 1);
    flags.insert(id);
    vertices[pick(opt.vertices)].rotation.push_back(Stub::flag(id));
  }
  for (auto& v : vertices) std::shuffle(v.rotation.begin(), v.rotation.end(), rng);
  return RibbonGraph(std::move(vertices), std::move(edges), std::move(flags));
}

}  // namespace ribbon
