#include "freecert/pingpong.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <algorithm>
#include <map>

namespace freecert {

namespace {

using IntMatrix = std::vector<BigInt>;  // n*n row-major

IntMatrix to_integer_matrix(const RationalMatrix& m) {
  BigInt l = 1;
  for (const auto& q : m.a) l = boost::multiprecision::lcm(l, den(q));
  IntMatrix out;
  out.reserve(m.a.size());
  for (const auto& q : m.a) out.push_back(num(q) * (l / den(q)));
  return out;
}

IntMatrix int_mul(const IntMatrix& x, const IntMatrix& y, int n) {
  IntMatrix r(static_cast<std::size_t>(n) * n, BigInt(0));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const BigInt& xik = x[static_cast<std::size_t>(i) * n + k];
      if (xik == 0) continue;
      for (int j = 0; j < n; ++j)
        r[static_cast<std::size_t>(i) * n + j] += xik * y[static_cast<std::size_t>(k) * n + j];
    }
  return r;
}

bool is_scalar_matrix(const IntMatrix& w, int n) {
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && w[static_cast<std::size_t>(i) * n + j] != 0) return false;
  for (int i = 1; i < n; ++i)
    if (w[static_cast<std::size_t>(i) * n + i] != w[0]) return false;
  return w[0] != 0;
}

std::string word_to_string(const std::vector<int>& letters) {
  std::string s;
  for (int l : letters) {
    char c = static_cast<char>('a' + l / 2);
    s.push_back(l % 2 == 0 ? c : static_cast<char>(c - 'a' + 'A'));
  }
  return s;
}

struct OracleState {
  const std::vector<IntMatrix>* letters;
  int n;
  int target_len;
  long nodes = 0;
  long budget;
  std::vector<int> path;
  std::vector<int> relation;

  // depth-first over reduced words of exactly target_len, letters in index
  // order (breadth over lengths is handled by the caller), so the first
  // relation found is lexicographically least among the shortest
  bool dfs(const IntMatrix& acc, int depth) {
    if (depth == static_cast<int>(path.size()) && depth > 0) {
      // unreachable; length check done before recursion
    }
    for (int l = 0; l < static_cast<int>(letters->size()); ++l) {
      if (!path.empty() && (path.back() ^ 1) == l) continue;  // reduced words only
      if (++nodes > budget) return false;
      IntMatrix next = path.empty() ? (*letters)[static_cast<std::size_t>(l)]
                                    : int_mul(acc, (*letters)[static_cast<std::size_t>(l)], n);
      path.push_back(l);
      if (static_cast<int>(path.size()) == target_len) {
        if (is_scalar_matrix(next, n)) {
          relation = path;
          return false;
        }
      } else {
        if (!dfs(next, depth + 1)) return false;
      }
      path.pop_back();
    }
    return true;
  }
};

}  // namespace

Outcome<FreenessResult> freeness_oracle(const std::vector<RationalMatrix>& elements,
                                        int max_len, long node_budget) {
  if (elements.empty()) return Refusal{Why::InputError, "empty element list"};
  const int n = elements.front().n;
  std::vector<IntMatrix> letters;
  for (const auto& m : elements) {
    if (m.n != n) throw DimensionMismatch("oracle elements");
    letters.push_back(to_integer_matrix(m));
    letters.push_back(to_integer_matrix(inverse(m)));
  }

  FreenessResult res;
  OracleState st;
  st.letters = &letters;
  st.n = n;
  st.budget = node_budget;
  for (int len = 1; len <= max_len; ++len) {
    st.target_len = len;
    st.path.clear();
    IntMatrix unit;  // unused at depth 0
    bool completed = st.dfs(unit, 0);
    res.words_checked = st.nodes;
    if (!st.relation.empty()) {
      res.free = false;
      res.relation = st.relation;
      res.relation_word = word_to_string(st.relation);
      return res;
    }
    if (!completed) return Refusal{Why::BudgetExceeded, "oracle node budget exhausted"};
  }
  res.free = true;
  return res;
}

Outcome<FreenessResult> semigroup_matrix_oracle(const std::vector<RationalMatrix>& elements,
                                                int max_len, long node_budget) {
  if (elements.empty()) return Refusal{Why::InputError, "empty element list"};
  const int n = elements.front().n;
  const int t = static_cast<int>(elements.size());
  // positive words only, compared exactly as rational matrices
  std::map<std::vector<Rational>, std::vector<int>> seen;
  std::vector<std::pair<RationalMatrix, std::vector<int>>> frontier;
  frontier.emplace_back(rational_identity(n), std::vector<int>{});
  long nodes = 0;
  FreenessResult res;
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::pair<RationalMatrix, std::vector<int>>> next;
    for (const auto& [w, word] : frontier)
      for (int l = 0; l < t; ++l) {
        if (++nodes > node_budget)
          return Refusal{Why::BudgetExceeded, "semigroup oracle budget exhausted"};
        RationalMatrix prod = w * elements[static_cast<std::size_t>(l)];
        auto word2 = word;
        word2.push_back(2 * l);
        auto [it, inserted] = seen.emplace(prod.a, word2);
        if (!inserted) {
          res.free = false;
          res.relation = word2;
          res.relation_word =
              word_to_string(word2) + " = " + word_to_string(it->second);
          res.words_checked = nodes;
          return res;
        }
        next.emplace_back(std::move(prod), std::move(word2));
      }
    frontier = std::move(next);
  }
  res.free = true;
  res.words_checked = nodes;
  return res;
}

double operator_norm(const RealMatrix& g) {
  Eigen::MatrixXd e(g.n, g.n);
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j) e(i, j) = g.at(i, j);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(e);
  return svd.singularValues()(0);
}

namespace {

struct Config {
  std::vector<ProjectivePoint<double>> pts;
  std::vector<ProjectiveHyperplane<double>> hps;
};

double adversarial_value(const SeparatingSet& F, const std::vector<RealMatrix>& Finv,
                         const Config& cfg) {
  double best = 0;
  for (std::size_t k = 0; k < F.F.size(); ++k) {
    double worst = 1;
    for (const auto& v : cfg.pts) {
      auto gv = act(F.F[k], v);
      auto giv = act(Finv[k], v);
      for (const auto& H : cfg.hps) {
        worst = std::min(worst, distance_to_hyperplane(gv, H));
        worst = std::min(worst, distance_to_hyperplane(giv, H));
        if (worst >= best && worst == 0) break;
      }
    }
    best = std::max(best, worst);
  }
  return best;
}

Config random_config(const FieldDescriptor& field, int n, int m, SplitMix64& rng) {
  Config c;
  for (int i = 0; i < 2 * m; ++i) c.pts.push_back(sample_point<double>(field, n, rng));
  for (int i = 0; i < 2 * m; ++i) c.hps.push_back(sample_hyperplane<double>(field, n, rng));
  return c;
}

// configurations aligned with the elements' fixed structure: a candidate
// point v plus hyperplanes through v; these hit exact zeros whenever the
// words share an invariant line
std::vector<Config> structural_seeds(const std::vector<RealMatrix>& words,
                                     const FieldDescriptor& field, int n, int m) {
  std::vector<Vec<double>> candidates;
  Eigen::MatrixXd e(n, n);
  for (std::size_t k = 0; k < words.size() && candidates.size() < 24; ++k) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) e(i, j) = words[k].at(i, j);
    Eigen::EigenSolver<Eigen::MatrixXd> es(e);
    for (int i = 0; i < n; ++i) {
      auto col = es.eigenvectors().col(i);
      double im = 0, re = 0;
      for (int r = 0; r < n; ++r) {
        im = std::max(im, std::abs(col(r).imag()));
        re += col(r).real() * col(r).real();
      }
      if (!(im <= 1e-8) || !(re > 1e-6)) continue;  // complex pair or defective column
      Vec<double> v(static_cast<std::size_t>(n));
      for (int r = 0; r < n; ++r) v[static_cast<std::size_t>(r)] = col(r).real();
      candidates.push_back(std::move(v));
    }
  }
  std::vector<Config> seeds;
  for (const auto& v : candidates) {
    ProjectivePoint<double> p(field, v);
    // orthonormal functionals vanishing on v
    std::vector<Vec<double>> perps;
    for (int axis = 0; axis < n && perps.size() < 2; ++axis) {
      Vec<double> f(static_cast<std::size_t>(n), 0.0);
      f[static_cast<std::size_t>(axis)] = 1.0;
      double ip = 0;
      for (int r = 0; r < n; ++r) ip += f[static_cast<std::size_t>(r)] * p.v[static_cast<std::size_t>(r)];
      for (int r = 0; r < n; ++r) f[static_cast<std::size_t>(r)] -= ip * p.v[static_cast<std::size_t>(r)];
      double nf = 0;
      for (double x : f) nf += x * x;
      if (nf < 1e-12) continue;
      perps.push_back(std::move(f));
    }
    if (perps.empty()) continue;
    Config c;
    for (int i = 0; i < 2 * m; ++i) c.pts.push_back(p);
    for (int i = 0; i < 2 * m; ++i)
      c.hps.emplace_back(field, perps[static_cast<std::size_t>(i) % perps.size()]);
    seeds.push_back(std::move(c));
  }
  return seeds;
}

double descend(const SeparatingSet& F, const std::vector<RealMatrix>& Finv, Config cfg,
               double val, int descent_steps, SplitMix64& rng, SearchTrace& trace,
               const FieldDescriptor& field) {
  const double steps[] = {0.5, 0.1, 0.02, 0.004};
  for (int it = 0; it < descent_steps; ++it) {
    bool improved = false;
    for (std::size_t obj = 0; obj < cfg.pts.size() + cfg.hps.size(); ++obj) {
      for (double step : steps) {
        Config cand = cfg;
        if (obj < cfg.pts.size()) {
          Vec<double> v = cand.pts[obj].v;
          for (auto& x : v) x += step * rng.gauss();
          cand.pts[obj] = ProjectivePoint<double>(field, v);
        } else {
          Vec<double> f = cand.hps[obj - cfg.pts.size()].f;
          for (auto& x : f) x += step * rng.gauss();
          cand.hps[obj - cfg.pts.size()] = ProjectiveHyperplane<double>(field, f);
        }
        double cv = adversarial_value(F, Finv, cand);
        ++trace.evaluations;
        if (cv < val) {
          val = cv;
          cfg = std::move(cand);
          improved = true;
          break;
        }
      }
    }
    if (!improved || val == 0) break;
  }
  return val;
}

}  // namespace

Outcome<SeparatingSet> find_separating(const std::vector<RealMatrix>& generators, int m,
                                       int word_budget, std::uint64_t seed, int restarts,
                                       int descent_steps) {
  if (generators.empty()) return Refusal{Why::SearchFailed, "no generators"};
  const FieldDescriptor field = generators.front().field;
  const int n = generators.front().n;

  // candidate set: reduced generator-words, breadth-first, lexicographic
  SeparatingSet F;
  F.m = m;
  std::vector<RealMatrix> letters;
  std::vector<std::string> letter_names;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    letters.push_back(generators[i]);
    letters.push_back(inverse(generators[i]));
    char c = static_cast<char>('a' + i);
    letter_names.push_back(std::string(1, c));
    letter_names.push_back(std::string(1, static_cast<char>(c - 'a' + 'A')));
  }
  std::vector<std::pair<RealMatrix, std::string>> frontier{{RealMatrix::identity(field, n), ""}};
  std::vector<int> frontier_last{-1};
  while (static_cast<int>(F.F.size()) < word_budget && !frontier.empty()) {
    std::vector<std::pair<RealMatrix, std::string>> next;
    std::vector<int> next_last;
    for (std::size_t fi = 0; fi < frontier.size() && static_cast<int>(F.F.size()) < word_budget;
         ++fi)
      for (int l = 0; l < static_cast<int>(letters.size()); ++l) {
        if (frontier_last[fi] >= 0 && (frontier_last[fi] ^ 1) == l) continue;
        if (static_cast<int>(F.F.size()) >= word_budget) break;
        RealMatrix w = frontier[fi].first * letters[static_cast<std::size_t>(l)];
        std::string name = frontier[fi].second + letter_names[static_cast<std::size_t>(l)];
        F.F.push_back(w);
        F.words.push_back(name);
        next.emplace_back(std::move(w), std::move(name));
        next_last.push_back(l);
      }
    frontier = std::move(next);
    frontier_last = std::move(next_last);
  }

  std::vector<RealMatrix> Finv;
  Finv.reserve(F.F.size());
  for (const auto& w : F.F) Finv.push_back(inverse(w));

  // adversary: structure-seeded plus restarted perturbation descent over
  // 2m points and 2m hyperplanes
  double global_worst = 1;
  SearchTrace trace;
  for (Config& cfg : structural_seeds(F.F, field, n, m)) {
    SplitMix64 rng = substream(seed, 0xabcdULL);
    double val = adversarial_value(F, Finv, cfg);
    ++trace.restarts;
    val = descend(F, Finv, std::move(cfg), val, descent_steps / 4, rng, trace, field);
    global_worst = std::min(global_worst, val);
    if (global_worst == 0) break;
  }
  for (int rs = 0; rs < restarts && global_worst > 0; ++rs) {
    SplitMix64 rng = substream(seed, 0x5e90ULL + static_cast<std::uint64_t>(rs));
    Config cfg = random_config(field, n, m, rng);
    double val = adversarial_value(F, Finv, cfg);
    ++trace.restarts;
    val = descend(F, Finv, std::move(cfg), val, descent_steps, rng, trace, field);
    global_worst = std::min(global_worst, val);
  }
  trace.best_adversarial_value = global_worst;
  F.trace = trace;
  F.r = widen_down(global_worst, 1e-6);
  if (F.r < 1e-4)
    return Refusal{Why::SearchFailed,
                   "adversarial search drove the separation to " + std::to_string(global_worst) +
                       " (probable invariant subspace)"};
  return F;
}

Outcome<VeryContractingWitness> make_very_contracting(const RealMatrix& g,
                                                      const SeparatingSet& F,
                                                      const CertConstants* constants) {
  CertConstants cc = constants ? *constants : default_constants(g.field);
  auto cd = contraction_data(g);
  if (!cd) return Refusal{cd.why(), cd.refusal().detail};
  double eps = cd.value().epsilon;
  if (eps >= 1.0 / cc.C)
    return Refusal{Why::InputError, "element not contracting enough: eps >= 1/C"};
  RealMatrix ginv = inverse(g);
  for (std::size_t k = 0; k < F.F.size(); ++k) {
    RealMatrix h = g * F.F[k] * ginv;
    auto fwd = contraction_data(h);
    if (!fwd || fwd.value().epsilon > cc.C * eps) continue;
    auto bwd = contraction_data(inverse(h));
    if (!bwd || bwd.value().epsilon > cc.C * eps) continue;
    VeryContractingWitness w;
    w.element = h;
    w.f_index = static_cast<int>(k);
    w.epsilon = std::max(fwd.value().epsilon, bwd.value().epsilon);
    return w;
  }
  return Refusal{Why::NoWitness, "no f in F makes g f g^{-1} C*eps-very contracting"};
}

namespace {

// Joint lexicographic search over per-element candidate pools: the first
// combination whose tuple passes check_pingpong wins.
Outcome<BuildResult> joint_pingpong_search(
    const std::vector<std::vector<std::pair<RealMatrix, std::pair<int, int>>>>& pools,
    const CertConstants& cc, long combo_budget) {
  const std::size_t m = pools.size();
  for (const auto& pool : pools)
    if (pool.empty()) return Refusal{Why::NoWitness, "an element has no proximal candidates"};
  std::vector<std::size_t> idx(m, 0);
  long tried = 0;
  while (true) {
    std::vector<RealMatrix> tuple;
    std::vector<std::pair<int, int>> wit;
    for (std::size_t i = 0; i < m; ++i) {
      tuple.push_back(pools[i][idx[i]].first);
      wit.push_back(pools[i][idx[i]].second);
    }
    if (++tried > combo_budget) return Refusal{Why::NoWitness, "combination budget exhausted"};
    auto cert = check_pingpong(tuple, &cc);
    if (cert) return BuildResult{std::move(cert).take(), wit};
    // advance odometer
    std::size_t pos = 0;
    while (pos < m && ++idx[pos] == pools[pos].size()) {
      idx[pos] = 0;
      ++pos;
    }
    if (pos == m) return Refusal{Why::NoWitness, "all combinations exhausted"};
  }
}

}  // namespace

Outcome<BuildResult> build_pingpong(const std::vector<RealMatrix>& targets,
                                    const RealMatrix& gamma, const SeparatingSet& F,
                                    const CertConstants* constants, long combo_budget) {
  if (targets.empty()) return Refusal{Why::InputError, "no targets"};
  CertConstants cc = constants ? *constants : default_constants(gamma.field);
  auto fwd = contraction_data(gamma);
  auto bwd = contraction_data(inverse(gamma));
  if (!fwd || !bwd)
    return Refusal{Why::InputError, "gamma is not very contracting"};
  double geps = std::max(fwd.value().epsilon, bwd.value().epsilon);
  if (geps >= 1.0 / cc.C)
    return Refusal{Why::InputError, "gamma not contracting enough: eps >= 1/C"};

  // per-element candidate pool: g_i gamma a_i h_i very proximal
  std::vector<std::vector<std::pair<RealMatrix, std::pair<int, int>>>> pools(targets.size());
  for (std::size_t i = 0; i < targets.size(); ++i) {
    for (std::size_t gi = 0; gi < F.F.size(); ++gi)
      for (std::size_t hi = 0; hi < F.F.size(); ++hi) {
        RealMatrix x = F.F[gi] * gamma * targets[i] * F.F[hi];
        if (very_proximal(x, &cc))
          pools[i].emplace_back(std::move(x),
                                std::make_pair(static_cast<int>(gi), static_cast<int>(hi)));
      }
  }

  if (targets.size() == 1) {
    // degenerate rank-1 case: a single very-proximal product
    if (pools[0].empty()) return Refusal{Why::NoWitness, "no very-proximal product found"};
    const auto& [x, wit] = pools[0].front();
    PingPongCertificate<double> cert;
    cert.constants = cc;
    cert.elements = {x};
    auto vp = very_proximal(x, &cc);
    cert.certs.push_back(std::move(vp).take());
    cert.r = cert.certs[0].r;
    cert.epsilon = cert.certs[0].epsilon;
    return BuildResult{std::move(cert), {wit}};
  }
  return joint_pingpong_search(pools, cc, combo_budget);
}

Outcome<NearbyPingPong> find_pingpong_near(const std::vector<RationalMatrix>& generators,
                                           const std::vector<RationalMatrix>& targets,
                                           double delta, long budget,
                                           const CertConstants* constants) {
  if (generators.empty() || targets.empty())
    return Refusal{Why::SearchFailed, "empty generator or target list"};
  const int n = targets.front().n;
  CertConstants cc = constants ? *constants : CertConstants::archimedean_defaults();

  // enumerate generator-words near the identity in operator norm
  std::vector<RationalMatrix> letters;
  std::vector<std::string> letter_names;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    letters.push_back(generators[i]);
    letters.push_back(inverse(generators[i]));
    char c = static_cast<char>('a' + i);
    letter_names.emplace_back(1, c);
    letter_names.emplace_back(1, static_cast<char>(c - 'a' + 'A'));
  }
  std::vector<std::pair<RationalMatrix, std::string>> near_identity;
  near_identity.emplace_back(rational_identity(n), "");
  {
    std::vector<std::pair<RationalMatrix, std::string>> frontier = near_identity;
    std::vector<int> last{-1};
    long examined = 0;
    RealMatrix id_shift = RealMatrix::identity(FieldDescriptor::real(), n);
    while (!frontier.empty() && examined < budget &&
           static_cast<int>(near_identity.size()) < 64) {
      std::vector<std::pair<RationalMatrix, std::string>> next;
      std::vector<int> next_last;
      for (std::size_t fi = 0; fi < frontier.size(); ++fi)
        for (int l = 0; l < static_cast<int>(letters.size()); ++l) {
          if (last[fi] >= 0 && (last[fi] ^ 1) == l) continue;
          if (++examined > budget) break;
          RationalMatrix w = frontier[fi].first * letters[static_cast<std::size_t>(l)];
          std::string name = frontier[fi].second + letter_names[static_cast<std::size_t>(l)];
          RealMatrix shifted = project_to_real(w);
          for (int d = 0; d < n; ++d) shifted.at(d, d) -= 1.0;
          if (operator_norm(shifted) <= delta && static_cast<int>(near_identity.size()) < 64)
            near_identity.emplace_back(w, name);
          next.emplace_back(std::move(w), std::move(name));
          next_last.push_back(l);
        }
      if (static_cast<int>(next.size()) > 4096) {  // keep the frontier bounded
        next.resize(4096);
        next_last.resize(4096);
      }
      frontier = std::move(next);
      last = std::move(next_last);
    }
  }

  // per-target pools of perturbed elements, searched jointly
  struct Cand {
    RationalMatrix exact;
    std::pair<std::string, std::string> words;
  };
  std::vector<std::vector<Cand>> pools(targets.size());
  for (std::size_t i = 0; i < targets.size(); ++i)
    for (const auto& [w, wname] : near_identity)
      for (const auto& [w2, w2name] : near_identity) {
        RationalMatrix x = w * targets[i] * w2;
        if (very_proximal(project_to_real(x), &cc)) pools[i].push_back({x, {wname, w2name}});
      }
  for (const auto& pool : pools)
    if (pool.empty())
      return Refusal{Why::SearchFailed, "no very-proximal perturbation of a target"};

  std::vector<std::size_t> idx(targets.size(), 0);
  long tried = 0;
  while (true) {
    std::vector<RealMatrix> tuple;
    std::vector<RationalMatrix> exact;
    std::vector<std::pair<std::string, std::string>> words;
    for (std::size_t i = 0; i < targets.size(); ++i) {
      exact.push_back(pools[i][idx[i]].exact);
      tuple.push_back(project_to_real(exact.back()));
      words.push_back(pools[i][idx[i]].words);
    }
    if (++tried > budget) return Refusal{Why::SearchFailed, "perturbation budget exhausted"};
    auto cert = check_pingpong(tuple, &cc);
    if (cert) return NearbyPingPong{std::move(cert).take(), words, exact};
    std::size_t pos = 0;
    while (pos < targets.size() && ++idx[pos] == pools[pos].size()) {
      idx[pos] = 0;
      ++pos;
    }
    if (pos == targets.size())
      return Refusal{Why::SearchFailed, "all perturbation combinations exhausted"};
  }
}

}  // namespace freecert
