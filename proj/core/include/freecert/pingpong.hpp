#ifndef FREECERT_PINGPONG_HPP
#define FREECERT_PINGPONG_HPP

#include <string>
#include <vector>

#include "freecert/dynamics.hpp"

namespace freecert {

// Witness that <elements> is free of rank m: every element (r,eps)-very
// proximal, every attracting point r-separated from the repelling
// hyperplanes of the other elements, attracting balls pairwise disjoint
// across indices. Index 2i is element i, index 2i+1 its inverse.
template <typename K>
struct PingPongCertificate {
  std::vector<Matrix<K>> elements;
  std::vector<VeryProximalPair<K>> certs;
  double r = 0;
  double epsilon = 1;
  std::vector<std::vector<double>> cross_gap;      // 2m x 2m, entries for i != j
  std::vector<std::vector<double>> attractor_gap;  // 2m x 2m
  CertConstants constants;

  int m() const { return static_cast<int>(elements.size()); }
  const ProjectivePoint<K>& attractor(int idx) const {
    return (idx % 2 == 0) ? certs[static_cast<std::size_t>(idx / 2)].fwd.v_bar
                          : certs[static_cast<std::size_t>(idx / 2)].bwd.v_bar;
  }
  const ProjectiveHyperplane<K>& repeller(int idx) const {
    return (idx % 2 == 0) ? certs[static_cast<std::size_t>(idx / 2)].fwd.H_bar
                          : certs[static_cast<std::size_t>(idx / 2)].bwd.H_bar;
  }
};

struct SearchTrace {
  int restarts = 0;
  long evaluations = 0;
  double best_adversarial_value = 0;
};

// Finite set F able to move any 2m points r-away from any 2m hyperplanes;
// r is certified by adversarial search (restarted descent), not by proof.
struct SeparatingSet {
  std::vector<RealMatrix> F;
  std::vector<std::string> words;
  int m = 0;
  double r = 0;
  SearchTrace trace;
};

template <typename K>
Outcome<PingPongCertificate<K>> check_pingpong(const std::vector<Matrix<K>>& elements,
                                               const CertConstants* constants = nullptr,
                                               const Tolerances& tols = {}) {
  if (elements.size() < 2)
    return Refusal{Why::InputError, "ping-pong tuples need m >= 2 elements"};
  const FieldDescriptor& field = elements.front().field;
  CertConstants cc = constants ? *constants : default_constants(field);

  PingPongCertificate<K> cert;
  cert.constants = cc;
  cert.elements = elements;
  double common_eps = 0, common_r = 1;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    auto vp = very_proximal(elements[i], &cc, tols);
    if (!vp)
      return Refusal{Why::NotVeryProximal,
                     "element " + std::to_string(i) + ": " + vp.refusal().detail};
    common_eps = std::max(common_eps, vp.value().epsilon);
    common_r = std::min(common_r, vp.value().r);
    cert.certs.push_back(std::move(vp).take());
  }

  const int twom = 2 * static_cast<int>(elements.size());
  cert.cross_gap.assign(twom, std::vector<double>(twom, 1.0));
  cert.attractor_gap.assign(twom, std::vector<double>(twom, 1.0));
  for (int a = 0; a < twom; ++a)
    for (int b = 0; b < twom; ++b) {
      if (a / 2 == b / 2) continue;
      double gap = distance_to_hyperplane_lower(cert.attractor(a), cert.repeller(b));
      cert.cross_gap[a][b] = gap;
      common_r = std::min(common_r, gap);
      cert.attractor_gap[a][b] = distance_lower(cert.attractor(a), cert.attractor(b));
    }

  cert.r = common_r;
  cert.epsilon = common_eps;
  if (!(cert.r > 2 * cert.epsilon)) {
    int wa = -1, wb = -1;
    double worst = 2;
    for (int a = 0; a < twom; ++a)
      for (int b = 0; b < twom; ++b)
        if (a / 2 != b / 2 && cert.cross_gap[a][b] < worst) {
          worst = cert.cross_gap[a][b];
          wa = a;
          wb = b;
        }
    std::ostringstream os;
    os << "gap violation: attractor " << wa << " vs repeller " << wb << " at distance " << worst
       << " (need r > 2*eps = " << 2 * cert.epsilon << ")";
    return Refusal{Why::GapViolation, os.str()};
  }
  for (int a = 0; a < twom; ++a)
    for (int b = a + 1; b < twom; ++b) {
      if (a / 2 == b / 2) continue;
      if (cert.attractor_gap[a][b] <= 2 * cert.epsilon) {
        std::ostringstream os;
        os << "attracting points " << a << " and " << b << " only "
           << cert.attractor_gap[a][b] << " apart (need > 2*eps = " << 2 * cert.epsilon << ")";
        return Refusal{Why::AttractorCollision, os.str()};
      }
    }
  return cert;
}

// --- exact word oracle -------------------------------------------------------

struct FreenessResult {
  bool free = true;
  std::vector<int> relation;  // letter indices: 2i = a_i, 2i+1 = a_i^{-1}
  std::string relation_word;
  long words_checked = 0;
};

// True iff no nonempty reduced word of length <= max_len over the elements
// and their inverses evaluates to a scalar matrix (identity in PGL). Exact
// integer arithmetic throughout.
Outcome<FreenessResult> freeness_oracle(const std::vector<RationalMatrix>& elements,
                                        int max_len, long node_budget = 30'000'000);

// All positive words of length <= max_len pairwise distinct as maps
// (semigroup analogue, no inverses).
Outcome<FreenessResult> semigroup_matrix_oracle(const std::vector<RationalMatrix>& elements,
                                                int max_len, long node_budget = 10'000'000);

// --- separating sets and constructions --------------------------------------

Outcome<SeparatingSet> find_separating(const std::vector<RealMatrix>& generators, int m,
                                       int word_budget, std::uint64_t seed = 7,
                                       int restarts = 40, int descent_steps = 160);

struct VeryContractingWitness {
  RealMatrix element;  // g f g^{-1}
  int f_index = -1;
  double epsilon = 1;  // certified contraction of both the element and its inverse
};

Outcome<VeryContractingWitness> make_very_contracting(const RealMatrix& g,
                                                      const SeparatingSet& F,
                                                      const CertConstants* constants = nullptr);

struct BuildResult {
  PingPongCertificate<double> certificate;
  std::vector<std::pair<int, int>> witness_indices;  // (g_i, h_i) per element
};

Outcome<BuildResult> build_pingpong(const std::vector<RealMatrix>& targets,
                                    const RealMatrix& gamma, const SeparatingSet& F,
                                    const CertConstants* constants = nullptr,
                                    long combo_budget = 200000);

struct NearbyPingPong {
  PingPongCertificate<double> certificate;
  std::vector<std::pair<std::string, std::string>> words;  // (w_i, w_i') per element
  std::vector<RationalMatrix> exact_elements;
};

// Matrix-level search: perturb each target by generator-words within
// operator-norm distance delta of the identity until the tuple plays
// ping-pong. Exact-rational shadows are carried through for the oracle.
Outcome<NearbyPingPong> find_pingpong_near(const std::vector<RationalMatrix>& generators,
                                           const std::vector<RationalMatrix>& targets,
                                           double delta, long budget,
                                           const CertConstants* constants = nullptr);

double operator_norm(const RealMatrix& g);

}  // namespace freecert

#endif  // FREECERT_PINGPONG_HPP
