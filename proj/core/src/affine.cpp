#include "freecert/affine.hpp"

#include <set>

namespace freecert {

Outcome<PadicSemigroupCertificate> certify_free_semigroup_padic(
    const std::vector<AffineElement<PadicScalar>>& elements) {
  const std::size_t t = elements.size();
  if (t == 0) return Refusal{Why::InputError, "empty element list"};
  const long p = elements.front().a.p();
  const int N = elements.front().a.precision();

  PadicSemigroupCertificate cert;
  cert.elements = elements;
  for (std::size_t i = 0; i < t; ++i) {
    const PadicScalar& a = elements[i].a;
    if (!a.is_regular() || a.valuation() < 1)
      return Refusal{Why::NotContractive, "element " + std::to_string(i) + " has |a|_p >= 1"};
    auto fp = fixed_point(elements[i]);
    if (!fp) return fp.refusal();
    cert.fixed_points.push_back(std::move(fp).take());
  }
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = i + 1; j < t; ++j) {
      PadicScalar d = cert.fixed_points[i] - cert.fixed_points[j];
      if (!d.is_regular()) {
        std::ostringstream os;
        os << "fixed points " << i << " and " << j << " coincide within precision";
        return Refusal{Why::FixedPointCollision, os.str()};
      }
    }

  cert.center = cert.fixed_points.front();
  long eR = 0;
  bool have = false;
  for (std::size_t i = 1; i < t; ++i) {
    PadicScalar d = cert.fixed_points[i] - cert.center;
    long v = d.valuation();
    if (!have || v < eR) {
      eR = v;
      have = true;
    }
  }
  if (!have) eR = 0;  // single element: unit ball
  cert.R_exp = eR;

  for (std::size_t i = 0; i < t; ++i) {
    PadicScalar c = elements[i].apply(cert.center);
    long e_img = eR + elements[i].a.valuation();
    cert.images.push_back({c, e_img});
    PadicScalar off = c - cert.center;
    if (off.is_regular() && off.valuation() < eR)
      return Refusal{Why::DiscOverlap,
                     "image ball " + std::to_string(i) + " escapes the common ball"};
  }
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = i + 1; j < t; ++j) {
      PadicScalar d = cert.images[i].center - cert.images[j].center;
      long vmin = std::min(cert.images[i].radius_exp, cert.images[j].radius_exp);
      if (!d.is_regular() || d.valuation() >= vmin) {
        std::ostringstream os;
        os << "image balls " << i << " and " << j << " are not disjoint";
        return Refusal{Why::DiscOverlap, os.str()};
      }
    }
  (void)p;
  (void)N;
  return cert;
}

Outcome<SemigroupOracleResult> semigroup_oracle(
    const std::vector<AffineElement<Rational>>& elements, int max_len, long budget) {
  const std::size_t t = elements.size();
  if (t == 0) return Refusal{Why::InputError, "empty element list"};

  using Key = std::pair<Rational, Rational>;
  std::map<Key, std::string> seen;
  std::vector<std::pair<AffineElement<Rational>, std::string>> frontier;
  frontier.push_back({{Rational(1), Rational(0)}, ""});
  SemigroupOracleResult res;
  long nodes = 0;
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::pair<AffineElement<Rational>, std::string>> next;
    next.reserve(frontier.size() * t);
    for (const auto& [w, name] : frontier)
      for (std::size_t l = 0; l < t; ++l) {
        if (++nodes > budget)
          return Refusal{Why::BudgetExceeded, "affine semigroup oracle budget exhausted"};
        AffineElement<Rational> prod = compose(w, elements[l]);
        std::string pname = name + static_cast<char>('a' + l);
        auto [it, inserted] = seen.emplace(Key{prod.a, prod.b}, pname);
        if (!inserted) {
          res.free = false;
          res.collision = pname + " = " + it->second;
          res.words = nodes;
          return res;
        }
        next.emplace_back(std::move(prod), std::move(pname));
      }
    frontier = std::move(next);
  }
  res.free = true;
  res.words = nodes;
  return res;
}

std::size_t distinct_word_images(const std::vector<AffineElement<Rational>>& elements,
                                 const Rational& x, int n) {
  std::set<Rational> level{x};
  for (int k = 0; k < n; ++k) {
    std::set<Rational> next;
    for (const auto& v : level)
      for (const auto& g : elements) next.insert(g.apply(v));
    level = std::move(next);
  }
  return level.size();
}

}  // namespace freecert
