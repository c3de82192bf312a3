#include "freecert/json_io.hpp"

namespace freecert {

Json field_to_json(const FieldDescriptor& f) {
  Json j;
  j["kind"] = field_kind_name(f.kind);
  if (f.kind == FieldKind::Padic) {
    j["p"] = f.p;
    j["precision"] = f.precision;
  } else {
    j["eta"] = f.eta;
  }
  return j;
}

FieldDescriptor field_from_json(const Json& j) {
  std::string kind = j.at("kind").get<std::string>();
  FieldDescriptor f;
  if (kind == "real") {
    f = FieldDescriptor::real(j.value("eta", 1e-9));
  } else if (kind == "complex") {
    f = FieldDescriptor::complex_field(j.value("eta", 1e-9));
  } else if (kind == "padic") {
    f = FieldDescriptor::padic(j.at("p").get<long>(), j.value("precision", 16));
  } else {
    throw std::invalid_argument("unknown field kind: " + kind);
  }
  f.validate();
  return f;
}

Json rational_to_json(const Rational& q) {
  return Json{{"num", to_string(num(q))}, {"den", to_string(den(q))}};
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return Rational(BigInt(j.get<std::string>()));
  if (j.is_object()) {
    BigInt n(j.at("num").get<std::string>());
    BigInt d(j.at("den").get<std::string>());
    if (d == 0) throw std::invalid_argument("rational with zero denominator");
    return Rational(n, d);
  }
  throw std::invalid_argument("rational must be an integer, string, or {num, den}");
}

// entry parsers shared by the matrix readers
namespace {

double real_entry(const Json& e) {
  if (e.is_number()) return e.get<double>();
  return to_double(rational_from_json(e));
}

Rational rational_entry(const Json& e) {
  if (e.is_number_integer()) return Rational(e.get<long long>());
  return rational_from_json(e);
}

template <typename M, typename F>
M matrix_from_rows(const Json& j, const FieldDescriptor& f, F parse) {
  int n = j.at("n").get<int>();
  const Json& rows = j.at("rows");
  if (static_cast<int>(rows.size()) != n) throw std::invalid_argument("row count != n");
  M m(f, n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != n)
      throw std::invalid_argument("column count != n");
    for (int k = 0; k < n; ++k)
      m.at(i, k) = parse(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)]);
  }
  return m;
}

bool rows_all_exact(const Json& j) {
  for (const auto& row : j.at("rows"))
    for (const auto& e : row)
      if (!(e.is_object() || e.is_number_integer() || e.is_string())) return false;
  return true;
}

}  // namespace

Json real_matrix_to_json(const RealMatrix& m) {
  Json j;
  j["field"] = field_to_json(m.field);
  j["n"] = m.n;
  Json rows = Json::array();
  for (int i = 0; i < m.n; ++i) {
    Json row = Json::array();
    for (int k = 0; k < m.n; ++k) {
      if (m.shadow)
        row.push_back(rational_to_json(m.shadow->at(i, k)));
      else
        row.push_back(m.at(i, k));
    }
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  return j;
}

RealMatrix real_matrix_from_json(const Json& j) {
  FieldDescriptor f = j.contains("field") ? field_from_json(j.at("field"))
                                          : FieldDescriptor::real();
  auto m = matrix_from_rows<RealMatrix>(j, f, real_entry);
  if (rows_all_exact(j)) {
    auto exact = matrix_from_rows<RationalMatrix>(j, f, rational_entry);
    m.shadow = std::make_shared<RationalMatrix>(std::move(exact));
  }
  return m;
}

Json rational_matrix_to_json(const RationalMatrix& m) {
  Json j;
  j["field"] = field_to_json(m.field);
  j["n"] = m.n;
  Json rows = Json::array();
  for (int i = 0; i < m.n; ++i) {
    Json row = Json::array();
    for (int k = 0; k < m.n; ++k) row.push_back(rational_to_json(m.at(i, k)));
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  return j;
}

RationalMatrix rational_matrix_from_json(const Json& j) {
  FieldDescriptor f = j.contains("field") ? field_from_json(j.at("field"))
                                          : FieldDescriptor::real();
  return matrix_from_rows<RationalMatrix>(j, f, rational_entry);
}

Json padic_matrix_to_json(const PadicMatrix& m) {
  Json j;
  j["field"] = field_to_json(m.field);
  j["n"] = m.n;
  Json rows = Json::array();
  for (int i = 0; i < m.n; ++i) {
    Json row = Json::array();
    for (int k = 0; k < m.n; ++k) row.push_back(rational_to_json(m.at(i, k).to_rational()));
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  return j;
}

PadicMatrix padic_matrix_from_json(const Json& j) {
  FieldDescriptor f = field_from_json(j.at("field"));
  if (f.kind != FieldKind::Padic) throw std::invalid_argument("padic matrix needs a padic field");
  return matrix_from_rows<PadicMatrix>(j, f, [&](const Json& e) {
    return PadicScalar::from_rational(rational_entry(e), f.p, f.precision);
  });
}

Json complex_matrix_to_json(const ComplexMatrix& m) {
  Json j;
  j["field"] = field_to_json(m.field);
  j["n"] = m.n;
  Json rows = Json::array();
  for (int i = 0; i < m.n; ++i) {
    Json row = Json::array();
    for (int k = 0; k < m.n; ++k)
      row.push_back(Json{{"re", m.at(i, k).real()}, {"im", m.at(i, k).imag()}});
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  return j;
}

ComplexMatrix complex_matrix_from_json(const Json& j) {
  FieldDescriptor f = j.contains("field") ? field_from_json(j.at("field"))
                                          : FieldDescriptor::complex_field();
  return matrix_from_rows<ComplexMatrix>(j, f, [](const Json& e) {
    if (e.is_number()) return std::complex<double>(e.get<double>(), 0.0);
    return std::complex<double>(e.value("re", 0.0), e.value("im", 0.0));
  });
}

Json point_to_json(const ProjectivePoint<double>& p) {
  Json j;
  j["role"] = "point";
  j["coords"] = p.v;
  return j;
}

ProjectivePoint<double> point_from_json(const Json& j, const FieldDescriptor& f) {
  return {f, j.at("coords").get<std::vector<double>>()};
}

Json hyperplane_to_json(const ProjectiveHyperplane<double>& h) {
  Json j;
  j["role"] = "hyperplane";
  j["coords"] = h.f;
  return j;
}

ProjectiveHyperplane<double> hyperplane_from_json(const Json& j, const FieldDescriptor& f) {
  return {f, j.at("coords").get<std::vector<double>>()};
}

static Json constants_to_json(const CertConstants& c) {
  return Json{{"c1", c.c1}, {"c2", c.c2}, {"C", c.C}};
}

Json proximality_to_json(const ProximalityCertificate<double>& c) {
  Json j;
  j["kind"] = "proximal";
  j["r"] = c.r;
  j["epsilon"] = c.epsilon;
  j["power"] = c.power;
  j["v_bar"] = point_to_json(c.v_bar);
  j["H_bar"] = hyperplane_to_json(c.H_bar);
  j["constants"] = constants_to_json(c.constants);
  j["residuals"] = Json{{"fixed_point", c.fixed_point_residual},
                        {"hyperplane", c.hyperplane_residual},
                        {"attractor_drift", c.attractor_drift}};
  return j;
}

Json very_proximal_to_json(const VeryProximalPair<double>& c) {
  Json j;
  j["kind"] = "very-proximal";
  j["r"] = c.r;
  j["epsilon"] = c.epsilon;
  j["forward"] = proximality_to_json(c.fwd);
  j["inverse"] = proximality_to_json(c.bwd);
  return j;
}

Json pingpong_to_json(const PingPongCertificate<double>& c) {
  Json j;
  j["kind"] = "pingpong";
  j["schema_version"] = kSchemaVersion;
  j["m"] = c.m();
  j["r"] = c.r;
  j["epsilon"] = c.epsilon;
  Json elems = Json::array();
  for (const auto& e : c.elements) elems.push_back(real_matrix_to_json(e));
  j["elements"] = std::move(elems);
  Json certs = Json::array();
  for (const auto& vp : c.certs) certs.push_back(very_proximal_to_json(vp));
  j["certs"] = std::move(certs);
  j["cross_gap"] = c.cross_gap;
  j["attractor_gap"] = c.attractor_gap;
  j["constants"] = constants_to_json(c.constants);
  return j;
}

Json affine_to_json(const AffineElement<Rational>& g) {
  return Json{{"a", rational_to_json(g.a)}, {"b", rational_to_json(g.b)}};
}

AffineElement<Rational> affine_from_json(const Json& j) {
  return {rational_from_json(j.at("a")), rational_from_json(j.at("b"))};
}

Json semigroup_to_json(const SemigroupCertificate<Rational>& c) {
  Json j;
  j["kind"] = "semigroup";
  j["schema_version"] = kSchemaVersion;
  Json elems = Json::array();
  for (const auto& e : c.elements) elems.push_back(affine_to_json(e));
  j["elements"] = std::move(elems);
  j["center"] = rational_to_json(c.center);
  j["R"] = rational_to_json(c.R);
  Json fps = Json::array(), ics = Json::array(), irs = Json::array();
  for (const auto& x : c.fixed_points) fps.push_back(rational_to_json(x));
  for (const auto& x : c.image_centers) ics.push_back(rational_to_json(x));
  for (const auto& x : c.image_radii) irs.push_back(rational_to_json(x));
  j["fixed_points"] = std::move(fps);
  j["image_centers"] = std::move(ics);
  j["image_radii"] = std::move(irs);
  return j;
}

Json growth_table_to_json(const GrowthTable& t) {
  Json j;
  j["R"] = t.R;
  j["N"] = t.N;
  j["values"] = t.values;
  j["metric"] = t.metric_descriptor;
  j["dedup_tolerance"] = t.dedup_tolerance;
  j["generators"] = t.generator_count;
  return j;
}

Json classification_to_json(const GrowthClassification& c) {
  Json j;
  j["verdict"] = verdict_name(c.verdict);
  j["stabilized"] = c.stabilized;
  j["degree_estimate"] = c.degree_estimate;
  j["rate_estimate"] = c.rate_estimate;
  j["fit_linear"] = Json{{"slope", c.linear.slope}, {"r2", c.linear.r2}};
  j["fit_loglog"] = Json{{"slope", c.loglog.slope}, {"r2", c.loglog.r2}};
  return j;
}

Json ammel_to_json(const AmmelCertificate& c) {
  Json j;
  j["kind"] = "ammel-cover";
  j["R"] = c.R;
  j["net_delta"] = c.net_delta;
  j["net_points"] = c.net_points;
  j["min_cover"] = c.min_cover;
  j["evidence"] = c.evidence;
  j["n_max"] = c.n_max;
  j["doubling_sizes"] = c.doubling_sizes;
  return j;
}

Json monic_to_json(const MonicPolynomial& p) {
  Json j;
  j["field"] = field_to_json(p.field);
  Json cs = Json::array();
  for (const auto& c : p.coeffs) cs.push_back(rational_to_json(c));
  j["coeffs"] = std::move(cs);
  if (!p.imag.empty()) {
    Json is = Json::array();
    for (const auto& c : p.imag) is.push_back(rational_to_json(c));
    j["imag"] = std::move(is);
  }
  return j;
}

MonicPolynomial monic_from_json(const Json& j) {
  MonicPolynomial p;
  p.field = field_from_json(j.at("field"));
  for (const auto& c : j.at("coeffs")) p.coeffs.push_back(rational_from_json(c));
  if (j.contains("imag"))
    for (const auto& c : j.at("imag")) p.imag.push_back(rational_from_json(c));
  p.validate();
  return p;
}

Json measure_to_json(const MeasureEstimate& e) {
  Json j;
  j["value"] = e.value;
  j["lo"] = e.lo;
  j["hi"] = e.hi;
  j["exact"] = e.exact;
  j["method"] = e.method;
  return j;
}

Json bound_report_to_json(const BoundReport& r) {
  Json j;
  j["estimate"] = measure_to_json(r.estimate);
  j["bound"] = r.bound;
  j["best_bound"] = r.best_bound;
  j["pass"] = r.pass;
  return j;
}

Json place_to_json(const PlaceReport& r) {
  Json j;
  j["kind"] = place_kind_name(r.kind);
  switch (r.kind) {
    case PlaceKind::RealEmbedding:
    case PlaceKind::ComplexEmbedding:
      j["root_index"] = r.root_index;
      j["abs_value"] = r.abs_value;
      break;
    case PlaceKind::PadicPlace:
      j["p"] = r.p;
      j["slope"] = Json{{"num", r.slope_num}, {"den", r.slope_den}};
      j["abs_value"] = r.abs_value;
      break;
    case PlaceKind::RootOfUnity:
      j["order"] = r.order;
      break;
  }
  return j;
}

// --- recheck -------------------------------------------------------------------

std::vector<std::string> recheck_pingpong_json(const Json& j, const Tolerances& tols) {
  std::vector<std::string> bad;
  auto fail = [&bad](const std::string& s) { bad.push_back(s); };
  try {
    double r = j.at("r").get<double>();
    double eps = j.at("epsilon").get<double>();
    if (!(r > 2 * eps)) fail("r > 2*epsilon violated");
    std::vector<RealMatrix> elems;
    for (const auto& ej : j.at("elements")) elems.push_back(real_matrix_from_json(ej));
    const int m = static_cast<int>(elems.size());
    const FieldDescriptor field = elems.front().field;

    std::vector<ProjectivePoint<double>> attract;
    std::vector<ProjectiveHyperplane<double>> repel;
    for (int i = 0; i < m; ++i) {
      const Json& cj = j.at("certs")[static_cast<std::size_t>(i)];
      for (const char* dir : {"forward", "inverse"}) {
        const Json& pj = cj.at(dir);
        auto v = point_from_json(pj.at("v_bar"), field);
        auto H = hyperplane_from_json(pj.at("H_bar"), field);
        double cr = pj.at("r").get<double>();
        double ce = pj.at("epsilon").get<double>();
        RealMatrix g = std::string(dir) == "forward" ? elems[static_cast<std::size_t>(i)]
                                                     : inverse(elems[static_cast<std::size_t>(i)]);
        double fp_res = distance(act(g, v), v);
        double tol = std::max(10 * field_fp_tolerance(field, tols), 1e-8);
        if (fp_res > tol)
          fail("element " + std::to_string(i) + " " + dir + ": v_bar not fixed (residual " +
               std::to_string(fp_res) + ")");
        if (distance_to_hyperplane(v, H) < cr - 2 * ce)
          fail("element " + std::to_string(i) + " " + dir + ": d(v_bar, H_bar) < r - 2 eps");
        auto cd = contraction_data(g);
        if (!cd || cd.value().epsilon > ce * (1 + 1e-6))
          fail("element " + std::to_string(i) + " " + dir + ": contraction weaker than claimed");
        if (cr < r - 1e-12) fail("per-element r below tuple r");
        if (ce > eps + 1e-12) fail("per-element epsilon above tuple epsilon");
        attract.push_back(std::move(v));
        repel.push_back(std::move(H));
      }
    }
    for (int a = 0; a < 2 * m; ++a)
      for (int b = 0; b < 2 * m; ++b) {
        if (a / 2 == b / 2) continue;
        double gap = distance_to_hyperplane(attract[static_cast<std::size_t>(a)],
                                            repel[static_cast<std::size_t>(b)]);
        if (gap < r - 1e-9)
          fail("cross gap " + std::to_string(a) + "," + std::to_string(b) + " = " +
               std::to_string(gap) + " below r");
        double ag = distance(attract[static_cast<std::size_t>(a)],
                             attract[static_cast<std::size_t>(b)]);
        if (ag <= 2 * eps)
          fail("attracting points " + std::to_string(a) + "," + std::to_string(b) +
               " not separated");
      }
  } catch (const std::exception& e) {
    fail(std::string("malformed certificate: ") + e.what());
  }
  return bad;
}

std::vector<std::string> recheck_semigroup_json(const Json& j) {
  std::vector<std::string> bad;
  auto fail = [&bad](const std::string& s) { bad.push_back(s); };
  try {
    std::vector<AffineElement<Rational>> elems;
    for (const auto& ej : j.at("elements")) elems.push_back(affine_from_json(ej));
    Rational xc = rational_from_json(j.at("center"));
    Rational R = rational_from_json(j.at("R"));
    const std::size_t t = elems.size();
    std::vector<Rational> centers, radii;
    for (std::size_t i = 0; i < t; ++i) {
      if (!(abs_rat(elems[i].a) < 1)) fail("element " + std::to_string(i) + " not contractive");
      Rational fp = elems[i].b / (1 - elems[i].a);
      if (abs_rat(fp - xc) > R) fail("fixed point " + std::to_string(i) + " outside the disc");
      centers.push_back(elems[i].a * xc + elems[i].b);
      radii.push_back(abs_rat(elems[i].a) * R);
      if (!(abs_rat(centers.back() - xc) + radii.back() <= R))
        fail("image disc " + std::to_string(i) + " escapes the disc");
    }
    for (std::size_t i = 0; i < t; ++i)
      for (std::size_t k = i + 1; k < t; ++k)
        if (!(abs_rat(centers[i] - centers[k]) > radii[i] + radii[k]))
          fail("image discs " + std::to_string(i) + "," + std::to_string(k) + " overlap");
  } catch (const std::exception& e) {
    fail(std::string("malformed certificate: ") + e.what());
  }
  return bad;
}

}  // namespace freecert
