#ifndef FREECERT_JSON_IO_HPP
#define FREECERT_JSON_IO_HPP

#include <json.hpp>

#include "freecert/affine.hpp"
#include "freecert/growth.hpp"
#include "freecert/pingpong.hpp"
#include "freecert/places.hpp"
#include "freecert/polya.hpp"

namespace freecert {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "freecert 0.1.0";

Json field_to_json(const FieldDescriptor& f);
FieldDescriptor field_from_json(const Json& j);

Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json real_matrix_to_json(const RealMatrix& m);
RealMatrix real_matrix_from_json(const Json& j);

Json rational_matrix_to_json(const RationalMatrix& m);
RationalMatrix rational_matrix_from_json(const Json& j);

Json padic_matrix_to_json(const PadicMatrix& m);
PadicMatrix padic_matrix_from_json(const Json& j);

Json complex_matrix_to_json(const ComplexMatrix& m);
ComplexMatrix complex_matrix_from_json(const Json& j);

Json point_to_json(const ProjectivePoint<double>& p);
ProjectivePoint<double> point_from_json(const Json& j, const FieldDescriptor& f);
Json hyperplane_to_json(const ProjectiveHyperplane<double>& h);
ProjectiveHyperplane<double> hyperplane_from_json(const Json& j, const FieldDescriptor& f);

Json proximality_to_json(const ProximalityCertificate<double>& c);
Json very_proximal_to_json(const VeryProximalPair<double>& c);
Json pingpong_to_json(const PingPongCertificate<double>& c);

Json affine_to_json(const AffineElement<Rational>& g);
AffineElement<Rational> affine_from_json(const Json& j);
Json semigroup_to_json(const SemigroupCertificate<Rational>& c);

Json growth_table_to_json(const GrowthTable& t);
Json classification_to_json(const GrowthClassification& c);
Json ammel_to_json(const AmmelCertificate& c);

Json monic_to_json(const MonicPolynomial& p);
MonicPolynomial monic_from_json(const Json& j);
Json measure_to_json(const MeasureEstimate& e);
Json bound_report_to_json(const BoundReport& r);

Json place_to_json(const PlaceReport& r);

// Recomputes every inequality in a serialized certificate from the
// serialized data alone. Returns the list of violated checks (empty = valid).
std::vector<std::string> recheck_pingpong_json(const Json& j, const Tolerances& tols = {});
std::vector<std::string> recheck_semigroup_json(const Json& j);

}  // namespace freecert

#endif  // FREECERT_JSON_IO_HPP
