#pragma once

#include <string>

#include "ballcomp/diagnostics.hpp"
#include "ballcomp/models.hpp"
#include "ballcomp/symbolic.hpp"
#include "json.hpp"

namespace ballcomp {

// Ordered maps keep report layout stable, so a fixed seed yields a
// byte-identical file.
using OrderedJson = nlohmann::ordered_json;

OrderedJson model_point_to_json(const ModelPoint& p);
ModelPoint model_point_from_json(const OrderedJson& j);

OrderedJson poly_field_to_json(const PolyVectorField& x);
PolyVectorField poly_field_from_json(const OrderedJson& j);

OrderedJson chart_point_to_json(const ChartPoint& q);
OrderedJson smoothness_to_json(const SmoothnessReport& r);
OrderedJson flatness_to_json(const FlatnessReport& r);
OrderedJson holder_to_json(const HolderReport& r);
OrderedJson endpoint_trail_to_json(const EndpointTrail& t);
OrderedJson endpoints_to_json(const EndpointsReport& r);
OrderedJson tangency_to_json(const TangencyReport& r);
OrderedJson transversality_to_json(const TransversalityReport& r);

}  // namespace ballcomp
