#include "ballcomp/json_io.hpp"

#include <stdexcept>

namespace ballcomp {

namespace {

OrderedJson vec_to_json(const Vec& v) {
  OrderedJson a = OrderedJson::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v[i]);
  return a;
}

Vec vec_from_json(const OrderedJson& j) {
  Vec v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) v[i] = j.at(i).get<double>();
  return v;
}

OrderedJson rational_to_json(const Rational& r) {
  const auto num = boost::multiprecision::numerator(r);
  const auto den = boost::multiprecision::denominator(r);
  return OrderedJson::array({static_cast<long long>(num), static_cast<long long>(den)});
}

Rational rational_from_json(const OrderedJson& j) {
  if (!j.is_array() || j.size() != 2)
    throw std::invalid_argument("rational: expected [numerator, denominator]");
  return Rational(j.at(0).get<long long>(), j.at(1).get<long long>());
}

}  // namespace

OrderedJson model_point_to_json(const ModelPoint& p) {
  OrderedJson j;
  j["model"] = model_name(p.model());
  j["n"] = p.n();
  if (p.is_infinity())
    j["inf"] = true;
  else
    j["coords"] = vec_to_json(p.coords());
  return j;
}

ModelPoint model_point_from_json(const OrderedJson& j) {
  const std::string name = j.at("model").get<std::string>();
  Model m;
  if (name == "hyperboloid") m = Model::Hyperboloid;
  else if (name == "klein_closed") m = Model::KleinClosed;
  else if (name == "poincare_closed") m = Model::PoincareClosed;
  else if (name == "chart_kc") m = Model::ChartKC;
  else if (name == "chart_pc") m = Model::ChartPC;
  else throw std::invalid_argument("model point: unknown model " + name);
  if (j.value("inf", false)) {
    const int n = j.at("n").get<int>();
    return ModelPoint::infinity(m, n);
  }
  const Vec c = vec_from_json(j.at("coords"));
  switch (m) {
    case Model::Hyperboloid: return ModelPoint::hyperboloid(c);
    case Model::KleinClosed: return ModelPoint::klein(c);
    case Model::PoincareClosed: return ModelPoint::poincare(c);
    case Model::ChartKC: return ModelPoint::chart_kc(c);
    case Model::ChartPC: return ModelPoint::chart_pc(c);
  }
  throw std::logic_error("model point: unreachable");
}

OrderedJson poly_field_to_json(const PolyVectorField& x) {
  OrderedJson j;
  j["n"] = x.n();
  OrderedJson terms = OrderedJson::array();
  for (const PolyTerm& t : x.terms()) {
    OrderedJson jt;
    jt["component"] = t.component;
    jt["coeff"] = rational_to_json(t.coeff);
    jt["a"] = t.a;
    jt["b"] = rational_to_json(t.b);
    terms.push_back(std::move(jt));
  }
  j["terms"] = std::move(terms);
  return j;
}

PolyVectorField poly_field_from_json(const OrderedJson& j) {
  const int n = j.at("n").get<int>();
  std::vector<PolyTerm> terms;
  for (const OrderedJson& jt : j.at("terms")) {
    PolyTerm t;
    t.component = jt.at("component").get<int>();
    t.coeff = rational_from_json(jt.at("coeff"));
    t.a = jt.at("a").get<std::vector<int>>();
    t.b = rational_from_json(jt.at("b"));
    terms.push_back(std::move(t));
  }
  return PolyVectorField::from_terms(n, std::move(terms));
}

OrderedJson chart_point_to_json(const ChartPoint& q) {
  OrderedJson j;
  if (q.inf) {
    j["inf"] = true;
    return j;
  }
  j["u"] = vec_to_json(q.u);
  j["v"] = q.v;
  return j;
}

OrderedJson smoothness_to_json(const SmoothnessReport& r) {
  OrderedJson j;
  j["orders_checked"] = r.orders_checked;
  j["verdict"] = r.smooth ? "smooth_up_to" : "diverges_at_order";
  j["order"] = r.order;
  j["underflow_seen"] = r.underflow_seen;
  OrderedJson ev = OrderedJson::array();
  for (const OrderTrail& t : r.evidence) {
    OrderedJson jt;
    jt["order"] = t.order;
    jt["status"] = t.status;
    jt["window_ratio"] = t.window_ratio;
    jt["estimates"] = t.estimates;
    jt["noise_floor"] = t.noise_floor;
    ev.push_back(std::move(jt));
  }
  j["evidence"] = std::move(ev);
  return j;
}

OrderedJson flatness_to_json(const FlatnessReport& r) {
  OrderedJson j;
  j["verdict"] = r.flat ? "flat_up_to" : "non_flat_at_order";
  j["order"] = r.order;
  j["orders_checked"] = r.orders_checked;
  j["estimates"] = r.estimates;
  return j;
}

OrderedJson holder_to_json(const HolderReport& r) {
  OrderedJson j;
  j["slope"] = r.slope;
  j["residual"] = r.residual;
  j["decades"] = r.decades;
  j["pairs"] = r.pairs;
  return j;
}

OrderedJson endpoint_trail_to_json(const EndpointTrail& t) {
  OrderedJson j;
  j["infinity"] = t.infinity;
  j["converged"] = t.converged;
  j["max_step"] = t.max_step;
  j["limit"] = chart_point_to_json(t.limit);
  j["t"] = t.t;
  OrderedJson raw = OrderedJson::array();
  for (const ChartPoint& q : t.raw) raw.push_back(chart_point_to_json(q));
  j["raw"] = std::move(raw);
  j["height_ratio"] = t.height_ratio;
  OrderedJson est = OrderedJson::array();
  for (const ChartPoint& q : t.estimate) est.push_back(chart_point_to_json(q));
  j["estimate"] = std::move(est);
  return j;
}

OrderedJson endpoints_to_json(const EndpointsReport& r) {
  OrderedJson j;
  j["distinct"] = r.distinct;
  j["start"] = endpoint_trail_to_json(r.start);
  j["finish"] = endpoint_trail_to_json(r.finish);
  return j;
}

OrderedJson tangency_to_json(const TangencyReport& r) {
  OrderedJson j;
  j["angle"] = r.angle;
  j["converged"] = r.converged;
  j["raw"] = r.raw;
  j["accelerated"] = r.accelerated;
  return j;
}

OrderedJson transversality_to_json(const TransversalityReport& r) {
  OrderedJson j;
  j["transversal"] = r.transversal;
  j["angle"] = r.angle;
  j["converged"] = r.converged;
  j["used_reverse_end"] = r.used_reverse_end;
  j["raw"] = r.raw;
  j["accelerated"] = r.accelerated;
  return j;
}

}  // namespace ballcomp
