#include "binomoment/json_io.hpp"

#include "binomoment/errors.hpp"

namespace binomoment {

using nlohmann::json;

json to_json(const Scalar& x) {
  if (!x.is_exact()) return x.to_double();
  const Rational& q = x.exact();
  return json{{"num", q.numerator().get_str()}, {"den", q.denominator().get_str()}};
}

Scalar scalar_from_json(const json& j) {
  if (j.is_number()) {
    if (j.is_number_integer()) return Scalar(j.get<long>());
    return Scalar(j.get<double>());
  }
  if (j.is_object() && j.contains("num") && j.contains("den")) {
    return Scalar(Rational(mpz_class(j.at("num").get<std::string>()), mpz_class(j.at("den").get<std::string>())));
  }
  if (j.is_string()) return Scalar::parse(j.get<std::string>());
  throw DomainError("scalar_from_json: unsupported value " + j.dump());
}

json to_json(const TruncatedSeries& s) {
  json coeffs = json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(to_json(c));
  return json{{"order", s.order()}, {"coeffs", coeffs}};
}

TruncatedSeries series_from_json(const json& j) {
  std::vector<Scalar> coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.push_back(scalar_from_json(c));
  const int order = j.at("order").get<int>();
  if (order != static_cast<int>(coeffs.size()) - 1) throw DomainError("series_from_json: order mismatch");
  return TruncatedSeries(std::move(coeffs));
}

json moments_to_json(const MomentVector& m) {
  json out = json::array();
  for (const auto& x : m) out.push_back(to_json(x));
  return out;
}

json to_json(const GammaQuotientSymbol& s) {
  return json{{"k", s.k},           {"l", s.l},
              {"alphas", s.alphas}, {"betas", s.betas},
              {"alphas_tilde", s.alphas_tilde}, {"j_prime", s.j_prime},
              {"scale", s.scale}};
}

json to_json(const SlaterExpansion& e) {
  json terms = json::array();
  for (std::size_t h = 0; h < e.terms.size(); ++h) {
    const auto& t = e.terms[h];
    terms.push_back(json{{"h", h + 1}, {"c", t.c}, {"a", t.a}, {"b", t.b}, {"exponent", t.exponent}});
  }
  return json{{"k", e.k},
              {"l", e.l},
              {"p", e.p},
              {"r", e.r},
              {"gamma", e.gamma},
              {"z_scale", e.z_scale},
              {"domain_upper", e.domain_upper},
              {"terms", terms},
              {"endpoint_fit", json{{"w_lo", e.endpoint.w_lo}, {"w_hi", e.endpoint.w_hi}, {"chebyshev", e.endpoint.coeffs}}}};
}

json to_json(const MellinFactorization& f) {
  json factors = json::array();
  for (const auto& b : f.factors) {
    factors.push_back(json{{"u", b.u}, {"v", b.v}, {"l", b.l}, {"point_mass", b.is_point_mass()}});
  }
  return json{{"factors", factors}, {"dilation", f.dilation}};
}

json to_json(const CertifyReport& r) {
  json moments = json::array();
  for (const auto& m : r.moments) {
    moments.push_back(json{{"n", m.n},
                           {"expected", m.expected},
                           {"computed", m.computed},
                           {"error", m.error},
                           {"quadrature_error", m.quadrature_error},
                           {"pass", m.passed}});
  }
  return json{{"p", r.p},         {"r", r.r},         {"model", r.model},
              {"atom", r.atom},   {"rel_tol", r.rel_tol}, {"moments", moments},
              {"pass", r.passed}, {"runtime_seconds", r.runtime_seconds}};
}

json to_json(const IdentityCheck& c) {
  return json{{"id", c.id}, {"statement", c.statement}, {"pass", c.passed}, {"exact", c.exact}, {"max_error", c.max_error}};
}

json to_json(const Witness& w) {
  return json{{"kind", to_string(w.kind)}, {"location", w.location}, {"index", w.index}, {"value", w.value}};
}

}  // namespace binomoment
