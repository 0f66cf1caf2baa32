#include "vss/json_io.hpp"

namespace vss {

namespace {

json indices_json(Monomial m) { return json(m.indices()); }

Monomial monomial_from_json(const json& j) {
  return Monomial::from_indices(j.get<std::vector<unsigned>>());
}

template <class F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    fail(ErrorKind::ParseError, std::string("malformed ") + what + " JSON: " + e.what());
  }
}

}  // namespace

json to_json(const GrassmannElement& a) {
  json terms = json::array();
  for (const auto& [m, c] : a.terms())
    terms.push_back({{"indices", indices_json(m)}, {"coeff", c.to_string()}});
  return {{"rank", a.rank()}, {"terms", terms}};
}

GrassmannElement element_from_json(const json& j) {
  return guarded("element", [&] {
    const Rank rank = j.at("rank").get<Rank>();
    GrassmannElement out(rank);
    for (const json& t : j.at("terms")) {
      const auto indices = t.at("indices").get<std::vector<unsigned>>();
      if (!std::is_sorted(indices.begin(), indices.end()) ||
          std::adjacent_find(indices.begin(), indices.end()) != indices.end())
        fail(ErrorKind::ParseError, "element JSON indices must be strictly increasing");
      out.add_term(Monomial::from_indices(indices), Scalar::parse(t.at("coeff").get<std::string>()));
    }
    return out;
  });
}

json to_json(const GradedHom& phi) {
  json images = json::array();
  for (const auto& image : phi.images()) images.push_back(to_json(image));
  return {{"source_rank", phi.source_rank()}, {"target_rank", phi.target_rank()}, {"images", images}};
}

GradedHom hom_from_json(const json& j) {
  return guarded("hom", [&] {
    std::vector<GrassmannElement> images;
    for (const json& e : j.at("images")) images.push_back(element_from_json(e));
    return make_hom(j.at("source_rank").get<Rank>(), j.at("target_rank").get<Rank>(), std::move(images));
  });
}

json to_json(const QPoint& point) {
  json evens = json::array();
  json odds = json::array();
  for (const auto& x : point.evens()) evens.push_back(to_json(x));
  for (const auto& th : point.odds()) odds.push_back(to_json(th));
  return {{"q", point.q()}, {"evens", evens}, {"odds", odds}};
}

QPoint point_from_json(const json& j) {
  return guarded("point", [&] {
    std::vector<GrassmannElement> evens;
    std::vector<GrassmannElement> odds;
    for (const json& e : j.at("evens")) evens.push_back(element_from_json(e));
    for (const json& e : j.at("odds")) odds.push_back(element_from_json(e));
    return make_point(j.at("q").get<Rank>(), std::move(evens), std::move(odds));
  });
}

json to_json(const FiniteRangeEndo& g) {
  json images = json::array();
  for (const auto& image : g.images()) images.push_back(to_json(image));
  return {{"support", g.support()}, {"range", g.range()}, {"images", images}};
}

json to_json(const PtInftyClass& c) {
  return {{"domain", {{"m", c.domain().even_dim}, {"n", c.domain().odd_dim}}},
          {"representative", to_json(c.representative())}};
}

json to_json(const SuperFunction& f) {
  json terms = json::array();
  for (const auto& [m, c] : f.terms())
    terms.push_back({{"x", m.exponents}, {"th", indices_json(m.odd)}, {"coeff", c.to_string()}});
  return {{"dims", {f.domain().even_dim, f.domain().odd_dim}}, {"terms", terms}};
}

json to_json(const SuperForm& form) {
  json terms = json::array();
  for (const auto& [m, c] : form.terms())
    terms.push_back({{"x", m.x},
                     {"xi", indices_json(m.xi)},
                     {"dx", indices_json(m.dx)},
                     {"dxi", m.dxi},
                     {"coeff", c.to_string()}});
  return {{"dims", {form.domain().even_dim, form.domain().odd_dim}}, {"terms", terms}};
}

SuperForm form_from_json(const json& j) {
  return guarded("form", [&] {
    const auto dims = j.at("dims").get<std::vector<unsigned>>();
    if (dims.size() != 2) fail(ErrorKind::ParseError, "form JSON dims must be [m, n]");
    SuperForm out(SuperDomainSpec{dims[0], dims[1]});
    for (const json& t : j.at("terms")) {
      FormMonomial m{t.at("x").get<std::vector<unsigned>>(), monomial_from_json(t.at("xi")),
                     monomial_from_json(t.at("dx")), t.at("dxi").get<std::vector<unsigned>>()};
      out.add_term(m, Scalar::parse(t.at("coeff").get<std::string>()));
    }
    return out;
  });
}

json to_json(const HomReport& report) {
  json pairs = json::array();
  for (const auto& [i, k] : report.non_multiplicative) pairs.push_back({i, k});
  return {{"non_multiplicative", pairs},
          {"grading_violations", report.grading_violations},
          {"unital", report.unital},
          {"image_dimension", report.image_dimension},
          {"target_dimension", report.target_dimension},
          {"verified", report.empty()}};
}

}  // namespace vss
