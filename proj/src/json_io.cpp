#include "monoidgeom/json_io.hpp"

#include <limits>

namespace monoidgeom::json_io {

void fail(const std::string& what) { throw MonoidError(ErrorCode::Validation, what); }

json integer_to_json(const Integer& x) {
  if (x.fits_slong_p()) return static_cast<std::int64_t>(x.get_si());
  return x.get_str();
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
    return Integer(static_cast<long>(j.get<std::int64_t>()));
  }
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    Integer x;
    if (s.empty() || x.set_str(s, 10) != 0) fail("not an integer: \"" + s + "\"");
    return x;
  }
  fail("expected an integer, got " + j.dump());
}

json rational_to_json(const Rational& x) { return x.get_str(); }

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(integer_from_json(j));
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    Rational x;
    if (s.empty() || s.find_first_not_of("+-0123456789/") != std::string::npos || x.set_str(s, 10) != 0)
      fail("not a rational: \"" + s + "\"");
    if (x.get_den() == 0) fail("zero denominator: \"" + s + "\"");
    x.canonicalize();
    return x;
  }
  fail("expected a rational (integer or \"a/b\" string), got " + j.dump());
}

json vector_to_json(const Vector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(integer_to_json(x));
  return a;
}

Vector vector_from_json(const json& j) {
  if (!j.is_array()) fail("expected an array of integers, got " + j.dump());
  Vector v;
  for (const auto& x : j) v.push_back(integer_from_json(x));
  return v;
}

json group_to_json(const AbelianGroup& g) {
  return json{{"free_rank", g.free_rank()}, {"torsion", vector_to_json(g.torsion())}};
}

AbelianGroup group_from_json(const json& j) {
  if (!j.is_object() || !j.contains("free_rank")) fail("ambient must be an object with \"free_rank\"");
  const auto& fr = j.at("free_rank");
  if (!fr.is_number_unsigned()) fail("free_rank must be a nonnegative integer");
  Vector tors;
  if (j.contains("torsion")) tors = vector_from_json(j.at("torsion"));
  for (std::size_t i = 0; i < tors.size(); ++i) {
    if (tors[i] < 2) fail("torsion orders must be at least 2");
    if (i > 0 && tors[i] % tors[i - 1] != 0) fail("torsion orders must divide each other in order");
  }
  return AbelianGroup(fr.get<std::size_t>(), tors);
}

json element_to_json(const GroupElement& x) { return vector_to_json(x.flat()); }

GroupElement element_from_json(const AbelianGroup& g, const json& j) {
  Vector v = vector_from_json(j);
  if (v.size() != g.dim())
    fail("element " + j.dump() + " has " + std::to_string(v.size()) + " coordinates, expected " +
         std::to_string(g.dim()));
  return g.from_flat(v);
}

json monoid_to_json(const AffineMonoid& m) {
  json gens = json::array();
  for (const auto& g : m.generators()) gens.push_back(element_to_json(g));
  return json{{"ambient", group_to_json(m.ambient())}, {"generators", gens}};
}

AffineMonoid monoid_from_json(const json& j) {
  if (!j.is_object()) fail("monoid must be a JSON object");
  if (!j.contains("ambient")) fail("monoid is missing \"ambient\"");
  if (!j.contains("generators") || !j.at("generators").is_array()) fail("monoid needs a \"generators\" array");
  AbelianGroup g = group_from_json(j.at("ambient"));
  std::vector<GroupElement> gens;
  for (const auto& x : j.at("generators")) gens.push_back(element_from_json(g, x));
  return AffineMonoid(g, gens);
}

json word_to_json(const FreeElement& w) { return json(w); }

FreeElement word_from_json(const json& j) {
  if (!j.is_array()) fail("expected a word (array of nonnegative integers), got " + j.dump());
  FreeElement w;
  for (const auto& x : j) {
    if (!x.is_number_integer() || x.get<std::int64_t>() < 0) fail("word coordinates must be nonnegative integers");
    w.push_back(x.get<std::int64_t>());
  }
  return w;
}

json presentation_to_json(const Presentation& p) {
  json rels = json::array();
  for (const auto& [l, r] : p.relations) rels.push_back(json::array({word_to_json(l), word_to_json(r)}));
  return json{{"ngens", p.ngens}, {"relations", rels}};
}

Presentation presentation_from_json(const json& j) {
  if (!j.is_object() || !j.contains("ngens") || !j.at("ngens").is_number_unsigned())
    fail("presentation needs a nonnegative \"ngens\"");
  Presentation p{j.at("ngens").get<std::size_t>(), {}};
  if (j.contains("relations")) {
    if (!j.at("relations").is_array()) fail("\"relations\" must be an array");
    for (const auto& r : j.at("relations")) {
      if (!r.is_array() || r.size() != 2) fail("each relation must be a pair of words");
      p.relations.emplace_back(word_from_json(r[0]), word_from_json(r[1]));
    }
  }
  try {
    p.validate();
  } catch (const MonoidError& e) {
    fail(e.what());
  }
  return p;
}

json algebra_to_json(const Terms& t) {
  json terms = json::array();
  for (const auto& [k, c] : t) terms.push_back(json{{"key", element_to_json(k)}, {"coeff", rational_to_json(c)}});
  return json{{"terms", terms}};
}

AlgebraElement algebra_from_json(const AffineMonoid& m, const json& j) {
  if (!j.is_object() || !j.contains("terms") || !j.at("terms").is_array())
    fail("element needs a \"terms\" array");
  Terms t;
  for (const auto& term : j.at("terms")) {
    if (!term.is_object() || !term.contains("key") || !term.contains("coeff"))
      fail("each term needs \"key\" and \"coeff\"");
    t[element_from_json(m.ambient(), term.at("key"))] += rational_from_json(term.at("coeff"));
  }
  return AlgebraElement(m, t);
}

}  // namespace monoidgeom::json_io
