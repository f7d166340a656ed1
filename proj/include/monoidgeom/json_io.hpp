#pragma once

// JSON encodings of groups, monoids, presentations and algebra elements.
// Integers are JSON numbers when they fit in 64 bits and decimal strings
// otherwise; rationals are always strings "a" or "a/b".

#include "json.hpp"

#include "monoidgeom/algebra.hpp"
#include "monoidgeom/presentation.hpp"

namespace monoidgeom::json_io {

using nlohmann::json;

json integer_to_json(const Integer& x);
Integer integer_from_json(const json& j);
json rational_to_json(const Rational& x);
Rational rational_from_json(const json& j);

json vector_to_json(const Vector& v);
Vector vector_from_json(const json& j);

json group_to_json(const AbelianGroup& g);
AbelianGroup group_from_json(const json& j);

/// Flat coordinate list: free coordinates then torsion residues.
json element_to_json(const GroupElement& x);
GroupElement element_from_json(const AbelianGroup& g, const json& j);

json monoid_to_json(const AffineMonoid& m);
AffineMonoid monoid_from_json(const json& j);

json presentation_to_json(const Presentation& p);
Presentation presentation_from_json(const json& j);
json word_to_json(const FreeElement& w);
FreeElement word_from_json(const json& j);

json algebra_to_json(const Terms& t);
AlgebraElement algebra_from_json(const AffineMonoid& m, const json& j);

/// Throws MonoidError(Validation) with a path-like message.
[[noreturn]] void fail(const std::string& what);

}  // namespace monoidgeom::json_io
