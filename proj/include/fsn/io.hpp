#pragma once

// JSON input and output.  Every rational is written as an exact string.
// Parse failures (bad JSON, unknown keys, malformed rationals) raise
// fsn::InputError; semantic problems are left to the validators.

#include "fsn/counterexample.hpp"
#include "fsn/diagonal.hpp"
#include "fsn/fincat.hpp"
#include "fsn/homology.hpp"
#include "fsn/locus.hpp"
#include "fsn/seminorm.hpp"

#include "json.hpp"

#include <string>

namespace fsn::io {

using Json = nlohmann::ordered_json;

Json read_json_file(const std::string& path);
Json parse_json_text(const std::string& text);

fincat::PresentedCategory parse_category(const Json& j);
seminorm::GeneratingFamily parse_family(const Json& j);
seminorm::Element parse_element(const Json& j);
homology::SimplicialComplex parse_complex(const Json& j);
homology::HomologyClass parse_chain(const Json& j, const homology::SimplicialComplex& k);
// {"prefix": [...], "tail": "c"} or {"prefix": [...], "slope": "a", "intercept": "b"}.
counterexample::Sequence parse_sequence(const Json& j);

Json to_json(const exactq::Rational& q);
Json to_json(const exactq::Vector& v);
Json to_json(const exactq::Matrix& m);
Json to_json(const seminorm::Extended& e);
Json to_json(const exactq::Subspace& s);  // list of basis vectors

Json to_json(const fincat::PresentedCategory& cat);
Json to_json(const fincat::ValidationReport& r);
Json to_json(const seminorm::GeneratedEvaluation& e);
Json to_json(const locus::Locus& l);
Json to_json(const locus::LocusBounds& l);
Json to_json(const locus::VanishingCertificate& c);
Json to_json(const locus::UniversalLocus& u);
Json to_json(const locus::CarryVerdict& v);
Json to_json(const diagonal::DiagonalReport& r);
Json to_json(const counterexample::Sequence& s);
Json to_json(const counterexample::GapReport& r);

}  // namespace fsn::io
