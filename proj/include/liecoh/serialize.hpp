#ifndef LIECOH_SERIALIZE_HPP
#define LIECOH_SERIALIZE_HPP

#include <string>

#include "liecoh/bchreal.hpp"
#include "liecoh/coherent.hpp"

// Single-header json, found on the vendor include path.
#include "json.hpp"

namespace liecoh {

// Structured-tree forms. Every polynomial payload round-trips through
// parse_poly exactly (terms carry the canonical strings).
nlohmann::json poly_to_json(const MultiPoly& p);
MultiPoly poly_from_json(const nlohmann::json& j);
nlohmann::json ring_to_json(const RingElem& e);
RingElem ring_from_json(const nlohmann::json& j);

nlohmann::json state_to_json(const LieAlgebra& g, const CoherentState& st);
nlohmann::json vacuum_to_json(const LieAlgebra& g, const Vacuum& v);
nlohmann::json operator_to_json(const LieAlgebra& g, const DiffOperator& op);
nlohmann::json algebra_to_json(const LieAlgebra& g);
nlohmann::json report_to_json(const ValidationReport& rep);

// Ket-notation LaTeX for a coherent state.
std::string state_to_latex(const LieAlgebra& g, const CoherentState& st);
std::string state_to_text(const LieAlgebra& g, const CoherentState& st);

}  // namespace liecoh

#endif
