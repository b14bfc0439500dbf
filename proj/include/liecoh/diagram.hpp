#ifndef LIECOH_DIAGRAM_HPP
#define LIECOH_DIAGRAM_HPP

#include <string>

#include "liecoh/liealg.hpp"

namespace liecoh {

// Root diagram as an SVG document: one arrow per root direction, a circle
// for a nontrivial Cartan part, double-shafted arrows for two-dimensional
// root spaces and a dimension subscript beyond that. Pseudo roots that are
// integer multiples of a shorter one stack tail to head. Throws when the
// root lattice does not embed in the plane.
std::string diagram_svg(const LieAlgebra& g);

}  // namespace liecoh

#endif
