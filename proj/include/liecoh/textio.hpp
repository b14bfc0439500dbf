#ifndef LIECOH_TEXTIO_HPP
#define LIECOH_TEXTIO_HPP

#include <string>

#include "liecoh/multipoly.hpp"

namespace liecoh {

// Reads the canonical text form emitted by MultiPoly::to_string /
// RingElem::to_string. Round-trips are exact.
MultiPoly parse_poly(const std::string& text);
RingElem parse_ring(const std::string& text);

}  // namespace liecoh

#endif
