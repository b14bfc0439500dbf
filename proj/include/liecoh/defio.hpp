#ifndef LIECOH_DEFIO_HPP
#define LIECOH_DEFIO_HPP

#include <string>

#include "liecoh/liealg.hpp"

namespace liecoh {

// Versioned text format for algebra definitions: basis labels with root
// data, structure tensor entries as coefficient-ring expressions, optional
// Cartan matrix. write/read round-trip exactly.
std::string write_definition(const LieAlgebra& g);
LieAlgebra read_definition(const std::string& text);
LieAlgebra read_definition_file(const std::string& path);

}  // namespace liecoh

#endif
