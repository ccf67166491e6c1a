// Text format for algebra presentations:
//
//   # comment
//   field 3
//   order weightedlex        (or deglex)
//   generator a 0 1          (name, then the weight vector)
//   generator b 1 0
//   precedence b a           (descending, every generator once)
//   relation b*a - a*b - 2*a^2
//
// Relation expressions are infix over +, -, *, ^ and integer scalars;
// integer division (1/2) means the inverse residue. Generators carry
// augmentation zero.

#ifndef HOMCOH_PRESENTATION_IO_HPP
#define HOMCOH_PRESENTATION_IO_HPP

#include <string>

#include "freealg.hpp"

namespace homcoh::io {

freealg::Presentation parse_presentation(const std::string& text);
std::string serialize_presentation(const freealg::Presentation& pres);

freealg::FreeElement parse_expression(const freealg::CtxPtr& ctx, const std::string& text);

}  // namespace homcoh::io

#endif
