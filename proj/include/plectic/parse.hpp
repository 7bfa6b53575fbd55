#ifndef PLECTIC_PARSE_HPP
#define PLECTIC_PARSE_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "plectic/cartan.hpp"

namespace plectic {

struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Textual form syntax, e.g. "1 dx0^dx1^dx2 + x2 dx0^dx1" or "-1/2 x0^2 dx1".
/// A term is: optional rational, variable factors x<i>[^e], one optional basis
/// word dx<i>^dx<j>^... ; terms are joined by + or -. "0" is the zero form of
/// unspecified degree; a degree-0 form is a bare polynomial.
/// Mixed-degree expressions parse into homogeneous parts, ascending degree.
std::vector<Form> parse_form_parts(const std::string& text);

/// Single homogeneous form; ParseError when the expression mixes degrees.
Form parse_form(const std::string& text);

/// Vector fields use the same term syntax with basis symbols Dx<i>,
/// e.g. "x0 Dx1 - Dx0".
VectorField parse_vector_field(const std::string& text);

/// Canonical printers: ascending basis words, ascending monomials, coefficient
/// omitted only when it is 1 and variable factors are present. parse(canonical(x))
/// reproduces x and canonical() is byte-stable, which is what scenario
/// round-tripping relies on.
std::string canonical_form_text(const Form& f);
std::string canonical_form_parts_text(const std::vector<Form>& parts);
std::string canonical_vector_field_text(const VectorField& v);
std::string canonical_poly_text(const PolyScalar& p);

}  // namespace plectic

#endif
