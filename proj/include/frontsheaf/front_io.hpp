#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "frontsheaf/front.hpp"

namespace frontsheaf {

// Malformed front file; message carries the line number.
class FrontParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Parses the front file format:
//   name <identifier>
//   simplex <v0> <v1> ...            declares a simplex and all its faces
//   sheets <cell> : <blocks>         z-blocks top first, separated by '|';
//                                    equal-z sheets joined by '='; each sheet
//                                    written <label>/<maslov>
//   iota <face> -> <coface> : a -> b, c -> d   (or 'id' for label-identity)
//   cusp <face> -> <coface> : <upper> > <lower>
//   fcu <vertex> : <sheet>           cusp point coincides with a sheet
//   triple <vertex>                  triple-point tag
// '#' starts a comment. Cells are written as space-separated vertex lists.
FrontComplex parse_front(std::istream& in);

FrontComplex load_front_file(const std::string& path);

}  // namespace frontsheaf
