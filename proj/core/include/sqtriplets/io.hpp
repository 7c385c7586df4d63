#pragma once

#include <iosfwd>
#include <string>

#include "sqtriplets/freecomplex.hpp"
#include "sqtriplets/sqmodule.hpp"

namespace sqt {

/// Module file: a JSON document with fields n, components ("" / "1" / "13"
/// keys to dimensions) and mult ("v@R" keys to row-major rational matrices
/// written "p" or "p/q").  Zero matrices and zero components are omitted;
/// output is canonical, so write(read(s)) == s.  Needs n <= 9 because the
/// component keys concatenate variable digits.
std::string module_to_string(const SqModule& m);
SqModule module_from_string(const std::string& text);
void write_module(const SqModule& m, std::ostream& os);
SqModule read_module(std::istream& is);

/// Complex file: a JSON document with n, terms (position plus 0/1 degree
/// vectors) and diffs (from plus row-major rational matrix, rows indexed by
/// the generators at from+1).  Canonical output.
std::string complex_to_string(const FreeSqComplex& f);
FreeSqComplex complex_from_string(const std::string& text);
void write_complex(const FreeSqComplex& f, std::ostream& os);
FreeSqComplex read_complex(std::istream& is);

}  // namespace sqt
