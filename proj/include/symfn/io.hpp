#ifndef SYMFN_IO_HPP
#define SYMFN_IO_HPP

#include <string>

#include "json.hpp"
#include "symfn/verify.hpp"

namespace symfn {

using Json = nlohmann::ordered_json;

// "num/den", denominator always written.
std::string rational_text(const Rational& c);
Rational rational_from_text(const std::string& text);

/* Text forms, terms in descending lexicographic partition order:
 *   p basis:  "-1/4 * p[2,2] + 1/4 * p[1,1,1,1]"
 *   Schur:    "s[3,1] + s[2,1,1]", "2 * s[2,2] - 1/2 * s[4]"
 * Zero prints as "0".
 */
std::string to_text(const SymFunc& f);
std::string to_text(const SchurExpansion& s);

// {"degree", "basis": "p"|"schur", "terms": [{"partition", "num", "den"}]}
Json to_json(const SymFunc& f);
Json to_json(const SchurExpansion& s);
SymFunc symfunc_from_json(const Json& j);
SchurExpansion schur_from_json(const Json& j);

enum class Basis { p, schur };
Basis parse_basis(const std::string& name);

// One line per nonzero degree: "degree d: <text>".
std::string to_text(const Series& s, Basis basis);
// {"N", "basis", "constant": {"num","den"}, "components": [<SymFunc json>...]}
Json to_json(const Series& s, Basis basis);

// Reports. elapsed_ms is written only when with_timing is set (null
// otherwise) so that repeated runs produce identical bytes.
Json to_json(const VerifyReport& r, bool with_timing = false);
std::string to_text(const VerifyReport& r, bool with_timing = false);
Json to_json(const PositivityReport& r, bool with_timing = false);
std::string to_text(const PositivityReport& r, bool with_timing = false);

Json catalog_json();
std::string catalog_text();

// Parameter maps travel as flat JSON objects of strings.
ParamMap params_from_json(const std::string& text);

}  // namespace symfn

#endif  // SYMFN_IO_HPP
