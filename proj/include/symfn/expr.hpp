#ifndef SYMFN_EXPR_HPP
#define SYMFN_EXPR_HPP

#include <string>

#include "symfn/families.hpp"

namespace symfn {

/* Expressions are signed sums of terms "c * atom" or bare constants c, where
 * c is an integer or num/den and atom is one of
 *   p[..], h[..], e[..], s[..]   basis elements (h, e multiplicative)
 *   {desc}_n                     degree-n component of a family descriptor
 *   {desc}                       the family as a series
 *   H, E, Hpm, Epm               the complete series, constant term 1
 * Example: "p[1] - p[2]", "H - 1", "{lie} + 1/2 * p[2]".
 */
Series parse_series_expr(const std::string& text, int max_degree);

// Homogeneous expressions only: basis elements and {desc}_n.
SymFunc parse_symfunc_expr(const std::string& text);

}  // namespace symfn

#endif  // SYMFN_EXPR_HPP
