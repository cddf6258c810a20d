// SPDX-License-Identifier: Apache-2.0
//
// Derivation files.  Each node is a parenthesized form
//
//   (rule <name>
//     :conclusion "<sequent text>"
//     :witness (<key> <value> ...)
//     :children (<node> ...))
//
// Witness keys: index, d, fresh, node, node2, node3, left, right, formula
// (a quoted formula), cutnode.  Both the polarized calculus and the
// labelled calculus use the same shape, differing only in rule names and in
// how conclusion strings are parsed.

#ifndef DTT_DERIVATION_IO_HPP
#define DTT_DERIVATION_IO_HPP

#include <string>

#include "dtt/dil.hpp"
#include "dtt/lcalc.hpp"

namespace dtt {

std::string write_dil_derivation(const DilDerivation& d);
DilDerivation read_dil_derivation(const std::string& text);

std::string write_l_derivation(const LDerivation& d);
LDerivation read_l_derivation(const std::string& text);

}  // namespace dtt

#endif  // DTT_DERIVATION_IO_HPP
