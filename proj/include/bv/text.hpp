#pragma once
// Text formats.  Indices are 1-based on the wire (strand positions, Artin
// subscripts, permutation images); everything in memory stays 0-based.
//
//   tree        balanced parentheses, a leaf is "()"
//   artin word  "s1 S2" (capital = inverse), "id" for the empty word
//   normal form "D^p | 2 3 1 ; 2 1 3" (factors as one-line permutations)
//   element     three lines:  T: <tree> / B: <braid> / Tb: <tree>
//   gen word    "f0 b1 a2 F0 B1 A2" (capital = inverse), "" for the identity
//
// Printing an element always gives the normal-form B line; the parser also
// accepts an Artin word or "id" there.
#include <stdexcept>
#include <string>
#include <vector>

#include "bv/braid.hpp"
#include "bv/element.hpp"
#include "bv/tree.hpp"

namespace bv {

struct ParseError : std::runtime_error {
  int line, col;  // both 1-based

  ParseError(const std::string& msg, int line, int col);
};

std::string print_tree(const BinaryTree& t);
std::string print_artin(const std::vector<ArtinGen>& w);
std::string print_normal_form(const NormalForm& nf);
std::string print_element(const BVElement& e);

BinaryTree parse_tree(const std::string& text);
BVElement parse_element(const std::string& text);
std::vector<GenLetter> parse_gen_word(const std::string& text);

}  // namespace bv
