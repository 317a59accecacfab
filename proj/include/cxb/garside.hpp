#pragma once

#include "cxb/coxeter.hpp"
#include "cxb/word.hpp"

namespace cxb {

// Left-greedy normal form Delta^k x_1 ... x_r: the x_i are nontrivial
// elements of W, none equal to the longest element, and each consecutive
// pair is left-weighted. Two words are equal in the Artin group iff their
// normal forms coincide.
struct NormalForm {
  int delta = 0;
  std::vector<GroupElement> simples;

  bool trivial() const { return delta == 0 && simples.empty(); }
  int canonical_length() const { return (int)simples.size(); }
  bool operator==(const NormalForm& o) const {
    if (delta != o.delta || simples.size() != o.simples.size()) return false;
    for (size_t i = 0; i < simples.size(); ++i)
      if (!(simples[i] == o.simples[i])) return false;
    return true;
  }
};

NormalForm normal_form(const BraidWord& w, const CoxeterContext& ctx);

// w as a word again: |delta| copies of the longest word, then the simples
BraidWord nf_to_word(const NormalForm& nf, const CoxeterContext& ctx);

bool equal(const BraidWord& u, const BraidWord& v, const CoxeterContext& ctx);
bool is_trivial(const BraidWord& w, const CoxeterContext& ctx);

// shorter of w and its normal-form word; used to keep transported
// generator expressions from growing without bound
BraidWord shorten(const BraidWord& w, const CoxeterContext& ctx);

// --------------------------------------------------------------------------
// The group <x, y | x^2 = y^m>, an amalgam of two copies of Z over the
// central element z = x^2 = y^m. Elements are z^k times a reduced
// alternating word in the images of x and y^e (0 < e < m).
struct TorusWord {
  long long z = 0;
  std::vector<std::pair<char, int>> syllables;  // ('x',1) or ('y',e)

  bool trivial() const { return z == 0 && syllables.empty(); }
  bool operator==(const TorusWord& o) const {
    return z == o.z && syllables == o.syllables;
  }
};

// letters: +-1 for x, +-2 for y
TorusWord torus_normal_form(const BraidWord& w, int m);
bool torus_equal(const BraidWord& u, const BraidWord& v, int m);

}  // namespace cxb
