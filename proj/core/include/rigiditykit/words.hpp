#pragma once

#include <string>
#include <vector>

#include "rigiditykit/graph.hpp"

namespace rigiditykit {

// One generator occurrence: vertex name with exponent +1 or -1.
struct Letter {
  std::string vertex;
  int exp = 1;

  friend bool operator==(const Letter&, const Letter&) = default;
};

// Word in the vertex generators. Serialized form is space-separated letters,
// inverses written with a ^-1 suffix: "a b a^-1".
struct Word {
  std::vector<Letter> letters;

  static Word from_string(const std::string& text);
  std::string to_string() const;

  Word free_reduced() const;
  Word inverse() const;
  Word operator*(const Word& rhs) const;

  friend bool operator==(const Word&, const Word&) = default;
};

// Alternating word of length m starting from a: W(a,b,m) = abab... (m letters).
Word alternating_word(const std::string& a, const std::string& b, int m);

// Garside-type element of the edge subgroup: W(u,v,m) if m is even, W(u,v,m)^2
// if m is odd, with (u,v) the sorted endpoints.
struct DeltaElement {
  Edge edge;
  Word word;

  friend bool operator==(const DeltaElement&, const DeltaElement&) = default;
};

struct EdgeWords {
  Word w_uv;  // alternating from the lesser endpoint
  Word w_vu;  // alternating from the greater endpoint
  DeltaElement delta;
};

EdgeWords edge_words(const Edge& e);
DeltaElement delta_element(const Edge& e);

}  // namespace rigiditykit
