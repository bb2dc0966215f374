#include "rigiditykit/words.hpp"

#include <sstream>

namespace rigiditykit {

Word Word::from_string(const std::string& text) {
  Word w;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    Letter l;
    if (tok.size() > 3 && tok.compare(tok.size() - 3, 3, "^-1") == 0) {
      l.vertex = tok.substr(0, tok.size() - 3);
      l.exp = -1;
    } else {
      l.vertex = tok;
      l.exp = 1;
    }
    if (l.vertex.empty() || l.vertex.find('^') != std::string::npos)
      fail(Errc::invalid_input, "bad word letter \"" + tok + "\"");
    w.letters.push_back(std::move(l));
  }
  return w;
}

std::string Word::to_string() const {
  std::string out;
  for (const Letter& l : letters) {
    if (!out.empty()) out += ' ';
    out += l.vertex;
    if (l.exp == -1) out += "^-1";
  }
  return out;
}

Word Word::free_reduced() const {
  Word out;
  for (const Letter& l : letters) {
    if (!out.letters.empty() && out.letters.back().vertex == l.vertex &&
        out.letters.back().exp == -l.exp) {
      out.letters.pop_back();
    } else {
      out.letters.push_back(l);
    }
  }
  return out;
}

Word Word::inverse() const {
  Word out;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it)
    out.letters.push_back({it->vertex, -it->exp});
  return out;
}

Word Word::operator*(const Word& rhs) const {
  Word out = *this;
  out.letters.insert(out.letters.end(), rhs.letters.begin(), rhs.letters.end());
  return out;
}

Word alternating_word(const std::string& a, const std::string& b, int m) {
  if (m < 0) fail(Errc::invalid_input, "negative alternating length");
  Word w;
  for (int i = 0; i < m; ++i) w.letters.push_back({i % 2 == 0 ? a : b, 1});
  return w;
}

EdgeWords edge_words(const Edge& e) {
  if (e.m < 2) fail(Errc::invalid_input, "edge label below 2");
  EdgeWords out;
  out.w_uv = alternating_word(e.u, e.v, e.m);
  out.w_vu = alternating_word(e.v, e.u, e.m);
  out.delta.edge = e;
  out.delta.word = (e.m % 2 == 0) ? out.w_uv : out.w_uv * out.w_uv;
  return out;
}

DeltaElement delta_element(const Edge& e) { return edge_words(e).delta; }

}  // namespace rigiditykit
