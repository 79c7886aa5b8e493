#include "coxsort/serialize.hpp"

#include <sstream>

#include "coxsort/errors.hpp"

namespace coxsort {

std::string word_string(const ReducedWord& w) {
  if (w.empty()) return "e";
  std::ostringstream out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out << ',';
    out << w[i];
  }
  return out.str();
}

std::string element_string(const Element& e) {
  return word_string(e.reduced_word());
}

std::string reflection_string(const CoxeterSystem& sys, int root_id) {
  return element_string(Element::reflection(sys, root_id));
}

std::string almost_reflection_string(const CoxeterSystem& sys,
                                     AlmostReflection t) {
  if (t.is_negative()) return "-s" + std::to_string(t.simple());
  return reflection_string(sys, t.root_id());
}

ReducedWord parse_word(const std::string& s) {
  if (s.empty() || s == "e") return {};
  ReducedWord out;
  std::istringstream in(s);
  std::string token;
  while (std::getline(in, token, ',')) {
    std::size_t used = 0;
    int value;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw Error("malformed word: " + s);
    }
    if (used != token.size() || value < 0)
      throw Error("malformed word: " + s);
    out.push_back(value);
  }
  if (out.empty()) throw Error("malformed word: " + s);
  return out;
}

}  // namespace coxsort
