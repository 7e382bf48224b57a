#include "hlc/hypergraph.hpp"

namespace hlc {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyWord: return "EmptyWord";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::BoundaryViolation: return "BoundaryViolation";
    case ErrorCode::MalformedGraph: return "MalformedGraph";
    case ErrorCode::MalformedType: return "MalformedType";
    case ErrorCode::MalformedSequent: return "MalformedSequent";
    case ErrorCode::LabelMismatch: return "LabelMismatch";
    case ErrorCode::NotSimpleInput: return "NotSimpleInput";
    case ErrorCode::AlphabetMismatch: return "AlphabetMismatch";
    case ErrorCode::NotWGNF: return "NotWGNF";
    case ErrorCode::NotEdgeful: return "NotEdgeful";
    case ErrorCode::SkeletonTypePresent: return "SkeletonTypePresent";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Error";
}

Hypergraph<Label> string_graph(const std::vector<Label>& word) {
  if (word.empty()) throw Error(ErrorCode::EmptyWord, "string graphs need at least one symbol");
  Hypergraph<Label> g(word.size() + 1);
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (word[i].arity != 2)
      throw Error(ErrorCode::ArityMismatch, "string graph symbol '" + word[i].sym + "' is not binary");
    g.add_edge(word[i], {static_cast<NodeId>(i), static_cast<NodeId>(i + 1)});
  }
  g.set_ext({0, static_cast<NodeId>(word.size())});
  return g;
}

Hypergraph<Label> string_graph(const std::string& word) {
  std::vector<Label> w;
  for (char c : word) w.push_back(Label{std::string(1, c), 2});
  return string_graph(w);
}

}  // namespace hlc
