#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "clonelab/finite/relation.hpp"

namespace clonelab::finite {

struct NamedOp {
  std::string name;
  OpTable op;
};

struct NamedRelation {
  std::string name;
  RelationTable relation;
};

/// Text form of an operation:
///   op <name> carrier=<k> arity=<n>
///   <k^n whitespace-separated values in lexicographic tuple order>
std::string format_op(const std::string& name, const OpTable& op);
/// Parses any number of consecutive operations; '#' starts a comment.
std::vector<NamedOp> parse_ops(std::string_view text);

/// Text form of a relation:
///   rel <name> carrier=<k> width=<m>
///   <one tuple per line>
std::string format_relation(const std::string& name, const RelationTable& r);
std::vector<NamedRelation> parse_relations(std::string_view text);

}  // namespace clonelab::finite
