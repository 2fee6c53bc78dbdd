#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rls/analysis.hpp"
#include "rls/tuple.hpp"

namespace rls {

/// A node of a pipeline expression. Children by kind:
///   Atom    none (labels and values are set)
///   MC      the convolved expression (lambda is set)
///   Tensor  two expressions
///   Dual    one expression
///   Twist   an expression and an Atom
struct PipelineNode {
    enum class Kind { Atom, MC, Tensor, Dual, Twist };

    Kind kind = Kind::Atom;
    std::vector<std::string> labels;
    std::vector<Cyclotomic> values;
    Cyclotomic lambda;
    std::vector<PipelineNode> children;
    size_t line = 0;
    size_t column = 0;
};

struct Pipeline {
    int conductor = 1;
    PipelineNode root;
};

/// Document: a `conductor N` line, then one prefix expression built from
/// `atom(l1,...,lr; v1,...,vr)`, `mc(lambda, e)`, `tensor(e, e)`,
/// `dual(e)` and `twist(e, atom(...))`. `#` starts a comment. Scalars use
/// the literal grammar with `z` = zeta_N. Throws ParseError with the
/// position of the offending token.
Pipeline parse_pipeline(std::string_view text);

/// Canonical form; parse_pipeline(format_pipeline(p)) reproduces p.
std::string format_pipeline(const Pipeline& p);
std::string format_expression(const PipelineNode& node);

struct TraceEntry {
    size_t depth = 0;
    std::string operation;  // `atom(z, 1, z, z)`, `mc(-z - 1)`, `tensor`, ...
    size_t rank = 0;
    std::vector<JordanData> jordan;
    std::string form_class;  // `symmetric`, `alternating`, `none`, `2-dimensional`, ...
};

struct Evaluation {
    MonodromyTuple result;
    std::vector<TraceEntry> trace;  // post-order
};

/// Bottom-up evaluation; errors from the tuple operations propagate.
Evaluation evaluate(const Pipeline& p);

std::string format_trace(const std::vector<TraceEntry>& trace, int conductor);

}  // namespace rls
